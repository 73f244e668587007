/* Exercises the C interface from C. */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "symplectica/symplectica.h"

static int failures = 0;

#define EXPECT(cond)                                                        \
    do {                                                                    \
        if (!(cond)) {                                                      \
            fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                                     \
        }                                                                   \
    } while (0)

static void spaces(void) {
    sym_space* s = NULL;
    EXPECT(sym_space_create(2, 2, &s) == SYM_E_INVALID_ARGUMENT);
    EXPECT(s == NULL);
    EXPECT(strstr(sym_last_error(), "characteristic 2 unsupported") != NULL);
    EXPECT(sym_space_create(9, 2, &s) == SYM_E_INVALID_ARGUMENT);
    EXPECT(strstr(sym_last_error(), "p must be prime") != NULL);
    EXPECT(sym_space_create(3, 0, &s) == SYM_E_INVALID_ARGUMENT);
    EXPECT(sym_space_create(3, 2, NULL) == SYM_E_NULL);

    EXPECT(sym_space_create(3, 2, &s) == SYM_OK);
    size_t n = 0, size = 0;
    EXPECT(sym_space_dim(s, &n) == SYM_OK && n == 4);
    EXPECT(sym_level_size(s, 1, &size) == SYM_OK && size == 40);
    EXPECT(sym_level_size(s, 2, &size) == SYM_OK && size == 90);
    EXPECT(sym_level_size(s, 4, &size) == SYM_E_INVALID_ARGUMENT);

    char* census = NULL;
    EXPECT(sym_space_census(s, &census) == SYM_OK);
    EXPECT(census && strstr(census, "\"regular_or_tangential\": 90") != NULL);
    sym_string_free(census);

    char* lines = NULL;
    EXPECT(sym_grassmann_export(s, 2, SYM_CSV, &lines) == SYM_OK);
    EXPECT(lines && strncmp(lines, "line,point\n", 11) == 0);
    sym_string_free(lines);
    sym_space_destroy(s);
}

static void graphs(void) {
    sym_space* s = NULL;
    sym_space_create(3, 2, &s);
    sym_graph *col = NULL, *low = NULL, *up = NULL;
    EXPECT(sym_graph_create(s, 2, SYM_COLLINEAR, &col) == SYM_OK);
    EXPECT(sym_graph_create(s, 2, SYM_LOWER, &low) == SYM_OK);
    EXPECT(sym_graph_create(s, 2, SYM_UPPER, &up) == SYM_OK);
    sym_graph* bad = col;
    EXPECT(sym_graph_create(s, 0, SYM_UPPER, &bad) == SYM_E_INVALID_ARGUMENT);
    EXPECT(bad == NULL);

    size_t v = 0, e = 0, comps = 0, cliques = 0;
    int eq = 0, edge = 0;
    EXPECT(sym_graph_vertex_count(col, &v) == SYM_OK && v == 90);
    EXPECT(sym_graph_edge_count(col, &e) == SYM_OK && e == 480 * 3);
    EXPECT(sym_graph_equal(col, low, &eq) == SYM_OK && eq == 1);
    EXPECT(sym_graph_equal(col, up, &eq) == SYM_OK && eq == 1);
    EXPECT(sym_graph_components(col, &comps) == SYM_OK && comps == 1);
    EXPECT(sym_graph_clique_count(col, &cliques) == SYM_OK && cliques == 80);
    EXPECT(sym_graph_has_edge(col, 0, 0, &edge) == SYM_OK && edge == 0);
    EXPECT(sym_graph_has_edge(col, 0, 90, &edge) == SYM_E_INVALID_ARGUMENT);
    EXPECT(sym_graph_vertex_count(NULL, &v) == SYM_E_NULL);

    char* json = NULL;
    EXPECT(sym_graph_export(col, SYM_JSON, &json) == SYM_OK);
    EXPECT(json && strstr(json, "\"kind\": \"collinear\"") != NULL);
    sym_string_free(json);
    char* dot = NULL;
    EXPECT(sym_graph_export(col, SYM_DOT, &dot) == SYM_OK);
    EXPECT(dot && strncmp(dot, "graph", 5) == 0);
    sym_string_free(dot);

    char* order = NULL;
    EXPECT(sym_graph_automorphism_count(col, &order) == SYM_OK);
    EXPECT(order && strcmp(order, "103680") == 0);
    sym_string_free(order);

    sym_graph_destroy(col);
    sym_graph_destroy(low);
    sym_graph_destroy(up);
    sym_graph_destroy(NULL);
    sym_space_destroy(s);
}

static void pipeline_and_suites(void) {
    sym_space* s = NULL;
    sym_space_create(3, 2, &s);
    char* json = NULL;
    int match = -1;
    EXPECT(sym_reconstruct(s, 1, &json, &match) == SYM_OK && match == 1);
    sym_string_free(json);
    json = NULL;
    EXPECT(sym_reconstruct(s, 2, &json, &match) == SYM_E_AMBIGUOUS);
    EXPECT(strcmp(sym_status_name(SYM_E_AMBIGUOUS), "ambiguous") == 0);
    EXPECT(strlen(sym_last_error()) > 0);
    sym_space_destroy(s);

    sym_suite_spec spec;
    memset(&spec, 0, sizeof spec);
    spec.suite = 'E';
    spec.p = 3;
    spec.m = 2;
    spec.k = 2;
    int pass = 0;
    EXPECT(sym_verify(&spec, &json, &pass) == SYM_OK && pass == 1);
    sym_string_free(json);

    EXPECT(sym_set_fault_injection("no.such.check") == SYM_E_INVALID_ARGUMENT);
    EXPECT(sym_set_fault_injection("E.collinear_connected") == SYM_OK);
    EXPECT(sym_verify(&spec, &json, &pass) == SYM_OK && pass == 0);
    /* the failures array holds one record; cut it out and replay it */
    const char* start = strstr(json, "\"failures\": [");
    EXPECT(start != NULL);
    if (start) {
        start = strchr(start, '{');
        const char* end = strstr(start, "\"check\"");
        end = end ? strstr(end, "]\n    }") : NULL;
        EXPECT(end != NULL);
        if (end) {
            size_t len = (size_t)(end - start) + 7;
            char* record = malloc(len + 1);
            memcpy(record, start, len);
            record[len] = '\0';
            int holds = -1;
            EXPECT(sym_replay(3, 2, record, &holds) == SYM_OK && holds == 0);
            sym_set_fault_injection(NULL);
            EXPECT(sym_replay(3, 2, record, &holds) == SYM_OK && holds == 1);
            free(record);
        }
    }
    sym_string_free(json);
    sym_set_fault_injection(NULL);
    EXPECT(sym_replay(3, 2, "{", &pass) != SYM_OK);

    spec.suite = 'D';
    spec.m = 3;
    spec.k = 3;
    EXPECT(sym_verify(&spec, &json, &pass) == SYM_E_SIZE_BOUND);
}

int main(void) {
    sym_set_threads(2);
    spaces();
    graphs();
    pipeline_and_suites();
    sym_set_threads(0);
    if (failures) fprintf(stderr, "%d expectation(s) failed\n", failures);
    return failures ? 1 : 0;
}
