#include "symplectica/symplectica.h"

#include <cstdlib>
#include <cstring>
#include <new>

#include "symplectica/automorphism.hpp"
#include "symplectica/export.hpp"
#include "symplectica/parallel.hpp"
#include "symplectica/verify.hpp"

using namespace symplectica;

struct sym_space {
    SymplecticSpace space;
};

struct sym_graph {
    SymplecticSpace space;
    std::size_t k;
    AdjacencyKind kind;
    PointIndex points;
    Graph graph;
};

namespace {

thread_local std::string last_error;

sym_status record(sym_status s, const char* what) {
    last_error = what;
    return s;
}

template <class Fn>
sym_status guarded(Fn&& fn) {
    try {
        last_error.clear();
        fn();
        return SYM_OK;
    } catch (const Error& e) {
        return record(static_cast<sym_status>(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return record(SYM_E_SIZE_BOUND, "out of memory");
    } catch (const std::exception& e) {
        return record(SYM_E_INTERNAL, e.what());
    }
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

Format to_format(sym_format f) {
    switch (f) {
    case SYM_JSON: return Format::json;
    case SYM_DOT: return Format::dot;
    case SYM_CSV: return Format::csv;
    }
    fail(ErrorCode::invalid_argument, "unknown format");
}

AdjacencyKind to_kind(sym_kind k) {
    switch (k) {
    case SYM_COLLINEAR: return AdjacencyKind::collinear;
    case SYM_LOWER: return AdjacencyKind::lower;
    case SYM_UPPER: return AdjacencyKind::upper;
    }
    fail(ErrorCode::invalid_argument, "unknown adjacency kind");
}

void check_level(const SymplecticSpace& s, std::size_t k) {
    if (k < 1 || k + 1 > s.n()) fail(ErrorCode::invalid_argument, "level k must satisfy 1 <= k <= n-1");
}

#define SYM_REQUIRE(ptr)                                                   \
    do {                                                                   \
        if (!(ptr)) return record(SYM_E_NULL, #ptr " must not be null");   \
    } while (0)

} // namespace

extern "C" {

const char* sym_last_error(void) { return last_error.c_str(); }

const char* sym_status_name(sym_status s) {
    switch (s) {
    case SYM_OK: return "ok";
    case SYM_E_INVALID_ARGUMENT: return "invalid_argument";
    case SYM_E_DOMAIN: return "domain";
    case SYM_E_VALIDATION: return "validation";
    case SYM_E_PRECONDITION: return "precondition";
    case SYM_E_SIZE_BOUND: return "size_bound";
    case SYM_E_AMBIGUOUS: return "ambiguous";
    case SYM_E_INTERNAL: return "internal";
    case SYM_E_NULL: return "null";
    }
    return "unknown";
}

void sym_string_free(char* s) { std::free(s); }

void sym_set_threads(size_t n) { set_thread_count(n); }

sym_status sym_space_create(unsigned p, size_t m, sym_space** out) {
    SYM_REQUIRE(out);
    *out = nullptr;
    return guarded([&] {
        if (m < 1) fail(ErrorCode::invalid_argument, "m must be at least 1");
        *out = new sym_space{SymplecticSpace::make(p, m)};
    });
}

void sym_space_destroy(sym_space* s) { delete s; }

sym_status sym_space_dim(const sym_space* s, size_t* n) {
    SYM_REQUIRE(s);
    SYM_REQUIRE(n);
    *n = s->space.n();
    return SYM_OK;
}

sym_status sym_space_census(const sym_space* s, char** json) {
    SYM_REQUIRE(s);
    SYM_REQUIRE(json);
    return guarded([&] { *json = copy_string(census_json(s->space)); });
}

sym_status sym_level_size(const sym_space* s, size_t k, size_t* out) {
    SYM_REQUIRE(s);
    SYM_REQUIRE(out);
    return guarded([&] {
        check_level(s->space, k);
        *out = enumerate_tr(s->space, k).size();
    });
}

sym_status sym_grassmann_export(const sym_space* s, size_t k, sym_format f, char** out) {
    SYM_REQUIRE(s);
    SYM_REQUIRE(out);
    return guarded([&] {
        check_level(s->space, k);
        *out = copy_string(export_grassmann(build_grassmann(s->space, k), to_format(f)));
    });
}

sym_status sym_graph_create(const sym_space* s, size_t k, sym_kind kind, sym_graph** out) {
    SYM_REQUIRE(s);
    SYM_REQUIRE(out);
    *out = nullptr;
    return guarded([&] {
        check_level(s->space, k);
        const auto which = to_kind(kind);
        PointIndex points(enumerate_tr(s->space, k));
        Graph g = build_adjacency_graph(s->space, points, k, which);
        *out = new sym_graph{s->space, k, which, std::move(points), std::move(g)};
    });
}

void sym_graph_destroy(sym_graph* g) { delete g; }

sym_status sym_graph_vertex_count(const sym_graph* g, size_t* out) {
    SYM_REQUIRE(g);
    SYM_REQUIRE(out);
    *out = g->graph.size();
    return SYM_OK;
}

sym_status sym_graph_edge_count(const sym_graph* g, size_t* out) {
    SYM_REQUIRE(g);
    SYM_REQUIRE(out);
    *out = g->graph.edge_count();
    return SYM_OK;
}

sym_status sym_graph_has_edge(const sym_graph* g, size_t i, size_t j, int* out) {
    SYM_REQUIRE(g);
    SYM_REQUIRE(out);
    if (i >= g->graph.size() || j >= g->graph.size())
        return record(SYM_E_INVALID_ARGUMENT, "vertex index out of range");
    *out = g->graph.has_edge(i, j) ? 1 : 0;
    return SYM_OK;
}

sym_status sym_graph_equal(const sym_graph* a, const sym_graph* b, int* out) {
    SYM_REQUIRE(a);
    SYM_REQUIRE(b);
    SYM_REQUIRE(out);
    *out = a->graph == b->graph ? 1 : 0;
    return SYM_OK;
}

sym_status sym_graph_components(const sym_graph* g, size_t* out) {
    SYM_REQUIRE(g);
    SYM_REQUIRE(out);
    return guarded([&] { components(g->graph, out); });
}

sym_status sym_graph_clique_count(const sym_graph* g, size_t* out) {
    SYM_REQUIRE(g);
    SYM_REQUIRE(out);
    return guarded([&] { *out = maximal_cliques(g->graph).size(); });
}

sym_status sym_graph_export(const sym_graph* g, sym_format f, char** out) {
    SYM_REQUIRE(g);
    SYM_REQUIRE(out);
    return guarded([&] { *out = copy_string(export_graph(g->space, g->points, g->k, g->kind, g->graph, to_format(f))); });
}

sym_status sym_graph_automorphism_count(const sym_graph* g, char** decimal) {
    SYM_REQUIRE(g);
    SYM_REQUIRE(decimal);
    return guarded([&] { *decimal = copy_string(automorphism_count(g->graph).str()); });
}

sym_status sym_reconstruct(const sym_space* s, size_t k, char** json, int* match) {
    SYM_REQUIRE(s);
    SYM_REQUIRE(json);
    SYM_REQUIRE(match);
    return guarded([&] {
        auto rep = full_pipeline(s->space, k);
        *json = copy_string(pipeline_json(rep));
        *match = rep.match ? 1 : 0;
    });
}

sym_status sym_verify(const sym_suite_spec* spec, char** json, int* pass) {
    SYM_REQUIRE(spec);
    SYM_REQUIRE(json);
    SYM_REQUIRE(pass);
    return guarded([&] {
        SuiteSpec s;
        s.suite = spec->suite;
        s.p = spec->p;
        s.m = spec->m;
        s.k = spec->k;
        s.mode = spec->sampled ? Mode::sampled : Mode::exhaustive;
        s.seed = spec->seed;
        s.samples = spec->samples;
        auto rep = run_suite(s);
        *json = copy_string(report_to_json(rep));
        *pass = rep.pass ? 1 : 0;
    });
}

sym_status sym_replay(unsigned p, size_t m, const char* failure_json, int* holds) {
    SYM_REQUIRE(failure_json);
    SYM_REQUIRE(holds);
    return guarded([&] { *holds = replay(failure_from_json(failure_json), p, m) ? 1 : 0; });
}

sym_status sym_set_fault_injection(const char* check) {
    return guarded([&] {
        std::string name = check ? check : "";
        if (!name.empty()) check_function(name);
        set_fault_injection(std::move(name));
    });
}

} // extern "C"
