#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "symplectica/automorphism.hpp"
#include "symplectica/graph.hpp"
#include "symplectica/prng.hpp"

using namespace symplectica;

namespace {

Graph from_edges(std::size_t n, std::initializer_list<std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [a, b] : edges) g.add_edge(a, b);
    g.finalize();
    return g;
}

Graph random_graph(SplitMix64& rng, std::size_t n, unsigned percent) {
    Graph g(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (rng.below(100) < percent) g.add_edge(a, b);
    g.finalize();
    return g;
}

Graph cycle(std::size_t n) {
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    g.finalize();
    return g;
}

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    g.finalize();
    return g;
}

// every subset, keep cliques with no single-vertex extension
std::vector<std::vector<std::uint32_t>> brute_maximal_cliques(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<std::vector<std::uint32_t>> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<std::uint32_t> vs;
        for (std::uint32_t v = 0; v < n; ++v)
            if (mask >> v & 1) vs.push_back(v);
        if (!is_clique(g, vs)) continue;
        bool maximal = true;
        for (std::uint32_t v = 0; v < n && maximal; ++v) {
            if (mask >> v & 1) continue;
            bool all = true;
            for (auto u : vs) all = all && g.has_edge(u, v);
            if (all) maximal = false;
        }
        if (maximal) out.push_back(vs);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t brute_automorphisms(const Graph& g) {
    std::vector<std::uint32_t> perm(g.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::size_t count = 0;
    do {
        bool ok = true;
        for (std::size_t a = 0; a < g.size() && ok; ++a)
            for (std::size_t b = 0; b < g.size() && ok; ++b) ok = g.has_edge(a, b) == g.has_edge(perm[a], perm[b]);
        count += ok;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

std::size_t brute_diameter(const Graph& g) {
    std::size_t best = 0;
    for (std::uint32_t s = 0; s < g.size(); ++s) {
        std::vector<int> dist(g.size(), -1);
        std::queue<std::uint32_t> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            auto u = q.front();
            q.pop();
            for (auto v : g.neighbors(u))
                if (dist[v] < 0) dist[v] = dist[u] + 1, q.push(v);
        }
        for (int d : dist) best = std::max<std::size_t>(best, std::size_t(d));
    }
    return best;
}

} // namespace

TEST_CASE("bit helpers") {
    std::vector<std::uint64_t> row(3, 0);
    for (std::size_t j : {0u, 63u, 64u, 130u}) set_bit(row.data(), j);
    CHECK(popcount(row.data(), 3) == 4);
    CHECK(bits_to_list(row.data(), 3) == std::vector<std::uint32_t>{0, 63, 64, 130});
    clear_bit(row.data(), 63);
    CHECK_FALSE(test_bit(row.data(), 63));
    CHECK(test_bit(row.data(), 130));
}

TEST_CASE("graph basics") {
    auto g = from_edges(5, {{0, 1}, {1, 2}, {3, 4}});
    CHECK(g.is_simple());
    CHECK(g.edge_count() == 3);
    CHECK(g.edges() == std::vector<std::pair<std::uint32_t, std::uint32_t>>{{0, 1}, {1, 2}, {3, 4}});
    CHECK(g.neighbors(1) == std::vector<std::uint32_t>{0, 2});
    std::size_t count = 0;
    auto labels = components(g, &count);
    CHECK(count == 2);
    CHECK(labels == std::vector<std::uint32_t>{0, 0, 0, 1, 1});
    CHECK_THROWS_AS(diameter(g), Error);
    const std::uint32_t seeds[] = {0, 2};
    CHECK(common_neighbors(g, seeds) == std::vector<std::uint32_t>{1});

    auto u = union_of_cliques(5, {{0, 1, 2}, {2, 3}});
    CHECK(u.edge_count() == 4);
    CHECK(intersection(u, g).edge_count() == 2);
}

TEST_CASE("diameter against breadth-first search") {
    CHECK(diameter(cycle(7)) == 3);
    CHECK(diameter(petersen()) == 2);
    SplitMix64 rng(3);
    for (int t = 0; t < 30; ++t) {
        auto g = random_graph(rng, 12, 40);
        std::size_t count = 0;
        components(g, &count);
        if (count != 1) continue;
        CHECK(diameter(g) == brute_diameter(g));
    }
}

TEST_CASE("maximal cliques against subset enumeration") {
    SplitMix64 rng(7);
    for (int t = 0; t < 40; ++t) {
        auto g = random_graph(rng, 11, unsigned(20 + 15 * (t % 4)));
        CHECK(maximal_cliques(g) == brute_maximal_cliques(g));
    }
    CHECK(maximal_cliques(petersen()).size() == 15);
    CHECK_THROWS_AS(maximal_cliques(cycle(30), 10), Error);
}

TEST_CASE("automorphism counts of known graphs") {
    CHECK(automorphism_count(cycle(9)) == 18);
    CHECK(automorphism_count(petersen()) == 120);
    CHECK(automorphism_count(Graph(6)) == 720);
    CHECK(automorphism_count(union_of_cliques(7, {{0, 1, 2, 3, 4, 5, 6}})) == 5040);
    // two disjoint triangles: 3! * 3! * 2
    CHECK(automorphism_count(union_of_cliques(6, {{0, 1, 2}, {3, 4, 5}})) == 72);
    CHECK_THROWS_AS(automorphism_count(Graph(20), 10), Error);
}

TEST_CASE("automorphism counts against permutation enumeration") {
    SplitMix64 rng(13);
    for (int t = 0; t < 25; ++t) {
        auto g = random_graph(rng, 7, unsigned(15 + 10 * (t % 6)));
        CHECK(automorphism_count(g) == brute_automorphisms(g));
    }
}

TEST_CASE("automorphism search respects colours") {
    auto g = cycle(6);
    std::vector<std::uint32_t> left(6, 0), right(6, 0);
    left[0] = 1;
    right[3] = 1;
    auto perm = find_automorphism(g, left, right);
    REQUIRE(perm);
    CHECK(is_automorphism(g, *perm));
    CHECK((*perm)[0] == 3);
    // a path end cannot go to its middle
    auto path = from_edges(3, {{0, 1}, {1, 2}});
    std::vector<std::uint32_t> l{1, 0, 0}, r{0, 1, 0};
    CHECK_FALSE(find_automorphism(path, l, r));
    const std::uint32_t swap[] = {0, 2, 1};
    CHECK_FALSE(is_automorphism(path, swap));
}
