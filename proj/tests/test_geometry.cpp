#include "doctest.h"

#include <algorithm>
#include <map>

#include "oracle.hpp"
#include "symplectica/graph.hpp"
#include "symplectica/grassmann.hpp"
#include "symplectica/parallel.hpp"

using namespace symplectica;

namespace {

Subspace random_subspace(const Field& f, SplitMix64& rng, std::size_t rows, std::size_t n) {
    Matrix m(rows, n);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Elem(rng.below(f.p()));
    return Subspace::span(f, m);
}

} // namespace

TEST_CASE("perp and radical agree with the vector-set oracle") {
    SplitMix64 rng(31);
    for (unsigned p : {3u, 5u}) {
        auto s = SymplecticSpace::make(p, 2);
        const Field& f = s.field();
        for (int t = 0; t < 40; ++t) {
            auto u = random_subspace(f, rng, 1 + rng.below(4), 4);
            CHECK(oracle::vectors_of(f, s.perp(u)) == oracle::perp_of(s, u));
            CHECK(s.rdim(u) == oracle::rdim(s, u));
            CHECK(s.radical(u).dim() == s.rdim(u));
            CHECK(s.perp(s.perp(u)) == u);
            CHECK(s.perp(u).dim() + u.dim() == 4);
        }
    }
}

TEST_CASE("the form is alternating and nondegenerate") {
    auto s = SymplecticSpace::make(3, 2);
    const auto vs = oracle::all_vectors(s.field(), 4);
    for (const auto& v : vs) {
        CHECK(s.form(v, v) == 0);
        bool orthogonal_to_all = true;
        for (const auto& w : vs) {
            CHECK(s.form(v, w) == s.field().neg(s.form(w, v)));
            CHECK(s.form(v, w) == oracle::form(s, v, w));
            if (s.form(v, w)) orthogonal_to_all = false;
        }
        CHECK(orthogonal_to_all == std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; }));
    }
}

TEST_CASE("custom gram matrices are validated") {
    Field f(3);
    auto symmetric = Matrix::from_rows(f, {{0, 1}, {1, 0}}, 2);
    CHECK_THROWS_AS(SymplecticSpace::make(3, 1, symmetric), Error);
    auto singular = Matrix::from_rows(f, {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 2, 0}}, 4);
    CHECK_THROWS_AS(SymplecticSpace::make(3, 2, singular), Error);
    auto twisted = Matrix::from_rows(f, {{0, 0, 1, 0}, {0, 0, 0, 1}, {2, 0, 0, 0}, {0, 2, 0, 0}}, 4);
    auto s = SymplecticSpace::make(3, 2, twisted);
    CHECK(enumerate_tr(s, 2).size() == 90);
}

TEST_CASE("census of GF(3)^4") {
    auto s = SymplecticSpace::make(3, 2);
    const Field& f = s.field();
    std::map<std::size_t, std::size_t> total, isotropic, regular, tangential, tr;
    for (std::size_t k = 0; k <= 4; ++k)
        for (const auto& u : enumerate_subspaces(f, 4, k)) {
            auto c = classify(s, u);
            CHECK(c.rdim % 2 == k % 2);
            ++total[k];
            isotropic[k] += c.isotropic;
            regular[k] += c.regular;
            tangential[k] += c.tangential;
            tr[k] += c.in_tr;
        }
    // (p+1)(p^2+1) points
    CHECK(total[1] == (3 + 1) * (9 + 1));
    CHECK(total[2] == 130);
    CHECK(isotropic[2] == 40);
    CHECK(regular[2] == 90);
    CHECK(total[3] == 40);
    CHECK(tangential[3] == 40);
    CHECK(tr[1] == 40);
    CHECK(tr[2] == 90);
    CHECK(tr[3] == 40);
    for (std::size_t k = 1; k <= 3; ++k) CHECK(enumerate_tr(s, k).size() == tr[k]);
}

TEST_CASE("tangential subspaces split into a regular part and their radical") {
    auto s = SymplecticSpace::make(3, 2);
    const Field& f = s.field();
    int seen = 0;
    for (std::size_t k = 1; k <= 3; ++k)
        for (const auto& u : enumerate_subspaces(f, 4, k)) {
            if (!classify(s, u).tangential) {
                CHECK_THROWS_AS(tangential_decompose(s, u), Error);
                continue;
            }
            ++seen;
            auto split = tangential_decompose(s, u);
            CHECK(s.rdim(split.regular_part) == 0);
            CHECK(split.point == s.radical(u));
            CHECK(sum(f, split.regular_part, split.point) == u);
        }
    CHECK(seen == 80);
}

TEST_CASE("group orders and similitudes") {
    CHECK(sp_order(1, 3) == 24);
    CHECK(sp_order(2, 3) == 51840);
    CHECK(sp_order(1, 5) == 120);
    auto s = SymplecticSpace::make(3, 2);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto g = random_similitude(s, seed, seed % 2 == 0);
        auto factor = similitude_factor(s, g.matrix);
        REQUIRE(factor.has_value());
        CHECK(*factor == g.factor);
        if (seed % 2 == 0) CHECK(g.factor == 1);
        CHECK(rank(s.field(), g.matrix) == 4);
    }
    CHECK_FALSE(similitude_factor(s, Matrix::from_rows(s.field(), {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 2}}, 4)));
}

TEST_CASE("hyperbolic bases") {
    for (std::size_t m : {1u, 2u, 3u}) {
        auto s = SymplecticSpace::make(3, m);
        SplitMix64 rng(m);
        for (auto* r : {&rng, static_cast<SplitMix64*>(nullptr)}) {
            auto b = hyperbolic_basis(s, r);
            auto col = [&](std::size_t j) {
                Vec v(s.n());
                for (std::size_t i = 0; i < s.n(); ++i) v[i] = b.at(i, j);
                return v;
            };
            for (std::size_t i = 0; i < s.n(); ++i)
                for (std::size_t j = 0; j < s.n(); ++j) {
                    Elem want = 0;
                    if (i % 2 == 0 && j == i + 1) want = 1;
                    if (j % 2 == 0 && i == j + 1) want = s.field().neg(1);
                    CHECK(s.form(col(i), col(j)) == want);
                }
        }
    }
}

TEST_CASE("pencils have p+1 members at odd levels and p at even levels") {
    auto s = SymplecticSpace::make(3, 2);
    std::map<std::size_t, std::size_t> expected_size{{1, 4}, {2, 3}, {3, 4}};
    std::map<std::size_t, std::size_t> expected_lines{{1, 90}, {2, 480}, {3, 90}};
    for (std::size_t k = 1; k <= 3; ++k) {
        auto g = build_grassmann(s, k);
        CHECK(g.lines.size() == expected_lines[k]);
        for (const auto& l : g.lines) {
            CHECK(l.members.size() == expected_size[k]);
            for (auto i : l.members) {
                CHECK(contains(s.field(), g.points[i], l.lower));
                CHECK(contains(s.field(), l.upper, g.points[i]));
            }
        }
    }
}

TEST_CASE("stars and tops are the parametrised families") {
    auto s = SymplecticSpace::make(3, 2);
    const Field& f = s.field();
    for (std::size_t k = 1; k <= 3; ++k) {
        PointIndex pts(enumerate_tr(s, k));
        auto stars = star_family(s, pts, k);
        auto tops = top_family(s, pts, k);
        for (std::size_t i = 0; i < stars.labels.size(); ++i) {
            // star: every point of the level through the centre
            std::vector<std::uint32_t> brute;
            for (std::uint32_t x = 0; x < pts.size(); ++x)
                if (contains(f, pts[x], stars.labels[i])) brute.push_back(x);
            CHECK(stars.members[i] == brute);
            std::vector<std::uint32_t> param;
            for (const auto& u : star(s, stars.labels[i], k)) param.push_back(pts.at(u));
            std::sort(param.begin(), param.end());
            CHECK(param == brute);
        }
        for (std::size_t i = 0; i < tops.labels.size(); ++i) {
            std::vector<std::uint32_t> brute;
            for (std::uint32_t x = 0; x < pts.size(); ++x)
                if (contains(f, tops.labels[i], pts[x])) brute.push_back(x);
            CHECK(tops.members[i] == brute);
        }
    }
}

TEST_CASE("adjacency graphs follow the pairwise definitions") {
    auto s = SymplecticSpace::make(3, 2);
    for (std::size_t k = 1; k <= 3; ++k) {
        PointIndex pts(enumerate_tr(s, k));
        auto graphs = build_level_graphs(s, pts, k);
        for (auto [kind, g] : {std::pair{AdjacencyKind::lower, &graphs.lower},
                               std::pair{AdjacencyKind::upper, &graphs.upper},
                               std::pair{AdjacencyKind::collinear, &graphs.collinear}}) {
            CHECK(g->is_simple());
            for (std::uint32_t i = 0; i < pts.size(); ++i)
                for (std::uint32_t j = 0; j < pts.size(); ++j)
                    CHECK(g->has_edge(i, j) == adjacent(s, pts[i], pts[j], kind));
        }
        CHECK(graphs.collinear == intersection(graphs.lower, graphs.upper));
        if (k == 2) {
            CHECK(graphs.lower == graphs.collinear);
            CHECK(graphs.upper == graphs.collinear);
        }
        if (k == 1) CHECK(graphs.upper == graphs.collinear);
        if (k == 3) CHECK(graphs.lower == graphs.collinear);
    }
}

TEST_CASE("collinear pairs lie on exactly one pencil") {
    auto s = SymplecticSpace::make(3, 2);
    for (std::size_t k = 1; k <= 3; ++k) {
        auto gr = build_grassmann(s, k);
        auto g = build_adjacency_graph(s, gr.points, k, AdjacencyKind::collinear);
        std::map<std::pair<std::uint32_t, std::uint32_t>, int> lines_through;
        for (const auto& l : gr.lines)
            for (std::size_t a = 0; a < l.members.size(); ++a)
                for (std::size_t b = a + 1; b < l.members.size(); ++b) ++lines_through[{l.members[a], l.members[b]}];
        CHECK(lines_through.size() == g.edge_count());
        for (auto [pair, count] : lines_through) {
            CHECK(count == 1);
            CHECK(g.has_edge(pair.first, pair.second));
        }
    }
}

TEST_CASE("graphs do not depend on the worker count") {
    auto s = SymplecticSpace::make(3, 2);
    PointIndex pts(enumerate_tr(s, 3));
    set_thread_count(1);
    auto one = build_level_graphs(s, pts, 3);
    set_thread_count(3);
    auto three = build_level_graphs(s, pts, 3);
    set_thread_count(0);
    CHECK(one.lower == three.lower);
    CHECK(one.upper == three.upper);
    CHECK(one.collinear == three.collinear);
}

TEST_CASE("point index lookups") {
    auto s = SymplecticSpace::make(3, 2);
    PointIndex pts(enumerate_tr(s, 2));
    for (std::uint32_t i = 0; i < pts.size(); ++i) CHECK(pts.at(pts[i]) == i);
    // an isotropic line is not a point of the level
    auto iso = Subspace::span(s.field(), Matrix::from_rows(s.field(), {{1, 0, 0, 0}, {0, 0, 1, 0}}, 4));
    CHECK_FALSE(pts.find(iso));
    CHECK_THROWS_AS(pts.at(iso), Error);
}
