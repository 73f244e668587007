#include "doctest.h"

#include <set>

#include "symplectica/algebra.hpp"
#include "symplectica/prng.hpp"

using namespace symplectica;

namespace {

// Independent oracle: a subspace as the explicit set of its vectors.
std::set<Vec> vectors_of(const Field& f, const Matrix& m) {
    std::set<Vec> out;
    const std::size_t r = m.rows(), n = m.cols();
    std::vector<unsigned> coeff(r, 0);
    while (true) {
        Vec v(n, 0);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < n; ++j) v[j] = f.add(v[j], f.mul(Elem(coeff[i]), m.at(i, j)));
        out.insert(v);
        std::size_t i = 0;
        while (i < r && ++coeff[i] == f.p()) coeff[i++] = 0;
        if (i == r) break;
    }
    return out;
}

Matrix random_matrix(SplitMix64& rng, unsigned p, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Elem(rng.below(p));
    return m;
}

std::size_t log_p(std::size_t size, unsigned p) {
    std::size_t d = 0;
    while (size > 1) size /= p, ++d;
    return d;
}

} // namespace

TEST_CASE("field arithmetic") {
    Field f(7);
    for (unsigned a = 1; a < 7; ++a) CHECK(f.mul(Elem(a), f.inv(Elem(a))) == 1);
    CHECK(f.add(5, 4) == 2);
    CHECK(f.sub(2, 5) == 4);
    CHECK(f.neg(3) == 4);
    CHECK(f.reduce(-1) == 6);
    CHECK_THROWS_AS((void)f.inv(0), Error);
}

TEST_CASE("field rejects unsupported orders") {
    CHECK_THROWS_WITH(Field(2), "characteristic 2 unsupported");
    CHECK_THROWS_WITH(Field(9), "p must be prime");
    CHECK_THROWS(Field(257));
    CHECK_NOTHROW(Field(251));
}

TEST_CASE("rank and row space agree with the vector-set oracle") {
    SplitMix64 rng(11);
    for (unsigned p : {3u, 5u}) {
        Field f(p);
        for (int t = 0; t < 60; ++t) {
            const std::size_t rows = 1 + rng.below(4), cols = 1 + rng.below(4);
            auto m = random_matrix(rng, p, rows, cols);
            auto brute = vectors_of(f, m);
            CHECK(rank(f, m) == log_p(brute.size(), p));
            auto u = Subspace::span(f, m);
            CHECK(vectors_of(f, u.basis()) == brute);
        }
    }
}

TEST_CASE("canonical bases make equal subspaces byte-equal") {
    SplitMix64 rng(5);
    Field f(3);
    for (int t = 0; t < 40; ++t) {
        auto m = random_matrix(rng, 3, 3, 5);
        // a random invertible row operation sequence gives the same row space
        Matrix mixed = m;
        for (int op = 0; op < 6; ++op) {
            auto i = rng.below(3), j = rng.below(3);
            if (i == j) continue;
            auto c = Elem(rng.below(3));
            for (std::size_t col = 0; col < 5; ++col)
                mixed.at(i, col) = f.add(mixed.at(i, col), f.mul(c, mixed.at(j, col)));
        }
        CHECK(Subspace::span(f, m) == Subspace::span(f, mixed));
        CHECK(Subspace::span(f, m).bytes() == Subspace::span(f, mixed).bytes());
    }
}

TEST_CASE("sum, intersection, kernel and containment against the oracle") {
    SplitMix64 rng(17);
    Field f(3);
    for (int t = 0; t < 50; ++t) {
        auto a = Subspace::span(f, random_matrix(rng, 3, 1 + rng.below(3), 4));
        auto b = Subspace::span(f, random_matrix(rng, 3, 1 + rng.below(3), 4));
        auto va = vectors_of(f, a.basis()), vb = vectors_of(f, b.basis());
        std::set<Vec> common;
        for (const auto& v : va)
            if (vb.count(v)) common.insert(v);
        auto meet = intersect(f, a, b);
        CHECK((meet.dim() == 0 ? std::set<Vec>{Vec(4, 0)} : vectors_of(f, meet.basis())) == common);
        auto join = sum(f, a, b);
        CHECK(join.dim() + meet.dim() == a.dim() + b.dim());
        for (const auto& v : va) CHECK(contains_vector(f, join, v));
        CHECK(contains(f, join, a));
        CHECK(contains(f, a, meet));
        CHECK(contains(f, b, a) == std::includes(vb.begin(), vb.end(), va.begin(), va.end()));

        auto m = random_matrix(rng, 3, 2, 4);
        auto ker = kernel(f, m);
        CHECK(ker.dim() == 4 - rank(f, m));
        for (std::size_t i = 0; i < ker.dim(); ++i)
            for (std::size_t r = 0; r < 2; ++r) {
                unsigned acc = 0;
                for (std::size_t c = 0; c < 4; ++c) acc += unsigned(m.at(r, c)) * ker.row(i)[c];
                CHECK(acc % 3 == 0);
            }
    }
}

TEST_CASE("inverse") {
    SplitMix64 rng(23);
    Field f(5);
    int found = 0;
    for (int t = 0; t < 50; ++t) {
        auto m = random_matrix(rng, 5, 3, 3);
        if (rank(f, m) < 3) {
            CHECK_THROWS_AS(inverse(f, m), Error);
            continue;
        }
        ++found;
        CHECK(multiply(f, m, inverse(f, m)) == Matrix::identity(3));
    }
    CHECK(found > 0);
}

TEST_CASE("enumeration matches gaussian binomials and the explicit count") {
    for (unsigned p : {3u, 5u}) {
        Field f(p);
        for (std::size_t n = 1; n <= 4; ++n)
            for (std::size_t k = 0; k <= n; ++k) {
                auto all = enumerate_subspaces(f, n, k);
                CHECK(all.size() == gaussian_binomial(p, unsigned(n), unsigned(k)));
                std::set<Subspace> distinct(all.begin(), all.end());
                CHECK(distinct.size() == all.size());
                CHECK(std::is_sorted(all.begin(), all.end()));
                for (const auto& u : all) CHECK(u.dim() == k);
            }
    }
    // [4 choose 2]_3 = 130, [6 choose 3]_3 = 33880
    CHECK(gaussian_binomial(3, 4, 2) == 130);
    CHECK(gaussian_binomial(3, 6, 3) == 33880);
}

TEST_CASE("subspaces and points of a subspace") {
    Field f(3);
    auto u = Subspace::span(f, Matrix::from_rows(f, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}}, 4));
    CHECK(points_of(f, u).size() == 13);
    CHECK(subspaces_of(f, u, 2).size() == 13);
    for (const auto& w : subspaces_of(f, u, 2)) CHECK(contains(f, u, w));
}

TEST_CASE("image under a linear map") {
    Field f(3);
    auto swap = Matrix::from_rows(f, {{0, 1}, {1, 0}}, 2);
    auto e1 = Subspace::span(f, Matrix::from_rows(f, {{1, 0}}, 2));
    auto e2 = Subspace::span(f, Matrix::from_rows(f, {{0, 1}}, 2));
    CHECK(image(f, swap, e1) == e2);
}
