#pragma once

// Brute-force references for the tests: subspaces as explicit vector sets,
// the form evaluated coordinate by coordinate.

#include <set>
#include <vector>

#include "symplectica/symplectic.hpp"

namespace oracle {

using namespace symplectica;

inline std::set<Vec> vectors_of(const Field& f, const Matrix& m) {
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

inline std::set<Vec> vectors_of(const Field& f, const Subspace& u) {
    if (u.dim() == 0) return {Vec(u.ambient_dim(), 0)};
    return vectors_of(f, u.basis());
}

inline std::set<Vec> all_vectors(const Field& f, std::size_t n) { return vectors_of(f, Matrix::identity(n)); }

inline unsigned form(const SymplecticSpace& s, const Vec& u, const Vec& v) {
    const auto& j = s.gram();
    long long acc = 0;
    for (std::size_t a = 0; a < u.size(); ++a)
        for (std::size_t b = 0; b < v.size(); ++b) acc += (long long)u[a] * j.at(a, b) * v[b];
    return unsigned(acc % s.p());
}

inline std::set<Vec> perp_of(const SymplecticSpace& s, const Subspace& u) {
    auto inside = vectors_of(s.field(), u);
    std::set<Vec> out;
    for (const auto& v : all_vectors(s.field(), s.n())) {
        bool ok = true;
        for (const auto& w : inside)
            if (form(s, v, w)) {
                ok = false;
                break;
            }
        if (ok) out.insert(v);
    }
    return out;
}

inline std::size_t log_p(std::size_t size, unsigned p) {
    std::size_t d = 0;
    while (size > 1) size /= p, ++d;
    return d;
}

/// dim of U intersected with its perp, counted vector by vector
inline std::size_t rdim(const SymplecticSpace& s, const Subspace& u) {
    auto inside = vectors_of(s.field(), u);
    auto perp = perp_of(s, u);
    std::size_t common = 0;
    for (const auto& v : inside) common += perp.count(v);
    return log_p(common, s.p());
}

} // namespace oracle
