#include "symplectica/symplectic.hpp"

#include <algorithm>

namespace symplectica {

SymplecticSpace SymplecticSpace::make(unsigned p, std::size_t m, std::optional<Matrix> gram) {
    Field f(p);
    if (m < 1) fail(ErrorCode::invalid_argument, "m must be at least 1");
    const std::size_t n = 2 * m;
    if (!gram) {
        Matrix j(n, n);
        for (std::size_t i = 0; i < m; ++i) {
            j.at(2 * i, 2 * i + 1) = 1;
            j.at(2 * i + 1, 2 * i) = f.neg(1);
        }
        return SymplecticSpace(f, m, std::move(j));
    }
    const Matrix& j = *gram;
    if (j.rows() != n || j.cols() != n) fail(ErrorCode::validation, "gram matrix must be n x n");
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            if (j.at(r, c) >= p) fail(ErrorCode::validation, "gram entries must be reduced mod p");
            if (j.at(r, c) != f.neg(j.at(c, r))) fail(ErrorCode::validation, "gram matrix is not alternating");
        }
    if (rank(f, j) != n) fail(ErrorCode::validation, "gram matrix is singular");
    return SymplecticSpace(f, m, j);
}

Elem SymplecticSpace::form(std::span<const Elem> u, std::span<const Elem> v) const {
    const std::size_t n = this->n();
    unsigned acc = 0;
    for (std::size_t r = 0; r < n; ++r) {
        if (u[r] == 0) continue;
        unsigned row = 0;
        for (std::size_t c = 0; c < n; ++c) row += unsigned(gram_.at(r, c)) * v[c];
        acc += u[r] * (row % p());
    }
    return Elem(acc % p());
}

Subspace SymplecticSpace::perp(const Subspace& u) const {
    if (u.ambient_dim() != n()) fail(ErrorCode::invalid_argument, "subspace not in this space");
    if (u.is_zero()) return Subspace::full(n());
    return kernel(field_, multiply(field_, u.basis(), gram_));
}

Subspace SymplecticSpace::radical(const Subspace& u) const {
    if (u.is_zero()) return u;
    return intersect(field_, u, perp(u));
}

std::size_t SymplecticSpace::rdim(const Subspace& u) const {
    if (u.ambient_dim() != n()) fail(ErrorCode::invalid_argument, "subspace not in this space");
    const std::size_t k = u.dim();
    if (k == 0) return 0;
    // rdim = dim U - rank of the restricted Gram matrix B J B^T
    Matrix restricted(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            Elem x = form(u.row(i), u.row(j));
            restricted.at(i, j) = x;
            restricted.at(j, i) = field_.neg(x);
        }
    return k - rank(field_, restricted);
}

Classification classify(const SymplecticSpace& s, const Subspace& u) {
    Classification c;
    c.dim = u.dim();
    c.rdim = s.rdim(u);
    c.isotropic = c.rdim == c.dim;
    c.regular = c.rdim == 0;
    c.tangential = c.rdim == 1;
    c.in_tr = c.rdim <= 1;
    return c;
}

TangentialSplit tangential_decompose(const SymplecticSpace& s, const Subspace& u) {
    const Field& f = s.field();
    Subspace rad = s.radical(u);
    if (rad.dim() != 1) fail(ErrorCode::precondition, "subspace is not tangential");
    // Greedy: keep basis rows of U in order while they stay independent of Rad(U).
    Matrix chosen(0, u.ambient_dim());
    Matrix with_rad = rad.basis();
    for (std::size_t i = 0; i < u.dim() && chosen.rows() + 1 < u.dim(); ++i) {
        Matrix trial = with_rad;
        trial.append_row(u.row(i));
        if (rank(f, trial) == trial.rows()) {
            with_rad = std::move(trial);
            chosen.append_row(u.row(i));
        }
    }
    return {Subspace::span(f, chosen), rad};
}

std::optional<Elem> similitude_factor(const SymplecticSpace& s, const Matrix& m) {
    const Field& f = s.field();
    const std::size_t n = s.n();
    if (m.rows() != n || m.cols() != n) return std::nullopt;
    Matrix a = multiply(f, multiply(f, m.transposed(), s.gram()), m);
    std::optional<Elem> lambda;
    for (std::size_t r = 0; r < n && !lambda; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (s.gram().at(r, c) != 0) {
                lambda = f.mul(a.at(r, c), f.inv(s.gram().at(r, c)));
                break;
            }
    if (!lambda || *lambda == 0) return std::nullopt;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (a.at(r, c) != f.mul(*lambda, s.gram().at(r, c))) return std::nullopt;
    return lambda;
}

Matrix hyperbolic_basis(const SymplecticSpace& s, SplitMix64* rng) {
    const Field& f = s.field();
    const std::size_t n = s.n();
    Matrix out(n, n);
    Subspace rest = Subspace::full(n);

    auto pick = [&](const Subspace& w, auto&& accept) -> Vec {
        const std::size_t d = w.dim();
        Vec v(n);
        if (rng) {
            for (;;) {
                std::fill(v.begin(), v.end(), 0);
                for (std::size_t i = 0; i < d; ++i) {
                    Elem c = Elem(rng->below(f.p()));
                    if (c == 0) continue;
                    auto row = w.row(i);
                    for (std::size_t j = 0; j < n; ++j) v[j] = f.add(v[j], f.mul(c, row[j]));
                }
                if (accept(v)) return v;
            }
        }
        for (std::size_t i = 0; i < d; ++i) {
            v.assign(w.row(i).begin(), w.row(i).end());
            if (accept(v)) return v;
        }
        fail(ErrorCode::internal, "hyperbolic basis completion failed");
    };

    for (std::size_t i = 0; i < s.m(); ++i) {
        Vec v = pick(rest, [](const Vec& x) {
            return std::any_of(x.begin(), x.end(), [](Elem e) { return e != 0; });
        });
        Vec w = pick(rest, [&](const Vec& x) { return s.form(v, x) != 0; });
        Elem scale = f.inv(s.form(v, w));
        for (auto& e : w) e = f.mul(e, scale);
        for (std::size_t r = 0; r < n; ++r) {
            out.at(r, 2 * i) = v[r];
            out.at(r, 2 * i + 1) = w[r];
        }
        Subspace pair = Subspace::span_vectors(f, n, {v, w});
        rest = intersect(f, rest, s.perp(pair));
    }
    return out;
}

Similitude random_similitude(const SymplecticSpace& s, std::uint64_t seed, bool force_isometry) {
    const Field& f = s.field();
    SplitMix64 rng(seed);
    Matrix q = hyperbolic_basis(s, &rng);
    Elem lambda = force_isometry ? Elem(1) : Elem(1 + rng.below(f.p() - 1));
    if (lambda != 1)
        for (std::size_t r = 0; r < s.n(); ++r)
            for (std::size_t i = 0; i < s.m(); ++i) q.at(r, 2 * i + 1) = f.mul(q.at(r, 2 * i + 1), lambda);
    // q^T J q = lambda J0 and P^T J P = J0, so M = q P^-1 scales J by lambda.
    Matrix p = hyperbolic_basis(s, nullptr);
    return {multiply(f, q, inverse(f, p)), lambda};
}

boost::multiprecision::cpp_int sp_order(std::size_t m, unsigned p) {
    using boost::multiprecision::cpp_int;
    cpp_int order = boost::multiprecision::pow(cpp_int(p), static_cast<unsigned>(m * m));
    for (std::size_t i = 1; i <= m; ++i)
        order *= boost::multiprecision::pow(cpp_int(p), static_cast<unsigned>(2 * i)) - 1;
    return order;
}

} // namespace symplectica
