#pragma once

// Symplectic form on GF(p)^n, orthogonality, radicals and the duality
// U -> U^perp, plus isometry/similitude generation.

#include <cstdint>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "symplectica/algebra.hpp"
#include "symplectica/prng.hpp"

namespace symplectica {

class SymplecticSpace {
public:
    /// Default gram: m hyperbolic pairs on basis order e1,f1,...,em,fm.
    /// A supplied gram must be alternating and nonsingular (Error(validation)).
    static SymplecticSpace make(unsigned p, std::size_t m, std::optional<Matrix> gram = std::nullopt);

    const Field& field() const noexcept { return field_; }
    unsigned p() const noexcept { return field_.p(); }
    std::size_t m() const noexcept { return m_; }
    std::size_t n() const noexcept { return 2 * m_; }
    const Matrix& gram() const noexcept { return gram_; }

    /// u^T J v
    Elem form(std::span<const Elem> u, std::span<const Elem> v) const;

    Subspace perp(const Subspace& u) const;
    Subspace radical(const Subspace& u) const;
    std::size_t rdim(const Subspace& u) const;
    /// rdim <= 1
    bool in_tr(const Subspace& u) const { return rdim(u) <= 1; }

    /// The duality; identical to perp, named for its role on the level sets.
    Subspace kappa(const Subspace& u) const { return perp(u); }

private:
    SymplecticSpace(Field f, std::size_t m, Matrix gram) : field_(f), m_(m), gram_(std::move(gram)) {}

    Field field_;
    std::size_t m_;
    Matrix gram_;
};

struct Classification {
    std::size_t dim = 0;
    std::size_t rdim = 0;
    bool isotropic = false;
    bool regular = false;
    bool tangential = false;
    bool in_tr = false;
};

Classification classify(const SymplecticSpace& s, const Subspace& u);

struct TangentialSplit {
    Subspace regular_part;
    Subspace point;
};

/// U = U0 + Rad(U) with U0 regular; Error(precondition) unless U is tangential.
TangentialSplit tangential_decompose(const SymplecticSpace& s, const Subspace& u);

struct Similitude {
    Matrix matrix;
    Elem factor = 1;
};

/// Checks M^T J M = lambda J for some nonzero lambda; returns lambda.
std::optional<Elem> similitude_factor(const SymplecticSpace& s, const Matrix& m);

/// Columns v1,w1,v2,w2,... of a hyperbolic basis (xi(vi,wi) = 1, all other
/// pairs orthogonal), built greedily. With a generator the picks are random;
/// without one they are the first candidates in coordinate order.
Matrix hyperbolic_basis(const SymplecticSpace& s, SplitMix64* rng);

Similitude random_similitude(const SymplecticSpace& s, std::uint64_t seed, bool force_isometry);

/// |Sp(2m, p)| = p^(m^2) * prod_{i=1..m} (p^(2i) - 1)
boost::multiprecision::cpp_int sp_order(std::size_t m, unsigned p);

} // namespace symplectica
