#pragma once

// Ternary collinearity of a Grassmann level, decided three ways: from the
// subspaces themselves, from the collinearity graph alone, and from the
// lower adjacency alone.

#include <cstdint>

#include "symplectica/incidence.hpp"
#include "symplectica/triangles.hpp"

namespace symplectica {

/// Ground truth: the three points lie on one pencil. Equal first two
/// arguments degenerate to "U3 is U1 or collinear with it".
bool collinear_ground_truth(const SymplecticSpace& s, const Subspace& u1, const Subspace& u2, const Subspace& u3);

/// First-order definition over the collinearity graph:
///   U1 ~ U2 and there are W1, W2 ~ U1, U2 with W1 !~ W2 such that the common
///   neighbourhood of U1, U2, W1, W2 is a clique and contains U3.
/// Error(precondition) when u1 == u2. A repeated third argument reduces to u1 ~ u2.
bool collinear_from_adjacency(const Graph& collinear, std::uint32_t u1, std::uint32_t u2, std::uint32_t u3);

/// Definition over the lower adjacency: some S-triangle and some T-triangle
/// both have U1, U2, U3 in their common neighbourhood. Evaluated literally;
/// the oracle's memo makes repeated calls cheap.
bool collinear_from_lower(TriangleOracle& oracle, std::uint32_t u1, std::uint32_t u2, std::uint32_t u3);

/// a, b and every c with collinear_from_lower(a, b, c), in one pass over the
/// triangles of the common neighbourhood of a and b instead of one search per c.
/// Just {a, b} when they are not adjacent.
PointSet line_from_lower(TriangleOracle& oracle, std::uint32_t a, std::uint32_t b);

} // namespace symplectica
