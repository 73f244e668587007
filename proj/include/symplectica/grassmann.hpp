#pragma once

// Levels (T-R)_k = {U : dim U = k, rdim U <= 1}, their stars, tops and
// pencils, and the point-line space whose lines are the nonempty pencils.

#include <cstdint>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "symplectica/symplectic.hpp"

namespace symplectica {

/// Collinear is the conjunction of Lower (meet in (T-R)_{k-1}) and Upper
/// (join in (T-R)_{k+1}).
enum class AdjacencyKind { collinear, lower, upper };

std::string_view kind_name(AdjacencyKind kind);
std::optional<AdjacencyKind> parse_kind(std::string_view name);

/// Indexed, duplicate-free list of subspaces with reverse lookup.
class PointIndex {
public:
    PointIndex() = default;
    explicit PointIndex(std::vector<Subspace> points);

    std::size_t size() const noexcept { return points_.size(); }
    const Subspace& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<Subspace>& all() const noexcept { return points_; }

    std::optional<std::uint32_t> find(const Subspace& u) const;
    /// Error(invalid_argument) when absent.
    std::uint32_t at(const Subspace& u) const;

private:
    std::vector<Subspace> points_;
    std::unordered_map<Subspace, std::uint32_t, SubspaceHash> index_;
};

/// (T-R)_k in canonical order; k may be 0 or n (the zero space and V).
std::vector<Subspace> enumerate_tr(const SymplecticSpace& s, std::size_t k);

/// Hyperplanes of b, sorted.
std::vector<Subspace> hyperplanes_of(const Field& f, const Subspace& b);
/// {U : H < U < B, dim U = dim H + 1}, requires H < B with codimension 2.
std::vector<Subspace> projective_pencil(const Field& f, const Subspace& h, const Subspace& b);

/// S(H) at level k by the parity-specific parametrization, sorted.
std::vector<Subspace> star(const SymplecticSpace& s, const Subspace& h, std::size_t k);
/// T(B) at level k, sorted.
std::vector<Subspace> top(const SymplecticSpace& s, const Subspace& b, std::size_t k);
/// p(H,B) = S(H) n T(B), possibly empty, sorted.
std::vector<Subspace> pencil(const SymplecticSpace& s, const Subspace& h, const Subspace& b, std::size_t k);

struct Pencil {
    Subspace lower;                      // H, dim k-1
    Subspace upper;                      // B, dim k+1
    std::vector<std::uint32_t> members;  // sorted point indices
};

struct GrassmannSpace {
    SymplecticSpace space;
    std::size_t k;
    PointIndex points;
    std::vector<Pencil> lines;   // sorted by member list
};

GrassmannSpace build_grassmann(const SymplecticSpace& s, std::size_t k);

/// Pairwise definition of the three adjacencies (irreflexive).
bool adjacent(const SymplecticSpace& s, const Subspace& u, const Subspace& w, AdjacencyKind kind);

/// Stars or tops of one level as index sets: labels[i] is H (or B) and
/// members[i] the sorted indices of S(H) (or T(B)) in the level's PointIndex.
struct StructureFamily {
    std::vector<Subspace> labels;
    std::vector<std::vector<std::uint32_t>> members;
};

StructureFamily star_family(const SymplecticSpace& s, const PointIndex& points, std::size_t k);
StructureFamily top_family(const SymplecticSpace& s, const PointIndex& points, std::size_t k);

/// For each point, the indices of the family members that contain it.
std::vector<std::vector<std::uint32_t>> incidence_of_points(const StructureFamily& family, std::size_t point_count);

} // namespace symplectica
