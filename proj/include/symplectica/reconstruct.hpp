#pragma once

// Recovery of the projective space with its orthogonality from the
// collinearity graph of one Grassmann level. Every decision below reads
// only graphs and point counts; subspace labels travel alongside for the
// final comparison and are never consulted on the way down.

#include <cstdint>
#include <string>
#include <vector>

#include "symplectica/incidence.hpp"

namespace symplectica {

/// What the pipeline is told about a level: field size, ambient dimension
/// and level number. Used for the expected structure sizes only.
struct LevelShape {
    unsigned p = 0;
    std::size_t n = 0;
    std::size_t k = 0;

    std::size_t star_size() const;
    std::size_t top_size() const;
};

enum class StructureTag { star, top, ambiguous };
std::string_view tag_name(StructureTag t);

struct MaxStructure {
    PointSet points;
    StructureTag tag = StructureTag::ambiguous;
};

/// Stars and tops of a level from its collinearity. Even levels: maximal
/// cliques. Odd levels: closures of triangles in `pls`. Structures whose size
/// fits both kinds are tagged by membership in `known_tops` when that list is
/// non-empty, otherwise left ambiguous. Error(validation) on a structure of
/// unexpected size.
std::vector<MaxStructure> recover_max_structures(const Graph& collinear, const LevelShape& shape,
                                                 const std::vector<PointSet>& known_tops = {},
                                                 std::size_t clique_budget = 20000);
std::vector<MaxStructure> recover_odd_structures(Incidence& pls, const LevelShape& shape,
                                                 const std::vector<PointSet>& known_tops = {});

/// Incidence of an odd level read off its collinearity graph: polar closure
/// at levels 1 and n-1, the collinearity formula elsewhere.
std::unique_ptr<DerivedIncidence> odd_level_incidence(const Graph& collinear, const LevelShape& shape);

struct AbstractLevel {
    LevelShape shape;
    Graph collinear;
    std::vector<PointSet> known_tops;
    std::vector<Subspace> provenance;   // report only; may be empty
};

/// Level k-1 from level k: points are the recovered stars, two of them are
/// upper-adjacent when they share a point, and the point groups become the
/// known tops. Error(ambiguous) if stars cannot be told from tops;
/// Error(size_bound) when an odd intermediate level exceeds `odd_bound`.
AbstractLevel descend(const AbstractLevel& level, std::size_t odd_bound = 20000);

struct RecoveredGeometry {
    std::size_t point_count = 0;
    std::vector<PointSet> lines;        // sorted
    std::vector<bool> isotropic;        // per line
    Graph collinear;                    // x perp y iff x == y or not adjacent
    bool orthogonal(std::uint32_t a, std::uint32_t b) const { return a == b || !collinear.has_edge(a, b); }
};

/// Projective lines of a copolar space: {a,b}^perp^perp over all pairs.
RecoveredGeometry recover_projective(const Graph& copolar);

struct PipelineReport {
    unsigned p = 0;
    std::size_t m = 0;
    std::size_t k = 0;
    std::vector<std::size_t> level_sizes;   // from level k down to level 1
    std::size_t point_count = 0;
    std::size_t line_count = 0;
    std::size_t isotropic_line_count = 0;
    bool match = false;
    std::vector<std::string> mismatches;
    RecoveredGeometry geometry;
    std::vector<Subspace> point_labels;
};

/// Builds the collinearity graph of level k, descends to level 1, recovers
/// (P, perp) and compares with the true geometry. Error(ambiguous) at k = n-k.
PipelineReport full_pipeline(const SymplecticSpace& s, std::size_t k, std::size_t odd_bound = 20000);

/// Compare a recovered geometry with the true one through point labels.
std::vector<std::string> compare_geometry(const SymplecticSpace& s, const RecoveredGeometry& g,
                                          const std::vector<Subspace>& labels);

/// U -> M U on the level, optionally followed by the duality (only when k = m).
std::vector<std::uint32_t> lift_similitude(const SymplecticSpace& s, const PointIndex& points, const Matrix& m,
                                           bool with_kappa);

} // namespace symplectica
