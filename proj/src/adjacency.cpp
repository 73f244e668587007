#include "symplectica/graph.hpp"

namespace symplectica {

LevelGraphs build_level_graphs(const SymplecticSpace& s, const PointIndex& points, std::size_t k) {
    if (k < 1 || k + 1 > s.n()) fail(ErrorCode::invalid_argument, "level k must satisfy 1 <= k <= n-1");
    LevelGraphs out;
    out.lower = union_of_cliques(points.size(), star_family(s, points, k).members);
    out.upper = union_of_cliques(points.size(), top_family(s, points, k).members);
    out.collinear = intersection(out.lower, out.upper);
    return out;
}

Graph build_adjacency_graph(const SymplecticSpace& s, const PointIndex& points, std::size_t k, AdjacencyKind kind) {
    if (k < 1 || k + 1 > s.n()) fail(ErrorCode::invalid_argument, "level k must satisfy 1 <= k <= n-1");
    switch (kind) {
    case AdjacencyKind::lower: return union_of_cliques(points.size(), star_family(s, points, k).members);
    case AdjacencyKind::upper: return union_of_cliques(points.size(), top_family(s, points, k).members);
    case AdjacencyKind::collinear: break;
    }
    Graph lower = union_of_cliques(points.size(), star_family(s, points, k).members);
    Graph upper = union_of_cliques(points.size(), top_family(s, points, k).members);
    return intersection(lower, upper);
}

} // namespace symplectica
