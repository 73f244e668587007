#pragma once

// Text renderings shared by the C API and the command line. Every function is
// deterministic: the same instance yields the same bytes.

#include <string>

#include "symplectica/graph.hpp"
#include "symplectica/reconstruct.hpp"

namespace symplectica {

enum class Format { json, dot, csv };
std::string_view format_name(Format f);
std::optional<Format> parse_format(std::string_view s);

/// Counts per level of all subspaces, isotropic, regular, tangential and
/// regular-or-tangential ones, plus the gram matrix. JSON only.
std::string census_json(const SymplecticSpace& s);

/// Graph schema {p, n, k, kind, vertices:[{id, basis}], edges:[[i,j]]}.
/// CSV is the edge list "i,j" with a header line.
std::string export_graph(const SymplecticSpace& s, const PointIndex& points, std::size_t k, AdjacencyKind kind,
                         const Graph& g, Format f);

/// Points and lines of the space of pencils. DOT draws the bipartite
/// point/line incidence; CSV lists "line,point" incidences.
std::string export_grassmann(const GrassmannSpace& g, Format f);

std::string pipeline_json(const PipelineReport& r);

} // namespace symplectica
