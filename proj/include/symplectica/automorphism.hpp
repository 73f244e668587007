#pragma once

// Graph automorphisms by colour refinement and individualisation.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "symplectica/graph.hpp"

namespace symplectica {

bool is_automorphism(const Graph& g, std::span<const std::uint32_t> perm);

/// Some automorphism mapping every vertex of colour c under `left` to a vertex
/// of colour c under `right`, if one exists.
std::optional<std::vector<std::uint32_t>> find_automorphism(const Graph& g, std::vector<std::uint32_t> left,
                                                            std::vector<std::uint32_t> right);

/// Order of the automorphism group via a stabiliser chain.
/// Error(size_bound) above `vertex_budget` vertices.
boost::multiprecision::cpp_int automorphism_count(const Graph& g, std::size_t vertex_budget = 512);

} // namespace symplectica
