#pragma once

// Classification of lower-adjacency triangles at an odd level 1 < k < n-1.
//
// Ground truth looks at the subspaces: the common meet H and the common span
// B of the three members. The adjacency-only classifier looks at nothing but
// the lower-adjacency graph and follows the characterisation
//   S      iff the common neighbourhood Y is a clique,
//   pencil iff Y contains an S-triangle,
//   T*     iff non-adjacency is transitive on Y,
//   T      otherwise.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include <absl/container/flat_hash_map.h>

#include "symplectica/graph.hpp"

namespace symplectica {

enum class TriangleClass { pencil_degenerate, s_triangle, t_triangle, tstar_triangle };

std::string_view triangle_class_name(TriangleClass c);

/// Requires three distinct, pairwise lower-adjacent members of (T-R)_k.
TriangleClass classify_triangle_ground_truth(const SymplecticSpace& s, const Subspace& u1, const Subspace& u2,
                                             const Subspace& u3);

/// Adjacency-only classifier over a fixed graph. Results are memoised per
/// unordered triple; the memo is dropped whenever it reaches `memo_limit`
/// entries, which bounds memory and never changes an answer. One instance must
/// not be shared between threads.
class TriangleOracle {
public:
    explicit TriangleOracle(const Graph& g, std::size_t memo_limit = 8'000'000) : g_(g), memo_limit_(memo_limit) {}

    const Graph& graph() const noexcept { return g_; }

    /// Error(precondition) unless a, b, c are distinct and pairwise adjacent.
    TriangleClass classify(std::uint32_t a, std::uint32_t b, std::uint32_t c);
    bool is_s_triangle(std::uint32_t a, std::uint32_t b, std::uint32_t c);
    bool is_t_triangle(std::uint32_t a, std::uint32_t b, std::uint32_t c);

    /// First S-triangle (in index order) with all three members in `set`.
    std::optional<std::array<std::uint32_t, 3>> find_s_triangle(std::span<const std::uint32_t> set);
    std::optional<std::array<std::uint32_t, 3>> find_t_triangle(std::span<const std::uint32_t> set);

    std::size_t memo_size() const noexcept { return memo_.size(); }

private:
    // -1 unknown, otherwise the answer (class stored as its enum value)
    struct Entry {
        std::int8_t s = -1;
        std::int8_t t = -1;
        std::int8_t cls = -1;
    };

    static std::uint64_t key(std::uint32_t a, std::uint32_t b, std::uint32_t c);
    bool transitive_non_adjacency(std::span<const std::uint32_t> y) const;
    bool adjacent_triple(std::uint32_t a, std::uint32_t b, std::uint32_t c) const;
    Entry& entry(std::uint64_t key);

    const Graph& g_;
    std::size_t memo_limit_;
    absl::flat_hash_map<std::uint64_t, Entry> memo_;
};

} // namespace symplectica
