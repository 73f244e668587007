#pragma once

// Simple undirected graphs stored as bitset rows plus sorted neighbour lists,
// and the adjacency graphs of a Grassmann level.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "symplectica/grassmann.hpp"

namespace symplectica {

using Bits = std::vector<std::uint64_t>;

inline bool test_bit(const std::uint64_t* row, std::size_t j) { return (row[j >> 6] >> (j & 63)) & 1u; }
inline void set_bit(std::uint64_t* row, std::size_t j) { row[j >> 6] |= std::uint64_t{1} << (j & 63); }
inline void clear_bit(std::uint64_t* row, std::size_t j) { row[j >> 6] &= ~(std::uint64_t{1} << (j & 63)); }
std::size_t popcount(const std::uint64_t* row, std::size_t words);
/// Indices of set bits in ascending order.
std::vector<std::uint32_t> bits_to_list(const std::uint64_t* row, std::size_t words);

class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);

    std::size_t size() const noexcept { return n_; }
    std::size_t words() const noexcept { return words_; }

    const std::uint64_t* row(std::size_t u) const { return bits_.data() + u * words_; }
    std::uint64_t* row(std::size_t u) { return bits_.data() + u * words_; }

    bool has_edge(std::size_t u, std::size_t v) const { return test_bit(row(u), v); }
    void add_edge(std::size_t u, std::size_t v);

    /// Rebuild neighbour lists from the bit rows; call after editing bits.
    void finalize();
    const std::vector<std::uint32_t>& neighbors(std::size_t u) const { return adj_[u]; }
    std::size_t degree(std::size_t u) const { return adj_[u].size(); }
    std::size_t edge_count() const;
    /// (i, j) with i < j, lexicographic.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;

    /// Symmetric and loop-free.
    bool is_simple() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.bits_ == b.bits_; }

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    Bits bits_;
    std::vector<std::vector<std::uint32_t>> adj_;
};

/// Graph on `n` vertices whose edge set is the union of cliques on `groups`.
Graph union_of_cliques(std::size_t n, const std::vector<std::vector<std::uint32_t>>& groups);
/// Edge-wise conjunction.
Graph intersection(const Graph& a, const Graph& b);
/// Vertices adjacent to every seed, as a bitset (seeds themselves excluded
/// automatically because the graph is loop-free).
Bits common_neighbors_bits(const Graph& g, std::span<const std::uint32_t> seeds);
std::vector<std::uint32_t> common_neighbors(const Graph& g, std::span<const std::uint32_t> seeds);
bool is_clique(const Graph& g, std::span<const std::uint32_t> vertices);
/// Component label per vertex, labels 0.. in order of first vertex.
std::vector<std::uint32_t> components(const Graph& g, std::size_t* count = nullptr);
/// Maximum eccentricity; Error(precondition) if disconnected.
std::size_t diameter(const Graph& g);

/// All maximal cliques (Bron-Kerbosch with pivoting over a degeneracy order),
/// each sorted, list sorted. Error(size_bound) above `vertex_budget`.
std::vector<std::vector<std::uint32_t>> maximal_cliques(const Graph& g, std::size_t vertex_budget = 5000);

struct LevelGraphs {
    Graph lower;
    Graph upper;
    Graph collinear;
};

/// Adjacency graphs of (T-R)_k built from stars (lower) and tops (upper):
/// U, W meet in (T-R)_{k-1} iff they share a star, and join inside
/// (T-R)_{k+1} iff they share a top.
LevelGraphs build_level_graphs(const SymplecticSpace& s, const PointIndex& points, std::size_t k);
Graph build_adjacency_graph(const SymplecticSpace& s, const PointIndex& points, std::size_t k, AdjacencyKind kind);

} // namespace symplectica
