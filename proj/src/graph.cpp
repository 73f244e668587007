#include "symplectica/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>

#include "symplectica/parallel.hpp"

namespace symplectica {

std::size_t popcount(const std::uint64_t* row, std::size_t words) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words; ++i) c += std::popcount(row[i]);
    return c;
}

std::vector<std::uint32_t> bits_to_list(const std::uint64_t* row, std::size_t words) {
    std::vector<std::uint32_t> out;
    for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t x = row[w];
        while (x) {
            out.push_back(static_cast<std::uint32_t>(w * 64 + std::countr_zero(x)));
            x &= x - 1;
        }
    }
    return out;
}

Graph::Graph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0), adj_(n) {}

void Graph::add_edge(std::size_t u, std::size_t v) {
    if (u == v) return;
    set_bit(row(u), v);
    set_bit(row(v), u);
}

void Graph::finalize() {
    adj_.assign(n_, {});
    parallel_for(n_, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t u = lo; u < hi; ++u) adj_[u] = bits_to_list(row(u), words_);
    });
}

std::size_t Graph::edge_count() const {
    std::size_t total = 0;
    for (const auto& a : adj_) total += a.size();
    return total / 2;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> Graph::edges() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t u = 0; u < n_; ++u)
        for (auto v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::is_simple() const {
    for (std::size_t u = 0; u < n_; ++u) {
        if (has_edge(u, u)) return false;
        for (auto v : adj_[u])
            if (!has_edge(v, u)) return false;
    }
    return true;
}

Graph union_of_cliques(std::size_t n, const std::vector<std::vector<std::uint32_t>>& groups) {
    std::vector<std::vector<std::uint32_t>> of_vertex(n);
    for (std::size_t g = 0; g < groups.size(); ++g)
        for (auto v : groups[g]) of_vertex[v].push_back(static_cast<std::uint32_t>(g));
    Graph out(n);
    parallel_for(n, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t u = lo; u < hi; ++u) {
            std::uint64_t* r = out.row(u);
            for (auto g : of_vertex[u])
                for (auto v : groups[g]) set_bit(r, v);
            clear_bit(r, u);
        }
    });
    out.finalize();
    return out;
}

Graph intersection(const Graph& a, const Graph& b) {
    if (a.size() != b.size()) fail(ErrorCode::invalid_argument, "graph sizes differ");
    Graph out(a.size());
    const std::size_t w = a.words();
    parallel_for(a.size(), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t u = lo; u < hi; ++u)
            for (std::size_t i = 0; i < w; ++i) out.row(u)[i] = a.row(u)[i] & b.row(u)[i];
    });
    out.finalize();
    return out;
}

Bits common_neighbors_bits(const Graph& g, std::span<const std::uint32_t> seeds) {
    if (seeds.empty()) fail(ErrorCode::invalid_argument, "common neighbours need at least one seed");
    const std::size_t w = g.words();
    Bits acc(g.row(seeds[0]), g.row(seeds[0]) + w);
    for (std::size_t s = 1; s < seeds.size(); ++s) {
        const std::uint64_t* r = g.row(seeds[s]);
        for (std::size_t i = 0; i < w; ++i) acc[i] &= r[i];
    }
    for (auto s : seeds) clear_bit(acc.data(), s);
    return acc;
}

std::vector<std::uint32_t> common_neighbors(const Graph& g, std::span<const std::uint32_t> seeds) {
    auto bits = common_neighbors_bits(g, seeds);
    return bits_to_list(bits.data(), g.words());
}

bool is_clique(const Graph& g, std::span<const std::uint32_t> vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (!g.has_edge(vertices[i], vertices[j])) return false;
    return true;
}

std::vector<std::uint32_t> components(const Graph& g, std::size_t* count) {
    const std::uint32_t unset = ~std::uint32_t{0};
    std::vector<std::uint32_t> label(g.size(), unset);
    std::uint32_t next = 0;
    std::deque<std::uint32_t> queue;
    for (std::uint32_t s = 0; s < g.size(); ++s) {
        if (label[s] != unset) continue;
        label[s] = next;
        queue.push_back(s);
        while (!queue.empty()) {
            auto u = queue.front();
            queue.pop_front();
            for (auto v : g.neighbors(u))
                if (label[v] == unset) {
                    label[v] = next;
                    queue.push_back(v);
                }
        }
        ++next;
    }
    if (count) *count = next;
    return label;
}

std::size_t diameter(const Graph& g) {
    std::size_t comps = 0;
    components(g, &comps);
    if (comps > 1) fail(ErrorCode::precondition, "diameter of a disconnected graph");
    std::vector<std::size_t> best(g.size(), 0);
    parallel_for(g.size(), [&](std::size_t lo, std::size_t hi) {
        std::vector<std::uint32_t> dist(g.size());
        std::vector<std::uint32_t> queue(g.size());
        for (std::size_t s = lo; s < hi; ++s) {
            std::fill(dist.begin(), dist.end(), ~std::uint32_t{0});
            std::size_t head = 0, tail = 0;
            dist[s] = 0;
            queue[tail++] = static_cast<std::uint32_t>(s);
            std::size_t ecc = 0;
            while (head < tail) {
                auto u = queue[head++];
                ecc = dist[u];
                for (auto v : g.neighbors(u))
                    if (dist[v] == ~std::uint32_t{0}) {
                        dist[v] = dist[u] + 1;
                        queue[tail++] = v;
                    }
            }
            best[s] = ecc;
        }
    });
    return g.size() ? *std::max_element(best.begin(), best.end()) : 0;
}

} // namespace symplectica
