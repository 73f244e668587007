#include "symplectica/graph.hpp"

#include <algorithm>
#include <bit>

namespace symplectica {

namespace {

// Degeneracy (smallest-last) order via bucket queue.
std::vector<std::uint32_t> degeneracy_order(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<std::size_t> deg(n);
    std::size_t maxdeg = 0;
    for (std::size_t u = 0; u < n; ++u) maxdeg = std::max(maxdeg, deg[u] = g.degree(u));
    std::vector<std::vector<std::uint32_t>> bucket(maxdeg + 1);
    for (std::uint32_t u = 0; u < n; ++u) bucket[deg[u]].push_back(u);
    std::vector<bool> removed(n, false);
    std::vector<std::uint32_t> order;
    order.reserve(n);
    std::size_t d = 0;
    while (order.size() < n) {
        d = d > 0 ? d - 1 : 0;
        while (bucket[d].empty()) ++d;
        auto u = bucket[d].back();
        bucket[d].pop_back();
        if (removed[u] || deg[u] != d) continue;
        removed[u] = true;
        order.push_back(u);
        for (auto v : g.neighbors(u))
            if (!removed[v]) bucket[--deg[v]].push_back(v);
    }
    return order;
}

struct LocalSearch {
    std::size_t words;
    std::vector<std::uint64_t> adj;           // local adjacency rows
    std::vector<std::uint32_t> names;         // local -> global
    std::vector<std::uint32_t> clique;
    std::vector<std::vector<std::uint32_t>>* out;

    const std::uint64_t* row(std::size_t i) const { return adj.data() + i * words; }

    void expand(std::vector<std::uint64_t> p, std::vector<std::uint64_t> x) {
        bool p_empty = std::all_of(p.begin(), p.end(), [](auto w) { return w == 0; });
        if (p_empty) {
            if (std::all_of(x.begin(), x.end(), [](auto w) { return w == 0; })) {
                auto c = clique;
                std::sort(c.begin(), c.end());
                out->push_back(std::move(c));
            }
            return;
        }
        // Pivot: vertex of P u X with the most neighbours in P.
        std::size_t pivot = 0, best = 0;
        bool have = false;
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t cand = p[w] | x[w];
            while (cand) {
                std::size_t u = w * 64 + std::countr_zero(cand);
                cand &= cand - 1;
                std::size_t c = 0;
                const std::uint64_t* r = row(u);
                for (std::size_t i = 0; i < words; ++i) c += std::popcount(p[i] & r[i]);
                if (!have || c > best) {
                    pivot = u;
                    best = c;
                    have = true;
                }
            }
        }
        const std::uint64_t* pr = row(pivot);
        std::vector<std::uint64_t> todo(words);
        for (std::size_t i = 0; i < words; ++i) todo[i] = p[i] & ~pr[i];
        for (std::size_t w = 0; w < words; ++w) {
            while (todo[w]) {
                std::size_t v = w * 64 + std::countr_zero(todo[w]);
                todo[w] &= todo[w] - 1;
                const std::uint64_t* vr = row(v);
                std::vector<std::uint64_t> np(words), nx(words);
                for (std::size_t i = 0; i < words; ++i) {
                    np[i] = p[i] & vr[i];
                    nx[i] = x[i] & vr[i];
                }
                clique.push_back(names[v]);
                expand(std::move(np), std::move(nx));
                clique.pop_back();
                clear_bit(p.data(), v);
                set_bit(x.data(), v);
            }
        }
    }
};

} // namespace

std::vector<std::vector<std::uint32_t>> maximal_cliques(const Graph& g, std::size_t vertex_budget) {
    if (g.size() > vertex_budget)
        fail(ErrorCode::size_bound, "clique enumeration refused: " + std::to_string(g.size()) +
                                        " vertices exceed the budget of " + std::to_string(vertex_budget));
    const std::size_t n = g.size();
    std::vector<std::vector<std::uint32_t>> out;
    auto order = degeneracy_order(g);
    std::vector<std::uint32_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = static_cast<std::uint32_t>(i);
    std::vector<std::int32_t> local(n, -1);

    for (auto v : order) {
        const auto& nb = g.neighbors(v);
        if (nb.empty()) {
            out.push_back({v});
            continue;
        }
        LocalSearch ls;
        ls.words = (nb.size() + 63) / 64;
        ls.names = nb;
        ls.adj.assign(nb.size() * ls.words, 0);
        ls.out = &out;
        for (std::size_t i = 0; i < nb.size(); ++i) local[nb[i]] = static_cast<std::int32_t>(i);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            std::uint64_t* r = ls.adj.data() + i * ls.words;
            for (auto u : g.neighbors(nb[i]))
                if (local[u] >= 0) set_bit(r, static_cast<std::size_t>(local[u]));
        }
        std::vector<std::uint64_t> p(ls.words, 0), x(ls.words, 0);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            if (pos[nb[i]] > pos[v]) set_bit(p.data(), i);
            else set_bit(x.data(), i);
        }
        for (auto u : nb) local[u] = -1;
        ls.clique = {v};
        ls.expand(std::move(p), std::move(x));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace symplectica
