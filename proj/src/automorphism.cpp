#include "symplectica/automorphism.hpp"

#include <algorithm>
#include <map>

namespace symplectica {

bool is_automorphism(const Graph& g, std::span<const std::uint32_t> perm) {
    const std::size_t n = g.size();
    if (perm.size() != n) return false;
    std::vector<bool> hit(n, false);
    for (auto v : perm) {
        if (v >= n || hit[v]) return false;
        hit[v] = true;
    }
    for (std::size_t u = 0; u < n; ++u)
        for (auto v : g.neighbors(u))
            if (!g.has_edge(perm[u], perm[v])) return false;
    return true;
}

namespace {

// Refine two colourings together so that colour names mean the same thing on
// both sides. Returns false as soon as the colour histograms differ.
bool refine(const Graph& g, std::vector<std::uint32_t>& left, std::vector<std::uint32_t>& right) {
    const std::size_t n = g.size();
    std::size_t classes = 0;
    for (;;) {
        std::map<std::vector<std::uint32_t>, std::uint32_t> names;
        std::vector<std::vector<std::uint32_t>> sig_l(n), sig_r(n);
        auto signature = [&](const std::vector<std::uint32_t>& col, std::size_t v) {
            std::vector<std::uint32_t> sig;
            sig.reserve(g.degree(v) + 1);
            for (auto w : g.neighbors(v)) sig.push_back(col[w]);
            std::sort(sig.begin(), sig.end());
            sig.insert(sig.begin(), col[v]);
            return sig;
        };
        for (std::size_t v = 0; v < n; ++v) {
            sig_l[v] = signature(left, v);
            sig_r[v] = signature(right, v);
            names.emplace(sig_l[v], 0);
            names.emplace(sig_r[v], 0);
        }
        std::uint32_t next = 0;
        for (auto& [sig, id] : names) id = next++;
        std::vector<std::size_t> count_l(names.size(), 0), count_r(names.size(), 0);
        for (std::size_t v = 0; v < n; ++v) {
            left[v] = names[sig_l[v]];
            right[v] = names[sig_r[v]];
            ++count_l[left[v]];
            ++count_r[right[v]];
        }
        if (count_l != count_r) return false;
        std::size_t now = 0;
        for (auto c : count_l) now += c > 0;
        if (now == classes) return true;
        classes = now;
    }
}

std::optional<std::vector<std::uint32_t>> search(const Graph& g, std::vector<std::uint32_t> left,
                                                 std::vector<std::uint32_t> right) {
    if (!refine(g, left, right)) return std::nullopt;
    const std::size_t n = g.size();
    std::vector<std::size_t> size(n + 1, 0);
    for (auto c : left) ++size[c];
    // smallest non-singleton cell, ties by colour name
    std::size_t cell = n + 1, best = n + 1;
    for (std::size_t c = 0; c < size.size(); ++c)
        if (size[c] > 1 && size[c] < best) {
            best = size[c];
            cell = c;
        }
    if (cell == n + 1) {
        std::vector<std::uint32_t> by_colour(n), perm(n);
        for (std::uint32_t v = 0; v < n; ++v) by_colour[right[v]] = v;
        for (std::uint32_t v = 0; v < n; ++v) perm[v] = by_colour[left[v]];
        if (is_automorphism(g, perm)) return perm;
        return std::nullopt;
    }
    const std::uint32_t fresh = static_cast<std::uint32_t>(n);
    std::uint32_t v = 0;
    while (left[v] != cell) ++v;
    for (std::uint32_t w = 0; w < n; ++w) {
        if (right[w] != cell) continue;
        auto l = left, r = right;
        l[v] = fresh;
        r[w] = fresh;
        if (auto perm = search(g, std::move(l), std::move(r))) return perm;
    }
    return std::nullopt;
}

} // namespace

std::optional<std::vector<std::uint32_t>> find_automorphism(const Graph& g, std::vector<std::uint32_t> left,
                                                            std::vector<std::uint32_t> right) {
    if (left.size() != g.size() || right.size() != g.size())
        fail(ErrorCode::invalid_argument, "colourings must cover every vertex");
    return search(g, std::move(left), std::move(right));
}

boost::multiprecision::cpp_int automorphism_count(const Graph& g, std::size_t vertex_budget) {
    const std::size_t n = g.size();
    if (n > vertex_budget)
        fail(ErrorCode::size_bound, "automorphism count refused: " + std::to_string(n) +
                                        " vertices exceed the budget of " + std::to_string(vertex_budget));
    boost::multiprecision::cpp_int order = 1;
    std::vector<std::uint32_t> base(n, 0);   // colouring that fixes the chosen base points
    std::uint32_t next_colour = 1;
    for (;;) {
        auto refined = base, twin = base;
        refine(g, refined, twin);
        std::vector<std::size_t> size(n + 1, 0);
        for (auto c : refined) ++size[c];
        std::size_t cell = n + 1;
        for (std::size_t c = 0; c < size.size() && cell == n + 1; ++c)
            if (size[c] > 1) cell = c;
        if (cell == n + 1) break;
        std::uint32_t v = 0;
        while (refined[v] != cell) ++v;
        // Orbit of v under the current stabiliser, grown with the permutations found.
        std::vector<std::uint32_t> orbit_of(n);
        for (std::uint32_t i = 0; i < n; ++i) orbit_of[i] = i;
        auto root = [&](std::uint32_t x) {
            while (orbit_of[x] != x) x = orbit_of[x] = orbit_of[orbit_of[x]];
            return x;
        };
        std::size_t orbit = 1;
        for (std::uint32_t w = 0; w < n; ++w) {
            if (w == v || refined[w] != cell) continue;
            if (root(w) == root(v)) {
                ++orbit;
                continue;
            }
            auto l = base, r = base;
            l[v] = r[w] = next_colour;
            if (auto perm = find_automorphism(g, std::move(l), std::move(r))) {
                for (std::uint32_t x = 0; x < n; ++x) orbit_of[root(x)] = root((*perm)[x]);
                ++orbit;
            }
        }
        order *= orbit;
        base[v] = next_colour++;
    }
    return order;
}

} // namespace symplectica
