#include "symplectica/formulas.hpp"

#include <algorithm>
#include <array>

namespace symplectica {

bool collinear_ground_truth(const SymplecticSpace& s, const Subspace& u1, const Subspace& u2, const Subspace& u3) {
    if (u1.dim() != u2.dim() || u1.dim() != u3.dim()) fail(ErrorCode::invalid_argument, "points differ in dimension");
    if (u1 == u2) return u3 == u1 || adjacent(s, u1, u3, AdjacencyKind::collinear);
    if (!adjacent(s, u1, u2, AdjacencyKind::collinear)) return false;
    const Field& f = s.field();
    return contains(f, u3, intersect(f, u1, u2)) && contains(f, sum(f, u1, u2), u3);
}

bool collinear_from_adjacency(const Graph& g, std::uint32_t u1, std::uint32_t u2, std::uint32_t u3) {
    if (u1 == u2) fail(ErrorCode::precondition, "the first two points must be distinct");
    if (!g.has_edge(u1, u2)) return false;
    if (u3 == u1 || u3 == u2) return true;
    if (!g.has_edge(u3, u1) || !g.has_edge(u3, u2)) return false;

    // Every quantified vertex is a common neighbour of u1, u2, so the search
    // runs on a local copy of that neighbourhood.
    const std::uint32_t pair[] = {u1, u2};
    const auto common = common_neighbors(g, pair);
    const std::size_t a = common.size();
    const std::size_t words = (a + 63) / 64;
    std::vector<std::uint64_t> local(a * words, 0);
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < a; ++j)
            if (i != j && g.has_edge(common[i], common[j])) set_bit(local.data() + i * words, j);
    auto row = [&](std::size_t i) { return local.data() + i * words; };

    std::vector<std::size_t> witnesses;
    std::size_t u3_local = a;
    for (std::size_t i = 0; i < a; ++i) {
        if (common[i] == u3) u3_local = i;
        else if (g.has_edge(common[i], u3)) witnesses.push_back(i);
    }
    if (u3_local == a) return false;

    std::vector<std::uint64_t> cn(words);
    std::vector<std::uint32_t> members;
    for (std::size_t x = 0; x < witnesses.size(); ++x)
        for (std::size_t y = x + 1; y < witnesses.size(); ++y) {
            const auto w1 = witnesses[x], w2 = witnesses[y];
            if (test_bit(row(w1), w2)) continue;
            for (std::size_t t = 0; t < words; ++t) cn[t] = row(w1)[t] & row(w2)[t];
            // u3 lies in the common neighbourhood by the choice of witnesses
            members = bits_to_list(cn.data(), words);
            bool clique = true;
            for (std::size_t i = 0; i < members.size() && clique; ++i)
                for (std::size_t j = i + 1; j < members.size(); ++j)
                    if (!test_bit(row(members[i]), members[j])) {
                        clique = false;
                        break;
                    }
            if (clique) return true;
        }
    return false;
}

bool collinear_from_lower(TriangleOracle& oracle, std::uint32_t u1, std::uint32_t u2, std::uint32_t u3) {
    std::vector<std::uint32_t> seeds{u1, u2, u3};
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
    auto x = common_neighbors(oracle.graph(), seeds);
    return oracle.find_s_triangle(x).has_value() && oracle.find_t_triangle(x).has_value();
}

PointSet line_from_lower(TriangleOracle& oracle, std::uint32_t a, std::uint32_t b) {
    const Graph& g = oracle.graph();
    if (a == b) fail(ErrorCode::precondition, "the two points must be distinct");
    PointSet out{std::min(a, b), std::max(a, b)};
    if (!g.has_edge(a, b)) return out;

    // For c in Z = CN(a, b) the common neighbourhood of a, b, c is Z minus the
    // non-neighbours of c, so every triangle the formula can use lies in Z.
    // Each triangle of Z is looked at once, and only while it could still add
    // a point: `cover` marks the c whose neighbourhood holds the triangle.
    const std::uint32_t pair[] = {a, b};
    const auto z = common_neighbors(g, pair);
    const std::size_t size = z.size(), words = (size + 63) / 64;
    std::vector<std::uint64_t> local(size * words, 0);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = i + 1; j < size; ++j)
            if (g.has_edge(z[i], z[j])) {
                set_bit(local.data() + i * words, j);
                set_bit(local.data() + j * words, i);
            }
    auto row = [&](std::size_t i) { return local.data() + i * words; };

    // triangles as index triples plus their cover rows, stored flat
    std::vector<std::array<std::uint32_t, 3>> triangles;
    std::vector<std::uint64_t> covers;
    std::vector<std::uint64_t> third(words);
    for (std::uint32_t i = 0; i < size; ++i)
        for (std::uint32_t j = i + 1; j < size; ++j) {
            if (!test_bit(row(i), j)) continue;
            for (std::size_t w = 0; w < words; ++w) third[w] = row(i)[w] & row(j)[w];
            for (auto l : bits_to_list(third.data(), words)) {
                if (l <= j) continue;
                const std::size_t at = covers.size();
                std::uint64_t any = 0;
                for (std::size_t w = 0; w < words; ++w) {
                    covers.push_back(third[w] & row(l)[w]);
                    any |= covers.back();
                }
                if (any) triangles.push_back({i, j, l});
                else covers.resize(at);
            }
        }
    auto cover = [&](std::size_t t) { return covers.data() + t * words; };
    // Wide covers first: once the coverage saturates, the remaining triangles
    // are skipped without consulting the oracle. The union is order-free.
    std::vector<std::uint32_t> order(triangles.size());
    std::vector<std::uint32_t> weight(triangles.size());
    for (std::uint32_t t = 0; t < order.size(); ++t) {
        order[t] = t;
        weight[t] = static_cast<std::uint32_t>(popcount(cover(t), words));
    }
    std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return weight[x] > weight[y]; });

    std::vector<std::uint64_t> with_s(words, 0), with_t(words, 0);
    auto adds = [&](std::size_t t, const std::vector<std::uint64_t>& have, const std::uint64_t* need) {
        for (std::size_t w = 0; w < words; ++w)
            if (cover(t)[w] & ~have[w] & (need ? need[w] : ~std::uint64_t{0})) return true;
        return false;
    };
    auto absorb = [&](std::size_t t, std::vector<std::uint64_t>& have) {
        for (std::size_t w = 0; w < words; ++w) have[w] |= cover(t)[w];
    };
    for (auto t : order) {
        const auto& [i, j, l] = triangles[t];
        if (adds(t, with_s, nullptr) && oracle.is_s_triangle(z[i], z[j], z[l])) absorb(t, with_s);
    }
    for (auto t : order) {
        const auto& [i, j, l] = triangles[t];
        if (adds(t, with_t, with_s.data()) && oracle.is_t_triangle(z[i], z[j], z[l])) absorb(t, with_t);
    }

    for (std::size_t w = 0; w < words; ++w) with_s[w] &= with_t[w];
    for (auto c : bits_to_list(with_s.data(), words)) out.push_back(z[c]);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace symplectica
