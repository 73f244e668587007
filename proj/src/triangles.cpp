#include "symplectica/triangles.hpp"

#include <algorithm>

namespace symplectica {

std::string_view triangle_class_name(TriangleClass c) {
    switch (c) {
    case TriangleClass::pencil_degenerate: return "pencil";
    case TriangleClass::s_triangle: return "S";
    case TriangleClass::t_triangle: return "T";
    case TriangleClass::tstar_triangle: return "T*";
    }
    return "?";
}

TriangleClass classify_triangle_ground_truth(const SymplecticSpace& s, const Subspace& u1, const Subspace& u2,
                                             const Subspace& u3) {
    const Field& f = s.field();
    const std::size_t k = u1.dim();
    if (u2.dim() != k || u3.dim() != k) fail(ErrorCode::invalid_argument, "triangle members differ in dimension");
    if (u1 == u2 || u1 == u3 || u2 == u3) fail(ErrorCode::precondition, "triangle members must be distinct");
    for (auto [a, b] : {std::pair{&u1, &u2}, std::pair{&u1, &u3}, std::pair{&u2, &u3}})
        if (!adjacent(s, *a, *b, AdjacencyKind::lower))
            fail(ErrorCode::precondition, "triangle members must be pairwise lower-adjacent");
    Subspace meet = intersect(f, intersect(f, u1, u2), u3);
    Subspace join = sum(f, sum(f, u1, u2), u3);
    const bool common_meet = meet.dim() + 1 == k;
    const bool common_join = join.dim() == k + 1;
    if (common_meet && common_join) return TriangleClass::pencil_degenerate;
    if (common_meet) return TriangleClass::s_triangle;
    if (common_join) {
        std::size_t r = s.rdim(join);
        if (r == 0) return TriangleClass::t_triangle;
        if (r == 2) return TriangleClass::tstar_triangle;
        fail(ErrorCode::internal, "triangle span has unexpected radical dimension");
    }
    fail(ErrorCode::precondition, "pairwise adjacent triple has neither common meet nor common join");
}

std::uint64_t TriangleOracle::key(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    return (std::uint64_t(a) << 42) | (std::uint64_t(b) << 21) | c;
}

bool TriangleOracle::transitive_non_adjacency(std::span<const std::uint32_t> y) const {
    std::vector<std::uint32_t> na;
    for (auto b : y) {
        na.clear();
        for (auto a : y)
            if (a != b && !g_.has_edge(a, b)) na.push_back(a);
        for (std::size_t i = 0; i < na.size(); ++i)
            for (std::size_t j = i + 1; j < na.size(); ++j)
                if (g_.has_edge(na[i], na[j])) return false;
    }
    return true;
}

bool TriangleOracle::adjacent_triple(std::uint32_t a, std::uint32_t b, std::uint32_t c) const {
    return a != b && a != c && b != c && g_.has_edge(a, b) && g_.has_edge(a, c) && g_.has_edge(b, c);
}

TriangleOracle::Entry& TriangleOracle::entry(std::uint64_t key) {
    if (memo_.size() >= memo_limit_ && !memo_.contains(key)) memo_.clear();
    return memo_[key];
}

bool TriangleOracle::is_s_triangle(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    if (!adjacent_triple(a, b, c)) return false;
    Entry& e = entry(key(a, b, c));
    if (e.s < 0) {
        const std::uint32_t seeds[] = {a, b, c};
        e.s = is_clique(g_, common_neighbors(g_, seeds)) ? 1 : 0;
    }
    return e.s == 1;
}

TriangleClass TriangleOracle::classify(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    if (a == b || a == c || b == c) fail(ErrorCode::precondition, "triangle members must be distinct");
    if (!adjacent_triple(a, b, c)) fail(ErrorCode::precondition, "triangle members must be pairwise adjacent");
    const auto k = key(a, b, c);
    if (auto it = memo_.find(k); it != memo_.end() && it->second.cls >= 0)
        return static_cast<TriangleClass>(it->second.cls);
    TriangleClass result;
    if (is_s_triangle(a, b, c)) {
        result = TriangleClass::s_triangle;
    } else {
        const std::uint32_t seeds[] = {a, b, c};
        auto y = common_neighbors(g_, seeds);
        if (find_s_triangle(y)) result = TriangleClass::pencil_degenerate;
        else if (transitive_non_adjacency(y)) result = TriangleClass::tstar_triangle;
        else result = TriangleClass::t_triangle;
    }
    // the searches above may have rehashed the table, so look the entry up again
    Entry& e = entry(k);
    e.cls = static_cast<std::int8_t>(result);
    e.t = result == TriangleClass::t_triangle ? 1 : 0;
    return result;
}

bool TriangleOracle::is_t_triangle(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    if (!adjacent_triple(a, b, c)) return false;
    const auto k = key(a, b, c);
    if (auto it = memo_.find(k); it != memo_.end() && it->second.t >= 0) return it->second.t == 1;
    bool result;
    if (is_s_triangle(a, b, c)) {
        result = false;
    } else {
        // A transitive non-adjacency rules out T whatever the pencil test says,
        // and it is far cheaper than searching for an S-triangle.
        const std::uint32_t seeds[] = {a, b, c};
        auto y = common_neighbors(g_, seeds);
        result = !transitive_non_adjacency(y) && classify(a, b, c) == TriangleClass::t_triangle;
    }
    entry(k).t = result ? 1 : 0;
    return result;
}

namespace {

template <class Pred>
std::optional<std::array<std::uint32_t, 3>> first_triangle(const Graph& g, std::span<const std::uint32_t> set,
                                                           Pred&& pred) {
    std::vector<std::uint32_t> v(set.begin(), set.end());
    std::sort(v.begin(), v.end());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            if (!g.has_edge(v[i], v[j])) continue;
            for (std::size_t l = j + 1; l < v.size(); ++l)
                if (g.has_edge(v[i], v[l]) && g.has_edge(v[j], v[l]) && pred(v[i], v[j], v[l]))
                    return std::array<std::uint32_t, 3>{v[i], v[j], v[l]};
        }
    return std::nullopt;
}

} // namespace

std::optional<std::array<std::uint32_t, 3>> TriangleOracle::find_s_triangle(std::span<const std::uint32_t> set) {
    return first_triangle(g_, set, [&](auto a, auto b, auto c) { return is_s_triangle(a, b, c); });
}

std::optional<std::array<std::uint32_t, 3>> TriangleOracle::find_t_triangle(std::span<const std::uint32_t> set) {
    return first_triangle(g_, set, [&](auto a, auto b, auto c) { return is_t_triangle(a, b, c); });
}

} // namespace symplectica
