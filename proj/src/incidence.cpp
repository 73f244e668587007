#include "symplectica/incidence.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace symplectica {

namespace {

std::uint64_t pair_key(std::uint32_t a, std::uint32_t b) {
    if (a > b) std::swap(a, b);
    return (std::uint64_t(a) << 32) | b;
}

bool has(const PointSet& s, std::uint32_t x) { return std::binary_search(s.begin(), s.end(), x); }

} // namespace

std::vector<std::uint32_t> Incidence::common_collinear(std::uint32_t a, std::uint32_t b) {
    const auto& ca = candidates(a);
    const auto& cb = candidates(b);
    std::vector<std::uint32_t> both;
    std::set_intersection(ca.begin(), ca.end(), cb.begin(), cb.end(), std::back_inserter(both));
    std::vector<std::uint32_t> out;
    for (auto x : both)
        if (collinear(a, x) && collinear(b, x)) out.push_back(x);
    return out;
}

PartialLinearSpace::PartialLinearSpace(std::size_t points, std::vector<PointSet> lines)
    : lines_(std::move(lines)), through_(points), graph_(points) {
    for (std::size_t i = 0; i < lines_.size(); ++i) {
        auto& l = lines_[i];
        std::sort(l.begin(), l.end());
        if (std::adjacent_find(l.begin(), l.end()) != l.end())
            fail(ErrorCode::validation, "line lists a point twice");
        if (l.size() < 2) fail(ErrorCode::validation, "line with fewer than two points");
        if (l.back() >= points) fail(ErrorCode::validation, "line mentions an unknown point");
        for (std::size_t x = 0; x < l.size(); ++x) {
            through_[l[x]].push_back(static_cast<std::uint32_t>(i));
            for (std::size_t y = x + 1; y < l.size(); ++y) {
                if (!pair_line_.emplace(pair_key(l[x], l[y]), static_cast<std::uint32_t>(i)).second)
                    fail(ErrorCode::validation, "two lines share two points");
                graph_.add_edge(l[x], l[y]);
            }
        }
    }
    graph_.finalize();
}

const PointSet& PartialLinearSpace::line(std::uint32_t a, std::uint32_t b) {
    auto it = pair_line_.find(pair_key(a, b));
    if (a == b || it == pair_line_.end()) fail(ErrorCode::precondition, "points are not collinear");
    return lines_[it->second];
}

DerivedIncidence::DerivedIncidence(const Graph& graph, Rule rule, bool exact)
    : graph_(graph), rule_(std::move(rule)), exact_(exact) {}

std::uint32_t DerivedIncidence::resolve(std::uint32_t a, std::uint32_t b) {
    if (a == b || !graph_.has_edge(a, b)) return no_line;
    const auto key = pair_key(a, b);
    if (auto it = pair_line_.find(key); it != pair_line_.end()) return it->second;
    PointSet l = rule_(a, b);
    std::sort(l.begin(), l.end());
    const bool is_line = exact_ ? l.size() >= 2 : l.size() >= 3;
    if (!is_line || !has(l, a) || !has(l, b)) {
        pair_line_.emplace(key, no_line);
        return no_line;
    }
    const auto id = static_cast<std::uint32_t>(lines_.size());
    for (std::size_t x = 0; x < l.size(); ++x)
        for (std::size_t y = x + 1; y < l.size(); ++y) pair_line_.emplace(pair_key(l[x], l[y]), id);
    pair_line_[key] = id;
    lines_.push_back(std::move(l));
    return id;
}

bool DerivedIncidence::collinear(std::uint32_t a, std::uint32_t b) { return resolve(a, b) != no_line; }

const PointSet& DerivedIncidence::line(std::uint32_t a, std::uint32_t b) {
    auto id = resolve(a, b);
    if (id == no_line) fail(ErrorCode::precondition, "points are not collinear");
    return lines_[id];
}

PointSet polar_closure(const Graph& g, std::uint32_t a, std::uint32_t b) {
    const std::size_t n = g.size(), words = g.words();
    auto mask_tail = [&](std::vector<std::uint64_t>& v) {
        if (n % 64) v[words - 1] &= (std::uint64_t{1} << (n % 64)) - 1;
    };
    std::vector<std::uint64_t> perp(words);
    for (std::size_t w = 0; w < words; ++w) perp[w] = ~g.row(a)[w] & ~g.row(b)[w];
    mask_tail(perp);
    std::vector<std::uint64_t> closure(words, ~std::uint64_t{0});
    for (auto x : bits_to_list(perp.data(), words))
        for (std::size_t w = 0; w < words; ++w) closure[w] &= ~g.row(x)[w];
    mask_tail(closure);
    return bits_to_list(closure.data(), words);
}

DerivedIncidence::Rule ternary_rule(const Graph& g,
                                    std::function<bool(std::uint32_t, std::uint32_t, std::uint32_t)> rule) {
    return [&g, rule = std::move(rule)](std::uint32_t a, std::uint32_t b) {
        PointSet out{std::min(a, b), std::max(a, b)};
        const std::uint32_t seeds[] = {a, b};
        for (auto c : common_neighbors(g, seeds))
            if (rule(a, b, c)) out.push_back(c);
        std::sort(out.begin(), out.end());
        return out;
    };
}

PointSet triangle_span(Incidence& pls, std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    if (a == b || a == c || b == c || !pls.collinear(a, b) || !pls.collinear(b, c) || !pls.collinear(a, c))
        fail(ErrorCode::precondition, "triangle needs three pairwise collinear points");
    const PointSet sides[3] = {pls.line(a, b), pls.line(b, c), pls.line(a, c)};
    if (has(sides[0], c)) fail(ErrorCode::precondition, "triangle vertices are on one line");

    auto meets = [](const PointSet& x, const PointSet& y) {
        auto i = x.begin(), j = y.begin();
        while (i != x.end() && j != y.end()) {
            if (*i == *j) return true;
            if (*i < *j) ++i;
            else ++j;
        }
        return false;
    };
    std::set<std::uint32_t> out;
    // A line crossing all three sides meets two of them in distinct points,
    // unless it passes through a vertex; the latter meets the opposite side.
    for (int s = 0; s < 3; ++s)
        for (int t = s + 1; t < 3; ++t)
            for (auto y : sides[s])
                for (auto z : sides[t]) {
                    if (y == z || !pls.collinear(y, z)) continue;
                    const PointSet& m = pls.line(y, z);
                    if (meets(m, sides[0]) && meets(m, sides[1]) && meets(m, sides[2])) out.insert(m.begin(), m.end());
                }
    return PointSet(out.begin(), out.end());
}

PlaneRelation plane_related(Incidence& pls, const PointSet& span1, const PointSet& span2) {
    PointSet common;
    std::set_intersection(span1.begin(), span1.end(), span2.begin(), span2.end(), std::back_inserter(common));
    PlaneRelation rel;
    for (std::size_t i = 0; i < common.size(); ++i)
        for (std::size_t j = i + 1; j < common.size(); ++j) {
            const auto a3 = common[i], a4 = common[j];
            const bool joined = pls.collinear(a3, a4);
            if (joined ? rel.wedge : rel.diamond) continue;
            const PointSet* side = joined ? &pls.line(a3, a4) : nullptr;
            auto usable = [&](std::uint32_t x) {
                if (x == a3 || x == a4 || !pls.collinear(x, a3) || !pls.collinear(x, a4)) return false;
                return !side || !has(*side, x);
            };
            for (auto a1 : span1) {
                if (!usable(a1)) continue;
                for (auto a2 : span2)
                    if (a2 != a1 && usable(a2) && pls.collinear(a1, a2)) {
                        (joined ? rel.wedge : rel.diamond) = true;
                        break;
                    }
                if (joined ? rel.wedge : rel.diamond) break;
            }
        }
    return rel;
}

ClosureResult delta_closure(Incidence& pls, std::uint32_t a, std::uint32_t b, std::uint32_t c, std::size_t span_limit) {
    std::set<PointSet> seen;
    std::deque<PointSet> queue;
    // spans containing each point, to skip triples whose plane is known
    std::unordered_map<std::uint32_t, std::vector<std::size_t>> by_point;
    std::vector<const PointSet*> order;

    auto add = [&](PointSet span) {
        auto [it, fresh] = seen.insert(std::move(span));
        if (!fresh) return;
        if (seen.size() > span_limit) fail(ErrorCode::size_bound, "closure exceeded the span limit");
        order.push_back(&*it);
        for (auto x : *it) by_point[x].push_back(order.size() - 1);
        queue.push_back(*it);
    };
    auto known = [&](std::uint32_t x, std::uint32_t y, std::uint32_t z) {
        auto it = by_point.find(x);
        if (it == by_point.end()) return false;
        for (auto id : it->second)
            if (has(*order[id], y) && has(*order[id], z)) return true;
        return false;
    };

    add(triangle_span(pls, a, b, c));
    while (!queue.empty()) {
        PointSet s = std::move(queue.front());
        queue.pop_front();
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j) {
                const auto a3 = s[i], a4 = s[j];
                const bool joined = pls.collinear(a3, a4);
                const PointSet* side = joined ? &pls.line(a3, a4) : nullptr;
                // possible a1: in the span, off the line a3 a4, collinear with both
                std::vector<std::uint32_t> apex;
                for (auto a1 : s) {
                    if (a1 == a3 || a1 == a4 || (side && has(*side, a1))) continue;
                    if (pls.collinear(a1, a3) && pls.collinear(a1, a4)) apex.push_back(a1);
                }
                if (apex.empty()) continue;
                const auto& c3 = pls.candidates(a3);
                const auto& c4 = pls.candidates(a4);
                std::vector<std::uint32_t> both;
                std::set_intersection(c3.begin(), c3.end(), c4.begin(), c4.end(), std::back_inserter(both));
                for (auto a2 : both) {
                    // cheap rejections first; resolving collinearity may derive a line
                    if (has(s, a2) || known(a2, a3, a4) || (side && has(*side, a2))) continue;
                    auto near = [&](std::uint32_t a1) { return has(pls.candidates(a1), a2); };
                    if (std::none_of(apex.begin(), apex.end(), near)) continue;
                    if (!pls.collinear(a2, a3) || !pls.collinear(a2, a4)) continue;
                    bool witness = false;
                    for (auto a1 : apex)
                        if (near(a1) && pls.collinear(a1, a2)) {
                            witness = true;
                            break;
                        }
                    if (!witness) continue;
                    if (joined) {
                        add(triangle_span(pls, a2, a3, a4));
                        continue;
                    }
                    // a3, a4 non-collinear: complete a2, a3 to a triangle with a
                    // third point of the line a2 a4.
                    const PointSet far = pls.line(a2, a4);
                    for (auto y : far)
                        if (y != a2 && y != a4 && pls.collinear(y, a3)) {
                            add(triangle_span(pls, a2, a3, y));
                            break;
                        }
                }
            }
    }
    ClosureResult out;
    std::set<std::uint32_t> pts;
    for (const auto& span : seen) {
        pts.insert(span.begin(), span.end());
        out.spans.push_back(span);
    }
    out.points.assign(pts.begin(), pts.end());
    return out;
}

} // namespace symplectica
