#pragma once

// Point-line structures known only through their incidence, and the
// constructions that recover planes and maximal subspaces from them:
// triangle spans, the wedge and diamond relations, and their closure.

#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "symplectica/graph.hpp"

namespace symplectica {

using PointSet = std::vector<std::uint32_t>;   // sorted point ids

/// Read-only view of a partial linear space. `line` and `collinear` may be
/// computed lazily, so they are non-const; implementations are not thread-safe.
class Incidence {
public:
    virtual ~Incidence() = default;
    virtual std::size_t point_count() const = 0;
    /// Distinct points sharing a line.
    virtual bool collinear(std::uint32_t a, std::uint32_t b) = 0;
    /// Sorted line through two collinear points; Error(precondition) otherwise.
    virtual const PointSet& line(std::uint32_t a, std::uint32_t b) = 0;
    /// Sorted superset of the points collinear with `a`.
    virtual const std::vector<std::uint32_t>& candidates(std::uint32_t a) const = 0;

    /// Points collinear with both a and b.
    std::vector<std::uint32_t> common_collinear(std::uint32_t a, std::uint32_t b);
};

/// Explicit lines. Error(validation) if a line has fewer than two points,
/// mentions an unknown point, or two lines share two points.
class PartialLinearSpace final : public Incidence {
public:
    PartialLinearSpace(std::size_t points, std::vector<PointSet> lines);

    std::size_t point_count() const override { return graph_.size(); }
    bool collinear(std::uint32_t a, std::uint32_t b) override { return a != b && graph_.has_edge(a, b); }
    const PointSet& line(std::uint32_t a, std::uint32_t b) override;
    const std::vector<std::uint32_t>& candidates(std::uint32_t a) const override { return graph_.neighbors(a); }

    const std::vector<PointSet>& lines() const noexcept { return lines_; }
    const std::vector<std::uint32_t>& lines_through(std::uint32_t a) const { return through_[a]; }
    const Graph& collinearity() const noexcept { return graph_; }

private:
    std::vector<PointSet> lines_;
    std::vector<std::vector<std::uint32_t>> through_;
    std::unordered_map<std::uint64_t, std::uint32_t> pair_line_;
    Graph graph_;
};

/// Lines computed on demand from a rule and cached. `rule(a, b)` returns the
/// full line through a, b (or a set of size < 3 when a, b are not collinear);
/// `graph` bounds the candidates. With `exact` the graph is the collinearity
/// itself and the rule is only consulted for adjacent pairs.
class DerivedIncidence final : public Incidence {
public:
    using Rule = std::function<PointSet(std::uint32_t, std::uint32_t)>;
    DerivedIncidence(const Graph& graph, Rule rule, bool exact);

    std::size_t point_count() const override { return graph_.size(); }
    bool collinear(std::uint32_t a, std::uint32_t b) override;
    const PointSet& line(std::uint32_t a, std::uint32_t b) override;
    const std::vector<std::uint32_t>& candidates(std::uint32_t a) const override { return graph_.neighbors(a); }

    std::size_t lines_computed() const noexcept { return lines_.size(); }

private:
    static constexpr std::uint32_t no_line = 0xffffffffu;
    std::uint32_t resolve(std::uint32_t a, std::uint32_t b);

    const Graph& graph_;
    Rule rule_;
    bool exact_;
    std::deque<PointSet> lines_;   // stable references
    std::unordered_map<std::uint64_t, std::uint32_t> pair_line_;
};

/// {a,b}^perp^perp where x perp y iff x = y or x, y are non-adjacent. For a
/// collinear pair of a copolar space this is their line; for a non-collinear
/// pair it is the hidden (isotropic) line.
PointSet polar_closure(const Graph& g, std::uint32_t a, std::uint32_t b);

/// Lines through a ternary rule: {a, b} plus every common neighbour c with rule(a, b, c).
DerivedIncidence::Rule ternary_rule(const Graph& g, std::function<bool(std::uint32_t, std::uint32_t, std::uint32_t)> rule);

/// Points on some line that meets all three sides of the triangle a, b, c.
/// Error(precondition) unless a, b, c are pairwise collinear and not on one line.
PointSet triangle_span(Incidence& pls, std::uint32_t a, std::uint32_t b, std::uint32_t c);

struct PlaneRelation {
    bool wedge = false;
    bool diamond = false;
};

/// wedge: a3, a4 collinear in both spans, a1 in the first and a2 in the
/// second with a1..a4 pairwise collinear and neither a1 nor a2 on the line a3a4.
/// diamond: a3, a4 in both spans and not collinear, a1 in the first and a2
/// in the second, a1 and a2 collinear with each other and with a3, a4.
PlaneRelation plane_related(Incidence& pls, const PointSet& span1, const PointSet& span2);

struct ClosureResult {
    PointSet points;
    std::vector<PointSet> spans;
};

/// Union of all spans reachable from the span of the triangle by the wedge
/// and diamond relations. `span_limit` caps the exploration (Error(size_bound)).
ClosureResult delta_closure(Incidence& pls, std::uint32_t a, std::uint32_t b, std::uint32_t c,
                            std::size_t span_limit = 100000);

} // namespace symplectica
