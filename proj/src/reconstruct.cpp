#include "symplectica/reconstruct.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "symplectica/formulas.hpp"

namespace symplectica {

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= b;
    return r;
}

std::size_t projective_count(unsigned p, std::size_t d) { return (ipow(p, d) - 1) / (p - 1); }

bool has(const PointSet& s, std::uint32_t x) { return std::binary_search(s.begin(), s.end(), x); }

void tag_structures(std::vector<MaxStructure>& out, const LevelShape& shape, const std::vector<PointSet>& known_tops) {
    const std::size_t ss = shape.star_size(), ts = shape.top_size();
    std::set<PointSet> tops(known_tops.begin(), known_tops.end());
    for (auto& st : out) {
        const std::size_t sz = st.points.size();
        if (sz != ss && sz != ts)
            fail(ErrorCode::validation, "recovered structure of unexpected size " + std::to_string(sz));
        if (ss != ts) st.tag = sz == ss ? StructureTag::star : StructureTag::top;
        else if (!tops.empty()) st.tag = tops.count(st.points) ? StructureTag::top : StructureTag::star;
        else st.tag = StructureTag::ambiguous;
    }
    std::sort(out.begin(), out.end(), [](const MaxStructure& a, const MaxStructure& b) { return a.points < b.points; });
}

} // namespace

std::size_t LevelShape::star_size() const {
    return k % 2 ? projective_count(p, n - k + 1) : ipow(p, n - k);
}

std::size_t LevelShape::top_size() const {
    return k % 2 ? projective_count(p, k + 1) : ipow(p, k);
}

std::string_view tag_name(StructureTag t) {
    switch (t) {
    case StructureTag::star: return "star";
    case StructureTag::top: return "top";
    case StructureTag::ambiguous: return "ambiguous";
    }
    return "?";
}

std::unique_ptr<DerivedIncidence> odd_level_incidence(const Graph& collinear, const LevelShape& shape) {
    if (shape.k == 1 || shape.k + 1 == shape.n)
        return std::make_unique<DerivedIncidence>(
            collinear, [&collinear](std::uint32_t a, std::uint32_t b) { return polar_closure(collinear, a, b); }, true);
    return std::make_unique<DerivedIncidence>(
        collinear,
        ternary_rule(collinear,
                     [&collinear](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
                         return collinear_from_adjacency(collinear, a, b, c);
                     }),
        true);
}

std::vector<MaxStructure> recover_odd_structures(Incidence& pls, const LevelShape& shape,
                                                 const std::vector<PointSet>& known_tops) {
    const std::size_t n = pls.point_count();
    const std::size_t line_size = shape.p + 1;
    std::vector<MaxStructure> out;
    std::set<PointSet> found;

    // all lines, each once
    std::vector<std::vector<PointSet>> through(n);
    for (std::uint32_t a = 0; a < n; ++a)
        for (auto b : pls.candidates(a))
            if (pls.collinear(a, b)) {
                const PointSet& l = pls.line(a, b);
                if (std::find(through[a].begin(), through[a].end(), l) == through[a].end()) through[a].push_back(l);
            }
    if (shape.star_size() == line_size || shape.top_size() == line_size)
        for (std::uint32_t a = 0; a < n; ++a)
            for (const auto& l : through[a])
                if (l.front() == a) found.insert(l);

    std::vector<std::vector<std::size_t>> covering(n);
    std::vector<PointSet> closures;
    auto covered = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
        for (auto id : covering[a])
            if (has(closures[id], b) && has(closures[id], c)) return true;
        return false;
    };
    for (std::uint32_t a = 0; a < n; ++a) {
        const auto& ls = through[a];
        for (std::size_t i = 0; i < ls.size(); ++i)
            for (std::size_t j = i + 1; j < ls.size(); ++j)
                for (auto b : ls[i]) {
                    if (b == a) continue;
                    for (auto c : ls[j]) {
                        if (c == a || !pls.collinear(b, c) || covered(a, b, c)) continue;
                        auto closure = delta_closure(pls, a, b, c);
                        const auto id = closures.size();
                        for (auto x : closure.points) covering[x].push_back(id);
                        closures.push_back(closure.points);
                        found.insert(std::move(closure.points));
                    }
                }
    }
    for (auto& s : found) out.push_back(MaxStructure{s, StructureTag::ambiguous});
    tag_structures(out, shape, known_tops);
    return out;
}

std::vector<MaxStructure> recover_max_structures(const Graph& collinear, const LevelShape& shape,
                                                 const std::vector<PointSet>& known_tops, std::size_t clique_budget) {
    if (shape.k < 1 || shape.k + 1 > shape.n) fail(ErrorCode::invalid_argument, "level out of range");
    if (shape.k % 2 == 1) {
        auto pls = odd_level_incidence(collinear, shape);
        return recover_odd_structures(*pls, shape, known_tops);
    }
    std::vector<MaxStructure> out;
    for (auto& c : maximal_cliques(collinear, clique_budget)) out.push_back(MaxStructure{std::move(c), StructureTag::ambiguous});
    tag_structures(out, shape, known_tops);
    return out;
}

AbstractLevel descend(const AbstractLevel& level, std::size_t odd_bound) {
    const auto& shape = level.shape;
    if (shape.k < 2) fail(ErrorCode::invalid_argument, "cannot descend below level 1");
    auto structures = recover_max_structures(level.collinear, shape, level.known_tops);
    std::vector<PointSet> stars;
    for (auto& st : structures) {
        if (st.tag == StructureTag::ambiguous)
            fail(ErrorCode::ambiguous, "stars and tops of level " + std::to_string(shape.k) +
                                           " have equal size and no known tops; the duality exchanges them");
        if (st.tag == StructureTag::star) stars.push_back(std::move(st.points));
    }
    std::sort(stars.begin(), stars.end());

    AbstractLevel next;
    next.shape = LevelShape{shape.p, shape.n, shape.k - 1};
    std::vector<std::vector<std::uint32_t>> groups(level.collinear.size());
    for (std::uint32_t i = 0; i < stars.size(); ++i)
        for (auto x : stars[i]) groups[x].push_back(i);
    Graph upper = union_of_cliques(stars.size(), groups);

    std::set<PointSet> tops;
    for (auto& g : groups)
        if (g.size() >= 2) tops.insert(g);
    next.known_tops.assign(tops.begin(), tops.end());

    const std::size_t k1 = next.shape.k;
    if (k1 % 2 == 0 || k1 == 1) {
        next.collinear = std::move(upper);
    } else {
        if (stars.size() > odd_bound)
            fail(ErrorCode::size_bound, "odd level " + std::to_string(k1) + " has " + std::to_string(stars.size()) +
                                            " points, above the bound " + std::to_string(odd_bound));
        // The upper adjacency here is the image of a lower adjacency under the
        // duality, so the lower-adjacency formula yields collinearity.
        TriangleOracle oracle(upper);
        Graph col(stars.size());
        for (auto [a, b] : upper.edges())
            if (line_from_lower(oracle, a, b).size() >= 3) col.add_edge(a, b);
        col.finalize();
        next.collinear = std::move(col);
    }

    if (!level.provenance.empty()) {
        // Not read by any decision above; kept for the final comparison.
        const Field f(shape.p);
        for (const auto& st : stars) {
            Subspace meet = level.provenance[st.front()];
            for (auto x : st) meet = intersect(f, meet, level.provenance[x]);
            next.provenance.push_back(std::move(meet));
        }
    }
    return next;
}

RecoveredGeometry recover_projective(const Graph& copolar) {
    const std::size_t n = copolar.size();
    RecoveredGeometry g;
    g.point_count = n;
    g.collinear = copolar;
    std::vector<std::uint64_t> done(n * ((n + 63) / 64), 0);
    const std::size_t words = (n + 63) / 64;
    std::set<PointSet> lines;
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = a + 1; b < n; ++b) {
            if (test_bit(done.data() + a * words, b)) continue;
            PointSet l = polar_closure(copolar, a, b);
            for (auto x : l)
                for (auto y : l) set_bit(done.data() + x * words, y);
            lines.insert(std::move(l));
        }
    g.lines.assign(lines.begin(), lines.end());
    for (const auto& l : g.lines) g.isotropic.push_back(l.size() >= 2 && !copolar.has_edge(l[0], l[1]));
    return g;
}

std::vector<std::string> compare_geometry(const SymplecticSpace& s, const RecoveredGeometry& g,
                                          const std::vector<Subspace>& labels) {
    std::vector<std::string> bad;
    auto note = [&](std::string m) {
        if (bad.size() < 20) bad.push_back(std::move(m));
    };
    const Field& f = s.field();
    auto truth = enumerate_tr(s, 1);
    if (labels.size() != g.point_count) note("label count differs from point count");
    std::vector<Subspace> sorted = labels;
    std::sort(sorted.begin(), sorted.end(), [](const Subspace& a, const Subspace& b) { return a.bytes() < b.bytes(); });
    if (sorted != truth) note("recovered points are not the points of the projective space");

    const auto expected_lines = gaussian_binomial(s.p(), static_cast<unsigned>(s.n()), 2);
    if (g.lines.size() != expected_lines)
        note("recovered " + std::to_string(g.lines.size()) + " lines, expected " + std::to_string(expected_lines));
    std::set<std::vector<std::uint8_t>> spans;
    for (std::size_t i = 0; i < g.lines.size(); ++i) {
        const auto& l = g.lines[i];
        std::vector<Vec> rows;
        for (auto x : l) rows.emplace_back(labels[x].row(0).begin(), labels[x].row(0).end());
        Subspace span = Subspace::span_vectors(f, s.n(), rows);
        if (span.dim() != 2) {
            note("line " + std::to_string(i) + " spans dimension " + std::to_string(span.dim()));
            continue;
        }
        if (l.size() != s.p() + 1u) note("line " + std::to_string(i) + " misses points of " + span.to_string());
        if (!spans.insert(span.bytes()).second) note("line " + std::to_string(i) + " repeats " + span.to_string());
        if (g.isotropic[i] != (s.rdim(span) == 2)) note("line " + std::to_string(i) + " has the wrong type");
    }
    for (std::uint32_t a = 0; a < g.point_count && a < labels.size(); ++a)
        for (std::uint32_t b = a + 1; b < g.point_count && b < labels.size(); ++b)
            if (g.orthogonal(a, b) != (s.form(labels[a].row(0), labels[b].row(0)) == 0))
                note("orthogonality differs for " + labels[a].to_string() + " and " + labels[b].to_string());
    return bad;
}

PipelineReport full_pipeline(const SymplecticSpace& s, std::size_t k, std::size_t odd_bound) {
    if (k < 1 || k + 1 > s.n()) fail(ErrorCode::invalid_argument, "level k must satisfy 1 <= k <= n-1");
    if (2 * k == s.n())
        fail(ErrorCode::ambiguous, "middle level k = n-k: adjacency-preserving maps may be composed with the "
                                   "duality U -> U^perp, so stars and tops are not intrinsically distinguishable");
    PipelineReport rep;
    rep.p = s.p();
    rep.m = s.m();
    rep.k = k;
    PointIndex points(enumerate_tr(s, k));
    AbstractLevel level;
    level.shape = LevelShape{s.p(), s.n(), k};
    level.collinear = build_level_graphs(s, points, k).collinear;
    level.provenance = points.all();
    rep.level_sizes.push_back(level.collinear.size());
    while (level.shape.k > 1) {
        level = descend(level, odd_bound);
        rep.level_sizes.push_back(level.collinear.size());
    }
    rep.geometry = recover_projective(level.collinear);
    rep.point_labels = std::move(level.provenance);
    rep.point_count = rep.geometry.point_count;
    rep.line_count = rep.geometry.lines.size();
    rep.isotropic_line_count =
        static_cast<std::size_t>(std::count(rep.geometry.isotropic.begin(), rep.geometry.isotropic.end(), true));
    rep.mismatches = compare_geometry(s, rep.geometry, rep.point_labels);
    rep.match = rep.mismatches.empty();
    return rep;
}

std::vector<std::uint32_t> lift_similitude(const SymplecticSpace& s, const PointIndex& points, const Matrix& m,
                                           bool with_kappa) {
    if (m.rows() != s.n() || m.cols() != s.n()) fail(ErrorCode::invalid_argument, "matrix has the wrong shape");
    if (!similitude_factor(s, m)) fail(ErrorCode::precondition, "matrix is not a similitude");
    if (with_kappa && !points.all().empty() && 2 * points[0].dim() != s.n())
        fail(ErrorCode::precondition, "the duality maps a level onto itself only at k = n-k");
    const Field& f = s.field();
    std::vector<std::uint32_t> perm(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        Subspace u = image(f, m, points[i]);
        if (with_kappa) u = s.kappa(u);
        perm[i] = points.at(u);
    }
    return perm;
}

} // namespace symplectica
