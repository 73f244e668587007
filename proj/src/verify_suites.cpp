#include <algorithm>
#include <deque>
#include <set>

#include "symplectica/automorphism.hpp"
#include "symplectica/formulas.hpp"
#include "symplectica/reconstruct.hpp"
#include "verify_internal.hpp"

namespace symplectica::detail {

namespace {

// ---------------------------------------------------------------- helpers

Subspace sub(Context& c, const Matrix& m) {
    const std::size_t n = c.space().n();
    if (m.rows() == 0) return Subspace::zero(n);
    if (m.cols() != n) fail(ErrorCode::invalid_argument, "input has the wrong number of columns");
    for (auto v : m.data())
        if (v >= c.space().p()) fail(ErrorCode::invalid_argument, "input entry not reduced modulo p");
    return Subspace::span(c.space().field(), m);
}

void arity(const std::vector<Matrix>& in, std::size_t n) {
    if (in.size() != n) fail(ErrorCode::invalid_argument, "check expects " + std::to_string(n) + " inputs");
}

Matrix mat(const Subspace& u) { return u.basis(); }

std::vector<Matrix> mats(std::initializer_list<Subspace> us) {
    std::vector<Matrix> out;
    for (const auto& u : us) out.push_back(mat(u));
    return out;
}

std::size_t level_of(Context& c, const Matrix& m) {
    auto u = sub(c, m);
    if (u.dim() < 1 || u.dim() + 1 > c.space().n()) fail(ErrorCode::invalid_argument, "marker is not a level point");
    return u.dim();
}

PointSet indices(Context& c, const std::vector<Subspace>& us) {
    PointSet out;
    for (const auto& u : us) out.push_back(c.index(u));
    std::sort(out.begin(), out.end());
    return out;
}

PointSet bracket(Context& c, const Subspace& plane) {
    // points of a plane other than its radical, as level-1 indices
    Subspace r = c.space().radical(plane);
    std::vector<Subspace> pts;
    for (auto& q : points_of(c.space().field(), plane))
        if (!(r.dim() == 1 && q == r)) pts.push_back(std::move(q));
    return indices(c, pts);
}

bool same_line(Incidence& pls, std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    const auto& l = pls.line(a, b);
    return std::binary_search(l.begin(), l.end(), c);
}

bool is_triangle(Incidence& pls, std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    return a != b && a != c && b != c && pls.collinear(a, b) && pls.collinear(b, c) && pls.collinear(a, c) &&
           !same_line(pls, a, b, c);
}

std::set<PointSet> family_sets(const StructureFamily& f) {
    std::set<PointSet> out;
    for (const auto& m : f.members) out.insert(m);
    return out;
}

std::uint32_t pick(SplitMix64& rng, std::size_t n) { return static_cast<std::uint32_t>(rng.below(n)); }

template <class T>
const T& pick_from(SplitMix64& rng, const std::vector<T>& v) {
    return v[rng.below(v.size())];
}

Subspace random_subspace(Context& c, SplitMix64& rng, std::size_t rows) {
    const std::size_t n = c.space().n();
    Matrix m(rows, n);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = static_cast<Elem>(rng.below(c.space().p()));
    return sub(c, m);
}

std::vector<std::size_t> levels_for(Runner& r, bool odd_only = false) {
    const std::size_t n = r.ctx().space().n();
    std::vector<std::size_t> out;
    if (r.spec().k != 0) {
        if (odd_only && r.spec().k % 2 == 0) fail(ErrorCode::invalid_argument, "this suite needs an odd level");
        out.push_back(r.spec().k);
        return out;
    }
    for (std::size_t k = 1; k < n; ++k)
        if (!odd_only || k % 2 == 1) out.push_back(k);
    return out;
}

// ---------------------------------------------------------------- suite A

bool a_rdim_parity(Context& c, const std::vector<Matrix>& in) {
    arity(in, 1);
    auto u = sub(c, in[0]);
    return c.space().rdim(u) % 2 == u.dim() % 2;
}

bool a_perp_involution(Context& c, const std::vector<Matrix>& in) {
    arity(in, 1);
    const auto& s = c.space();
    auto u = sub(c, in[0]);
    Subspace up = s.perp(u);
    if (s.perp(up) != u || up.dim() + u.dim() != s.n()) return false;
    if (u.dim() == 0) return true;
    Subspace first = Subspace::span_vectors(s.field(), s.n(), {Vec(u.row(0).begin(), u.row(0).end())});
    return contains(s.field(), s.perp(first), up);
}

bool a_classification(Context& c, const std::vector<Matrix>& in) {
    arity(in, 1);
    const auto& s = c.space();
    auto u = sub(c, in[0]);
    auto cl = classify(s, u);
    const auto r = s.rdim(u);
    return cl.dim == u.dim() && cl.rdim == r && cl.isotropic == (r == u.dim()) && cl.regular == (r == 0) &&
           cl.tangential == (r == 1) && cl.in_tr == (r <= 1) && !(u.dim() % 2 == 1 && cl.regular);
}

bool a_two_dim(Context& c, const std::vector<Matrix>& in) {
    arity(in, 1);
    auto u = sub(c, in[0]);
    if (u.dim() != 2) fail(ErrorCode::invalid_argument, "input must be two-dimensional");
    auto cl = classify(c.space(), u);
    return cl.regular || cl.isotropic;
}

bool a_tangential_split(Context& c, const std::vector<Matrix>& in) {
    arity(in, 1);
    const auto& s = c.space();
    const Field& f = s.field();
    auto u = sub(c, in[0]);
    if (s.rdim(u) != 1) fail(ErrorCode::invalid_argument, "input must be tangential");
    auto split = tangential_decompose(s, u);
    return sum(f, split.regular_part, split.point) == u && s.rdim(split.regular_part) == 0 &&
           split.regular_part.dim() + 1 == u.dim() && contains(f, s.perp(split.regular_part), split.point) &&
           split.point == s.radical(u);
}

bool a_kappa(Context& c, const std::vector<Matrix>& in) {
    arity(in, 1);
    const auto& s = c.space();
    auto u = sub(c, in[0]);
    Subspace k = s.kappa(u);
    return s.rdim(k) == s.rdim(u) && s.in_tr(k) == s.in_tr(u) && s.kappa(k) == u;
}

bool a_regular_containment(Context& c, const std::vector<Matrix>& in) {
    arity(in, 2);
    const auto& s = c.space();
    auto x = sub(c, in[0]);
    auto y = sub(c, in[1]);
    if (!contains(s.field(), y, x)) fail(ErrorCode::invalid_argument, "first input must lie in the second");
    const std::size_t codim = y.dim() - x.dim();
    bool ok = true;
    if (s.rdim(x) == 0) {
        ok = ok && s.rdim(y) <= codim;
        if (codim == 1) ok = ok && s.rdim(y) == 1;
    }
    if (s.rdim(y) == 0) {
        ok = ok && s.rdim(x) <= codim;
        if (codim == 1) ok = ok && s.rdim(x) == 1;
    }
    return ok;
}

void per_subspace_a(Runner& r, const Subspace& u) {
    const auto& s = r.ctx().space();
    r.check("A.rdim_parity", mats({u}));
    r.check("A.perp_involution", mats({u}));
    r.check("A.classification", mats({u}));
    r.check("A.kappa", mats({u}));
    if (u.dim() == 2) r.check("A.two_dim_dichotomy", mats({u}));
    if (s.rdim(u) == 1) r.check("A.tangential_split", mats({u}));
}

// ---------------------------------------------------------------- suite B

bool b_collinear(Context& c, const std::vector<Matrix>& in) {
    arity(in, 2);
    auto a = sub(c, in[0]), b = sub(c, in[1]);
    const auto& g = c.graphs(1).collinear;
    auto ia = c.index(a), ib = c.index(b);
    if (ia == ib) fail(ErrorCode::invalid_argument, "points must be distinct");
    return g.has_edge(ia, ib) == (c.space().form(a.row(0), b.row(0)) != 0);
}

bool b_triangle_plane(Context& c, const std::vector<Matrix>& in) {
    arity(in, 1);
    auto plane = sub(c, in[0]);
    if (plane.dim() != 3) fail(ErrorCode::invalid_argument, "input must be a plane");
    auto& pls = c.pls(1);
    auto pts = indices(c, points_of(c.space().field(), plane));
    bool found = false;
    for (std::size_t i = 0; i < pts.size() && !found; ++i)
        for (std::size_t j = i + 1; j < pts.size() && !found; ++j)
            for (std::size_t l = j + 1; l < pts.size() && !found; ++l)
                found = is_triangle(pls, pts[i], pts[j], pts[l]);
    return found == (c.space().rdim(plane) == 1);
}

bool b_plane_lines(Context& c, const std::vector<Matrix>& in) {
    arity(in, 2);
    const auto& s = c.space();
    auto plane = sub(c, in[0]), line = sub(c, in[1]);
    if (plane.dim() != 3 || s.rdim(plane) != 1 || line.dim() != 2 || !contains(s.field(), plane, line))
        fail(ErrorCode::invalid_argument, "needs a tangential plane and a line on it");
    Subspace rad = s.radical(plane);
    const bool through = contains(s.field(), line, rad);
    return s.rdim(line) == 2 ? through : !through;
}

bool b_triangle_span(Context& c, const std::vector<Matrix>& in) {
    arity(in, 3);
    const Field& f = c.space().field();
    auto a = sub(c, in[0]), b = sub(c, in[1]), d = sub(c, in[2]);
    auto span = triangle_span(c.pls(1), c.index(a), c.index(b), c.index(d));
    return span == bracket(c, sum(f, sum(f, a, b), d));
}

bool b_closure(Context& c, const std::vector<Matrix>& in) {
    arity(in, 3);
    auto& pls = c.pls(1);
    auto a = c.index(sub(c, in[0])), b = c.index(sub(c, in[1])), d = c.index(sub(c, in[2]));
    auto start = triangle_span(pls, a, b, d);
    auto it = c.closure_cache.find(start);
    if (it == c.closure_cache.end()) it = c.closure_cache.emplace(start, delta_closure(pls, a, b, d).points).first;
    return it->second.size() == pls.point_count();
}

bool b_wedge(Context& c, const std::vector<Matrix>& in) {
    arity(in, 2);
    const auto& s = c.space();
    auto p1 = sub(c, in[0]), p2 = sub(c, in[1]);
    Subspace l = intersect(s.field(), p1, p2);
    if (p1.dim() != 3 || p2.dim() != 3 || s.rdim(p1) != 1 || s.rdim(p2) != 1 || l.dim() != 2 || s.rdim(l) != 0)
        fail(ErrorCode::invalid_argument, "needs tangential planes sharing a regular line");
    return plane_related(c.pls(1), bracket(c, p1), bracket(c, p2)).wedge;
}

bool b_diamond(Context& c, const std::vector<Matrix>& in) {
    arity(in, 4);
    const auto& s = c.space();
    const Field& f = s.field();
    auto p1 = sub(c, in[0]), p2 = sub(c, in[1]), a3 = sub(c, in[2]), a4 = sub(c, in[3]);
    Subspace l = intersect(f, p1, p2);
    if (p1.dim() != 3 || p2.dim() != 3 || s.rdim(p1) != 1 || s.rdim(p2) != 1 || l.dim() != 2 || s.rdim(l) != 2 ||
        a3 == a4 || !contains(f, l, a3) || !contains(f, l, a4) || a3 == s.radical(p1) || a3 == s.radical(p2) ||
        a4 == s.radical(p1) || a4 == s.radical(p2))
        fail(ErrorCode::invalid_argument, "needs tangential planes on an isotropic line and two points of it");
    const auto& g = c.graphs(1).collinear;
    const auto i3 = c.index(a3), i4 = c.index(a4);
    for (const auto& x1 : points_of(f, p1)) {
        if (contains(f, l, x1)) continue;
        const auto i1 = c.index(x1);
        if (!g.has_edge(i1, i3) || !g.has_edge(i1, i4)) continue;
        for (const auto& x2 : points_of(f, p2)) {
            if (contains(f, l, x2)) continue;
            const auto i2 = c.index(x2);
            if (!g.has_edge(i1, i2) || !g.has_edge(i2, i3) || !g.has_edge(i2, i4)) continue;
            Subspace m = sum(f, x1, x2);
            Subspace q1 = sum(f, m, a3), q2 = sum(f, m, a4);
            if (s.rdim(m) == 0 && s.rdim(q1) == 1 && s.rdim(q2) == 1 && intersect(f, q1, q2) == m) return true;
        }
    }
    return false;
}

bool b_related(Context& c, const std::vector<Matrix>& in) {
    arity(in, 2);
    auto p1 = sub(c, in[0]), p2 = sub(c, in[1]);
    auto b1 = bracket(c, p1), b2 = bracket(c, p2);
    PointSet common;
    std::set_intersection(b1.begin(), b1.end(), b2.begin(), b2.end(), std::back_inserter(common));
    if (common.size() < 2 || p1 == p2) fail(ErrorCode::invalid_argument, "planes must share two points");
    auto rel = plane_related(c.pls(1), b1, b2);
    return rel.wedge || rel.diamond;
}

std::vector<Subspace> tangential_planes(Context& c) {
    std::vector<Subspace> out;
    for (auto& pl : enumerate_subspaces(c.space().field(), c.space().n(), 3))
        if (c.space().rdim(pl) == 1) out.push_back(std::move(pl));
    return out;
}

bool b_plane_connectivity(Context& c, const std::vector<Matrix>& in) {
    arity(in, 1);
    const Field& f = c.space().field();
    auto planes = tangential_planes(c);
    std::vector<PointSet> br;
    for (const auto& pl : planes) br.push_back(bracket(c, pl));
    // Planes meeting in at most a point share at most one point, so only
    // planes through a common line need the explicit count.
    std::vector<std::uint32_t> parent(planes.size());
    for (std::uint32_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto root = [&](std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::unordered_map<Subspace, std::vector<std::uint32_t>, SubspaceHash> by_line;
    for (std::uint32_t i = 0; i < planes.size(); ++i)
        for (auto& l : subspaces_of(f, planes[i], 2)) by_line[l].push_back(i);
    for (const auto& [line, ids] : by_line)
        for (std::size_t x = 1; x < ids.size(); ++x) {
            PointSet common;
            std::set_intersection(br[ids[0]].begin(), br[ids[0]].end(), br[ids[x]].begin(), br[ids[x]].end(),
                                  std::back_inserter(common));
            if (common.size() >= 2) parent[root(ids[0])] = root(ids[x]);
        }
    std::set<std::uint32_t> roots;
    for (std::uint32_t i = 0; i < parent.size(); ++i) roots.insert(root(i));
    return roots.size() == 1;
}

bool b_point_in_plane(Context& c, const std::vector<Matrix>& in) {
    arity(in, 1);
    const auto& s = c.space();
    const Field& f = s.field();
    auto a = sub(c, in[0]);
    if (a.dim() != 1) fail(ErrorCode::invalid_argument, "input must be a point");
    const auto& pts = c.points(1);
    for (const auto& b : pts.all()) {
        if (s.form(a.row(0), b.row(0)) == 0) continue;
        Subspace line = sum(f, a, b);
        for (const auto& d : pts.all()) {
            if (contains(f, line, d)) continue;
            Subspace plane = sum(f, line, d);
            if (s.rdim(plane) == 1 && s.radical(plane) != a) return true;
        }
    }
    return false;
}

bool b_orthogonality(Context& c, const std::vector<Matrix>& in) {
    arity(in, 2);
    const auto& s = c.space();
    auto a = sub(c, in[0]), b = sub(c, in[1]);
    const auto& g = c.graphs(1).collinear;
    auto ia = c.index(a), ib = c.index(b);
    const bool perp_by_graph = ia == ib || !g.has_edge(ia, ib);
    if (perp_by_graph != (s.form(a.row(0), b.row(0)) == 0)) return false;
    if (ia == ib) return true;
    return polar_closure(g, ia, ib) == indices(c, points_of(s.field(), sum(s.field(), a, b)));
}

bool b_c_witnesses(Context& c, const std::vector<Matrix>& in) {
    arity(in, 4);
    const auto& g = c.graphs(1).collinear;
    std::uint32_t v[4];
    for (int i = 0; i < 4; ++i) v[i] = c.index(sub(c, in[i]));
    if (!g.has_edge(v[0], v[1]) || v[2] == v[3] || g.has_edge(v[2], v[3]))
        fail(ErrorCode::invalid_argument, "hypotheses of the configuration do not hold");
    for (int i = 0; i < 2; ++i)
        for (int j = 2; j < 4; ++j)
            if (!g.has_edge(v[i], v[j])) fail(ErrorCode::invalid_argument, "hypotheses of the configuration do not hold");
    auto common = common_neighbors(g, std::span<const std::uint32_t>(v, 4));
    for (std::size_t i = 0; i < common.size(); ++i)
        for (std::size_t j = i + 1; j < common.size(); ++j)
            if (!g.has_edge(common[i], common[j])) return true;
    return false;
}

bool b_b_witnesses(Context& c, const std::vector<Matrix>& in) {
    arity(in, 3);
    const auto& g = c.graphs(1).collinear;
    std::uint32_t v[3];
    for (int i = 0; i < 3; ++i) v[i] = c.index(sub(c, in[i]));
    if (!is_triangle(c.pls(1), v[0], v[1], v[2])) fail(ErrorCode::invalid_argument, "inputs must form a triangle");
    auto x = common_neighbors(g, std::span<const std::uint32_t>(v, 3));
    for (auto b2 : x)
        for (auto b3 : x) {
            if (b2 >= b3 || !g.has_edge(b2, b3)) continue;
            for (auto b1 : x)
                if (b1 != b2 && b1 != b3 && !g.has_edge(b1, b2) && !g.has_edge(b1, b3)) return true;
        }
    return false;
}

// ---------------------------------------------------------------- suite C

bool c_pencil_cardinality(Context& c, const std::vector<Matrix>& in) {
    arity(in, 2);
    const auto& s = c.space();
    const Field& f = s.field();
    auto h = sub(c, in[0]), b = sub(c, in[1]);
    const std::size_t k = h.dim() + 1;
    auto members = pencil(s, h, b, k);
    for (const auto& u : members)
        if (u.dim() != k || !s.in_tr(u) || !contains(f, u, h) || !contains(f, b, u)) return false;
    if (k % 2 == 1) return members.size() == s.p() + 1u;
    return members.empty() || members.size() == s.p();
}

bool c_star_parametrization(Context& c, const std::vector<Matrix>& in) {
    arity(in, 1);
    const auto& s = c.space();
    auto h = sub(c, in[0]);
    const std::size_t k = h.dim() + 1;
    PointSet brute;
    const auto& pts = c.points(k);
    for (std::uint32_t i = 0; i < pts.size(); ++i)
        if (contains(s.field(), pts[i], h)) brute.push_back(i);
    return indices(c, star(s, h, k)) == brute;
}

bool c_top_parametrization(Context& c, const std::vector<Matrix>& in) {
    arity(in, 1);
    const auto& s = c.space();
    auto b = sub(c, in[0]);
    if (b.dim() < 2) fail(ErrorCode::invalid_argument, "carrier too small");
    const std::size_t k = b.dim() - 1;
    PointSet brute;
    const auto& pts = c.points(k);
    for (std::uint32_t i = 0; i < pts.size(); ++i)
        if (contains(s.field(), b, pts[i])) brute.push_back(i);
    return indices(c, top(s, b, k)) == brute;
}

bool c_pencil_types(Context& c, const std::vector<Matrix>& in) {
    arity(in, 2);
    const auto& s = c.space();
    auto h = sub(c, in[0]), b = sub(c, in[1]);
    auto all = projective_pencil(s.field(), h, b);
    bool ok = true;
    if (s.rdim(h) == 0 && s.rdim(b) == 0)
        for (const auto& u : all) ok = ok && s.rdim(u) == 1;
    const bool has_regular = std::any_of(all.begin(), all.end(), [&](const Subspace& u) { return s.rdim(u) == 0; });
    if (has_regular) ok = ok && s.rdim(h) == 1 && s.rdim(b) == 1;
    return ok;
}

bool c_adjacency_agreement(Context& c, const std::vector<Matrix>& in) {
    arity(in, 2);
    const auto& s = c.space();
    auto u = sub(c, in[0]), w = sub(c, in[1]);
    const auto& g = c.graphs(u.dim());
    auto iu = c.index(u), iw = c.index(w);
    return g.lower.has_edge(iu, iw) == adjacent(s, u, w, AdjacencyKind::lower) &&
           g.upper.has_edge(iu, iw) == adjacent(s, u, w, AdjacencyKind::upper) &&
           g.collinear.has_edge(iu, iw) == adjacent(s, u, w, AdjacencyKind::collinear);
}

bool c_even_coincidence(Context& c, const std::vector<Matrix>& in) {
    arity(in, 2);
    auto u = sub(c, in[0]), w = sub(c, in[1]);
    if (u.dim() % 2) fail(ErrorCode::invalid_argument, "needs an even level");
    const auto& g = c.graphs(u.dim());
    auto iu = c.index(u), iw = c.index(w);
    const bool col = g.collinear.has_edge(iu, iw);
    return g.lower.has_edge(iu, iw) == col && g.upper.has_edge(iu, iw) == col;
}

bool c_maximal_cliques(Context& c, const std::vector<Matrix>& in) {
    arity(in, 1);
    const auto k = level_of(c, in[0]);
    if (k % 2) fail(ErrorCode::invalid_argument, "needs an even level");
    auto cliques = maximal_cliques(c.graphs(k).collinear, pair_bound);
    std::set<PointSet> found(cliques.begin(), cliques.end());
    auto expected = family_sets(c.stars(k));
    auto tops = family_sets(c.tops(k));
    expected.insert(tops.begin(), tops.end());
    std::set<std::size_t> sizes;
    for (const auto& q : cliques) sizes.insert(q.size());
    std::string size_list;
    for (auto z : sizes) size_list += (size_list.empty() ? "" : ",") + std::to_string(z);
    c.notes["maximal_cliques.level" + std::to_string(k)] = std::to_string(cliques.size());
    c.notes["maximal_cliques.sizes.level" + std::to_string(k)] = size_list;
    return cliques.size() == found.size() && found == expected;
}

bool c_star_top_intersection(Context& c, const std::vector<Matrix>& in) {
    arity(in, 2);
    const auto& s = c.space();
    auto h = sub(c, in[0]), b = sub(c, in[1]);
    const std::size_t k = h.dim() + 1;
    if (b.dim() != k + 1) fail(ErrorCode::invalid_argument, "star centre and top carrier differ by two dimensions");
    auto st = indices(c, star(s, h, k)), tp = indices(c, top(s, b, k));
    PointSet common;
    std::set_intersection(st.begin(), st.end(), tp.begin(), tp.end(), std::back_inserter(common));
    const bool nested = contains(s.field(), b, h);
    if (k % 2 == 1 && nested && common.size() < 2) return false;
    if (common.size() < 2) return true;
    return nested && common == indices(c, pencil(s, h, b, k));
}

bool c_structures(Context& c, const std::vector<Matrix>& in) {
    arity(in, 1);
    const auto& s = c.space();
    const auto k = level_of(c, in[0]);
    LevelShape shape{s.p(), s.n(), k};
    auto found = recover_max_structures(c.graphs(k).collinear, shape, {}, pair_bound);
    auto stars = family_sets(c.stars(k));
    auto tops = family_sets(c.tops(k));
    std::set<PointSet> all(stars.begin(), stars.end());
    all.insert(tops.begin(), tops.end());
    std::set<PointSet> got;
    std::size_t tagged_star = 0, tagged_top = 0, ambiguous = 0;
    for (const auto& st : found) {
        got.insert(st.points);
        switch (st.tag) {
        case StructureTag::star:
            ++tagged_star;
            if (!stars.count(st.points)) return false;
            break;
        case StructureTag::top:
            ++tagged_top;
            if (!tops.count(st.points)) return false;
            break;
        case StructureTag::ambiguous:
            ++ambiguous;
            if (2 * k != s.n()) return false;
            break;
        }
    }
    c.notes["structures.level" + std::to_string(k)] = std::to_string(tagged_star) + " star, " +
                                                       std::to_string(tagged_top) + " top, " +
                                                       std::to_string(ambiguous) + " ambiguous";
    return got == all && found.size() == all.size();
}

bool c_odd_edge_sets(Context& c, const std::vector<Matrix>& in) {
    arity(in, 1);
    const auto k = level_of(c, in[0]);
    if (k % 2 == 0 || k == 1 || k + 1 == c.space().n())
        fail(ErrorCode::invalid_argument, "needs an odd level strictly inside");
    const auto& g = c.graphs(k);
    return !(g.lower == g.upper) && !(g.lower == g.collinear) && !(g.upper == g.collinear);
}

bool c_kappa_conjugates(Context& c, const std::vector<Matrix>& in) {
    arity(in, 2);
    const auto& s = c.space();
    auto u = sub(c, in[0]), w = sub(c, in[1]);
    const std::size_t k = u.dim();
    auto ku = s.kappa(u), kw = s.kappa(w);
    const auto& g = c.graphs(k);
    const auto& d = c.graphs(s.n() - k);
    auto iu = c.index(u), iw = c.index(w), jku = c.index(ku), jkw = c.index(kw);
    return g.lower.has_edge(iu, iw) == d.upper.has_edge(jku, jkw) &&
           g.upper.has_edge(iu, iw) == d.lower.has_edge(jku, jkw) &&
           g.collinear.has_edge(iu, iw) == d.collinear.has_edge(jku, jkw);
}

bool c_delta_axiom(Context& c, const std::vector<Matrix>& in) {
    arity(in, 3);
    const auto& s = c.space();
    auto u = sub(c, in[0]), h = sub(c, in[1]), b = sub(c, in[2]);
    const std::size_t k = u.dim();
    if (k % 2 == 0) fail(ErrorCode::invalid_argument, "needs an odd level");
    auto line = indices(c, pencil(s, h, b, k));
    auto iu = c.index(u);
    if (line.size() < 2 || std::binary_search(line.begin(), line.end(), iu))
        fail(ErrorCode::invalid_argument, "needs a line and a point off it");
    const auto& g = c.graphs(k).collinear;
    std::size_t hits = 0;
    for (auto x : line) hits += g.has_edge(iu, x);
    return hits == 0 || hits == 1 || hits + 1 == line.size();
}

// ---------------------------------------------------------------- suite D

bool d_formula3(Context& c, const std::vector<Matrix>& in) {
    arity(in, 3);
    auto u1 = sub(c, in[0]), u2 = sub(c, in[1]), u3 = sub(c, in[2]);
    if (u1 == u2) fail(ErrorCode::invalid_argument, "first two points must differ");
    const auto k = u1.dim();
    const bool truth = collinear_ground_truth(c.space(), u1, u2, u3);
    return collinear_from_adjacency(c.graphs(k).collinear, c.index(u1), c.index(u2), c.index(u3)) == truth;
}

bool d_formula7(Context& c, const std::vector<Matrix>& in) {
    arity(in, 3);
    auto u1 = sub(c, in[0]), u2 = sub(c, in[1]), u3 = sub(c, in[2]);
    if (u1 == u2 || u1 == u3 || u2 == u3) fail(ErrorCode::invalid_argument, "points must be distinct");
    const auto k = u1.dim();
    const bool truth = collinear_ground_truth(c.space(), u1, u2, u3);
    auto& oracle = c.oracle(k, AdjacencyKind::lower);
    return collinear_from_lower(oracle, c.index(u1), c.index(u2), c.index(u3)) == truth;
}

// ---------------------------------------------------------------- suite E

bool e_collinear_connected(Context& c, const std::vector<Matrix>& in) {
    arity(in, 1);
    std::size_t count = 0;
    components(c.graphs(level_of(c, in[0])).collinear, &count);
    return count == 1;
}

bool e_copolar_diameter(Context& c, const std::vector<Matrix>& in) {
    arity(in, 1);
    if (level_of(c, in[0]) != 1) fail(ErrorCode::invalid_argument, "needs level 1");
    std::size_t count = 0;
    const auto& g = c.graphs(1).collinear;
    components(g, &count);
    if (count != 1) return false;
    auto d = diameter(g);
    c.notes["copolar_diameter"] = std::to_string(d);
    return d <= 2;
}

bool e_lower_pair_connected(Context& c, const std::vector<Matrix>& in) {
    arity(in, 2);
    const auto& s = c.space();
    auto u = sub(c, in[0]), w = sub(c, in[1]);
    const std::size_t k = u.dim();
    if (!adjacent(s, u, w, AdjacencyKind::lower)) fail(ErrorCode::invalid_argument, "inputs must be lower-adjacent");
    Subspace h = intersect(s.field(), u, w);
    auto inside = indices(c, star(s, h, k));
    const auto& g = c.graphs(k).collinear;
    const auto from = c.index(u), to = c.index(w);
    std::set<std::uint32_t> seen{from};
    std::deque<std::uint32_t> q{from};
    while (!q.empty()) {
        auto x = q.front();
        q.pop_front();
        if (x == to) return true;
        for (auto y : g.neighbors(x))
            if (std::binary_search(inside.begin(), inside.end(), y) && seen.insert(y).second) q.push_back(y);
    }
    return false;
}

bool e_lower_pair_carriers(Context& c, const std::vector<Matrix>& in) {
    arity(in, 2);
    const auto& s = c.space();
    const Field& f = s.field();
    auto u = sub(c, in[0]), w = sub(c, in[1]);
    const std::size_t k = u.dim();
    if (k + 2 > s.n()) fail(ErrorCode::invalid_argument, "needs a level below n-1");
    if (!adjacent(s, u, w, AdjacencyKind::lower)) fail(ErrorCode::invalid_argument, "inputs must be lower-adjacent");
    auto comp = components(c.graphs(k + 1).lower);
    auto carriers = [&](const Subspace& x) {
        std::set<std::uint32_t> out;
        for (const auto& q : c.points(1).all()) {
            if (contains(f, x, q)) continue;
            Subspace b = sum(f, x, q);
            if (s.in_tr(b)) out.insert(comp[c.index(b)]);
        }
        return out;
    };
    auto cu = carriers(u), cw = carriers(w);
    for (auto x : cu)
        if (cw.count(x)) return true;
    return false;
}

bool e_lower_components_refine(Context& c, const std::vector<Matrix>& in) {
    arity(in, 1);
    const auto k = level_of(c, in[0]);
    const auto& g = c.graphs(k);
    auto comp = components(g.collinear);
    for (auto [a, b] : g.lower.edges())
        if (comp[a] != comp[b]) return false;
    return true;
}

// ---------------------------------------------------------------- suite F

bool f_taxonomy(Context& c, const std::vector<Matrix>& in) {
    arity(in, 3);
    auto u1 = sub(c, in[0]), u2 = sub(c, in[1]), u3 = sub(c, in[2]);
    const auto k = u1.dim();
    if (k % 2 == 0 || k == 1 || k + 1 == c.space().n())
        fail(ErrorCode::invalid_argument, "taxonomy needs an odd level strictly inside");
    auto truth = classify_triangle_ground_truth(c.space(), u1, u2, u3);
    return c.oracle(k, AdjacencyKind::lower).classify(c.index(u1), c.index(u2), c.index(u3)) == truth;
}

// ---------------------------------------------------------------- suite G

bool lifts_to_automorphism(Context& c, std::size_t k, const std::vector<std::uint32_t>& perm) {
    const auto& g = c.graphs(k);
    return is_automorphism(g.lower, perm) && is_automorphism(g.upper, perm) && is_automorphism(g.collinear, perm);
}

bool g_similitude_lift(Context& c, const std::vector<Matrix>& in) {
    arity(in, 2);
    const auto& s = c.space();
    const auto k = level_of(c, in[1]);
    const Matrix& m = in[0];
    if (m.rows() != s.n() || m.cols() != s.n()) fail(ErrorCode::invalid_argument, "similitude has the wrong shape");
    if (!similitude_factor(s, m)) return false;
    return lifts_to_automorphism(c, k, lift_similitude(s, c.points(k), m, false));
}

bool g_kappa_lift(Context& c, const std::vector<Matrix>& in) {
    arity(in, 1);
    const auto& s = c.space();
    const auto k = level_of(c, in[0]);
    if (2 * k != s.n()) fail(ErrorCode::invalid_argument, "the duality fixes only the middle level");
    auto perm = lift_similitude(s, c.points(k), Matrix::identity(s.n()), true);
    if (!lifts_to_automorphism(c, k, perm)) return false;
    // stars go to tops and back
    auto image = [&](const StructureFamily& fam) {
        std::set<PointSet> out;
        for (const auto& mem : fam.members) {
            PointSet img;
            for (auto x : mem) img.push_back(perm[x]);
            std::sort(img.begin(), img.end());
            out.insert(std::move(img));
        }
        return out;
    };
    return image(c.stars(k)) == family_sets(c.tops(k)) && image(c.tops(k)) == family_sets(c.stars(k));
}

bool g_automorphism_count(Context& c, const std::vector<Matrix>& in) {
    arity(in, 1);
    const auto& s = c.space();
    const auto k = level_of(c, in[0]);
    auto count = automorphism_count(c.graphs(k).collinear);
    auto expected = sp_order(s.m(), s.p()) * (2 * k == s.n() ? 2 : 1);
    c.notes["automorphism_count.level" + std::to_string(k)] = count.str();
    c.notes["automorphism_expected.level" + std::to_string(k)] = expected.str();
    return count == expected;
}

// ---------------------------------------------------------------- suite H

bool h_pipeline(Context& c, const std::vector<Matrix>& in) {
    arity(in, 1);
    const auto k = level_of(c, in[0]);
    auto rep = full_pipeline(c.space(), k);
    std::string sizes;
    for (auto z : rep.level_sizes) sizes += (sizes.empty() ? "" : ",") + std::to_string(z);
    c.notes["pipeline.level_sizes"] = sizes;
    c.notes["pipeline.points"] = std::to_string(rep.point_count);
    c.notes["pipeline.lines"] = std::to_string(rep.line_count);
    c.notes["pipeline.isotropic_lines"] = std::to_string(rep.isotropic_line_count);
    c.notes["pipeline.match"] = rep.match ? "true" : "false";
    return rep.match;
}

bool h_middle_refusal(Context& c, const std::vector<Matrix>& in) {
    arity(in, 1);
    const auto k = level_of(c, in[0]);
    if (2 * k != c.space().n()) fail(ErrorCode::invalid_argument, "needs the middle level");
    try {
        full_pipeline(c.space(), k);
    } catch (const Error& e) {
        return e.code() == ErrorCode::ambiguous;
    }
    return false;
}

bool h_extreme(Context& c, const std::vector<Matrix>& in) {
    arity(in, 1);
    const auto k = level_of(c, in[0]);
    const auto& g = c.graphs(k);
    if (k == 1) return g.upper == g.collinear;
    if (k + 1 == c.space().n()) return g.lower == g.collinear;
    fail(ErrorCode::invalid_argument, "needs level 1 or n-1");
}

bool single_adjacency_structure(Context& c, const std::vector<Matrix>& in, AdjacencyKind kind) {
    arity(in, 3);
    auto u1 = sub(c, in[0]), u2 = sub(c, in[1]), u3 = sub(c, in[2]);
    const auto k = u1.dim();
    if (k % 2 == 0 || k == 1 || k + 1 == c.space().n())
        fail(ErrorCode::invalid_argument, "needs an odd level strictly inside");
    const auto a = c.index(u1), b = c.index(u2), d = c.index(u3);
    auto& pls = c.derived_incidence(k, kind);
    auto closure = delta_closure(pls, a, b, d).points;
    auto has = [&](std::uint32_t x) { return std::binary_search(closure.begin(), closure.end(), x); };
    if (!has(a) || !has(b) || !has(d)) return false;
    return family_sets(c.stars(k)).count(closure) || family_sets(c.tops(k)).count(closure);
}

bool h_lower_only(Context& c, const std::vector<Matrix>& in) {
    return single_adjacency_structure(c, in, AdjacencyKind::lower);
}

bool h_upper_only(Context& c, const std::vector<Matrix>& in) {
    return single_adjacency_structure(c, in, AdjacencyKind::upper);
}

// ---------------------------------------------------------------- samplers

// Random triangle of the Grassmann space inside a random star or top.
std::array<std::uint32_t, 3> sample_structure_triangle(Runner& r, std::size_t k, bool want_star) {
    auto& c = r.ctx();
    const auto& fam = want_star ? c.stars(k) : c.tops(k);
    auto& pls = c.pls(k);
    for (std::size_t attempt = 0; attempt < 1000000; ++attempt) {
        const auto& mem = pick_from(r.rng(), fam.members);
        if (mem.size() < 3) continue;
        auto a = mem[r.rng().below(mem.size())], b = mem[r.rng().below(mem.size())], d = mem[r.rng().below(mem.size())];
        if (is_triangle(pls, a, b, d)) return {a, b, d};
    }
    fail(ErrorCode::internal, "no triangle found in 10^6 attempts");
}

// u1 random, u2 a random neighbour, u3 from the line / the common neighbourhood / anywhere.
std::array<std::uint32_t, 3> sample_triple(Runner& r, const Graph& g, const PartialLinearSpace* lines) {
    const std::size_t n = g.size();
    for (std::size_t attempt = 0; attempt < 1000000; ++attempt) {
        auto u1 = pick(r.rng(), n);
        if (g.degree(u1) == 0) continue;
        auto u2 = pick_from(r.rng(), g.neighbors(u1));
        const auto mode = r.rng().below(3);
        std::uint32_t u3;
        if (mode == 0 && lines && lines->collinearity().has_edge(u1, u2)) {
            const auto& l = const_cast<PartialLinearSpace*>(lines)->line(u1, u2);
            u3 = pick_from(r.rng(), l);
        } else if (mode <= 1) {
            const std::uint32_t seeds[] = {u1, u2};
            auto cn = common_neighbors(g, seeds);
            if (cn.empty()) continue;
            u3 = pick_from(r.rng(), cn);
        } else {
            u3 = pick(r.rng(), n);
        }
        if (u3 == u1 || u3 == u2) continue;
        return {u1, u2, u3};
    }
    fail(ErrorCode::internal, "no triple found in 10^6 attempts");
}

std::vector<Matrix> triple_inputs(Context& c, std::size_t k, const std::array<std::uint32_t, 3>& t) {
    const auto& pts = c.points(k);
    return mats({pts[t[0]], pts[t[1]], pts[t[2]]});
}

} // namespace

// ---------------------------------------------------------------- registry

void register_checks(std::map<std::string, CheckFn>& r) {
    r["A.rdim_parity"] = a_rdim_parity;
    r["A.perp_involution"] = a_perp_involution;
    r["A.classification"] = a_classification;
    r["A.two_dim_dichotomy"] = a_two_dim;
    r["A.tangential_split"] = a_tangential_split;
    r["A.kappa"] = a_kappa;
    r["A.regular_containment"] = a_regular_containment;
    r["B.collinear_iff_nonorthogonal"] = b_collinear;
    r["B.triangle_plane_iff_tangential"] = b_triangle_plane;
    r["B.plane_lines"] = b_plane_lines;
    r["B.triangle_span"] = b_triangle_span;
    r["B.wedge_witness"] = b_wedge;
    r["B.diamond_witness"] = b_diamond;
    r["B.related_planes"] = b_related;
    r["B.plane_connectivity"] = b_plane_connectivity;
    r["B.point_in_plane"] = b_point_in_plane;
    r["B.closure_is_everything"] = b_closure;
    r["B.orthogonality_definable"] = b_orthogonality;
    r["B.c_witnesses"] = b_c_witnesses;
    r["B.b_witnesses"] = b_b_witnesses;
    r["C.pencil_cardinality"] = c_pencil_cardinality;
    r["C.star_parametrization"] = c_star_parametrization;
    r["C.top_parametrization"] = c_top_parametrization;
    r["C.pencil_types"] = c_pencil_types;
    r["C.adjacency_agreement"] = c_adjacency_agreement;
    r["C.even_coincidence"] = c_even_coincidence;
    r["C.maximal_cliques"] = c_maximal_cliques;
    r["C.star_top_intersection"] = c_star_top_intersection;
    r["C.structures"] = c_structures;
    r["C.odd_edge_sets_distinct"] = c_odd_edge_sets;
    r["C.kappa_conjugates"] = c_kappa_conjugates;
    r["C.delta_axiom"] = c_delta_axiom;
    r["D.formula3"] = d_formula3;
    r["D.formula7"] = d_formula7;
    r["E.collinear_connected"] = e_collinear_connected;
    r["E.copolar_diameter"] = e_copolar_diameter;
    r["E.lower_pair_connected"] = e_lower_pair_connected;
    r["E.lower_pair_carriers"] = e_lower_pair_carriers;
    r["E.lower_components_refine"] = e_lower_components_refine;
    r["F.triangle_taxonomy"] = f_taxonomy;
    r["G.similitude_lift"] = g_similitude_lift;
    r["G.kappa_lift"] = g_kappa_lift;
    r["G.automorphism_count"] = g_automorphism_count;
    r["H.pipeline"] = h_pipeline;
    r["H.middle_refusal"] = h_middle_refusal;
    r["H.extreme_adjacency"] = h_extreme;
    r["H.lower_only_structure"] = h_lower_only;
    r["H.upper_only_structure"] = h_upper_only;
}

// ---------------------------------------------------------------- suites

void suite_a(Runner& r) {
    auto& c = r.ctx();
    const auto& s = c.space();
    const Field& f = s.field();
    if (!r.sampled()) {
        std::size_t total = 0;
        for (std::size_t d = 0; d <= s.n(); ++d)
            total += gaussian_binomial(s.p(), static_cast<unsigned>(s.n()), static_cast<unsigned>(d));
        r.require_exhaustive(total, pair_bound, "subspace enumeration");
        for (std::size_t d = 0; d <= s.n(); ++d)
            for (const auto& y : enumerate_subspaces(f, s.n(), d)) {
                per_subspace_a(r, y);
                for (std::size_t e = 0; e <= d; ++e)
                    for (const auto& x : subspaces_of(f, y, e))
                        if (s.rdim(x) == 0 || s.rdim(y) == 0) r.check("A.regular_containment", mats({x, y}));
            }
        return;
    }
    for (std::size_t i = 0; i < r.spec().samples; ++i) {
        auto y = random_subspace(c, r.rng(), r.rng().below(s.n() + 1));
        per_subspace_a(r, y);
        // a random subspace of y
        Matrix coeff(r.rng().below(y.dim() + 1), y.dim());
        for (std::size_t a = 0; a < coeff.rows(); ++a)
            for (std::size_t b = 0; b < coeff.cols(); ++b) coeff.at(a, b) = static_cast<Elem>(r.rng().below(s.p()));
        Subspace x = coeff.rows() ? Subspace::span(f, multiply(f, coeff, y.basis())) : Subspace::zero(s.n());
        if (s.rdim(x) == 0 || s.rdim(y) == 0) r.check("A.regular_containment", mats({x, y}));
    }
}

void suite_b(Runner& r) {
    auto& c = r.ctx();
    const auto& s = c.space();
    const Field& f = s.field();
    const auto& pts = c.points(1);
    const auto& g = c.graphs(1).collinear;
    auto& pls = c.pls(1);
    const std::size_t n = pts.size();
    r.require_exhaustive(n, triple_bound, "copolar facts");
    const std::size_t samples = r.spec().samples;

    r.check("B.plane_connectivity", mats({pts[0]}));

    // points and pairs
    if (!r.sampled()) {
        for (std::uint32_t a = 0; a < n; ++a) {
            r.check("B.point_in_plane", mats({pts[a]}));
            for (std::uint32_t b = a + 1; b < n; ++b) {
                r.check("B.collinear_iff_nonorthogonal", mats({pts[a], pts[b]}));
                r.check("B.orthogonality_definable", mats({pts[a], pts[b]}));
            }
        }
    } else {
        for (std::size_t i = 0; i < samples; ++i) {
            auto a = pick(r.rng(), n), b = pick(r.rng(), n);
            r.check("B.point_in_plane", mats({pts[a]}));
            if (a == b) continue;
            r.check("B.collinear_iff_nonorthogonal", mats({pts[a], pts[b]}));
            r.check("B.orthogonality_definable", mats({pts[a], pts[b]}));
        }
    }

    // planes and their lines
    std::vector<Subspace> planes;
    if (!r.sampled()) planes = enumerate_subspaces(f, s.n(), 3);
    else
        for (std::size_t i = 0; i < samples; ++i) {
            auto pl = random_subspace(c, r.rng(), 3);
            if (pl.dim() == 3) planes.push_back(pl);
        }
    std::vector<Subspace> tang;
    for (const auto& pl : planes) {
        r.check("B.triangle_plane_iff_tangential", mats({pl}));
        if (s.rdim(pl) != 1) continue;
        tang.push_back(pl);
        for (const auto& l : subspaces_of(f, pl, 2)) r.check("B.plane_lines", mats({pl, l}));
    }

    // triangles
    auto triangle_checks = [&](std::uint32_t a, std::uint32_t b, std::uint32_t d) {
        r.check("B.triangle_span", mats({pts[a], pts[b], pts[d]}));
        r.check("B.closure_is_everything", mats({pts[a], pts[b], pts[d]}));
        r.check("B.b_witnesses", mats({pts[a], pts[b], pts[d]}));
    };
    if (!r.sampled()) {
        for (std::uint32_t a = 0; a < n; ++a)
            for (auto b : g.neighbors(a)) {
                if (b <= a) continue;
                for (auto d : g.neighbors(b))
                    if (d > b && g.has_edge(a, d) && !same_line(pls, a, b, d)) triangle_checks(a, b, d);
            }
    } else {
        for (std::size_t i = 0; i < samples; ++i) {
            auto a = pick(r.rng(), n);
            auto b = pick_from(r.rng(), g.neighbors(a));
            const std::uint32_t seeds[] = {a, b};
            auto cn = common_neighbors(g, seeds);
            std::vector<std::uint32_t> off;
            for (auto d : cn)
                if (!same_line(pls, a, b, d)) off.push_back(d);
            if (!off.empty()) triangle_checks(a, b, pick_from(r.rng(), off));
        }
    }

    // plane pairs
    auto plane_pair = [&](const Subspace& p1, const Subspace& p2) {
        Subspace l = intersect(f, p1, p2);
        if (l.dim() != 2) return;
        if (s.rdim(l) == 0) {
            r.check("B.wedge_witness", mats({p1, p2}));
        } else {
            const Subspace r1 = s.radical(p1), r2 = s.radical(p2);
            auto on = points_of(f, l);
            for (std::size_t i = 0; i < on.size(); ++i)
                for (std::size_t j = i + 1; j < on.size(); ++j)
                    if (on[i] != r1 && on[i] != r2 && on[j] != r1 && on[j] != r2)
                        r.check("B.diamond_witness", mats({p1, p2, on[i], on[j]}));
        }
        r.check("B.related_planes", mats({p1, p2}));
    };
    if (!r.sampled()) {
        for (std::size_t i = 0; i < tang.size(); ++i)
            for (std::size_t j = i + 1; j < tang.size(); ++j) plane_pair(tang[i], tang[j]);
    } else {
        for (const auto& p1 : tang) {
            auto lines = subspaces_of(f, p1, 2);
            const auto& l = pick_from(r.rng(), lines);
            auto q = pick_from(r.rng(), pts.all());
            if (contains(f, l, q)) continue;
            Subspace p2 = sum(f, l, q);
            if (p2 != p1 && s.rdim(p2) == 1) plane_pair(p1, p2);
        }
    }

    // c1, c2 configurations
    auto config = [&](std::uint32_t a1, std::uint32_t a2, std::uint32_t b1, std::uint32_t b2) {
        r.check("B.c_witnesses", mats({pts[a1], pts[a2], pts[b1], pts[b2]}));
    };
    if (!r.sampled()) {
        for (std::uint32_t a1 = 0; a1 < n; ++a1)
            for (auto a2 : g.neighbors(a1)) {
                if (a2 <= a1) continue;
                const std::uint32_t seeds[] = {a1, a2};
                auto cn = common_neighbors(g, seeds);
                for (std::size_t i = 0; i < cn.size(); ++i)
                    for (std::size_t j = i + 1; j < cn.size(); ++j)
                        if (!g.has_edge(cn[i], cn[j])) config(a1, a2, cn[i], cn[j]);
            }
    } else {
        for (std::size_t i = 0; i < samples; ++i) {
            auto a1 = pick(r.rng(), n);
            auto a2 = pick_from(r.rng(), g.neighbors(a1));
            const std::uint32_t seeds[] = {a1, a2};
            auto cn = common_neighbors(g, seeds);
            auto b1 = pick_from(r.rng(), cn), b2 = pick_from(r.rng(), cn);
            if (b1 != b2 && !g.has_edge(b1, b2)) config(a1, a2, b1, b2);
        }
    }
}

void suite_c(Runner& r) {
    auto& c = r.ctx();
    const auto& s = c.space();
    const Field& f = s.field();
    const std::size_t samples = r.spec().samples;
    for (auto k : levels_for(r)) {
        const auto& pts = c.points(k);
        const std::size_t n = pts.size();
        auto lower_centres = enumerate_tr(s, k - 1);
        auto upper_carriers = enumerate_tr(s, k + 1);

        // pencils
        if (!r.sampled()) {
            for (const auto& b : upper_carriers)
                for (const auto& h : subspaces_of(f, b, k - 1))
                    if (s.in_tr(h)) r.check("C.pencil_cardinality", mats({h, b}));
        } else {
            for (std::size_t i = 0; i < samples; ++i) {
                const auto& b = pick_from(r.rng(), upper_carriers);
                auto hs = subspaces_of(f, b, k - 1);
                const auto& h = pick_from(r.rng(), hs);
                if (s.in_tr(h)) r.check("C.pencil_cardinality", mats({h, b}));
            }
        }

        // parametrizations
        if (!r.sampled()) {
            for (const auto& h : lower_centres) r.check("C.star_parametrization", mats({h}));
            for (const auto& b : upper_carriers) r.check("C.top_parametrization", mats({b}));
        } else {
            for (std::size_t i = 0; i < samples; ++i) {
                r.check("C.star_parametrization", mats({pick_from(r.rng(), lower_centres)}));
                r.check("C.top_parametrization", mats({pick_from(r.rng(), upper_carriers)}));
            }
        }

        // types along projective pencils
        if (!r.sampled()) {
            for (const auto& b : enumerate_subspaces(f, s.n(), k + 1))
                for (const auto& h : subspaces_of(f, b, k - 1)) r.check("C.pencil_types", mats({h, b}));
        } else {
            for (std::size_t i = 0; i < samples; ++i) {
                auto b = random_subspace(c, r.rng(), k + 1);
                if (b.dim() != k + 1) continue;
                auto hs = subspaces_of(f, b, k - 1);
                r.check("C.pencil_types", mats({pick_from(r.rng(), hs), b}));
            }
        }

        // pairs
        const bool dual_level = true;
        auto pair_checks = [&](std::uint32_t i, std::uint32_t j) {
            r.check("C.adjacency_agreement", mats({pts[i], pts[j]}));
            if (k % 2 == 0) r.check("C.even_coincidence", mats({pts[i], pts[j]}));
            if (dual_level) r.check("C.kappa_conjugates", mats({pts[i], pts[j]}));
        };
        if (!r.sampled()) {
            r.require_exhaustive(n, pair_bound, "pairwise adjacency");
            for (std::uint32_t i = 0; i < n; ++i)
                for (std::uint32_t j = i + 1; j < n; ++j) pair_checks(i, j);
        } else {
            const auto& g = c.graphs(k).lower;
            for (std::size_t t = 0; t < samples; ++t) {
                auto i = pick(r.rng(), n);
                // half the pairs adjacent, so both outcomes are exercised
                auto j = (t % 2 && g.degree(i)) ? pick_from(r.rng(), g.neighbors(i)) : pick(r.rng(), n);
                if (i != j) pair_checks(i, j);
            }
        }

        // cliques and structures
        if (k % 2 == 0) r.check("C.maximal_cliques", mats({pts[0]}));
        const bool extreme = k == 1 || k + 1 == s.n();
        if (k % 2 == 0 || extreme || n <= triple_bound) r.check("C.structures", mats({pts[0]}));
        if (k % 2 == 1 && !extreme) r.check("C.odd_edge_sets_distinct", mats({pts[0]}));

        // stars against tops
        if (!r.sampled()) {
            r.require_exhaustive(lower_centres.size() * upper_carriers.size(), pair_bound * 10, "star/top pairs");
            for (const auto& h : lower_centres)
                for (const auto& b : upper_carriers) r.check("C.star_top_intersection", mats({h, b}));
        } else {
            for (std::size_t i = 0; i < samples; ++i) {
                const auto& b = pick_from(r.rng(), upper_carriers);
                // half nested pairs
                Subspace h = pick_from(r.rng(), lower_centres);
                if (i % 2) {
                    std::vector<Subspace> inside;
                    for (auto& x : subspaces_of(f, b, k - 1))
                        if (s.in_tr(x)) inside.push_back(std::move(x));
                    if (!inside.empty()) h = pick_from(r.rng(), inside);
                }
                r.check("C.star_top_intersection", mats({h, b}));
            }
        }

        // delta axiom
        if (k % 2 == 1) {
            const auto& gr = c.grassmann(k);
            if (!r.sampled()) {
                r.require_exhaustive(n, triple_bound, "point-line pairs");
                for (const auto& line : gr.lines)
                    for (std::uint32_t i = 0; i < n; ++i)
                        if (!std::binary_search(line.members.begin(), line.members.end(), i))
                            r.check("C.delta_axiom", mats({pts[i], line.lower, line.upper}));
            } else {
                const auto& g = c.graphs(k).collinear;
                for (std::size_t t = 0; t < samples; ++t) {
                    const auto& line = pick_from(r.rng(), gr.lines);
                    // bias towards points near the line
                    auto i = t % 2 ? pick_from(r.rng(), g.neighbors(pick_from(r.rng(), line.members)))
                                   : pick(r.rng(), n);
                    if (!std::binary_search(line.members.begin(), line.members.end(), i))
                        r.check("C.delta_axiom", mats({pts[i], line.lower, line.upper}));
                }
            }
        }
    }
}

void suite_d(Runner& r) {
    auto& c = r.ctx();
    const auto& s = c.space();
    for (auto k : levels_for(r, true)) {
        const auto& pts = c.points(k);
        const std::size_t n = pts.size();
        const bool inner = k != 1 && k + 1 != s.n();
        if (!r.sampled()) {
            r.require_exhaustive(n, triple_bound, "triples");
            for (std::uint32_t i = 0; i < n; ++i)
                for (std::uint32_t j = i + 1; j < n; ++j)
                    for (std::uint32_t l = j + 1; l < n; ++l) {
                        r.check("D.formula3", mats({pts[i], pts[j], pts[l]}));
                        if (inner) r.check("D.formula7", mats({pts[i], pts[j], pts[l]}));
                    }
            continue;
        }
        auto& lines = c.pls(k);
        const auto& g = c.graphs(k);
        for (std::size_t t = 0; t < r.spec().samples; ++t)
            r.check("D.formula3", triple_inputs(c, k, sample_triple(r, g.collinear, &lines)));
        if (inner)
            for (std::size_t t = 0; t < r.spec().samples; ++t)
                r.check("D.formula7", triple_inputs(c, k, sample_triple(r, g.lower, &lines)));
    }
}

void suite_e(Runner& r) {
    auto& c = r.ctx();
    const auto& s = c.space();
    for (auto k : levels_for(r)) {
        const auto& pts = c.points(k);
        r.check("E.collinear_connected", mats({pts[0]}));
        r.check("E.lower_components_refine", mats({pts[0]}));
        if (k == 1) r.check("E.copolar_diameter", mats({pts[0]}));
        const auto& lower = c.graphs(k).lower;
        auto pair = [&](std::uint32_t a, std::uint32_t b) {
            r.check("E.lower_pair_connected", mats({pts[a], pts[b]}));
            if (k + 2 <= s.n()) r.check("E.lower_pair_carriers", mats({pts[a], pts[b]}));
        };
        if (!r.sampled()) {
            r.require_exhaustive(pts.size(), triple_bound, "lower-adjacent pairs");
            for (auto [a, b] : lower.edges()) pair(a, b);
        } else {
            for (std::size_t t = 0; t < r.spec().samples; ++t) {
                auto a = pick(r.rng(), pts.size());
                if (lower.degree(a)) pair(a, pick_from(r.rng(), lower.neighbors(a)));
            }
        }
    }
}

void suite_f(Runner& r) {
    auto& c = r.ctx();
    const auto& s = c.space();
    const std::size_t k = r.spec().k;
    if (k % 2 == 0 || k == 1 || k + 1 == s.n())
        fail(ErrorCode::invalid_argument, "triangle taxonomy needs an odd level k with 1 < k < n-1");
    const auto& pts = c.points(k);
    const auto& g = c.graphs(k).lower;
    std::map<std::string, std::size_t> classes;
    auto one = [&](std::uint32_t a, std::uint32_t b, std::uint32_t d) {
        ++classes[std::string(triangle_class_name(classify_triangle_ground_truth(s, pts[a], pts[b], pts[d])))];
        r.check("F.triangle_taxonomy", mats({pts[a], pts[b], pts[d]}));
    };
    if (!r.sampled()) {
        r.require_exhaustive(pts.size(), triple_bound, "lower triangles");
        for (std::uint32_t a = 0; a < pts.size(); ++a)
            for (auto b : g.neighbors(a))
                if (b > a)
                    for (auto d : g.neighbors(b))
                        if (d > b && g.has_edge(a, d)) one(a, b, d);
    } else {
        for (std::size_t t = 0; t < r.spec().samples; ++t) {
            auto a = pick(r.rng(), pts.size());
            auto b = pick_from(r.rng(), g.neighbors(a));
            const std::uint32_t seeds[] = {a, b};
            auto cn = common_neighbors(g, seeds);
            if (!cn.empty()) one(a, b, pick_from(r.rng(), cn));
        }
    }
    for (const auto& [name, count] : classes) r.metric("triangles." + name, std::to_string(count));
}

void suite_g(Runner& r) {
    auto& c = r.ctx();
    const auto& s = c.space();
    const std::size_t k = r.spec().k ? r.spec().k : s.m();
    const auto& pts = c.points(k);
    const std::size_t count = r.sampled() ? r.spec().samples : 100;
    for (std::size_t i = 0; i < count; ++i) {
        auto sim = random_similitude(s, r.spec().seed + i, i % 2 == 0);
        r.check("G.similitude_lift", {sim.matrix, mat(pts[0])});
    }
    if (2 * k == s.n()) r.check("G.kappa_lift", mats({pts[0]}));
    if (pts.size() <= 512) r.check("G.automorphism_count", mats({pts[0]}));
}

void suite_h(Runner& r) {
    auto& c = r.ctx();
    const auto& s = c.space();
    const std::size_t k = r.spec().k;
    if (k == 0) fail(ErrorCode::invalid_argument, "suite H needs a level k");
    const auto& pts = c.points(k);
    if (2 * k == s.n()) r.check("H.middle_refusal", mats({pts[0]}));
    else r.check("H.pipeline", mats({pts[0]}));
    if (k == 1 || k + 1 == s.n()) r.check("H.extreme_adjacency", mats({pts[0]}));
    if (k % 2 == 1 && k != 1 && k + 1 != s.n()) {
        r.require_exhaustive(pts.size(), triple_bound, "single-adjacency reconstruction");
        const std::size_t count = r.spec().samples;
        for (std::size_t i = 0; i < count; ++i) {
            auto t = sample_structure_triangle(r, k, i % 2 == 0);
            r.check("H.lower_only_structure", triple_inputs(c, k, t));
        }
        for (std::size_t i = 0; i < count; ++i) {
            auto t = sample_structure_triangle(r, k, i % 2 == 0);
            r.check("H.upper_only_structure", triple_inputs(c, k, t));
        }
    }
}

} // namespace symplectica::detail
