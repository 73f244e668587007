#include "symplectica/grassmann.hpp"

#include <algorithm>

#include "symplectica/parallel.hpp"

namespace symplectica {

std::string_view kind_name(AdjacencyKind kind) {
    switch (kind) {
    case AdjacencyKind::collinear: return "collinear";
    case AdjacencyKind::lower: return "lower";
    case AdjacencyKind::upper: return "upper";
    }
    return "?";
}

std::optional<AdjacencyKind> parse_kind(std::string_view name) {
    if (name == "collinear") return AdjacencyKind::collinear;
    if (name == "lower") return AdjacencyKind::lower;
    if (name == "upper") return AdjacencyKind::upper;
    return std::nullopt;
}

PointIndex::PointIndex(std::vector<Subspace> points) : points_(std::move(points)) {
    index_.reserve(points_.size() * 2);
    for (std::size_t i = 0; i < points_.size(); ++i)
        if (!index_.emplace(points_[i], static_cast<std::uint32_t>(i)).second)
            fail(ErrorCode::invalid_argument, "duplicate point in index");
}

std::optional<std::uint32_t> PointIndex::find(const Subspace& u) const {
    auto it = index_.find(u);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::uint32_t PointIndex::at(const Subspace& u) const {
    auto i = find(u);
    if (!i) fail(ErrorCode::invalid_argument, "subspace is not a point of this level: " + u.to_string());
    return *i;
}

std::vector<Subspace> enumerate_tr(const SymplecticSpace& s, std::size_t k) {
    if (k > s.n()) fail(ErrorCode::invalid_argument, "level exceeds ambient dimension");
    auto all = enumerate_subspaces(s.field(), s.n(), k);
    std::vector<Subspace> out;
    out.reserve(all.size());
    for (auto& u : all)
        if (s.in_tr(u)) out.push_back(std::move(u));
    return out;
}

namespace {

void sort_unique(std::vector<Subspace>& v) {
    std::sort(v.begin(), v.end(), [](const Subspace& a, const Subspace& b) { return a.bytes() < b.bytes(); });
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Rows of b that extend h to a basis of b, in order.
std::vector<Vec> complement_rows(const Field& f, const Subspace& h, const Subspace& b) {
    std::vector<Vec> out;
    Matrix acc = h.basis();
    for (std::size_t i = 0; i < b.dim() && h.dim() + out.size() < b.dim(); ++i) {
        Matrix trial = acc;
        trial.append_row(b.row(i));
        if (rank(f, trial) == trial.rows()) {
            acc = std::move(trial);
            out.emplace_back(b.row(i).begin(), b.row(i).end());
        }
    }
    return out;
}

void require_level(const SymplecticSpace& s, const Subspace& u, std::size_t dim, const char* what) {
    if (u.ambient_dim() != s.n() || u.dim() != dim)
        fail(ErrorCode::invalid_argument, std::string(what) + " has the wrong dimension");
    if (!s.in_tr(u)) fail(ErrorCode::precondition, std::string(what) + " is not in (T-R)");
}

} // namespace

std::vector<Subspace> hyperplanes_of(const Field& f, const Subspace& b) {
    const std::size_t d = b.dim();
    std::vector<Subspace> out;
    if (d == 0) return out;
    const Matrix basis = b.basis();
    for_each_projective_vector(f, d, [&](const Vec& a) {
        Subspace coeff = kernel(f, Matrix(1, d, a));
        out.push_back(Subspace::span(f, multiply(f, coeff.basis(), basis)));
    });
    sort_unique(out);
    return out;
}

std::vector<Subspace> projective_pencil(const Field& f, const Subspace& h, const Subspace& b) {
    if (h.dim() + 2 != b.dim() || !contains(f, b, h))
        fail(ErrorCode::precondition, "pencil needs H inside B with codimension 2");
    auto c = complement_rows(f, h, b);
    std::vector<Subspace> out;
    const std::size_t n = b.ambient_dim();
    auto add = [&](const Vec& q) {
        out.push_back(sum(f, h, Subspace::span_vectors(f, n, {q})));
    };
    add(c[1]);
    Vec q(n);
    for (unsigned t = 0; t < f.p(); ++t) {
        for (std::size_t j = 0; j < n; ++j) q[j] = f.add(c[0][j], f.mul(Elem(t), c[1][j]));
        add(q);
    }
    sort_unique(out);
    return out;
}

std::vector<Subspace> star(const SymplecticSpace& s, const Subspace& h, std::size_t k) {
    if (k < 1 || k > s.n()) fail(ErrorCode::invalid_argument, "star level out of range");
    require_level(s, h, k - 1, "star centre");
    const Field& f = s.field();
    std::vector<Subspace> out;
    if (k % 2 == 1) {
        // H regular: S(H) = {H + q : q a point of H^perp}
        for (const auto& q : points_of(f, s.perp(h))) out.push_back(sum(f, h, q));
    } else {
        // H tangential with radical r: S(H) = {H + <u> : u not orthogonal to r}
        Subspace r = s.radical(h);
        auto c = complement_rows(f, h, Subspace::full(s.n()));
        Subspace comp = Subspace::span_vectors(f, s.n(), c);
        for (const auto& q : points_of(f, comp))
            if (s.form(r.row(0), q.row(0)) != 0) out.push_back(sum(f, h, q));
    }
    sort_unique(out);
    return out;
}

std::vector<Subspace> top(const SymplecticSpace& s, const Subspace& b, std::size_t k) {
    if (k + 1 > s.n()) fail(ErrorCode::invalid_argument, "top level out of range");
    require_level(s, b, k + 1, "top carrier");
    const Field& f = s.field();
    std::vector<Subspace> out;
    if (k % 2 == 1) {
        // B regular: T(B) = {B n q^perp : q a point of B}
        for (const auto& q : points_of(f, b)) out.push_back(intersect(f, b, s.perp(q)));
    } else {
        // B tangential with radical q: complements of q in B
        Subspace q = s.radical(b);
        for (auto& u : hyperplanes_of(f, b))
            if (!contains(f, u, q)) out.push_back(std::move(u));
    }
    sort_unique(out);
    return out;
}

std::vector<Subspace> pencil(const SymplecticSpace& s, const Subspace& h, const Subspace& b, std::size_t k) {
    if (k < 1 || k + 1 > s.n()) fail(ErrorCode::invalid_argument, "pencil level out of range");
    require_level(s, h, k - 1, "pencil vertex");
    require_level(s, b, k + 1, "pencil carrier");
    const Field& f = s.field();
    if (!contains(f, b, h)) fail(ErrorCode::precondition, "pencil vertex is not inside its carrier");
    auto all = projective_pencil(f, h, b);
    if (k % 2 == 1) return all;
    Subspace q = s.radical(b);
    if (contains(f, h, q)) return {};
    Subspace excluded = sum(f, h, q);
    all.erase(std::remove(all.begin(), all.end(), excluded), all.end());
    return all;
}

GrassmannSpace build_grassmann(const SymplecticSpace& s, std::size_t k) {
    if (k < 1 || k + 1 > s.n()) fail(ErrorCode::invalid_argument, "level k must satisfy 1 <= k <= n-1");
    const Field& f = s.field();
    PointIndex points(enumerate_tr(s, k));
    auto carriers = enumerate_tr(s, k + 1);

    std::vector<std::vector<Pencil>> per_carrier(carriers.size());
    parallel_for(carriers.size(), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            const Subspace& b = carriers[i];
            for (const auto& h : subspaces_of(f, b, k - 1)) {
                if (!s.in_tr(h)) continue;
                auto members = pencil(s, h, b, k);
                if (members.empty()) continue;
                Pencil line{h, b, {}};
                for (const auto& u : members) line.members.push_back(points.at(u));
                std::sort(line.members.begin(), line.members.end());
                per_carrier[i].push_back(std::move(line));
            }
        }
    });

    std::vector<Pencil> lines;
    for (auto& block : per_carrier)
        for (auto& line : block) lines.push_back(std::move(line));
    std::sort(lines.begin(), lines.end(), [](const Pencil& a, const Pencil& b) { return a.members < b.members; });
    lines.erase(std::unique(lines.begin(), lines.end(),
                            [](const Pencil& a, const Pencil& b) { return a.members == b.members; }),
                lines.end());
    return GrassmannSpace{s, k, std::move(points), std::move(lines)};
}

bool adjacent(const SymplecticSpace& s, const Subspace& u, const Subspace& w, AdjacencyKind kind) {
    if (u.dim() != w.dim() || u.ambient_dim() != w.ambient_dim())
        fail(ErrorCode::invalid_argument, "adjacency needs two subspaces of one level");
    const Field& f = s.field();
    const std::size_t k = u.dim();
    auto lower = [&] {
        Subspace meet = intersect(f, u, w);
        return meet.dim() + 1 == k && s.in_tr(meet);
    };
    auto upper = [&] {
        if (u == w) return false;
        Subspace join = sum(f, u, w);
        return join.dim() == k + 1 && s.in_tr(join);
    };
    switch (kind) {
    case AdjacencyKind::lower: return lower();
    case AdjacencyKind::upper: return upper();
    case AdjacencyKind::collinear: return lower() && upper();
    }
    return false;
}

namespace {

StructureFamily build_family(const SymplecticSpace& s, const PointIndex& points, std::size_t k, bool stars) {
    StructureFamily fam;
    fam.labels = enumerate_tr(s, stars ? k - 1 : k + 1);
    fam.members.resize(fam.labels.size());
    parallel_for(fam.labels.size(), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            auto subs = stars ? star(s, fam.labels[i], k) : top(s, fam.labels[i], k);
            auto& m = fam.members[i];
            m.reserve(subs.size());
            for (const auto& u : subs) m.push_back(points.at(u));
            std::sort(m.begin(), m.end());
        }
    });
    return fam;
}

} // namespace

StructureFamily star_family(const SymplecticSpace& s, const PointIndex& points, std::size_t k) {
    if (k < 1) fail(ErrorCode::invalid_argument, "stars need k >= 1");
    return build_family(s, points, k, true);
}

StructureFamily top_family(const SymplecticSpace& s, const PointIndex& points, std::size_t k) {
    if (k + 1 > s.n()) fail(ErrorCode::invalid_argument, "tops need k <= n-1");
    return build_family(s, points, k, false);
}

std::vector<std::vector<std::uint32_t>> incidence_of_points(const StructureFamily& family, std::size_t point_count) {
    std::vector<std::vector<std::uint32_t>> out(point_count);
    for (std::size_t i = 0; i < family.members.size(); ++i)
        for (auto v : family.members[i]) out[v].push_back(static_cast<std::uint32_t>(i));
    return out;
}

} // namespace symplectica
