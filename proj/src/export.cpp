#include "symplectica/export.hpp"

#include <sstream>

#include "json.hpp"

namespace symplectica {

using ojson = nlohmann::ordered_json;

namespace {

constexpr std::uint64_t census_bound = 5'000'000;

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

} // namespace

std::string_view format_name(Format f) {
    switch (f) {
    case Format::json: return "json";
    case Format::dot: return "dot";
    case Format::csv: return "csv";
    }
    return "?";
}

std::optional<Format> parse_format(std::string_view s) {
    if (s == "json") return Format::json;
    if (s == "dot") return Format::dot;
    if (s == "csv") return Format::csv;
    return std::nullopt;
}

std::string census_json(const SymplecticSpace& s) {
    const Field& f = s.field();
    const std::size_t n = s.n();
    ojson j;
    j["p"] = s.p();
    j["m"] = s.m();
    j["n"] = n;
    j["gram"] = s.gram().to_nested();
    ojson levels = ojson::array();
    for (std::size_t k = 0; k <= n; ++k) {
        const auto total = gaussian_binomial(s.p(), unsigned(n), unsigned(k));
        if (total > census_bound)
            fail(ErrorCode::size_bound, "census of level " + std::to_string(k) + " would enumerate " +
                                            std::to_string(total) + " subspaces");
        std::size_t iso = 0, reg = 0, tan = 0;
        for (const auto& u : enumerate_subspaces(f, n, k)) {
            const auto r = s.rdim(u);
            iso += r == k;
            reg += r == 0;
            tan += r == 1;
        }
        ojson row;
        row["k"] = k;
        row["total"] = total;
        row["isotropic"] = iso;
        row["regular"] = reg;
        row["tangential"] = tan;
        row["regular_or_tangential"] = reg + tan;
        levels.push_back(std::move(row));
    }
    j["levels"] = std::move(levels);
    return dump(j);
}

std::string export_graph(const SymplecticSpace& s, const PointIndex& points, std::size_t k, AdjacencyKind kind,
                         const Graph& g, Format f) {
    const auto edges = g.edges();
    std::ostringstream out;
    switch (f) {
    case Format::json: {
        ojson j;
        j["p"] = s.p();
        j["n"] = s.n();
        j["k"] = k;
        j["kind"] = kind_name(kind);
        ojson vs = ojson::array();
        for (std::size_t i = 0; i < points.size(); ++i) vs.push_back({{"id", i}, {"basis", points[i].basis().to_nested()}});
        j["vertices"] = std::move(vs);
        ojson es = ojson::array();
        for (auto [a, b] : edges) es.push_back({a, b});
        j["edges"] = std::move(es);
        return dump(j);
    }
    case Format::dot:
        out << "graph " << kind_name(kind) << "_p" << s.p() << "_n" << s.n() << "_k" << k << " {\n";
        for (std::size_t i = 0; i < points.size(); ++i) out << "  " << i << " [label=\"" << points[i].to_string() << "\"];\n";
        for (auto [a, b] : edges) out << "  " << a << " -- " << b << ";\n";
        out << "}\n";
        return out.str();
    case Format::csv:
        out << "source,target\n";
        for (auto [a, b] : edges) out << a << ',' << b << '\n';
        return out.str();
    }
    fail(ErrorCode::invalid_argument, "unknown format");
}

std::string export_grassmann(const GrassmannSpace& g, Format f) {
    std::ostringstream out;
    switch (f) {
    case Format::json: {
        ojson j;
        j["p"] = g.space.p();
        j["n"] = g.space.n();
        j["k"] = g.k;
        ojson ps = ojson::array();
        for (std::size_t i = 0; i < g.points.size(); ++i)
            ps.push_back({{"id", i}, {"basis", g.points[i].basis().to_nested()}});
        j["points"] = std::move(ps);
        ojson ls = ojson::array();
        for (const auto& l : g.lines)
            ls.push_back({{"lower", l.lower.basis().to_nested()},
                          {"upper", l.upper.basis().to_nested()},
                          {"points", l.members}});
        j["lines"] = std::move(ls);
        return dump(j);
    }
    case Format::dot:
        out << "graph pencils_p" << g.space.p() << "_n" << g.space.n() << "_k" << g.k << " {\n";
        for (std::size_t i = 0; i < g.points.size(); ++i) out << "  p" << i << " [shape=circle];\n";
        for (std::size_t l = 0; l < g.lines.size(); ++l) {
            out << "  l" << l << " [shape=box];\n";
            for (auto x : g.lines[l].members) out << "  l" << l << " -- p" << x << ";\n";
        }
        out << "}\n";
        return out.str();
    case Format::csv:
        out << "line,point\n";
        for (std::size_t l = 0; l < g.lines.size(); ++l)
            for (auto x : g.lines[l].members) out << l << ',' << x << '\n';
        return out.str();
    }
    fail(ErrorCode::invalid_argument, "unknown format");
}

std::string pipeline_json(const PipelineReport& r) {
    ojson j;
    j["p"] = r.p;
    j["m"] = r.m;
    j["k"] = r.k;
    j["level_sizes"] = r.level_sizes;
    j["points"] = r.point_count;
    j["lines"] = r.line_count;
    j["isotropic_lines"] = r.isotropic_line_count;
    j["match"] = r.match;
    j["mismatches"] = r.mismatches;
    ojson pts = ojson::array();
    for (const auto& u : r.point_labels) pts.push_back(u.basis().to_nested());
    j["recovered_points"] = std::move(pts);
    ojson lines = ojson::array();
    for (std::size_t i = 0; i < r.geometry.lines.size(); ++i)
        lines.push_back({{"points", r.geometry.lines[i]}, {"isotropic", bool(r.geometry.isotropic[i])}});
    j["recovered_lines"] = std::move(lines);
    return dump(j);
}

} // namespace symplectica
