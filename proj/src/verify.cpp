#include "symplectica/verify.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>

#include "symplectica/formulas.hpp"
#include "verify_internal.hpp"

namespace symplectica {

std::string_view mode_name(Mode m) { return m == Mode::exhaustive ? "exhaustive" : "sampled"; }

std::optional<Mode> parse_mode(std::string_view s) {
    if (s == "exhaustive") return Mode::exhaustive;
    if (s == "sampled" || s == "sample") return Mode::sampled;
    return std::nullopt;
}

struct Context::Level {
    std::optional<PointIndex> points;
    std::optional<LevelGraphs> graphs;
    std::optional<StructureFamily> stars, tops;
    std::optional<GrassmannSpace> grassmann;
    std::unique_ptr<PartialLinearSpace> pls;
    std::unique_ptr<TriangleOracle> lower_oracle, upper_oracle;
    std::unique_ptr<DerivedIncidence> lower_lines, upper_lines;
};

Context::Context(unsigned p, std::size_t m) : space_(SymplecticSpace::make(p, m)) {}

Context::~Context() = default;

Context::Level& Context::level(std::size_t k) {
    if (k < 1 || k + 1 > space_.n()) fail(ErrorCode::invalid_argument, "level k must satisfy 1 <= k <= n-1");
    auto& slot = levels_[k];
    if (!slot) slot = std::make_unique<Level>();
    return *slot;
}

const PointIndex& Context::points(std::size_t k) {
    auto& l = level(k);
    if (!l.points) l.points.emplace(enumerate_tr(space_, k));
    return *l.points;
}

const LevelGraphs& Context::graphs(std::size_t k) {
    auto& l = level(k);
    if (!l.graphs) {
        const auto& pts = points(k);
        l.graphs = LevelGraphs{};
        l.graphs->lower = union_of_cliques(pts.size(), stars(k).members);
        l.graphs->upper = union_of_cliques(pts.size(), tops(k).members);
        l.graphs->collinear = intersection(l.graphs->lower, l.graphs->upper);
    }
    return *l.graphs;
}

const StructureFamily& Context::stars(std::size_t k) {
    auto& l = level(k);
    if (!l.stars) l.stars = star_family(space_, points(k), k);
    return *l.stars;
}

const StructureFamily& Context::tops(std::size_t k) {
    auto& l = level(k);
    if (!l.tops) l.tops = top_family(space_, points(k), k);
    return *l.tops;
}

const GrassmannSpace& Context::grassmann(std::size_t k) {
    auto& l = level(k);
    if (!l.grassmann) l.grassmann = build_grassmann(space_, k);
    return *l.grassmann;
}

PartialLinearSpace& Context::pls(std::size_t k) {
    auto& l = level(k);
    if (!l.pls) {
        std::vector<PointSet> lines;
        for (const auto& pen : grassmann(k).lines) lines.push_back(pen.members);
        l.pls = std::make_unique<PartialLinearSpace>(points(k).size(), std::move(lines));
    }
    return *l.pls;
}

TriangleOracle& Context::oracle(std::size_t k, AdjacencyKind kind) {
    if (kind == AdjacencyKind::collinear) fail(ErrorCode::invalid_argument, "oracle needs the lower or upper graph");
    auto& l = level(k);
    const auto& g = graphs(k);
    auto& slot = kind == AdjacencyKind::lower ? l.lower_oracle : l.upper_oracle;
    if (!slot) slot = std::make_unique<TriangleOracle>(kind == AdjacencyKind::lower ? g.lower : g.upper);
    return *slot;
}

DerivedIncidence& Context::derived_incidence(std::size_t k, AdjacencyKind kind) {
    auto& l = level(k);
    auto& slot = kind == AdjacencyKind::lower ? l.lower_lines : l.upper_lines;
    if (!slot) {
        TriangleOracle& o = oracle(k, kind);
        slot = std::make_unique<DerivedIncidence>(
            o.graph(),
            [&o](std::uint32_t a, std::uint32_t b) { return line_from_lower(o, a, b); },
            false);
    }
    return *slot;
}

namespace {

std::string& injected() {
    static std::string name;
    return name;
}

const std::map<std::string, CheckFn>& registry() {
    static const std::map<std::string, CheckFn> r = [] {
        std::map<std::string, CheckFn> m;
        detail::register_checks(m);
        return m;
    }();
    return r;
}

bool evaluate(const std::string& name, Context& ctx, const std::vector<Matrix>& inputs) {
    bool ok;
    try {
        ok = check_function(name)(ctx, inputs);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::size_bound || e.code() == ErrorCode::invalid_argument) throw;
        ok = false;
    }
    return name == injected() ? !ok : ok;
}

} // namespace

std::vector<std::string> check_names() {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
}

const CheckFn& check_function(const std::string& name) {
    auto it = registry().find(name);
    if (it == registry().end()) fail(ErrorCode::invalid_argument, "unknown check: " + name);
    return it->second;
}

void set_fault_injection(std::string check_name) { injected() = std::move(check_name); }
const std::string& fault_injection() { return injected(); }

namespace detail {

bool Runner::check(const std::string& name, std::vector<Matrix> inputs) {
    ++rep_.checks_run;
    ++rep_.checks_by_name[name];
    bool ok = evaluate(name, ctx_, inputs);
    if (!ok) rep_.failures.push_back(Failure{name, std::move(inputs)});
    return ok;
}

void Runner::require_exhaustive(std::size_t count, std::size_t bound, const std::string& what) const {
    if (spec_.mode == Mode::exhaustive && count > bound)
        fail(ErrorCode::size_bound, "exhaustive " + what + " over " + std::to_string(count) +
                                        " items exceeds the bound of " + std::to_string(bound) +
                                        "; use sampled mode");
}

} // namespace detail

VerificationReport run_suite(const SuiteSpec& spec) {
    if (spec.suite < 'A' || spec.suite > 'H') fail(ErrorCode::invalid_argument, "suite must be one of A..H");
    if (spec.mode == Mode::sampled && spec.samples == 0) fail(ErrorCode::invalid_argument, "samples must be positive");
    const auto start = std::chrono::steady_clock::now();
    Context ctx(spec.p, spec.m);
    if (spec.k + 1 > ctx.space().n()) fail(ErrorCode::invalid_argument, "level k must satisfy k <= n-1");
    VerificationReport rep;
    rep.suite = std::string(1, spec.suite);
    rep.p = spec.p;
    rep.m = spec.m;
    rep.k = spec.k;
    rep.mode = spec.mode;
    if (spec.mode == Mode::sampled) rep.seed = spec.seed;
    detail::Runner runner(ctx, rep, spec);
    switch (spec.suite) {
    case 'A': detail::suite_a(runner); break;
    case 'B': detail::suite_b(runner); break;
    case 'C': detail::suite_c(runner); break;
    case 'D': detail::suite_d(runner); break;
    case 'E': detail::suite_e(runner); break;
    case 'F': detail::suite_f(runner); break;
    case 'G': detail::suite_g(runner); break;
    case 'H': detail::suite_h(runner); break;
    }
    std::sort(rep.failures.begin(), rep.failures.end(), [](const Failure& a, const Failure& b) {
        if (a.check != b.check) return a.check < b.check;
        std::vector<std::vector<Elem>> x, y;
        for (const auto& m : a.inputs) x.push_back(m.data());
        for (const auto& m : b.inputs) y.push_back(m.data());
        return x < y;
    });
    for (const auto& [key, value] : ctx.notes) rep.metrics.emplace(key, value);
    rep.pass = rep.failures.empty();
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

bool replay(const Failure& record, unsigned p, std::size_t m) {
    check_function(record.check);
    Context ctx(p, m);
    return evaluate(record.check, ctx, record.inputs);
}

} // namespace symplectica
