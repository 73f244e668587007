// Acceptance criteria, one line each:
//   criterion N: PASS|FAIL  <what was measured>  (<seconds> s of <budget> s)
// Usage: acceptance [N ...]   (no arguments runs all of them)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "symplectica/automorphism.hpp"
#include "symplectica/formulas.hpp"
#include "symplectica/reconstruct.hpp"
#include "symplectica/verify.hpp"

using namespace symplectica;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    double budget_s;
    std::function<Outcome()> run;
};

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) out += (out.empty() ? "" : ", ") + p;
    return out;
}

template <class T>
std::string kv(const std::string& key, const T& value) {
    std::ostringstream s;
    s << key << "=" << value;
    return s.str();
}

SuiteSpec suite(char name, unsigned p, std::size_t m, std::size_t k, Mode mode, std::size_t samples = 1000) {
    SuiteSpec s;
    s.suite = name;
    s.p = p;
    s.m = m;
    s.k = k;
    s.mode = mode;
    s.samples = samples;
    s.seed = 20240601;
    return s;
}

std::size_t count_of(const VerificationReport& r, const std::string& check) {
    auto it = r.checks_by_name.find(check);
    return it == r.checks_by_name.end() ? 0 : it->second;
}

std::size_t failures_of(const VerificationReport& r, const std::string& check) {
    std::size_t n = 0;
    for (const auto& f : r.failures) n += f.check == check;
    return n;
}

Outcome census() {
    auto s = SymplecticSpace::make(3, 2);
    const Field& f = s.field();
    std::map<std::size_t, std::size_t> total, isotropic, regular, tangential;
    for (std::size_t k = 1; k <= 3; ++k)
        for (const auto& u : enumerate_subspaces(f, 4, k)) {
            auto c = classify(s, u);
            ++total[k];
            isotropic[k] += c.isotropic;
            regular[k] += c.regular;
            tangential[k] += c.tangential;
        }
    std::vector<std::size_t> tr;
    for (std::size_t k = 1; k <= 3; ++k) tr.push_back(enumerate_tr(s, k).size());
    const bool formulas = total[1] == gaussian_binomial(3, 4, 1) && total[2] == gaussian_binomial(3, 4, 2) &&
                          total[3] == gaussian_binomial(3, 4, 3) && total[1] == (3 + 1) * (9 + 1);
    const bool pass = formulas && total[1] == 40 && total[2] == 130 && isotropic[2] == 40 && regular[2] == 90 &&
                      total[3] == 40 && tangential[3] == 40 && tr == std::vector<std::size_t>{40, 90, 40};
    return {pass, join({kv("points", total[1]), kv("lines", total[2]), kv("isotropic", isotropic[2]),
                        kv("regular", regular[2]), kv("planes", total[3]), kv("tangential_planes", tangential[3]),
                        "levels=" + std::to_string(tr[0]) + "/" + std::to_string(tr[1]) + "/" + std::to_string(tr[2]),
                        kv("gaussian_binomials_agree", formulas)})};
}

Outcome pencil_law() {
    auto s = SymplecticSpace::make(3, 2);
    std::size_t lines = 0, exceptions = 0;
    for (std::size_t k = 1; k <= 3; ++k) {
        const std::size_t want = k % 2 ? 4 : 3;
        for (const auto& l : build_grassmann(s, k).lines) {
            ++lines;
            exceptions += l.members.size() != want;
        }
    }
    // every (centre, carrier) pair through the cardinality check as well
    auto rep = run_suite(suite('C', 3, 2, 0, Mode::exhaustive));
    const auto pencils = count_of(rep, "C.pencil_cardinality");
    const auto bad = failures_of(rep, "C.pencil_cardinality");
    return {exceptions == 0 && bad == 0 && pencils > 0,
            join({kv("lines", lines), kv("wrong_size", exceptions), kv("pencils_checked", pencils),
                  kv("pencil_failures", bad)})};
}

Outcome even_coincidence() {
    auto s = SymplecticSpace::make(3, 2);
    PointIndex pts(enumerate_tr(s, 2));
    auto g = build_level_graphs(s, pts, 2);
    std::size_t pairs = 0, differ = 0;
    for (std::uint32_t i = 0; i < pts.size(); ++i)
        for (std::uint32_t j = i + 1; j < pts.size(); ++j) {
            ++pairs;
            const bool c = g.collinear.has_edge(i, j);
            differ += g.lower.has_edge(i, j) != c || g.upper.has_edge(i, j) != c;
        }
    return {differ == 0 && pairs == 90 * 89 / 2, join({kv("pairs", pairs), kv("disagreements", differ)})};
}

Outcome cliques() {
    auto s = SymplecticSpace::make(3, 2);
    const Field& f = s.field();
    PointIndex pts(enumerate_tr(s, 2));
    auto g = build_adjacency_graph(s, pts, 2, AdjacencyKind::collinear);
    auto found = maximal_cliques(g);
    std::set<std::vector<std::uint32_t>> got(found.begin(), found.end());
    auto stars = star_family(s, pts, 2);
    auto tops = top_family(s, pts, 2);
    std::set<std::vector<std::uint32_t>> want(stars.members.begin(), stars.members.end());
    want.insert(tops.members.begin(), tops.members.end());
    bool sizes = true;
    for (const auto& c : found) sizes = sizes && c.size() == 9;

    std::set<std::vector<std::uint32_t>> lines;
    for (const auto& l : build_grassmann(s, 2).lines) lines.insert(l.members);
    std::size_t meets = 0, not_pencil = 0;
    for (std::size_t i = 0; i < stars.labels.size(); ++i)
        for (std::size_t j = 0; j < tops.labels.size(); ++j) {
            std::vector<std::uint32_t> both;
            std::set_intersection(stars.members[i].begin(), stars.members[i].end(), tops.members[j].begin(),
                                  tops.members[j].end(), std::back_inserter(both));
            if (both.size() < 2) continue;
            ++meets;
            std::vector<std::uint32_t> pen;
            for (const auto& u : pencil(s, stars.labels[i], tops.labels[j], 2)) pen.push_back(pts.at(u));
            std::sort(pen.begin(), pen.end());
            not_pencil += !(pen == both && lines.count(both) && contains(f, tops.labels[j], stars.labels[i]));
        }
    const bool pass = found.size() == 80 && sizes && got == want && not_pencil == 0 && meets > 0;
    return {pass, join({kv("cliques", found.size()), kv("all_size_9", sizes), kv("equal_to_stars_and_tops", got == want),
                        kv("star_top_meets", meets), kv("non_pencil_meets", not_pencil)})};
}

Outcome formula3() {
    auto rep = run_suite(suite('D', 3, 2, 3, Mode::exhaustive));
    const auto checked = count_of(rep, "D.formula3");
    const auto bad = failures_of(rep, "D.formula3");
    return {checked == 9880 && bad == 0, join({kv("triples", checked), kv("disagreements", bad)})};
}

Outcome taxonomy_and_formula7() {
    auto f = run_suite(suite('F', 3, 3, 3, Mode::sampled, 1100));
    auto d = run_suite(suite('D', 3, 3, 3, Mode::sampled, 1000));
    const auto triangles = count_of(f, "F.triangle_taxonomy");
    const auto f7 = count_of(d, "D.formula7");
    const auto bad_t = failures_of(f, "F.triangle_taxonomy");
    const auto bad_7 = failures_of(d, "D.formula7");
    std::vector<std::string> parts{kv("triangles", triangles), kv("classification_disagreements", bad_t),
                                   kv("triples", f7), kv("formula_disagreements", bad_7)};
    for (const auto& [name, value] : f.metrics)
        if (name.rfind("triangles.", 0) == 0) parts.push_back(name.substr(10) + "=" + value);
    return {triangles >= 1000 && f7 >= 1000 && bad_t == 0 && bad_7 == 0, join(parts)};
}

Outcome connectedness() {
    auto s = SymplecticSpace::make(3, 2);
    std::vector<std::string> parts;
    bool pass = true;
    for (std::size_t k = 1; k <= 3; ++k) {
        PointIndex pts(enumerate_tr(s, k));
        std::size_t count = 0;
        components(build_adjacency_graph(s, pts, k, AdjacencyKind::collinear), &count);
        parts.push_back("components_k" + std::to_string(k) + "=" + std::to_string(count));
        pass = pass && count == 1;
    }
    PointIndex pts(enumerate_tr(s, 1));
    const auto d = diameter(build_adjacency_graph(s, pts, 1, AdjacencyKind::collinear));
    parts.push_back(kv("copolar_diameter", d));
    return {pass && d <= 2, join(parts)};
}

Outcome chow() {
    auto s = SymplecticSpace::make(3, 2);
    PointIndex pts(enumerate_tr(s, 2));
    auto g = build_level_graphs(s, pts, 2);
    std::size_t lifted = 0, broken = 0;
    auto check = [&](const std::vector<std::uint32_t>& perm) {
        ++lifted;
        broken += !(is_automorphism(g.collinear, perm) && is_automorphism(g.lower, perm) &&
                    is_automorphism(g.upper, perm));
    };
    for (std::uint64_t seed = 0; seed < 100; ++seed)
        check(lift_similitude(s, pts, random_similitude(s, seed, false).matrix, false));
    check(lift_similitude(s, pts, Matrix::identity(4), true));
    const auto count = automorphism_count(g.collinear);
    const auto expected = 2 * sp_order(2, 3);
    return {broken == 0 && lifted == 101 && count == 103680 && expected == 103680,
            join({kv("lifted", lifted), kv("not_automorphisms", broken), "automorphisms=" + count.str(),
                  "twice_sp_order=" + expected.str()})};
}

Outcome reconstruction() {
    auto r = full_pipeline(SymplecticSpace::make(3, 3), 2);
    std::string sizes;
    for (auto n : r.level_sizes) sizes += (sizes.empty() ? "" : "/") + std::to_string(n);
    const bool pass = r.match && !r.level_sizes.empty() && r.level_sizes.front() == 7371;
    return {pass, join({"level_sizes=" + sizes, kv("points", r.point_count), kv("lines", r.line_count),
                        kv("isotropic_lines", r.isotropic_line_count), kv("mismatches", r.mismatches.size()),
                        kv("match", r.match)})};
}

Outcome single_adjacency() {
    // 50 sampled structures reconstructed from the lower graph, 50 from the upper
    auto rep = run_suite(suite('H', 3, 3, 3, Mode::sampled, 50));
    const auto lower = count_of(rep, "H.lower_only_structure");
    const auto upper = count_of(rep, "H.upper_only_structure");
    const auto bad = failures_of(rep, "H.lower_only_structure") + failures_of(rep, "H.upper_only_structure");
    return {lower >= 50 && upper >= 50 && bad == 0 && rep.pass,
            join({kv("lower_structures", lower), kv("upper_structures", upper), kv("mismatches", bad),
                  kv("other_failures", rep.failures.size() - bad)})};
}

Outcome copolar_facts() {
    auto rep = run_suite(suite('B', 3, 2, 0, Mode::exhaustive));
    std::vector<std::string> parts{kv("checks", rep.checks_run), kv("counterexamples", rep.failures.size())};
    bool witnesses = true;
    for (const char* name : {"B.wedge_witness", "B.diamond_witness", "B.c_witnesses", "B.b_witnesses"}) {
        const auto n = count_of(rep, name);
        witnesses = witnesses && n > 0;
        parts.push_back(std::string(name + 2) + "=" + std::to_string(n));
    }
    return {rep.pass && witnesses, join(parts)};
}

} // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> all{
        {1, 5, census},
        {2, 30, pencil_law},
        {3, 10, even_coincidence},
        {4, 60, cliques},
        {5, 60, formula3},
        {6, 900, taxonomy_and_formula7},
        {7, 10, connectedness},
        {8, 1800, chow},
        {9, 900, reconstruction},
        {10, 900, single_adjacency},
        {11, 600, copolar_facts},
    };
    std::set<int> wanted;
    for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));

    int failed = 0;
    for (const auto& c : all) {
        if (!wanted.empty() && !wanted.count(c.id)) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs <= c.budget_s;
        if (!in_time) o.detail += ", over the time budget";
        const bool pass = o.pass && in_time;
        failed += !pass;
        std::printf("criterion %d: %s  %s  (%.1f s of %.0f s)\n", c.id, pass ? "PASS" : "FAIL", o.detail.c_str(),
                    secs, c.budget_s);
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}
