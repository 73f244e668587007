#pragma once

// Named property suites over finite instances. Every check is registered by
// name and takes its inputs as basis matrices, so a failure record can be
// replayed on its own.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "symplectica/incidence.hpp"
#include "symplectica/triangles.hpp"

namespace symplectica {

enum class Mode { exhaustive, sampled };
std::string_view mode_name(Mode m);
std::optional<Mode> parse_mode(std::string_view s);

struct SuiteSpec {
    char suite = 'A';            // 'A'..'H'
    unsigned p = 3;
    std::size_t m = 2;
    std::size_t k = 0;           // 0: every level the suite applies to
    Mode mode = Mode::exhaustive;
    std::uint64_t seed = 1;
    std::size_t samples = 1000;
};

struct Failure {
    std::string check;
    std::vector<Matrix> inputs;
};

struct VerificationReport {
    std::string suite;
    unsigned p = 0;
    std::size_t m = 0;
    std::size_t k = 0;
    Mode mode = Mode::exhaustive;
    std::optional<std::uint64_t> seed;
    std::size_t checks_run = 0;
    std::map<std::string, std::size_t> checks_by_name;
    std::vector<Failure> failures;
    std::map<std::string, std::string> metrics;   // suite-specific figures
    double elapsed_ms = 0;
    bool pass = false;
};

/// Size bounds for exhaustive mode.
inline constexpr std::size_t triple_bound = 200;
inline constexpr std::size_t pair_bound = 20000;

/// Lazily built data of one instance, shared by the checks of a run.
class Context {
public:
    Context(unsigned p, std::size_t m);
    ~Context();
    Context(const Context&) = delete;
    Context& operator=(const Context&) = delete;

    const SymplecticSpace& space() const noexcept { return space_; }
    const PointIndex& points(std::size_t k);
    const LevelGraphs& graphs(std::size_t k);
    const StructureFamily& stars(std::size_t k);
    const StructureFamily& tops(std::size_t k);
    const GrassmannSpace& grassmann(std::size_t k);
    /// Lines of the level as an explicit partial linear space.
    PartialLinearSpace& pls(std::size_t k);
    /// Adjacency-only triangle classifiers over the lower / upper graph.
    TriangleOracle& oracle(std::size_t k, AdjacencyKind kind);
    /// Lines defined from the lower (or upper) adjacency alone, computed lazily.
    DerivedIncidence& derived_incidence(std::size_t k, AdjacencyKind kind);
    /// Index of the level-k point u; Error(invalid_argument) if absent.
    std::uint32_t index(const Subspace& u) { return points(u.dim()).at(u); }

    /// Figures a check wants to surface in the report.
    std::map<std::string, std::string> notes;
    /// Closures already computed, keyed by their starting span.
    std::map<PointSet, PointSet> closure_cache;

private:
    struct Level;
    Level& level(std::size_t k);

    SymplecticSpace space_;
    std::map<std::size_t, std::unique_ptr<Level>> levels_;
};

using CheckFn = std::function<bool(Context&, const std::vector<Matrix>&)>;

/// All registered check names, sorted.
std::vector<std::string> check_names();
/// Error(invalid_argument) for an unknown name.
const CheckFn& check_function(const std::string& name);

/// Negate the outcome of the named check (empty disables). Used to prove that
/// failures are detected and replayable.
void set_fault_injection(std::string check_name);
const std::string& fault_injection();

/// Runs a suite. Error(size_bound) when exhaustive mode exceeds the bounds,
/// Error(invalid_argument) for a malformed spec.
VerificationReport run_suite(const SuiteSpec& spec);

/// Re-evaluates one failure record on the instance (p, m); true when the check
/// now holds.
bool replay(const Failure& record, unsigned p, std::size_t m);

std::string report_to_json(const VerificationReport& r, bool with_elapsed = true);
VerificationReport report_from_json(const std::string& text);
std::string failure_to_json(const Failure& f);
Failure failure_from_json(const std::string& text);

} // namespace symplectica
