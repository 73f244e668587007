#pragma once

#include <map>
#include <string>
#include <vector>

#include "symplectica/verify.hpp"
#include "symplectica/prng.hpp"

namespace symplectica::detail {

void register_checks(std::map<std::string, CheckFn>& registry);

/// Evaluates registered checks and collects the outcome into a report.
class Runner {
public:
    Runner(Context& ctx, VerificationReport& rep, const SuiteSpec& spec) : ctx_(ctx), rep_(rep), spec_(spec) {}

    Context& ctx() noexcept { return ctx_; }
    const SuiteSpec& spec() const noexcept { return spec_; }
    bool sampled() const noexcept { return spec_.mode == Mode::sampled; }
    SplitMix64& rng() noexcept { return rng_; }

    /// Runs one check; returns whether it held.
    bool check(const std::string& name, std::vector<Matrix> inputs);
    void metric(const std::string& key, std::string value) { rep_.metrics[key] = std::move(value); }

    /// Error(size_bound) unless exhaustive mode may enumerate `count` items.
    void require_exhaustive(std::size_t count, std::size_t bound, const std::string& what) const;

private:
    Context& ctx_;
    VerificationReport& rep_;
    const SuiteSpec& spec_;
    SplitMix64 rng_{spec_.seed};
};

void suite_a(Runner& r);
void suite_b(Runner& r);
void suite_c(Runner& r);
void suite_d(Runner& r);
void suite_e(Runner& r);
void suite_f(Runner& r);
void suite_g(Runner& r);
void suite_h(Runner& r);

} // namespace symplectica::detail
