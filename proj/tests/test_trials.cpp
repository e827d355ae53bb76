#include <cstdint>
#include <set>

#include <doctest.h>

#include "helpers.hpp"
#include "serialize.hpp"
#include "trials.hpp"

using namespace factorlab;
using testutil::raised;

namespace {

InstanceSpec spec_of(uint32_t p, uint32_t n, GeneratorFamily fam, uint64_t seed) {
    InstanceSpec s;
    s.p = p;
    s.n = n;
    s.family = fam;
    s.seed = seed;
    return s;
}

// Everything except wall-clock timings, for determinism comparisons.
bool same_outcomes(const TrialSummary& a, const TrialSummary& b) {
    if (a.trials != b.trials || a.cross_pairs != b.cross_pairs ||
        a.cross_agreements != b.cross_agreements || a.methods.size() != b.methods.size())
        return false;
    for (const auto& [name, am] : a.methods) {
        auto it = b.methods.find(name);
        if (it == b.methods.end()) return false;
        const MethodStats& bm = it->second;
        if (am.attempted != bm.attempted || am.successes != bm.successes ||
            am.failures != bm.failures || am.errors != bm.errors ||
            am.span_dim_sum != bm.span_dim_sum || am.max_span_dim != bm.max_span_dim ||
            am.sampling_attempts_sum != bm.sampling_attempts_sum ||
            am.invertible_draws != bm.invertible_draws)
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("method names round trip") {
    CHECK(method_from_name("span") == AttackMethod::span);
    CHECK(method_from_name("lindecomp") == AttackMethod::lindecomp);
    CHECK(method_from_name("kex") == AttackMethod::kex);
    for (auto m : {AttackMethod::span, AttackMethod::lindecomp, AttackMethod::kex})
        CHECK(method_from_name(method_name(m)) == m);
    CHECK(raised([] { method_from_name("bogus"); }) == Errc::bad_spec);
}

TEST_CASE("100 trials at (p=101, n=3): both attacks recover every message") {
    auto spec = spec_of(101, 3, GeneratorFamily::general_linear, 42);
    TrialSummary s = run_trials(spec, 100, {AttackMethod::span, AttackMethod::lindecomp});
    CHECK(s.trials == 100);
    for (const char* name : {"span", "lindecomp"}) {
        const MethodStats& m = s.methods.at(name);
        CHECK(m.attempted == 100);
        CHECK(m.successes == 100);
        CHECK(m.failures == 0);
        CHECK(m.errors == 0);
        CHECK(m.dim_bound_violations == 0);
    }
    CHECK(s.cross_pairs == 100);
    CHECK(s.cross_agreements == 100);
    CHECK(s.total_failures() == 0);

    // Statistic invariants.
    const MethodStats& spn = s.methods.at("span");
    CHECK(spn.mean_span_dim() <= 3.0);
    CHECK(spn.invertibility_frequency() >= 0.0);
    CHECK(spn.invertibility_frequency() <= 1.0);
    CHECK(spn.sampling_attempts_sum >= 100); // at least one draw per trial
    CHECK(spn.invertible_draws == 100);      // exactly one success per trial
}

TEST_CASE("determinism: identical spec gives identical outcomes") {
    auto spec = spec_of(1009, 4, GeneratorFamily::upper_unitriangular, 7);
    std::set<AttackMethod> methods{AttackMethod::span, AttackMethod::lindecomp,
                                   AttackMethod::kex};
    TrialSummary a = run_trials(spec, 10, methods);
    TrialSummary b = run_trials(spec, 10, methods);
    CHECK(same_outcomes(a, b));
    CHECK(a.methods.at("kex").successes == 10);

    TrialSummary one = run_trials(spec, 1, methods);
    CHECK(one.trials == 1);
    CHECK(one.total_failures() == 0);
}

TEST_CASE("span method is rejected when p <= n") {
    auto spec = spec_of(5, 6, GeneratorFamily::general_linear, 1);
    CHECK(raised([&] { run_trials(spec, 1, {AttackMethod::span}); }) == Errc::bad_spec);
    // The lindecomp method has no such restriction.
    TrialSummary s = run_trials(spec, 5, {AttackMethod::lindecomp});
    CHECK(s.methods.at("lindecomp").successes == 5);
}

TEST_CASE("invalid batch requests are rejected upfront") {
    auto spec = spec_of(101, 3, GeneratorFamily::general_linear, 1);
    CHECK(raised([&] { run_trials(spec, 0, {AttackMethod::span}); }) == Errc::bad_spec);
    CHECK(raised([&] { run_trials(spec, 1, {}); }) == Errc::bad_spec);
    auto bad = spec_of(6, 3, GeneratorFamily::general_linear, 1);
    CHECK(raised([&] { run_trials(bad, 1, {AttackMethod::lindecomp}); }) == Errc::not_prime);
}

TEST_CASE("per-trial errors are folded into counts, batch never aborts") {
    // UT_2(F_p) is abelian for every p, so instance generation fails each
    // trial; the batch must still complete with errors recorded.
    auto spec = spec_of(3, 2, GeneratorFamily::upper_unitriangular, 9);
    TrialSummary s = run_trials(spec, 3, {AttackMethod::lindecomp, AttackMethod::kex});
    CHECK(s.trials == 3);
    for (const char* name : {"lindecomp", "kex"}) {
        const MethodStats& m = s.methods.at(name);
        CHECK(m.attempted == 3);
        CHECK(m.successes == 0);
        CHECK(m.failures == 3);
        CHECK(m.errors == 3);
    }
    CHECK(s.total_failures() == 6);
}

TEST_CASE("simulate_kex transcript agrees and is seed-deterministic") {
    Instance inst = testutil::make_instance(101, 3, GeneratorFamily::general_linear, 21);
    Rng r1(5), r2(5);
    KexTranscript a = simulate_kex(inst, r1);
    KexTranscript b = simulate_kex(inst, r2);
    CHECK(a.agree());
    CHECK(a.shared_a == a.shared_b);
    CHECK(a.x1 == b.x1);
    CHECK(a.token_a.t == b.token_a.t);
    CHECK(a.shared_a == b.shared_a);
    CHECK(a.token_a.role == KexRole::initiator);
    CHECK(a.token_b.role == KexRole::responder);
}
