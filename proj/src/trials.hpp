#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>

#include "attacks.hpp"
#include "instance.hpp"

namespace factorlab {

enum class AttackMethod { span, lindecomp, kex };

const char* method_name(AttackMethod m);
AttackMethod method_from_name(const std::string& name); // Errc::bad_spec on unknown

struct MethodStats {
    uint64_t attempted = 0;
    uint64_t successes = 0;
    uint64_t failures = 0; // wrong recovery or per-trial error
    uint64_t errors = 0;   // subset of failures that raised
    uint64_t span_dim_sum = 0;
    uint32_t max_span_dim = 0;
    uint64_t dim_bound_violations = 0; // cyclic spans > n, closures > n^2
    uint64_t sampling_attempts_sum = 0; // span only: total draws
    uint64_t invertible_draws = 0;      // span only: draws that were invertible
    double ms_sum = 0.0;
    double max_ms = 0.0;

    double mean_span_dim() const { return attempted ? double(span_dim_sum) / attempted : 0.0; }
    double mean_sampling_attempts() const {
        return attempted ? double(sampling_attempts_sum) / attempted : 0.0;
    }
    double invertibility_frequency() const {
        return sampling_attempts_sum ? double(invertible_draws) / sampling_attempts_sum : 0.0;
    }
    double mean_ms() const { return attempted ? ms_sum / attempted : 0.0; }
};

struct TrialSummary {
    InstanceSpec spec;
    uint64_t trials = 0;
    std::map<std::string, MethodStats> methods; // keyed by method_name
    // Cross-check between the two cryptosystem attacks on shared instances.
    uint64_t cross_pairs = 0;
    uint64_t cross_agreements = 0;
    double total_ms = 0.0;

    uint64_t total_failures() const;
};

// Runs count independent trials; trial i draws every random value from the
// substream derived from (spec.seed, i), so results do not depend on
// execution order. Per-trial errors are folded into the failure counts and
// never abort the batch. Throws Errc::bad_spec upfront when the span method
// is requested with p <= n (the invertibility bound 1 - n/p is vacuous there).
TrialSummary run_trials(const InstanceSpec& spec, uint64_t count,
                        const std::set<AttackMethod>& methods);

// One full key-exchange run between two honest parties.
struct KexTranscript {
    int64_t x1, y1; // initiator exponents
    int64_t x2, y2; // responder exponents
    KexToken token_a;
    KexToken token_b;
    MatrixF shared_a;
    MatrixF shared_b;

    bool agree() const { return shared_a == shared_b; }
};

KexTranscript simulate_kex(const Instance& inst, Rng& rng);

} // namespace factorlab
