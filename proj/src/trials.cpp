#include "trials.hpp"

#include <chrono>
#include <optional>

namespace factorlab {

namespace {

using Clock = std::chrono::steady_clock;

void record(MethodStats& st, const AttackReport& report, bool ok, uint32_t n,
            bool cyclic_bound) {
    st.attempted += 1;
    (ok ? st.successes : st.failures) += 1;
    st.span_dim_sum += report.span_dimension;
    st.max_span_dim = std::max(st.max_span_dim, report.span_dimension);
    uint64_t bound = cyclic_bound ? n : uint64_t(n) * n;
    if (report.span_dimension > bound) st.dim_bound_violations += 1;
    st.sampling_attempts_sum += report.sampling_attempts;
    if (report.sampling_attempts > 0) st.invertible_draws += 1; // the final draw succeeded
    st.ms_sum += report.elapsed_ms;
    st.max_ms = std::max(st.max_ms, report.elapsed_ms);
}

void record_error(MethodStats& st) {
    st.attempted += 1;
    st.failures += 1;
    st.errors += 1;
}

} // namespace

const char* method_name(AttackMethod m) {
    switch (m) {
        case AttackMethod::span: return "span";
        case AttackMethod::lindecomp: return "lindecomp";
        case AttackMethod::kex: return "kex";
    }
    return "?";
}

AttackMethod method_from_name(const std::string& name) {
    if (name == "span") return AttackMethod::span;
    if (name == "lindecomp") return AttackMethod::lindecomp;
    if (name == "kex") return AttackMethod::kex;
    raise(Errc::bad_spec, "unknown attack method '" + name + "' (expected span, lindecomp or kex)");
}

uint64_t TrialSummary::total_failures() const {
    uint64_t total = 0;
    for (const auto& [name, st] : methods) total += st.failures;
    return total;
}

TrialSummary run_trials(const InstanceSpec& spec, uint64_t count,
                        const std::set<AttackMethod>& methods) {
    validate_spec(spec);
    if (count < 1) raise(Errc::bad_spec, "trial count must be >= 1");
    if (methods.empty()) raise(Errc::bad_spec, "no attack methods requested");
    if (methods.count(AttackMethod::span) && spec.p <= spec.n) {
        raise(Errc::bad_spec,
              "span method requires p > n (invertibility bound 1 - n/p is vacuous); got p=" +
                  std::to_string(spec.p) + ", n=" + std::to_string(spec.n));
    }

    const bool want_span = methods.count(AttackMethod::span) != 0;
    const bool want_lin = methods.count(AttackMethod::lindecomp) != 0;
    const bool want_kex = methods.count(AttackMethod::kex) != 0;

    TrialSummary summary;
    summary.spec = spec;
    summary.trials = count;
    for (AttackMethod m : methods) summary.methods.emplace(method_name(m), MethodStats{});

    auto batch_start = Clock::now();
    for (uint64_t trial = 0; trial < count; ++trial) {
        Rng rng = Rng::substream(spec.seed, trial);

        std::optional<Instance> inst;
        try {
            inst = gen_instance(spec, rng);
        } catch (const Error&) {
            // Generation failed: every requested method loses this trial.
            for (AttackMethod m : methods) record_error(summary.methods[method_name(m)]);
            continue;
        }
        const MatrixF& g = inst->g;
        const MatrixF& h = inst->h;
        const uint32_t n = spec.n;

        if (want_span || want_lin) {
            std::optional<MatrixF> span_recovered, lin_recovered;
            try {
                auto [pub, priv] = keygen(g, h, rng, spec.exponent_bound);
                MatrixF m = random_matrix(n, g.field(), rng);
                Ciphertext ct = encrypt(pub, m, rng, spec.exponent_bound);

                if (want_span) {
                    try {
                        AttackReport r = span_attack_decrypt(pub, ct, rng);
                        record(summary.methods["span"], r, r.recovered == m, n, true);
                        span_recovered = std::move(r.recovered);
                    } catch (const Error&) {
                        record_error(summary.methods["span"]);
                    }
                }
                if (want_lin) {
                    try {
                        AttackReport r = lindecomp_attack_decrypt(pub, ct);
                        record(summary.methods["lindecomp"], r, r.recovered == m, n, false);
                        lin_recovered = std::move(r.recovered);
                    } catch (const Error&) {
                        record_error(summary.methods["lindecomp"]);
                    }
                }
            } catch (const Error&) {
                if (want_span) record_error(summary.methods["span"]);
                if (want_lin) record_error(summary.methods["lindecomp"]);
            }
            if (span_recovered && lin_recovered) {
                summary.cross_pairs += 1;
                if (*span_recovered == *lin_recovered) summary.cross_agreements += 1;
            }
        }

        if (want_kex) {
            try {
                KexTranscript kt = simulate_kex(*inst, rng);
                AttackReport r = lindecomp_attack_kex(g, h, kt.token_a, kt.token_b);
                bool ok = kt.agree() && r.recovered == kt.shared_a;
                record(summary.methods["kex"], r, ok, n, false);
            } catch (const Error&) {
                record_error(summary.methods["kex"]);
            }
        }
    }
    summary.total_ms = std::chrono::duration<double, std::milli>(Clock::now() - batch_start).count();
    return summary;
}

KexTranscript simulate_kex(const Instance& inst, Rng& rng) {
    const int64_t bound = inst.spec.exponent_bound;
    int64_t x1 = rng.range(1, bound);
    int64_t y1 = rng.range(1, bound);
    int64_t x2 = rng.range(1, bound);
    int64_t y2 = rng.range(1, bound);
    KexToken ta = kex_token(inst.g, inst.h, x1, y1, KexRole::initiator);
    KexToken tb = kex_token(inst.g, inst.h, x2, y2, KexRole::responder);
    MatrixF ka = kex_shared(x1, y1, tb, inst.g, inst.h);
    MatrixF kb = kex_shared(x2, y2, ta, inst.g, inst.h);
    return KexTranscript{x1, y1, x2, y2, std::move(ta), std::move(tb),
                         std::move(ka), std::move(kb)};
}

} // namespace factorlab
