#include "factorlab.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <set>
#include <string>
#include <utility>

#include "attacks.hpp"
#include "errors.hpp"
#include "instance.hpp"
#include "scheme.hpp"
#include "serialize.hpp"
#include "trials.hpp"

using namespace factorlab;

struct fl_session {
    std::string last_error;
};

namespace {

fl_status status_from(Errc code) {
    switch (code) {
        case Errc::not_prime: return FL_ERR_NOT_PRIME;
        case Errc::zero_inverse: return FL_ERR_ZERO_INVERSE;
        case Errc::dimension_mismatch: return FL_ERR_DIMENSION_MISMATCH;
        case Errc::modulus_mismatch: return FL_ERR_MODULUS_MISMATCH;
        case Errc::singular_matrix: return FL_ERR_SINGULAR_MATRIX;
        case Errc::not_in_span: return FL_ERR_NOT_IN_SPAN;
        case Errc::empty_solution_space: return FL_ERR_EMPTY_SOLUTION_SPACE;
        case Errc::no_invertible_combination: return FL_ERR_NO_INVERTIBLE_COMBINATION;
        case Errc::commuting_generators: return FL_ERR_COMMUTING_GENERATORS;
        case Errc::generation_exhausted: return FL_ERR_GENERATION_EXHAUSTED;
        case Errc::parse_error: return FL_ERR_PARSE;
        case Errc::bad_spec: return FL_ERR_BAD_SPEC;
        case Errc::internal: return FL_ERR_INTERNAL;
    }
    return FL_ERR_INTERNAL;
}

void assign_out(char** out, const std::string& s) {
    if (!out) return;
    char* copy = static_cast<char*>(std::malloc(s.size() + 1));
    if (!copy) throw std::bad_alloc();
    std::memcpy(copy, s.c_str(), s.size() + 1);
    *out = copy;
}

template <typename Fn>
fl_status guarded(fl_session* session, Fn&& fn) {
    if (session) session->last_error.clear();
    try {
        fn();
        return FL_OK;
    } catch (const Error& e) {
        if (session) session->last_error = e.what();
        return status_from(e.code());
    } catch (const std::exception& e) {
        if (session) session->last_error = e.what();
        return FL_ERR_INTERNAL;
    }
}

fl_status invalid(fl_session* session, const char* msg) {
    if (session) session->last_error = msg;
    return FL_ERR_INVALID_ARGUMENT;
}

InstanceSpec spec_from_args(uint32_t p, uint32_t n, const char* family, int64_t exponent_bound,
                            uint64_t seed) {
    InstanceSpec spec;
    spec.p = p;
    spec.n = n;
    spec.family = family_from_name(family);
    spec.exponent_bound = exponent_bound;
    spec.seed = seed;
    validate_spec(spec);
    return spec;
}

// Fills report.success from optional ground truth; -1 means unknown.
int judge(AttackReport& report, const char* expected_json) {
    if (!expected_json) return -1;
    MatrixF expected =
        parse_matrix(expected_json, report.recovered.field(), report.recovered.rows());
    report.success = (report.recovered == expected);
    return *report.success ? 1 : 0;
}

void emit_report(AttackReport report, const char* expected_json, char** out_report,
                 int* out_success) {
    int verdict = judge(report, expected_json);
    if (out_success) *out_success = verdict;
    assign_out(out_report, serialize_report(report));
}

} // namespace

extern "C" {

const char* fl_version(void) { return "factorlab 1.0.0"; }

const char* fl_status_name(fl_status status) {
    switch (status) {
        case FL_OK: return "ok";
        case FL_ERR_INVALID_ARGUMENT: return "invalid argument";
        case FL_ERR_NOT_PRIME: return "not prime";
        case FL_ERR_ZERO_INVERSE: return "zero inverse";
        case FL_ERR_DIMENSION_MISMATCH: return "dimension mismatch";
        case FL_ERR_MODULUS_MISMATCH: return "modulus mismatch";
        case FL_ERR_SINGULAR_MATRIX: return "singular matrix";
        case FL_ERR_NOT_IN_SPAN: return "not in span";
        case FL_ERR_EMPTY_SOLUTION_SPACE: return "empty solution space";
        case FL_ERR_NO_INVERTIBLE_COMBINATION: return "no invertible combination";
        case FL_ERR_COMMUTING_GENERATORS: return "commuting generators";
        case FL_ERR_GENERATION_EXHAUSTED: return "generation exhausted";
        case FL_ERR_PARSE: return "parse error";
        case FL_ERR_BAD_SPEC: return "bad spec";
        case FL_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

fl_session* fl_session_new(void) { return new (std::nothrow) fl_session; }

void fl_session_free(fl_session* session) { delete session; }

const char* fl_last_error(const fl_session* session) {
    return session ? session->last_error.c_str() : "";
}

void fl_free(char* text) { std::free(text); }

fl_status fl_gen_instance(fl_session* session, uint32_t p, uint32_t n, const char* family,
                          int64_t exponent_bound, uint64_t seed, char** out_instance) {
    if (!family) return invalid(session, "family must be non-null");
    return guarded(session, [&] {
        InstanceSpec spec = spec_from_args(p, n, family, exponent_bound, seed);
        Rng rng(seed);
        assign_out(out_instance, serialize_instance(gen_instance(spec, rng)));
    });
}

fl_status fl_keygen(fl_session* session, const char* instance_json, uint64_t seed,
                    char** out_public_key, char** out_private_key) {
    if (!instance_json) return invalid(session, "instance_json must be non-null");
    return guarded(session, [&] {
        Instance inst = parse_instance(instance_json);
        Rng rng(seed);
        auto [pub, priv] = keygen(inst.g, inst.h, rng, inst.spec.exponent_bound);
        assign_out(out_public_key, serialize_public_key(pub));
        assign_out(out_private_key, serialize_private_key(priv));
    });
}

fl_status fl_encrypt(fl_session* session, const char* public_key_json, const char* message_json,
                     uint64_t seed, char** out_ciphertext) {
    if (!public_key_json) return invalid(session, "public_key_json must be non-null");
    if (!message_json) return invalid(session, "message_json must be non-null");
    return guarded(session, [&] {
        PublicKey pub = parse_public_key(public_key_json);
        MatrixF m = parse_matrix(message_json, pub.g.field(), pub.g.rows());
        Rng rng(seed);
        assign_out(out_ciphertext, serialize_ciphertext(encrypt(pub, m, rng)));
    });
}

fl_status fl_decrypt(fl_session* session, const char* private_key_json,
                     const char* ciphertext_json, char** out_message) {
    if (!private_key_json) return invalid(session, "private_key_json must be non-null");
    if (!ciphertext_json) return invalid(session, "ciphertext_json must be non-null");
    return guarded(session, [&] {
        PrivateKey priv = parse_private_key(private_key_json);
        Ciphertext ct = parse_ciphertext(ciphertext_json);
        assign_out(out_message, serialize_matrix(decrypt(priv, ct)));
    });
}

fl_status fl_kex_simulate(fl_session* session, const char* instance_json, uint64_t seed,
                          char** out_transcript, char** out_token_a, char** out_token_b,
                          int* out_agree) {
    if (!instance_json) return invalid(session, "instance_json must be non-null");
    return guarded(session, [&] {
        Instance inst = parse_instance(instance_json);
        Rng rng(seed);
        KexTranscript kt = simulate_kex(inst, rng);
        if (out_agree) *out_agree = kt.agree() ? 1 : 0;
        assign_out(out_transcript, serialize_transcript(kt));
        assign_out(out_token_a, serialize_token(kt.token_a));
        assign_out(out_token_b, serialize_token(kt.token_b));
    });
}

fl_status fl_attack_span(fl_session* session, const char* public_key_json,
                         const char* ciphertext_json, uint64_t seed, const char* expected_json,
                         char** out_report, int* out_success) {
    if (!public_key_json) return invalid(session, "public_key_json must be non-null");
    if (!ciphertext_json) return invalid(session, "ciphertext_json must be non-null");
    return guarded(session, [&] {
        PublicKey pub = parse_public_key(public_key_json);
        Ciphertext ct = parse_ciphertext(ciphertext_json);
        Rng rng(seed);
        emit_report(span_attack_decrypt(pub, ct, rng), expected_json, out_report, out_success);
    });
}

fl_status fl_attack_lindecomp(fl_session* session, const char* public_key_json,
                              const char* ciphertext_json, const char* expected_json,
                              char** out_report, int* out_success) {
    if (!public_key_json) return invalid(session, "public_key_json must be non-null");
    if (!ciphertext_json) return invalid(session, "ciphertext_json must be non-null");
    return guarded(session, [&] {
        PublicKey pub = parse_public_key(public_key_json);
        Ciphertext ct = parse_ciphertext(ciphertext_json);
        emit_report(lindecomp_attack_decrypt(pub, ct), expected_json, out_report, out_success);
    });
}

fl_status fl_attack_kex(fl_session* session, const char* instance_json, const char* token_a_json,
                        const char* token_b_json, const char* expected_json, char** out_report,
                        int* out_success) {
    if (!instance_json) return invalid(session, "instance_json must be non-null");
    if (!token_a_json) return invalid(session, "token_a_json must be non-null");
    if (!token_b_json) return invalid(session, "token_b_json must be non-null");
    return guarded(session, [&] {
        Instance inst = parse_instance(instance_json);
        KexToken ta = parse_token(token_a_json);
        KexToken tb = parse_token(token_b_json);
        emit_report(lindecomp_attack_kex(inst.g, inst.h, ta, tb), expected_json, out_report,
                    out_success);
    });
}

fl_status fl_run_trials(fl_session* session, uint32_t p, uint32_t n, const char* family,
                        int64_t exponent_bound, uint64_t seed, uint64_t count,
                        const char* methods, char** out_summary, uint64_t* out_failures) {
    if (!family) return invalid(session, "family must be non-null");
    if (!methods) return invalid(session, "methods must be non-null");
    return guarded(session, [&] {
        InstanceSpec spec = spec_from_args(p, n, family, exponent_bound, seed);
        std::set<AttackMethod> wanted;
        std::string list(methods);
        for (size_t pos = 0; pos <= list.size();) {
            size_t comma = list.find(',', pos);
            if (comma == std::string::npos) comma = list.size();
            std::string name = list.substr(pos, comma - pos);
            if (!name.empty()) wanted.insert(method_from_name(name));
            pos = comma + 1;
        }
        TrialSummary summary = run_trials(spec, count, wanted);
        if (out_failures) *out_failures = summary.total_failures();
        assign_out(out_summary, serialize_summary(summary));
    });
}

} // extern "C"
