// Command-line front end for libfactorlab. Every cryptographic operation goes
// through the C API in factorlab.h; this file only handles argument parsing,
// file I/O, and display formatting.
//
// Exit codes: 0 success, 1 runtime/I-O error, 2 attack failure (no recovery
// or recovery != expected), 3 parse or spec errors (including bad flags).

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "factorlab.h"

namespace {

using nlohmann::json;

constexpr int kExitRuntime = 1;
constexpr int kExitAttackFailure = 2;
constexpr int kExitBadInput = 3;

struct SessionHandle {
    fl_session* s = fl_session_new();
    ~SessionHandle() { fl_session_free(s); }
};

struct FreeDeleter {
    void operator()(char* p) const { fl_free(p); }
};
using ApiString = std::unique_ptr<char, FreeDeleter>;

int exit_code_for(fl_status st) {
    switch (st) {
        case FL_OK:
            return 0;
        case FL_ERR_NOT_IN_SPAN:
        case FL_ERR_EMPTY_SOLUTION_SPACE:
        case FL_ERR_NO_INVERTIBLE_COMBINATION:
            return kExitAttackFailure;
        case FL_ERR_INVALID_ARGUMENT:
        case FL_ERR_NOT_PRIME:
        case FL_ERR_COMMUTING_GENERATORS:
        case FL_ERR_GENERATION_EXHAUSTED:
        case FL_ERR_PARSE:
        case FL_ERR_BAD_SPEC:
            return kExitBadInput;
        default:
            return kExitRuntime;
    }
}

int report_api_error(const SessionHandle& session, fl_status st) {
    std::cerr << "error: " << fl_last_error(session.s) << " [" << fl_status_name(st) << "]\n";
    return exit_code_for(st);
}

// "-" (or empty output path) means stdin/stdout.
bool read_input(const std::string& path, std::string& out) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        out = buf.str();
        return true;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read " << path << "\n";
        return false;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
}

bool write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text << "\n";
        return true;
    }
    std::ofstream out(path, std::ios::binary);
    out << text << "\n";
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return false;
    }
    return true;
}

std::string join(const std::vector<std::string>& parts, char sep) {
    std::string out;
    for (const auto& part : parts) {
        if (!out.empty()) out += sep;
        out += part;
    }
    return out;
}

std::string fmt(const json& number) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", number.get<double>());
    return buf;
}

void print_report_text(const std::string& report_json) {
    json j = json::parse(report_json);
    std::cout << "method:            " << j["method"].get<std::string>() << "\n"
              << "span dimension:    " << j["span_dimension"] << "\n"
              << "sampling attempts: " << j["sampling_attempts"] << "\n"
              << "elapsed:           " << fmt(j["elapsed_ms"]) << " ms\n"
              << "recovered:         " << j["recovered"].dump() << "\n";
    if (j["success"].is_null())
        std::cout << "success:           unknown (no --expect given)\n";
    else
        std::cout << "success:           " << (j["success"].get<bool>() ? "yes" : "no") << "\n";
}

void print_transcript_text(const std::string& transcript_json) {
    json j = json::parse(transcript_json);
    std::cout << "initiator token:   " << j["token_a"].dump() << "\n"
              << "responder token:   " << j["token_b"].dump() << "\n"
              << "shared key (a):    " << j["shared_a"].dump() << "\n"
              << "shared key (b):    " << j["shared_b"].dump() << "\n"
              << "parties agree:     " << (j["agree"].get<bool>() ? "yes" : "no") << "\n";
}

void print_summary_text(const std::string& summary_json) {
    json j = json::parse(summary_json);
    std::cout << "trials: " << j["trials"] << "  (p=" << j["p"] << ", n=" << j["n"]
              << ", family=" << j["family"].get<std::string>() << ", seed=" << j["seed"] << ")\n";
    for (const auto& [name, m] : j["methods"].items()) {
        std::cout << "  " << name << ": " << m["successes"] << "/" << m["attempted"]
                  << " recovered, mean span dim " << fmt(m["mean_span_dimension"]) << " (max "
                  << m["max_span_dimension"] << ")";
        if (name == "span")
            std::cout << ", mean attempts " << fmt(m["mean_sampling_attempts"])
                      << ", invertibility freq " << fmt(m["invertibility_frequency"]);
        std::cout << ", mean " << fmt(m["mean_ms"]) << " ms\n";
        if (m["errors"].get<uint64_t>() > 0)
            std::cout << "    (" << m["errors"] << " trials raised errors)\n";
    }
    if (j["cross_pairs"].get<uint64_t>() > 0)
        std::cout << "  span/lindecomp agreement: " << j["cross_agreements"] << "/"
                  << j["cross_pairs"] << "\n";
    std::cout << "total: " << fmt(j["total_ms"]) << " ms\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"factorlab: matrix-group ElGamal/key-exchange workbench and attacks"};
    app.require_subcommand(1);

    // Shared instance parameters.
    uint32_t p = 7, n = 2;
    std::string family = "general-linear";
    int64_t bound = 65536;
    uint64_t seed = 0;
    bool as_json = false;

    auto add_spec_options = [&](CLI::App* sub) {
        sub->add_option("--p", p, "Field modulus (odd prime < 2^31)")->capture_default_str();
        sub->add_option("--n", n, "Matrix dimension")->capture_default_str();
        sub->add_option("--family", family, "Generator family: general-linear | unitriangular")
            ->capture_default_str();
        sub->add_option("--bound", bound, "Exponent bound (exponents drawn from [1, bound])")
            ->capture_default_str();
    };

    std::string out_path, public_out, private_out, transcript_out, token_a_out, token_b_out;
    std::string instance_path, public_path, private_path, ciphertext_path, message_path;
    std::string token_a_path, token_b_path, expect_path, method;
    std::vector<std::string> methods;
    uint64_t count = 100;

    CLI::App* gen = app.add_subcommand("gen", "Generate a random instance (g, h)");
    add_spec_options(gen);
    gen->add_option("--seed", seed, "RNG seed")->capture_default_str();
    gen->add_option("-o,--out", out_path, "Output file (default stdout)");

    CLI::App* keygen = app.add_subcommand("keygen", "ElGamal-type key generation");
    keygen->add_option("--instance", instance_path, "Instance JSON file ('-' for stdin)")
        ->required();
    keygen->add_option("--seed", seed, "RNG seed")->capture_default_str();
    keygen->add_option("--public-out", public_out, "Public key output (default stdout)");
    keygen->add_option("--private-out", private_out, "Private key output (default stdout)");

    CLI::App* encrypt = app.add_subcommand("encrypt", "Encrypt a matrix message");
    encrypt->add_option("--public", public_path, "Public key JSON file")->required();
    encrypt->add_option("--message", message_path, "Message file (bare matrix JSON)")->required();
    encrypt->add_option("--seed", seed, "RNG seed")->capture_default_str();
    encrypt->add_option("-o,--out", out_path, "Ciphertext output (default stdout)");

    CLI::App* decrypt = app.add_subcommand("decrypt", "Decrypt with the private key");
    decrypt->add_option("--private", private_path, "Private key JSON file")->required();
    decrypt->add_option("--ciphertext", ciphertext_path, "Ciphertext JSON file")->required();
    decrypt->add_option("-o,--out", out_path, "Message output (default stdout)");

    CLI::App* kex = app.add_subcommand("kex", "Simulate an honest key exchange");
    kex->add_option("--instance", instance_path, "Instance JSON file")->required();
    kex->add_option("--seed", seed, "RNG seed")->capture_default_str();
    kex->add_option("--transcript-out", transcript_out, "Transcript output file");
    kex->add_option("--token-a-out", token_a_out, "Initiator token output file");
    kex->add_option("--token-b-out", token_b_out, "Responder token output file");
    kex->add_flag("--json", as_json, "Print the transcript as JSON");

    CLI::App* attack = app.add_subcommand("attack", "Run an attack on intercepted data");
    attack->add_option("--method", method, "span | lindecomp | kex")
        ->required()
        ->check(CLI::IsMember({"span", "lindecomp", "kex"}));
    attack->add_option("--public", public_path, "Public key JSON (span/lindecomp)");
    attack->add_option("--ciphertext", ciphertext_path, "Ciphertext JSON (span/lindecomp)");
    attack->add_option("--instance", instance_path, "Instance JSON (kex)");
    attack->add_option("--token-a", token_a_path, "Initiator token JSON (kex)");
    attack->add_option("--token-b", token_b_path, "Responder token JSON (kex)");
    attack->add_option("--expect", expect_path, "Ground truth (bare matrix JSON); sets success");
    attack->add_option("--seed", seed, "RNG seed (span sampling)")->capture_default_str();
    attack->add_option("-o,--out", out_path, "Report output file");
    attack->add_flag("--json", as_json, "Print the report as JSON");

    CLI::App* trials = app.add_subcommand("trials", "Seeded batch of attack trials");
    add_spec_options(trials);
    trials->add_option("--seed", seed, "Batch seed")->capture_default_str();
    trials->add_option("--count", count, "Number of trials")->capture_default_str();
    trials
        ->add_option("--method", methods,
                     "Attack methods to run (repeatable); default: span lindecomp kex")
        ->check(CLI::IsMember({"span", "lindecomp", "kex"}));
    trials->add_option("-o,--out", out_path, "Summary output file");
    trials->add_flag("--json", as_json, "Print the summary as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadInput;
    }

    SessionHandle session;
    if (!session.s) {
        std::cerr << "error: out of memory\n";
        return kExitRuntime;
    }

    if (app.got_subcommand(gen)) {
        char* raw = nullptr;
        fl_status st = fl_gen_instance(session.s, p, n, family.c_str(), bound, seed, &raw);
        if (st != FL_OK) return report_api_error(session, st);
        ApiString inst(raw);
        return write_output(out_path, inst.get()) ? 0 : kExitRuntime;
    }

    if (app.got_subcommand(keygen)) {
        std::string instance_json;
        if (!read_input(instance_path, instance_json)) return kExitRuntime;
        char *pub_raw = nullptr, *priv_raw = nullptr;
        fl_status st = fl_keygen(session.s, instance_json.c_str(), seed, &pub_raw, &priv_raw);
        if (st != FL_OK) return report_api_error(session, st);
        ApiString pub(pub_raw), priv(priv_raw);
        if (!write_output(public_out, pub.get())) return kExitRuntime;
        if (!write_output(private_out, priv.get())) return kExitRuntime;
        return 0;
    }

    if (app.got_subcommand(encrypt)) {
        std::string public_json, message_json;
        if (!read_input(public_path, public_json) || !read_input(message_path, message_json))
            return kExitRuntime;
        char* raw = nullptr;
        fl_status st =
            fl_encrypt(session.s, public_json.c_str(), message_json.c_str(), seed, &raw);
        if (st != FL_OK) return report_api_error(session, st);
        ApiString ct(raw);
        return write_output(out_path, ct.get()) ? 0 : kExitRuntime;
    }

    if (app.got_subcommand(decrypt)) {
        std::string private_json, ciphertext_json;
        if (!read_input(private_path, private_json) ||
            !read_input(ciphertext_path, ciphertext_json))
            return kExitRuntime;
        char* raw = nullptr;
        fl_status st = fl_decrypt(session.s, private_json.c_str(), ciphertext_json.c_str(), &raw);
        if (st != FL_OK) return report_api_error(session, st);
        ApiString msg(raw);
        return write_output(out_path, msg.get()) ? 0 : kExitRuntime;
    }

    if (app.got_subcommand(kex)) {
        std::string instance_json;
        if (!read_input(instance_path, instance_json)) return kExitRuntime;
        char *tr_raw = nullptr, *ta_raw = nullptr, *tb_raw = nullptr;
        int agree = 0;
        fl_status st = fl_kex_simulate(session.s, instance_json.c_str(), seed, &tr_raw, &ta_raw,
                                       &tb_raw, &agree);
        if (st != FL_OK) return report_api_error(session, st);
        ApiString transcript(tr_raw), token_a(ta_raw), token_b(tb_raw);
        if (!transcript_out.empty() && !write_output(transcript_out, transcript.get()))
            return kExitRuntime;
        if (!token_a_out.empty() && !write_output(token_a_out, token_a.get()))
            return kExitRuntime;
        if (!token_b_out.empty() && !write_output(token_b_out, token_b.get()))
            return kExitRuntime;
        if (as_json)
            std::cout << transcript.get() << "\n";
        else
            print_transcript_text(transcript.get());
        return agree ? 0 : kExitRuntime;
    }

    if (app.got_subcommand(attack)) {
        std::string expected_json;
        const char* expected = nullptr;
        if (!expect_path.empty()) {
            if (!read_input(expect_path, expected_json)) return kExitRuntime;
            expected = expected_json.c_str();
        }
        char* raw = nullptr;
        int success = -1;
        fl_status st = FL_OK;
        if (method == "kex") {
            if (instance_path.empty() || token_a_path.empty() || token_b_path.empty()) {
                std::cerr << "error: attack --method kex needs --instance, --token-a, --token-b\n";
                return kExitBadInput;
            }
            std::string instance_json, token_a_json, token_b_json;
            if (!read_input(instance_path, instance_json) ||
                !read_input(token_a_path, token_a_json) ||
                !read_input(token_b_path, token_b_json))
                return kExitRuntime;
            st = fl_attack_kex(session.s, instance_json.c_str(), token_a_json.c_str(),
                               token_b_json.c_str(), expected, &raw, &success);
        } else {
            if (public_path.empty() || ciphertext_path.empty()) {
                std::cerr << "error: attack --method " << method
                          << " needs --public and --ciphertext\n";
                return kExitBadInput;
            }
            std::string public_json, ciphertext_json;
            if (!read_input(public_path, public_json) ||
                !read_input(ciphertext_path, ciphertext_json))
                return kExitRuntime;
            if (method == "span")
                st = fl_attack_span(session.s, public_json.c_str(), ciphertext_json.c_str(), seed,
                                    expected, &raw, &success);
            else
                st = fl_attack_lindecomp(session.s, public_json.c_str(), ciphertext_json.c_str(),
                                         expected, &raw, &success);
        }
        if (st != FL_OK) return report_api_error(session, st);
        ApiString report(raw);
        if (!out_path.empty() && !write_output(out_path, report.get())) return kExitRuntime;
        if (as_json)
            std::cout << report.get() << "\n";
        else
            print_report_text(report.get());
        return success == 0 ? kExitAttackFailure : 0;
    }

    if (app.got_subcommand(trials)) {
        if (methods.empty()) methods = {"span", "lindecomp", "kex"};
        char* raw = nullptr;
        uint64_t failures = 0;
        fl_status st = fl_run_trials(session.s, p, n, family.c_str(), bound, seed, count,
                                     join(methods, ',').c_str(), &raw, &failures);
        if (st != FL_OK) return report_api_error(session, st);
        ApiString summary(raw);
        if (!out_path.empty() && !write_output(out_path, summary.get())) return kExitRuntime;
        if (as_json)
            std::cout << summary.get() << "\n";
        else
            print_summary_text(summary.get());
        return failures == 0 ? 0 : kExitAttackFailure;
    }

    return kExitRuntime; // unreachable: require_subcommand(1)
}
