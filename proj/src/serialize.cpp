#include "serialize.hpp"

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <string>
#include <utility>

#include <json.hpp>

#include "errors.hpp"

namespace factorlab {
namespace {

// ordered_json keeps insertion order, which is what pins the documented key
// order and makes dumps byte-stable.
using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    raise(Errc::parse_error, path + ": " + msg);
}

json parse_text(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail(what, e.what()); // includes line/column diagnostics
    }
}

void check_fields(const json& j, const std::string& what, std::initializer_list<const char*> keys) {
    if (!j.is_object()) fail(what, "expected an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = std::any_of(keys.begin(), keys.end(),
                                 [&](const char* k) { return it.key() == k; });
        if (!known) fail(what + "." + it.key(), "unknown field");
    }
}

const json& member(const json& j, const std::string& what, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) fail(what + "." + key, "missing field");
    return *it;
}

int64_t get_int(const json& v, const std::string& path, int64_t lo, int64_t hi) {
    if (!v.is_number_integer()) fail(path, "expected an integer");
    if (v.is_number_unsigned() && v.get<uint64_t>() > static_cast<uint64_t>(hi))
        fail(path, "value exceeds " + std::to_string(hi));
    int64_t x = v.get<int64_t>();
    if (x < lo || x > hi)
        fail(path, "value " + std::to_string(x) + " outside [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]");
    return x;
}

uint64_t get_u64(const json& v, const std::string& path) {
    if (!v.is_number_integer()) fail(path, "expected an integer");
    if (!v.is_number_unsigned() && v.get<int64_t>() < 0) fail(path, "expected a nonnegative integer");
    return v.get<uint64_t>();
}

std::string get_string(const json& v, const std::string& path) {
    if (!v.is_string()) fail(path, "expected a string");
    return v.get<std::string>();
}

json matrix_json(const MatrixF& m) {
    json rows = json::array();
    for (uint32_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (uint32_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

MatrixF matrix_from_json(const json& v, const PrimeField& field, uint32_t n,
                         const std::string& path) {
    if (!v.is_array() || v.size() != n)
        fail(path, "expected " + std::to_string(n) + " rows");
    MatrixF out(n, n, field);
    for (uint32_t r = 0; r < n; ++r) {
        const json& row = v[r];
        std::string rpath = path + "[" + std::to_string(r) + "]";
        if (!row.is_array() || row.size() != n)
            fail(rpath, "expected " + std::to_string(n) + " entries");
        for (uint32_t c = 0; c < n; ++c) {
            const json& cell = row[c];
            std::string cpath = rpath + "[" + std::to_string(c) + "]";
            if (!cell.is_number_integer()) fail(cpath, "expected an integer");
            int64_t e = cell.is_number_unsigned() &&
                                cell.get<uint64_t>() > static_cast<uint64_t>(std::numeric_limits<int64_t>::max())
                            ? -1
                            : cell.get<int64_t>();
            if (e < 0 || e >= static_cast<int64_t>(field.modulus()))
                fail(cpath, "entry not in [0, " + std::to_string(field.modulus()) + ")");
            out.set(r, c, static_cast<uint32_t>(e));
        }
    }
    return out;
}

struct Header {
    PrimeField field;
    uint32_t n;
};

// Reads and validates the leading {"p", "n"} pair shared by every object form.
Header read_header(const json& j, const std::string& what) {
    int64_t p = get_int(member(j, what, "p"), what + ".p", 3,
                        (static_cast<int64_t>(1) << 31) - 1);
    int64_t n = get_int(member(j, what, "n"), what + ".n", 2, MatrixF::kMaxDim);
    try {
        return Header{PrimeField(static_cast<uint32_t>(p)), static_cast<uint32_t>(n)};
    } catch (const Error& e) {
        fail(what + ".p", e.what());
    }
}

void put_header(json& j, const PrimeField& field, uint32_t n) {
    j["p"] = field.modulus();
    j["n"] = n;
}

const char* role_name(KexRole role) {
    return role == KexRole::initiator ? "initiator" : "responder";
}

KexRole role_from_json(const json& v, const std::string& path) {
    std::string s = get_string(v, path);
    if (s == "initiator") return KexRole::initiator;
    if (s == "responder") return KexRole::responder;
    fail(path, "expected \"initiator\" or \"responder\"");
}

} // namespace

std::string serialize_matrix(const MatrixF& m) { return matrix_json(m).dump(); }

MatrixF parse_matrix(const std::string& text, const PrimeField& field, uint32_t n) {
    return matrix_from_json(parse_text(text, "matrix"), field, n, "matrix");
}

std::string serialize_instance(const Instance& inst) {
    json j;
    put_header(j, inst.g.field(), inst.spec.n);
    j["family"] = family_name(inst.spec.family);
    j["exponent_bound"] = inst.spec.exponent_bound;
    j["seed"] = inst.spec.seed;
    j["g"] = matrix_json(inst.g);
    j["h"] = matrix_json(inst.h);
    return j.dump();
}

Instance parse_instance(const std::string& text) {
    const json j = parse_text(text, "instance");
    check_fields(j, "instance", {"p", "n", "family", "exponent_bound", "seed", "g", "h"});
    Header hd = read_header(j, "instance");
    InstanceSpec spec;
    spec.p = hd.field.modulus();
    spec.n = hd.n;
    try {
        spec.family = family_from_name(get_string(member(j, "instance", "family"), "instance.family"));
    } catch (const Error& e) {
        fail("instance.family", e.what());
    }
    spec.exponent_bound = get_int(member(j, "instance", "exponent_bound"), "instance.exponent_bound",
                                  1, std::numeric_limits<int64_t>::max());
    spec.seed = get_u64(member(j, "instance", "seed"), "instance.seed");
    MatrixF g = matrix_from_json(member(j, "instance", "g"), hd.field, hd.n, "instance.g");
    MatrixF h = matrix_from_json(member(j, "instance", "h"), hd.field, hd.n, "instance.h");
    return Instance{spec, std::move(g), std::move(h)};
}

std::string serialize_public_key(const PublicKey& pub) {
    json j;
    put_header(j, pub.g.field(), pub.g.rows());
    j["g"] = matrix_json(pub.g);
    j["h"] = matrix_json(pub.h);
    j["c"] = matrix_json(pub.c);
    return j.dump();
}

PublicKey parse_public_key(const std::string& text) {
    const json j = parse_text(text, "public_key");
    check_fields(j, "public_key", {"p", "n", "g", "h", "c"});
    Header hd = read_header(j, "public_key");
    MatrixF g = matrix_from_json(member(j, "public_key", "g"), hd.field, hd.n, "public_key.g");
    MatrixF h = matrix_from_json(member(j, "public_key", "h"), hd.field, hd.n, "public_key.h");
    MatrixF c = matrix_from_json(member(j, "public_key", "c"), hd.field, hd.n, "public_key.c");
    return PublicKey{std::move(g), std::move(h), std::move(c)};
}

std::string serialize_private_key(const PrivateKey& priv) {
    json j;
    put_header(j, priv.gx.field(), priv.gx.rows());
    j["x"] = priv.x;
    j["y"] = priv.y;
    j["gx"] = matrix_json(priv.gx);
    j["hy"] = matrix_json(priv.hy);
    return j.dump();
}

PrivateKey parse_private_key(const std::string& text) {
    const json j = parse_text(text, "private_key");
    check_fields(j, "private_key", {"p", "n", "x", "y", "gx", "hy"});
    Header hd = read_header(j, "private_key");
    int64_t x = get_int(member(j, "private_key", "x"), "private_key.x",
                        std::numeric_limits<int64_t>::min(), std::numeric_limits<int64_t>::max());
    int64_t y = get_int(member(j, "private_key", "y"), "private_key.y",
                        std::numeric_limits<int64_t>::min(), std::numeric_limits<int64_t>::max());
    MatrixF gx = matrix_from_json(member(j, "private_key", "gx"), hd.field, hd.n, "private_key.gx");
    MatrixF hy = matrix_from_json(member(j, "private_key", "hy"), hd.field, hd.n, "private_key.hy");
    return PrivateKey{x, y, std::move(gx), std::move(hy)};
}

std::string serialize_ciphertext(const Ciphertext& ct) {
    json j;
    put_header(j, ct.c1.field(), ct.c1.rows());
    j["c1"] = matrix_json(ct.c1);
    j["c2"] = matrix_json(ct.c2);
    return j.dump();
}

Ciphertext parse_ciphertext(const std::string& text) {
    const json j = parse_text(text, "ciphertext");
    check_fields(j, "ciphertext", {"p", "n", "c1", "c2"});
    Header hd = read_header(j, "ciphertext");
    MatrixF c1 = matrix_from_json(member(j, "ciphertext", "c1"), hd.field, hd.n, "ciphertext.c1");
    MatrixF c2 = matrix_from_json(member(j, "ciphertext", "c2"), hd.field, hd.n, "ciphertext.c2");
    return Ciphertext{std::move(c1), std::move(c2)};
}

std::string serialize_token(const KexToken& token) {
    json j;
    put_header(j, token.t.field(), token.t.rows());
    j["role"] = role_name(token.role);
    j["t"] = matrix_json(token.t);
    return j.dump();
}

KexToken parse_token(const std::string& text) {
    const json j = parse_text(text, "token");
    check_fields(j, "token", {"p", "n", "role", "t"});
    Header hd = read_header(j, "token");
    KexRole role = role_from_json(member(j, "token", "role"), "token.role");
    MatrixF t = matrix_from_json(member(j, "token", "t"), hd.field, hd.n, "token.t");
    return KexToken{std::move(t), role};
}

std::string serialize_report(const AttackReport& report) {
    json j;
    put_header(j, report.recovered.field(), report.recovered.rows());
    j["method"] = report.method;
    j["success"] = report.success ? json(*report.success) : json(nullptr);
    j["span_dimension"] = report.span_dimension;
    j["sampling_attempts"] = report.sampling_attempts;
    j["elapsed_ms"] = report.elapsed_ms;
    j["recovered"] = matrix_json(report.recovered);
    return j.dump();
}

AttackReport parse_report(const std::string& text) {
    const json j = parse_text(text, "report");
    check_fields(j, "report", {"p", "n", "method", "success", "span_dimension",
                               "sampling_attempts", "elapsed_ms", "recovered"});
    Header hd = read_header(j, "report");
    AttackReport out{get_string(member(j, "report", "method"), "report.method"),
                     MatrixF(hd.n, hd.n, hd.field),
                     std::nullopt,
                     0,
                     0,
                     0.0};
    const json& success = member(j, "report", "success");
    if (success.is_boolean()) {
        out.success = success.get<bool>();
    } else if (!success.is_null()) {
        fail("report.success", "expected a boolean or null");
    }
    out.span_dimension = static_cast<uint32_t>(get_int(
        member(j, "report", "span_dimension"), "report.span_dimension", 0,
        std::numeric_limits<uint32_t>::max()));
    out.sampling_attempts = static_cast<uint32_t>(get_int(
        member(j, "report", "sampling_attempts"), "report.sampling_attempts", 0,
        std::numeric_limits<uint32_t>::max()));
    const json& ms = member(j, "report", "elapsed_ms");
    if (!ms.is_number()) fail("report.elapsed_ms", "expected a number");
    out.elapsed_ms = ms.get<double>();
    out.recovered = matrix_from_json(member(j, "report", "recovered"), hd.field, hd.n,
                                     "report.recovered");
    return out;
}

std::string serialize_transcript(const KexTranscript& kt) {
    json j;
    put_header(j, kt.token_a.t.field(), kt.token_a.t.rows());
    j["x1"] = kt.x1;
    j["y1"] = kt.y1;
    j["x2"] = kt.x2;
    j["y2"] = kt.y2;
    j["token_a"] = matrix_json(kt.token_a.t);
    j["token_b"] = matrix_json(kt.token_b.t);
    j["shared_a"] = matrix_json(kt.shared_a);
    j["shared_b"] = matrix_json(kt.shared_b);
    j["agree"] = kt.agree();
    return j.dump();
}

std::string serialize_summary(const TrialSummary& summary) {
    json j;
    j["p"] = summary.spec.p;
    j["n"] = summary.spec.n;
    j["family"] = family_name(summary.spec.family);
    j["exponent_bound"] = summary.spec.exponent_bound;
    j["seed"] = summary.spec.seed;
    j["trials"] = summary.trials;
    j["total_ms"] = summary.total_ms;
    j["cross_pairs"] = summary.cross_pairs;
    j["cross_agreements"] = summary.cross_agreements;
    json methods = json::object();
    for (const auto& [name, st] : summary.methods) {
        json m;
        m["attempted"] = st.attempted;
        m["successes"] = st.successes;
        m["failures"] = st.failures;
        m["errors"] = st.errors;
        m["mean_span_dimension"] = st.mean_span_dim();
        m["max_span_dimension"] = st.max_span_dim;
        m["dimension_bound_violations"] = st.dim_bound_violations;
        m["mean_sampling_attempts"] = st.mean_sampling_attempts();
        m["invertibility_frequency"] = st.invertibility_frequency();
        m["mean_ms"] = st.mean_ms();
        m["max_ms"] = st.max_ms;
        methods[name] = std::move(m);
    }
    j["methods"] = std::move(methods);
    return j.dump();
}

} // namespace factorlab
