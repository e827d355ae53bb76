#pragma once

#include <string>

#include "attacks.hpp"
#include "instance.hpp"
#include "trials.hpp"

namespace factorlab {

// JSON wire formats. Matrices are row-major nested arrays of integers in
// [0, p); object keys are emitted in the fixed orders below so serialized
// forms are byte-stable (golden-file friendly). Parsers are strict: missing
// or extra structure, wrong types, and out-of-range entries all raise
// Errc::parse_error with a field path (and a line number for syntax errors).
//
//   matrix      [[0,2],[3,1]]                                  (bare rows)
//   instance    {"p","n","family","exponent_bound","seed","g","h"}
//   public key  {"p","n","g","h","c"}
//   private key {"p","n","x","y","gx","hy"}
//   ciphertext  {"p","n","c1","c2"}
//   kex token   {"p","n","role","t"}          role: "initiator"|"responder"
//   report      {"p","n","method","success","span_dimension",
//                "sampling_attempts","elapsed_ms","recovered"}
//   transcript  {"p","n","x1","y1","x2","y2","token_a","token_b",
//                "shared_a","shared_b","agree"}                 (emit only)
//   summary     {"p","n","family","exponent_bound","seed","trials",
//                "total_ms","cross_pairs","cross_agreements","methods"}
//                                                               (emit only)

std::string serialize_matrix(const MatrixF& m);
MatrixF parse_matrix(const std::string& text, const PrimeField& field, uint32_t n);

std::string serialize_instance(const Instance& inst);
Instance parse_instance(const std::string& text);

std::string serialize_public_key(const PublicKey& pub);
PublicKey parse_public_key(const std::string& text);

std::string serialize_private_key(const PrivateKey& priv);
PrivateKey parse_private_key(const std::string& text);

std::string serialize_ciphertext(const Ciphertext& ct);
Ciphertext parse_ciphertext(const std::string& text);

std::string serialize_token(const KexToken& token);
KexToken parse_token(const std::string& text);

std::string serialize_report(const AttackReport& report);
AttackReport parse_report(const std::string& text);

std::string serialize_transcript(const KexTranscript& kt);
std::string serialize_summary(const TrialSummary& summary);

} // namespace factorlab
