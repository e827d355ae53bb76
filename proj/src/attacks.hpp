#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scheme.hpp"
#include "span.hpp"

namespace factorlab {

// With p >= 2n a singular draw happens with probability <= 1/2, so 64
// consecutive failures are a 2^-64 event; this makes the attack's runtime
// deterministic in practice.
inline constexpr uint32_t kDefaultMaxSamplingAttempts = 64;

// Solutions f in Lin(<g>) of the commutation equation f c h = h f c.
struct CommutationSolutionSpace {
    TaggedBasis ambient;            // basis of Lin(<g>)
    std::vector<MatrixF> solutions; // linearly independent, each satisfies f c h = h f c
};

struct AttackReport {
    std::string method; // "span" | "lindecomp" | "lindecomp-kex"
    MatrixF recovered;
    std::optional<bool> success; // filled by the harness when ground truth is known
    uint32_t span_dimension = 0;
    uint32_t sampling_attempts = 0; // span method only; >= 1 there, 0 otherwise
    double elapsed_ms = 0.0;
};

// Builds Lin(<g>) and solves the linear system imposed on the coefficients of
// f = sum alpha_i g^i by f c h - h f c = 0. Nonempty for well-formed keys
// (f = g^-x always solves it); an empty result signals an implementation bug.
CommutationSolutionSpace solve_commutation_system(const PublicKey& pub);

// Draws coefficients uniformly i.i.d. from F_p until the combination is
// invertible; returns the combination and the number of draws used. Throws
// Errc::no_invertible_combination after max_attempts singular draws.
std::pair<MatrixF, uint32_t> sample_invertible_combination(
    const std::vector<MatrixF>& solutions, Rng& rng,
    uint32_t max_attempts = kDefaultMaxSamplingAttempts);

// Span-method message recovery from public data only: find invertible f with
// f c h = h f c in Lin(<g>), strip the blinding via s = (f c1)(f c)^-1,
// then m = s^-1 c2.
AttackReport span_attack_decrypt(const PublicKey& pub, const Ciphertext& ct, Rng& rng,
                                 uint32_t max_attempts = kDefaultMaxSamplingAttempts);

// Linear decomposition message recovery: express c1 over a tagged basis of
// Lin(<g> c <h>) and reassemble s = sum alpha_i g^(u_i) h^(v_i) = g^x' h^y'.
// Deterministic, no sampling.
AttackReport lindecomp_attack_decrypt(const PublicKey& pub, const Ciphertext& ct);

// Shared-key recovery from eavesdropped tokens: express token A over a basis
// of Lin(<g><h>) and substitute token B into the basis monomials.
AttackReport lindecomp_attack_kex(const MatrixF& g, const MatrixF& h, const KexToken& token_a,
                                  const KexToken& token_b);

} // namespace factorlab
