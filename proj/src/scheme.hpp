#pragma once

#include <cstdint>
#include <utility>

#include "matrix.hpp"
#include "rng.hpp"

namespace factorlab {

// Default range [1, 2^16] for all sampled exponents; the attacks never look
// at exponent size, so the bound only affects the honest parties' cost.
inline constexpr int64_t kDefaultExponentBound = 65536;

struct PublicKey {
    MatrixF g;
    MatrixF h;
    MatrixF c; // g^x * h^y
};

struct PrivateKey {
    int64_t x;
    int64_t y;
    MatrixF gx; // g^x
    MatrixF hy; // h^y
};

struct Ciphertext {
    MatrixF c1; // g^(x+x') * h^(y+y')
    MatrixF c2; // g^x' * h^y' * m
};

enum class KexRole { initiator, responder };

struct KexToken {
    MatrixF t; // g^x_i * h^y_i
    KexRole role;
};

// g^x * h^y. Throws Errc::singular_matrix if g or h is not invertible.
MatrixF factor_compose(const MatrixF& g, int64_t x, const MatrixF& h, int64_t y);

// Exponent-explicit core; throws Errc::commuting_generators when gh = hg.
std::pair<PublicKey, PrivateKey> keygen_with_exponents(const MatrixF& g, const MatrixF& h,
                                                       int64_t x, int64_t y);
std::pair<PublicKey, PrivateKey> keygen(const MatrixF& g, const MatrixF& h, Rng& rng,
                                        int64_t exponent_bound = kDefaultExponentBound);

Ciphertext encrypt_with_exponents(const PublicKey& pub, const MatrixF& m, int64_t x1, int64_t y1);
Ciphertext encrypt(const PublicKey& pub, const MatrixF& m, Rng& rng,
                   int64_t exponent_bound = kDefaultExponentBound);

// gx^-1 * c1 * hy^-1 = g^x' h^y', inverted and applied to c2. Throws
// Errc::singular_matrix on malformed ciphertexts.
MatrixF decrypt(const PrivateKey& priv, const Ciphertext& ct);

KexToken kex_token(const MatrixF& g, const MatrixF& h, int64_t x, int64_t y, KexRole role);

// g^x_own * peer.t * h^y_own; both sides arrive at g^(x1+x2) h^(y1+y2).
MatrixF kex_shared(int64_t own_x, int64_t own_y, const KexToken& peer, const MatrixF& g,
                   const MatrixF& h);

} // namespace factorlab
