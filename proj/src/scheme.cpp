#include "scheme.hpp"

namespace factorlab {

namespace {

void require_invertible_pair(const MatrixF& g, const MatrixF& h) {
    if (!is_invertible(g)) raise(Errc::singular_matrix, "generator g must be invertible");
    if (!is_invertible(h)) raise(Errc::singular_matrix, "generator h must be invertible");
}

} // namespace

MatrixF factor_compose(const MatrixF& g, int64_t x, const MatrixF& h, int64_t y) {
    require_invertible_pair(g, h);
    return g.pow(x) * h.pow(y);
}

std::pair<PublicKey, PrivateKey> keygen_with_exponents(const MatrixF& g, const MatrixF& h,
                                                       int64_t x, int64_t y) {
    require_invertible_pair(g, h);
    if (g * h == h * g) {
        raise(Errc::commuting_generators, "generators commute; the scheme requires gh != hg");
    }
    // <g> and <h> intersecting trivially is assumed, not verified: it only
    // affects injectivity of the composition, and neither decryption nor the
    // attacks depend on it.
    MatrixF gx = g.pow(x);
    MatrixF hy = h.pow(y);
    PublicKey pub{g, h, gx * hy};
    PrivateKey priv{x, y, std::move(gx), std::move(hy)};
    return {std::move(pub), std::move(priv)};
}

std::pair<PublicKey, PrivateKey> keygen(const MatrixF& g, const MatrixF& h, Rng& rng,
                                        int64_t exponent_bound) {
    int64_t x = rng.range(1, exponent_bound);
    int64_t y = rng.range(1, exponent_bound);
    return keygen_with_exponents(g, h, x, y);
}

Ciphertext encrypt_with_exponents(const PublicKey& pub, const MatrixF& m, int64_t x1,
                                  int64_t y1) {
    if (m.rows() != pub.g.rows() || m.cols() != pub.g.cols()) {
        raise(Errc::dimension_mismatch, "message shape does not match the key's group");
    }
    MatrixF gx1 = pub.g.pow(x1);
    MatrixF hy1 = pub.h.pow(y1);
    MatrixF c1 = gx1 * pub.c * hy1; // = g^(x+x') h^(y+y')
    MatrixF c2 = gx1 * hy1 * m;
    return {std::move(c1), std::move(c2)};
}

Ciphertext encrypt(const PublicKey& pub, const MatrixF& m, Rng& rng, int64_t exponent_bound) {
    int64_t x1 = rng.range(1, exponent_bound);
    int64_t y1 = rng.range(1, exponent_bound);
    return encrypt_with_exponents(pub, m, x1, y1);
}

MatrixF decrypt(const PrivateKey& priv, const Ciphertext& ct) {
    MatrixF blind = priv.gx.inverse() * ct.c1 * priv.hy.inverse(); // g^x' h^y'
    return blind.inverse() * ct.c2;
}

KexToken kex_token(const MatrixF& g, const MatrixF& h, int64_t x, int64_t y, KexRole role) {
    require_invertible_pair(g, h);
    return {g.pow(x) * h.pow(y), role};
}

MatrixF kex_shared(int64_t own_x, int64_t own_y, const KexToken& peer, const MatrixF& g,
                   const MatrixF& h) {
    return g.pow(own_x) * peer.t * h.pow(own_y);
}

} // namespace factorlab
