#include <cstdint>

#include <doctest.h>

#include "helpers.hpp"
#include "instance.hpp"
#include "scheme.hpp"

using namespace factorlab;
using testutil::raised;

TEST_CASE("factor_compose goldens") {
    testutil::Ex1 ex;
    CHECK(factor_compose(ex.g, 2, ex.h, 3) == ex.c);
    CHECK(factor_compose(ex.g, 0, ex.h, 0) == MatrixF::identity(2, ex.f));
    CHECK(factor_compose(ex.g, 1, ex.h, 1) == ex.s);
    CHECK(raised([&] {
              factor_compose(MatrixF::from_rows({{1, 1}, {1, 1}}, ex.f), -1, ex.h, 1);
          }) == Errc::singular_matrix);
}

TEST_CASE("keygen: golden exponents, invariants, commuting rejection") {
    testutil::Ex1 ex;
    auto [pub, priv] = keygen_with_exponents(ex.g, ex.h, 2, 3);
    CHECK(pub.c == ex.c);
    CHECK(priv.x == 2);
    CHECK(priv.y == 3);
    CHECK(priv.gx == ex.g.pow(2));
    CHECK(priv.hy == ex.h.pow(3));
    CHECK(priv.gx * priv.hy == pub.c);

    CHECK(raised([&] { keygen_with_exponents(ex.g, ex.g, 1, 1); }) == Errc::commuting_generators);

    Rng rng(4);
    auto [pub2, priv2] = keygen(ex.g, ex.h, rng);
    CHECK(priv2.x >= 1);
    CHECK(priv2.y >= 1);
    CHECK(priv2.x <= kDefaultExponentBound);
    CHECK(priv2.gx * priv2.hy == pub2.c);
    CHECK(is_invertible(pub2.c));
}

TEST_CASE("encrypt goldens and degenerate blinding") {
    testutil::Ex1 ex;
    auto [pub, priv] = keygen_with_exponents(ex.g, ex.h, 2, 3);

    Ciphertext ct = encrypt_with_exponents(pub, ex.m, 1, 1);
    CHECK(ct.c1 == ex.c1);
    CHECK(ct.c2 == ex.c2);

    Ciphertext flat = encrypt_with_exponents(pub, ex.m, 0, 0);
    CHECK(flat.c1 == pub.c);
    CHECK(flat.c2 == ex.m);

    MatrixF wrong_shape(3, 3, ex.f);
    CHECK(raised([&] { encrypt_with_exponents(pub, wrong_shape, 1, 1); }) ==
          Errc::dimension_mismatch);
}

TEST_CASE("decrypt: golden chain and malformed ciphertext") {
    testutil::Ex1 ex;
    auto [pub, priv] = keygen_with_exponents(ex.g, ex.h, 2, 3);
    Ciphertext ct = encrypt_with_exponents(pub, ex.m, 1, 1);
    CHECK(decrypt(priv, ct) == ex.m);

    Ciphertext id_ct = encrypt_with_exponents(pub, MatrixF::identity(2, ex.f), 5, 9);
    CHECK(decrypt(priv, id_ct) == MatrixF::identity(2, ex.f));

    Ciphertext bad{MatrixF(2, 2, ex.f), ex.c2};
    CHECK(raised([&] { decrypt(priv, bad); }) == Errc::singular_matrix);
}

TEST_CASE("encrypt/decrypt round trip across families, messages, exponents") {
    for (uint64_t seed = 1; seed <= 8; ++seed) {
        auto fam = seed % 2 ? GeneratorFamily::general_linear
                            : GeneratorFamily::upper_unitriangular;
        uint32_t n = seed % 2 ? 3 : 4;
        Instance inst = testutil::make_instance(1009, n, fam, seed);
        Rng rng(seed * 17);
        auto [pub, priv] = keygen(inst.g, inst.h, rng);
        MatrixF m = random_matrix(n, inst.g.field(), rng); // may be singular
        Ciphertext ct = encrypt(pub, m, rng);
        CHECK(decrypt(priv, ct) == m);

        // Negative blinding exponents work end to end.
        Ciphertext ct2 = encrypt_with_exponents(pub, m, -3, -11);
        CHECK(decrypt(priv, ct2) == m);
    }
}

TEST_CASE("naive shortcuts do not decrypt") {
    // c1 and c2 alone should not reveal m via the obvious quotients; this
    // guards against the scheme degenerating (the real break needs the span
    // or decomposition machinery).
    int shortcut_hits = 0, trials = 0;
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        Instance inst = testutil::make_instance(101, 3, GeneratorFamily::general_linear, seed);
        Rng rng(seed + 99);
        auto [pub, priv] = keygen(inst.g, inst.h, rng);
        MatrixF m = random_matrix(3, inst.g.field(), rng);
        if (!is_invertible(m)) continue;
        Ciphertext ct = encrypt(pub, m, rng);
        ++trials;
        if (ct.c1.inverse() * ct.c2 == m) ++shortcut_hits;
        if (ct.c2 * ct.c1.inverse() == m) ++shortcut_hits;
        if (pub.c.inverse() * ct.c2 == m) ++shortcut_hits;
    }
    CHECK(trials >= 5);
    CHECK(shortcut_hits == 0);
}

TEST_CASE("key exchange: goldens and agreement") {
    testutil::Ex1 ex;
    KexToken ta = kex_token(ex.g, ex.h, 1, 1, KexRole::initiator);
    KexToken tb = kex_token(ex.g, ex.h, 2, 1, KexRole::responder);
    CHECK(ta.t == ex.token_a);
    CHECK(tb.t == ex.token_b);
    CHECK(kex_token(ex.g, ex.h, 0, 0, KexRole::initiator).t == MatrixF::identity(2, ex.f));

    MatrixF ka = kex_shared(1, 1, tb, ex.g, ex.h);
    MatrixF kb = kex_shared(2, 1, ta, ex.g, ex.h);
    CHECK(ka == ex.k);
    CHECK(kb == ex.k);
    CHECK(ka == factor_compose(ex.g, 3, ex.h, 2));

    // Identity corner: peer token I, own exponents (0, 0).
    KexToken id_token = kex_token(ex.g, ex.h, 0, 0, KexRole::responder);
    CHECK(kex_shared(0, 0, id_token, ex.g, ex.h) == MatrixF::identity(2, ex.f));

    // Random-exponent agreement, negative exponents included.
    for (uint64_t seed = 1; seed <= 8; ++seed) {
        Instance inst = testutil::make_instance(101, 3, GeneratorFamily::general_linear, seed);
        Rng rng(seed);
        int64_t x1 = rng.range(-50, 50), y1 = rng.range(-50, 50);
        int64_t x2 = rng.range(-50, 50), y2 = rng.range(-50, 50);
        KexToken a = kex_token(inst.g, inst.h, x1, y1, KexRole::initiator);
        KexToken b = kex_token(inst.g, inst.h, x2, y2, KexRole::responder);
        MatrixF k1 = kex_shared(x1, y1, b, inst.g, inst.h);
        MatrixF k2 = kex_shared(x2, y2, a, inst.g, inst.h);
        CHECK(k1 == k2);
        CHECK(k1 == factor_compose(inst.g, x1 + x2, inst.h, y1 + y2));
    }
}
