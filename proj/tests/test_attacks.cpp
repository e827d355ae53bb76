#include <cstdint>

#include <doctest.h>

#include "attacks.hpp"
#include "helpers.hpp"
#include "instance.hpp"

using namespace factorlab;
using testutil::raised;

namespace {

struct Ex1Setup {
    testutil::Ex1 ex;
    std::pair<PublicKey, PrivateKey> keys = keygen_with_exponents(ex.g, ex.h, 2, 3);
    PublicKey& pub = keys.first;
    PrivateKey& priv = keys.second;
    Ciphertext ct = encrypt_with_exponents(pub, ex.m, 1, 1);
};

} // namespace

TEST_CASE("commutation system: EX1 solution space") {
    Ex1Setup t;
    CommutationSolutionSpace space = solve_commutation_system(t.pub);
    CHECK(space.ambient.dim() == 2); // Lin(<g>) = span{I, g}

    // One-dimensional space spanned by 2I + g = [[3,1],[0,3]].
    REQUIRE(space.solutions.size() == 1);
    CHECK(space.solutions[0] == MatrixF::from_rows({{3, 1}, {0, 3}}, t.ex.f));

    // Defining property f c h = h f c, and the known solution g^-2 in the space.
    for (const MatrixF& f : space.solutions)
        CHECK(f * t.pub.c * t.pub.h == t.pub.h * f * t.pub.c);
    MatrixF winv = t.ex.g.pow(-2);
    CHECK(winv == space.solutions[0].scaled(5)); // g^-2 = 5 * (2I + g)
}

TEST_CASE("commutation system: residual is zero and g^-x is a member") {
    for (uint64_t seed = 1; seed <= 6; ++seed) {
        Instance inst = testutil::make_instance(101, 4, GeneratorFamily::general_linear, seed);
        Rng rng(seed);
        auto [pub, priv] = keygen(inst.g, inst.h, rng);
        CommutationSolutionSpace space = solve_commutation_system(pub);
        CHECK(!space.solutions.empty());
        for (const MatrixF& f : space.solutions)
            CHECK((f * pub.c * pub.h - pub.h * f * pub.c).is_zero());

        // Harness-known x: g^-x solves Eq. (1) and lies in Lin(<g>).
        MatrixF gmx = inst.g.pow(-priv.x);
        CHECK(gmx * pub.c * pub.h == pub.h * gmx * pub.c);
        CHECK(space.ambient.contains(gmx));
    }
}

TEST_CASE("commuting generators make every f a solution") {
    PrimeField f7(7);
    MatrixF g = MatrixF::from_rows({{2, 0}, {0, 4}}, f7);
    MatrixF h = MatrixF::from_rows({{3, 0}, {0, 5}}, f7); // diagonal: commutes with g
    PublicKey pub{g, h, g * h};
    CommutationSolutionSpace space = solve_commutation_system(pub);
    CHECK(space.solutions.size() == space.ambient.dim()); // all of Lin(<g>)
}

TEST_CASE("invertible combination sampling") {
    PrimeField f(7);
    Rng rng(1);

    auto [one, attempts1] = sample_invertible_combination({MatrixF::identity(2, f)}, rng);
    CHECK(is_invertible(one));
    CHECK(attempts1 >= 1);

    // det(beta * [[3,1],[0,3]]) = 2 beta^2 != 0 for beta != 0.
    auto [m, attempts2] =
        sample_invertible_combination({MatrixF::from_rows({{3, 1}, {0, 3}}, f)}, rng);
    CHECK(is_invertible(m));
    CHECK(attempts2 >= 1);

    // Nilpotent span: never invertible.
    MatrixF nil = MatrixF::from_rows({{0, 1}, {0, 0}}, f);
    CHECK(raised([&] { sample_invertible_combination({nil}, rng, 64); }) ==
          Errc::no_invertible_combination);

    CHECK(raised([&] { sample_invertible_combination({}, rng); }) == Errc::internal);
}

TEST_CASE("span attack on EX1: exact chain") {
    Ex1Setup t;

    // The published intermediates for f = [[3,1],[0,3]].
    MatrixF f = MatrixF::from_rows({{3, 1}, {0, 3}}, t.ex.f);
    CHECK(f * t.pub.c == MatrixF::from_rows({{3, 0}, {2, 3}}, t.ex.f));
    CHECK(f * t.ct.c1 == MatrixF::from_rows({{1, 3}, {5, 3}}, t.ex.f));
    MatrixF s = (f * t.ct.c1) * (f * t.pub.c).inverse();
    CHECK(s == t.ex.s);
    CHECK(s.inverse() * t.ct.c2 == t.ex.m);

    // The full attack (random f from the 1-dim space) recovers m too.
    Rng rng(3);
    AttackReport r = span_attack_decrypt(t.pub, t.ct, rng);
    CHECK(r.recovered == t.ex.m);
    CHECK(r.method == "span");
    CHECK(r.span_dimension == 2);
    CHECK(r.sampling_attempts >= 1);
}

TEST_CASE("span attack: degenerate blinding gives s = I") {
    Ex1Setup t;
    Ciphertext flat = encrypt_with_exponents(t.pub, t.ex.m, 0, 0);
    Rng rng(5);
    AttackReport r = span_attack_decrypt(t.pub, flat, rng);
    CHECK(r.recovered == t.ex.m); // s = I, m = c2
}

TEST_CASE("lindecomp attack on EX1") {
    Ex1Setup t;
    AttackReport r = lindecomp_attack_decrypt(t.pub, t.ct);
    CHECK(r.recovered == t.ex.m);
    CHECK(r.method == "lindecomp");
    CHECK(r.span_dimension == 4);
    CHECK(r.sampling_attempts == 0);

    Ciphertext flat = encrypt_with_exponents(t.pub, t.ex.m, 0, 0);
    CHECK(lindecomp_attack_decrypt(t.pub, flat).recovered == t.ex.m);
}

TEST_CASE("oracle equivalence: both attacks equal honest decrypt") {
    for (uint64_t seed = 1; seed <= 12; ++seed) {
        auto fam = seed % 2 ? GeneratorFamily::general_linear
                            : GeneratorFamily::upper_unitriangular;
        uint32_t n = 3 + static_cast<uint32_t>(seed % 2);
        Instance inst = testutil::make_instance(101, n, fam, seed);
        Rng rng(seed * 7);
        auto [pub, priv] = keygen(inst.g, inst.h, rng);
        MatrixF m = random_matrix(n, inst.g.field(), rng);
        Ciphertext ct = encrypt(pub, m, rng);

        MatrixF honest = decrypt(priv, ct);
        AttackReport lin = lindecomp_attack_decrypt(pub, ct);
        AttackReport spn = span_attack_decrypt(pub, ct, rng);
        CHECK(honest == m);
        CHECK(lin.recovered == m);
        CHECK(spn.recovered == m);
        CHECK(lin.span_dimension <= n * n);
        CHECK(spn.span_dimension <= n);
    }
}

TEST_CASE("kex attack: EX1 golden, identity token, role symmetry") {
    testutil::Ex1 ex;
    KexToken ta = kex_token(ex.g, ex.h, 1, 1, KexRole::initiator);
    KexToken tb = kex_token(ex.g, ex.h, 2, 1, KexRole::responder);

    AttackReport r = lindecomp_attack_kex(ex.g, ex.h, ta, tb);
    CHECK(r.recovered == ex.k);
    CHECK(r.method == "lindecomp-kex");

    // tokenA = I selects the identity monomial: K = tokenB.
    KexToken id_token = kex_token(ex.g, ex.h, 0, 0, KexRole::initiator);
    CHECK(lindecomp_attack_kex(ex.g, ex.h, id_token, tb).recovered == tb.t);

    // Swapped roles give the same K.
    CHECK(lindecomp_attack_kex(ex.g, ex.h, tb, ta).recovered == ex.k);
}

TEST_CASE("kex attack equals both honest shared keys on random instances") {
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        Instance inst = testutil::make_instance(1009, 3, GeneratorFamily::general_linear, seed);
        Rng rng(seed);
        int64_t x1 = rng.range(1, 1000), y1 = rng.range(1, 1000);
        int64_t x2 = rng.range(1, 1000), y2 = rng.range(1, 1000);
        KexToken ta = kex_token(inst.g, inst.h, x1, y1, KexRole::initiator);
        KexToken tb = kex_token(inst.g, inst.h, x2, y2, KexRole::responder);
        MatrixF ka = kex_shared(x1, y1, tb, inst.g, inst.h);
        MatrixF kb = kex_shared(x2, y2, ta, inst.g, inst.h);
        AttackReport r = lindecomp_attack_kex(inst.g, inst.h, ta, tb);
        CHECK(ka == kb);
        CHECK(r.recovered == ka);
    }
}
