#include "gfp.hpp"

#include <string>

namespace factorlab {

namespace {

bool is_prime_u32(uint32_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (uint64_t d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

void check_same_modulus(FieldElement a, FieldElement b) {
    if (a.modulus != b.modulus) {
        raise(Errc::modulus_mismatch,
              "field elements live over different moduli: " +
                  std::to_string(a.modulus) + " vs " + std::to_string(b.modulus));
    }
}

uint32_t raw_inv(uint32_t a, uint32_t p) {
    if (a == 0) raise(Errc::zero_inverse, "0 has no inverse mod " + std::to_string(p));
    // Extended Euclid on (a, p); p prime and a != 0 imply gcd = 1.
    int64_t r0 = a, r1 = p, s0 = 1, s1 = 0;
    while (r1 != 0) {
        int64_t q = r0 / r1;
        int64_t r2 = r0 - q * r1;
        int64_t s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    int64_t r = s0 % static_cast<int64_t>(p);
    return static_cast<uint32_t>(r < 0 ? r + p : r);
}

uint32_t raw_pow(uint32_t a, int64_t e, uint32_t p) {
    uint32_t base = a % p;
    uint64_t mag;
    if (e < 0) {
        base = raw_inv(base, p);
        mag = static_cast<uint64_t>(-(e + 1)) + 1;
    } else {
        mag = static_cast<uint64_t>(e);
    }
    uint32_t acc = 1 % p;
    while (mag != 0) {
        if (mag & 1) acc = static_cast<uint32_t>(static_cast<uint64_t>(acc) * base % p);
        base = static_cast<uint32_t>(static_cast<uint64_t>(base) * base % p);
        mag >>= 1;
    }
    return acc;
}

} // namespace

PrimeField::PrimeField(uint32_t p) : p_(p) {
    if (p <= 2 || p >= (1u << 31) || !is_prime_u32(p)) {
        raise(Errc::not_prime,
              "field modulus must be an odd prime in (2, 2^31), got " + std::to_string(p));
    }
}

uint32_t PrimeField::inv(uint32_t a) const { return raw_inv(a, p_); }

uint32_t PrimeField::pow(uint32_t a, int64_t e) const { return raw_pow(a, e, p_); }

FieldElement operator+(FieldElement a, FieldElement b) {
    check_same_modulus(a, b);
    uint32_t s = a.value + b.value;
    return {s >= a.modulus ? s - a.modulus : s, a.modulus};
}

FieldElement operator-(FieldElement a, FieldElement b) {
    check_same_modulus(a, b);
    return {a.value >= b.value ? a.value - b.value : a.value + a.modulus - b.value, a.modulus};
}

FieldElement operator*(FieldElement a, FieldElement b) {
    check_same_modulus(a, b);
    return {static_cast<uint32_t>(static_cast<uint64_t>(a.value) * b.value % a.modulus), a.modulus};
}

FieldElement ff_inv(FieldElement a) { return {raw_inv(a.value, a.modulus), a.modulus}; }

FieldElement ff_pow(FieldElement a, int64_t e) { return {raw_pow(a.value, e, a.modulus), a.modulus}; }

} // namespace factorlab
