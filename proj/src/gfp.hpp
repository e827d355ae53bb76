#pragma once

#include <cstdint>

#include "errors.hpp"

namespace factorlab {

// Exact arithmetic in the prime field F_p. The modulus is restricted to
// odd primes below 2^31 so every product of reduced residues fits in a
// 64-bit intermediate.
class PrimeField {
public:
    // Validates primality by trial division; throws Errc::not_prime.
    explicit PrimeField(uint32_t p);

    uint32_t modulus() const noexcept { return p_; }

    uint32_t reduce(int64_t x) const noexcept {
        int64_t r = x % static_cast<int64_t>(p_);
        return static_cast<uint32_t>(r < 0 ? r + p_ : r);
    }

    uint32_t add(uint32_t a, uint32_t b) const noexcept {
        uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }

    uint32_t sub(uint32_t a, uint32_t b) const noexcept {
        return a >= b ? a - b : a + p_ - b;
    }

    uint32_t neg(uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }

    uint32_t mul(uint32_t a, uint32_t b) const noexcept {
        return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
    }

    // Inverse via extended Euclid, so it never relies on primality.
    // Throws Errc::zero_inverse for a = 0.
    uint32_t inv(uint32_t a) const;

    // Signed exponent square-and-multiply; negative e routes through inv().
    // 0^0 = 1 (empty product).
    uint32_t pow(uint32_t a, int64_t e) const;

    bool operator==(const PrimeField&) const noexcept = default;

private:
    uint32_t p_;
};

// One reduced residue tagged with its modulus; the scalar type exposed at
// API surfaces (matrix entries, span coefficients).
struct FieldElement {
    uint32_t value = 0;
    uint32_t modulus = 0;

    bool operator==(const FieldElement&) const noexcept = default;
};

FieldElement operator+(FieldElement a, FieldElement b);
FieldElement operator-(FieldElement a, FieldElement b);
FieldElement operator*(FieldElement a, FieldElement b);

FieldElement ff_inv(FieldElement a);
FieldElement ff_pow(FieldElement a, int64_t e);

} // namespace factorlab
