#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "matrix.hpp"
#include "rng.hpp"
#include "scheme.hpp"

namespace factorlab {

enum class GeneratorFamily { general_linear, upper_unitriangular };

const char* family_name(GeneratorFamily f);
GeneratorFamily family_from_name(const std::string& name); // Errc::bad_spec on unknown

struct InstanceSpec {
    uint32_t p = 7;
    uint32_t n = 2;
    GeneratorFamily family = GeneratorFamily::general_linear;
    int64_t exponent_bound = kDefaultExponentBound;
    uint64_t seed = 0;
};

// Throws Errc::bad_spec (or Errc::not_prime via PrimeField) on invalid specs.
void validate_spec(const InstanceSpec& spec);

// A generated pair of non-commuting invertible generators along with the spec
// that produced it.
struct Instance {
    InstanceSpec spec;
    MatrixF g;
    MatrixF h;
};

// Draws (g, h) from the requested family, rejecting until both are invertible
// and g h != h g. Throws Errc::generation_exhausted after 1000 rejected pairs
// (reachable only in degenerate groups, e.g. the abelian UT_2).
std::pair<MatrixF, MatrixF> gen_generators(const InstanceSpec& spec, Rng& rng);

Instance gen_instance(const InstanceSpec& spec, Rng& rng);

// Uniform matrix over F_p; any matrix is a valid message, singular included.
MatrixF random_matrix(uint32_t n, const PrimeField& field, Rng& rng);

} // namespace factorlab
