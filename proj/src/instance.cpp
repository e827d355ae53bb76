#include "instance.hpp"

namespace factorlab {

namespace {

constexpr int kMaxRejections = 1000;

MatrixF random_invertible(uint32_t n, const PrimeField& field, Rng& rng) {
    for (int i = 0; i < kMaxRejections; ++i) {
        MatrixF m = random_matrix(n, field, rng);
        if (is_invertible(m)) return m;
    }
    raise(Errc::generation_exhausted, "could not sample an invertible matrix");
}

MatrixF random_unitriangular(uint32_t n, const PrimeField& field, Rng& rng) {
    MatrixF m = MatrixF::identity(n, field);
    for (uint32_t r = 0; r < n; ++r) {
        for (uint32_t c = r + 1; c < n; ++c) m.set(r, c, rng.field_value(field));
    }
    return m;
}

} // namespace

const char* family_name(GeneratorFamily f) {
    return f == GeneratorFamily::general_linear ? "general-linear" : "unitriangular";
}

GeneratorFamily family_from_name(const std::string& name) {
    if (name == "general-linear") return GeneratorFamily::general_linear;
    if (name == "unitriangular" || name == "upper-unitriangular")
        return GeneratorFamily::upper_unitriangular;
    raise(Errc::bad_spec, "unknown generator family '" + name +
                              "' (expected general-linear or unitriangular)");
}

void validate_spec(const InstanceSpec& spec) {
    PrimeField field(spec.p); // validates the modulus
    if (spec.n < 2 || spec.n > MatrixF::kMaxDim) {
        raise(Errc::bad_spec, "dimension n must be in [2, 64], got " + std::to_string(spec.n));
    }
    if (spec.exponent_bound < 1) {
        raise(Errc::bad_spec, "exponent bound must be >= 1");
    }
}

MatrixF random_matrix(uint32_t n, const PrimeField& field, Rng& rng) {
    MatrixF m(n, n, field);
    for (uint32_t r = 0; r < n; ++r) {
        for (uint32_t c = 0; c < n; ++c) m.set(r, c, rng.field_value(field));
    }
    return m;
}

std::pair<MatrixF, MatrixF> gen_generators(const InstanceSpec& spec, Rng& rng) {
    validate_spec(spec);
    PrimeField field(spec.p);
    for (int i = 0; i < kMaxRejections; ++i) {
        MatrixF g = spec.family == GeneratorFamily::general_linear
                        ? random_invertible(spec.n, field, rng)
                        : random_unitriangular(spec.n, field, rng);
        MatrixF h = spec.family == GeneratorFamily::general_linear
                        ? random_invertible(spec.n, field, rng)
                        : random_unitriangular(spec.n, field, rng);
        if (!(g * h == h * g)) return {std::move(g), std::move(h)};
    }
    raise(Errc::generation_exhausted,
          "no non-commuting pair after " + std::to_string(kMaxRejections) +
              " draws; the requested group may be abelian (e.g. UT_2)");
}

Instance gen_instance(const InstanceSpec& spec, Rng& rng) {
    auto [g, h] = gen_generators(spec, rng);
    return {spec, std::move(g), std::move(h)};
}

} // namespace factorlab
