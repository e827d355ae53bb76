#pragma once

#include <optional>
#include <utility>

#include "errors.hpp"
#include "instance.hpp"
#include "matrix.hpp"
#include "rng.hpp"

namespace testutil {

using namespace factorlab;

// Runs fn and reports the Errc it raised, or nullopt if it returned normally.
template <typename Fn>
std::optional<Errc> raised(Fn&& fn) {
    try {
        fn();
        return std::nullopt;
    } catch (const Error& e) {
        return e.code();
    }
}

// The hand-verified micro-instance used across the suite:
// p=7, g=[[1,1],[0,1]], h=[[1,0],[1,1]], keys x=2,y=3, blinding x'=1,y'=1.
struct Ex1 {
    PrimeField f{7};
    MatrixF g = MatrixF::from_rows({{1, 1}, {0, 1}}, f);
    MatrixF h = MatrixF::from_rows({{1, 0}, {1, 1}}, f);
    MatrixF m = MatrixF::from_rows({{2, 0}, {0, 4}}, f);
    MatrixF c = MatrixF::from_rows({{0, 2}, {3, 1}}, f);    // g^2 h^3
    MatrixF c1 = MatrixF::from_rows({{6, 3}, {4, 1}}, f);   // g^3 h^4
    MatrixF c2 = MatrixF::from_rows({{4, 4}, {2, 4}}, f);   // g h m
    MatrixF s = MatrixF::from_rows({{2, 1}, {1, 1}}, f);    // g h
    MatrixF token_a = MatrixF::from_rows({{2, 1}, {1, 1}}, f); // g^1 h^1
    MatrixF token_b = MatrixF::from_rows({{3, 2}, {1, 1}}, f); // g^2 h^1
    MatrixF k = MatrixF::from_rows({{0, 3}, {2, 1}}, f);       // g^3 h^2
};

inline Instance make_instance(uint32_t p, uint32_t n, GeneratorFamily fam, uint64_t seed) {
    InstanceSpec spec;
    spec.p = p;
    spec.n = n;
    spec.family = fam;
    spec.seed = seed;
    Rng rng(seed);
    return gen_instance(spec, rng);
}

} // namespace testutil
