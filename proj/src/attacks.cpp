#include "attacks.hpp"

#include <chrono>

namespace factorlab {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Powers g^0..g^max, one multiplication per step.
std::vector<MatrixF> power_table(const MatrixF& g, uint32_t max_exp) {
    std::vector<MatrixF> t;
    t.reserve(max_exp + 1);
    t.push_back(MatrixF::identity(g.rows(), g.field()));
    for (uint32_t i = 1; i <= max_exp; ++i) t.push_back(t.back() * g);
    return t;
}

// sum alpha_i g^(u_i) mid_i h^(v_i) over the basis tags, with mid supplied
// per call (identity for the cryptosystem, token B for the key exchange).
MatrixF reassemble(const TaggedBasis& basis, const std::vector<FieldElement>& alpha,
                   const MatrixF& mid) {
    uint32_t max_u = 0, max_v = 0;
    for (const auto& e : basis.elements()) {
        max_u = std::max(max_u, e.u);
        max_v = std::max(max_v, e.v);
    }
    auto gp = power_table(basis.g(), max_u);
    auto hp = power_table(basis.h(), max_v);

    MatrixF sum(mid.rows(), mid.cols(), mid.field());
    for (size_t i = 0; i < basis.elements().size(); ++i) {
        const auto& e = basis.elements()[i];
        if (alpha[i].value == 0) continue;
        sum = sum + (gp[e.u] * mid * hp[e.v]).scaled(alpha[i].value);
    }
    return sum;
}

} // namespace

CommutationSolutionSpace solve_commutation_system(const PublicKey& pub) {
    TaggedBasis ambient = cyclic_span_basis(pub.g);
    const uint32_t n = pub.g.rows();
    const uint32_t dim = ambient.dim();
    const PrimeField& f = pub.g.field();

    // Column i holds vec(b_i c h - h b_i c); the kernel of this n^2 x dim
    // system is the coefficient space of all solutions.
    MatrixF sys(n * n, dim, f);
    for (uint32_t i = 0; i < dim; ++i) {
        const MatrixF& b = ambient.elements()[i].mat;
        MatrixF bc = b * pub.c;
        MatrixF residual = bc * pub.h - pub.h * bc;
        auto col = vectorize(residual);
        for (uint32_t r = 0; r < n * n; ++r) sys.set(r, i, col[r]);
    }

    // Special solutions of the kernel, one per free column, free coordinate
    // left at 1 (unscaled).
    RrefResult rr = rref(sys);
    std::vector<bool> is_pivot(dim, false);
    for (uint32_t c : rr.pivots) is_pivot[c] = true;

    std::vector<MatrixF> solutions;
    for (uint32_t free = 0; free < dim; ++free) {
        if (is_pivot[free]) continue;
        std::vector<uint32_t> alpha(dim, 0);
        alpha[free] = 1;
        for (uint32_t r = 0; r < rr.pivots.size(); ++r) {
            alpha[rr.pivots[r]] = f.neg(rr.rref.at(r, free));
        }
        MatrixF sol(n, n, f);
        for (uint32_t i = 0; i < dim; ++i) {
            if (alpha[i] != 0) sol = sol + ambient.elements()[i].mat.scaled(alpha[i]);
        }
        solutions.push_back(std::move(sol));
    }
    if (solutions.empty()) {
        raise(Errc::empty_solution_space,
              "commutation equation has no solution in Lin(<g>); g^-x always solves it, "
              "so this indicates a bug or a malformed key");
    }
    return {std::move(ambient), std::move(solutions)};
}

std::pair<MatrixF, uint32_t> sample_invertible_combination(const std::vector<MatrixF>& solutions,
                                                           Rng& rng, uint32_t max_attempts) {
    if (solutions.empty()) raise(Errc::internal, "sampling over an empty solution set");
    const PrimeField& f = solutions[0].field();
    for (uint32_t attempt = 1; attempt <= max_attempts; ++attempt) {
        MatrixF comb(solutions[0].rows(), solutions[0].cols(), f);
        for (const MatrixF& s : solutions) {
            uint32_t beta = rng.field_value(f);
            if (beta != 0) comb = comb + s.scaled(beta);
        }
        if (is_invertible(comb)) return {std::move(comb), attempt};
    }
    raise(Errc::no_invertible_combination,
          "no invertible combination after " + std::to_string(max_attempts) + " draws");
}

AttackReport span_attack_decrypt(const PublicKey& pub, const Ciphertext& ct, Rng& rng,
                                 uint32_t max_attempts) {
    auto start = Clock::now();
    CommutationSolutionSpace space = solve_commutation_system(pub);
    auto [f, attempts] = sample_invertible_combination(space.solutions, rng, max_attempts);
    // f commutes with every power of g, and f c commutes with every power of
    // h, so (f c1)(f c)^-1 = g^x' h^y'.
    MatrixF s = (f * ct.c1) * (f * pub.c).inverse();
    MatrixF m = s.inverse() * ct.c2;
    return {"span", std::move(m), std::nullopt, space.ambient.dim(), attempts, ms_since(start)};
}

AttackReport lindecomp_attack_decrypt(const PublicKey& pub, const Ciphertext& ct) {
    auto start = Clock::now();
    TaggedBasis basis = monomial_closure_basis(pub.g, pub.h, pub.c);
    // c1 = g^x' c h^y' lies in the span for every honest ciphertext.
    std::vector<FieldElement> alpha = basis.express(ct.c1);
    MatrixF s = reassemble(basis, alpha, MatrixF::identity(pub.g.rows(), pub.g.field()));
    MatrixF m = s.inverse() * ct.c2;
    return {"lindecomp", std::move(m), std::nullopt, basis.dim(), 0, ms_since(start)};
}

AttackReport lindecomp_attack_kex(const MatrixF& g, const MatrixF& h, const KexToken& token_a,
                                  const KexToken& token_b) {
    auto start = Clock::now();
    TaggedBasis basis = monomial_closure_basis(g, h, MatrixF::identity(g.rows(), g.field()));
    std::vector<FieldElement> alpha = basis.express(token_a.t);
    MatrixF k = reassemble(basis, alpha, token_b.t);
    return {"lindecomp-kex", std::move(k), std::nullopt, basis.dim(), 0, ms_since(start)};
}

} // namespace factorlab
