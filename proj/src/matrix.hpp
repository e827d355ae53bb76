#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "gfp.hpp"

namespace factorlab {

// Dense row-major matrix over F_p. Group elements are always square;
// rectangular shapes appear only in the row-reduction machinery.
class MatrixF {
public:
    static constexpr uint32_t kMaxDim = 64;

    MatrixF(uint32_t rows, uint32_t cols, PrimeField field); // zero-filled
    static MatrixF identity(uint32_t n, PrimeField field);
    // Entries may be arbitrary integers; they are reduced mod p.
    static MatrixF from_rows(const std::vector<std::vector<int64_t>>& rows, PrimeField field);

    uint32_t rows() const noexcept { return rows_; }
    uint32_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    const PrimeField& field() const noexcept { return field_; }

    uint32_t at(uint32_t r, uint32_t c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
    void set(uint32_t r, uint32_t c, uint32_t v) { a_[static_cast<size_t>(r) * cols_ + c] = v; }
    FieldElement element(uint32_t r, uint32_t c) const { return {at(r, c), field_.modulus()}; }

    const std::vector<uint32_t>& raw() const noexcept { return a_; }

    MatrixF operator*(const MatrixF& rhs) const;
    MatrixF operator+(const MatrixF& rhs) const;
    MatrixF operator-(const MatrixF& rhs) const;
    MatrixF scaled(uint32_t s) const;

    // a^e for signed e; e = 0 gives the identity, negative e inverts first.
    MatrixF pow(int64_t e) const;
    // Gauss-Jordan on [a | I]; throws Errc::singular_matrix.
    MatrixF inverse() const;

    bool is_zero() const;
    bool operator==(const MatrixF& rhs) const;

private:
    uint32_t rows_, cols_;
    PrimeField field_;
    std::vector<uint32_t> a_;
};

std::ostream& operator<<(std::ostream& os, const MatrixF& m);

// Reduced row echelon form together with the row-operation record T,
// satisfying T * input = rref.
struct RrefResult {
    MatrixF rref;
    std::vector<uint32_t> pivots;
    MatrixF transform;

    uint32_t rank() const noexcept { return static_cast<uint32_t>(pivots.size()); }
};

RrefResult rref(const MatrixF& a);

uint32_t rank(const MatrixF& a);
bool is_invertible(const MatrixF& a);

// Basis of {v : a v = 0}, one vector per free column, each rescaled so its
// leading nonzero coordinate is 1. Empty when the kernel is trivial.
std::vector<std::vector<uint32_t>> nullspace(const MatrixF& a);

} // namespace factorlab
