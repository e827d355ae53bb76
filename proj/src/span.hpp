#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "matrix.hpp"

namespace factorlab {

// Row-major flattening of a matrix; bijective with unvectorize.
std::vector<uint32_t> vectorize(const MatrixF& m);
MatrixF unvectorize(const std::vector<uint32_t>& v, uint32_t rows, uint32_t cols,
                    const PrimeField& field);

// Growing row-echelon form with coefficient bookkeeping: every stored row is
// remembered as a linear combination of the admitted vectors, so membership
// tests also yield coordinates over the admitted set. Rows are kept sorted by
// pivot; each row's entries before its pivot are zero, so one pass in pivot
// order reduces any vector.
class IncrementalEchelon {
public:
    IncrementalEchelon(PrimeField field, size_t width);

    size_t rank() const noexcept { return rows_.size(); }
    size_t width() const noexcept { return width_; }

    // Admits v as a new basis vector iff it increases the rank.
    bool insert(const std::vector<uint32_t>& v);

    // Coordinates of v over the admitted vectors, or nullopt if v is outside
    // the span. Does not modify the echelon.
    std::optional<std::vector<uint32_t>> coordinates(const std::vector<uint32_t>& v) const;

    bool contains(const std::vector<uint32_t>& v) const { return coordinates(v).has_value(); }

private:
    struct Row {
        std::vector<uint32_t> vals;
        size_t pivot;
        std::vector<uint32_t> combo; // coordinates over admitted vectors, at admission time
    };

    // Reduces v in place; returns the (row index, coefficient) pairs used.
    std::vector<std::pair<size_t, uint32_t>> reduce(std::vector<uint32_t>& v) const;

    PrimeField field_;
    size_t width_;
    size_t admitted_ = 0;
    std::vector<Row> rows_; // sorted by pivot
};

// One span element g^u * anchor * h^v together with its exponent tag.
struct TaggedElement {
    uint32_t u;
    uint32_t v;
    MatrixF mat;
};

// Linearly independent span elements with cached echelon; spans of the form
// Lin(<g>), Lin(<g> c <h>) and Lin(<g><h>) all live here.
class TaggedBasis {
public:
    TaggedBasis(MatrixF g, MatrixF h, MatrixF anchor);

    const MatrixF& g() const noexcept { return g_; }
    const MatrixF& h() const noexcept { return h_; }
    const MatrixF& anchor() const noexcept { return anchor_; }
    const std::vector<TaggedElement>& elements() const noexcept { return elements_; }
    uint32_t dim() const noexcept { return static_cast<uint32_t>(elements_.size()); }

    bool contains(const MatrixF& target) const;
    // Unique coefficients alpha with target = sum alpha_i * elements[i].mat;
    // throws Errc::not_in_span otherwise.
    std::vector<FieldElement> express(const MatrixF& target) const;

    // Admits (u, v, mat) iff it grows the span.
    bool admit(uint32_t u, uint32_t v, const MatrixF& mat);

private:
    MatrixF g_, h_, anchor_;
    std::vector<TaggedElement> elements_;
    IncrementalEchelon echelon_;
};

// Basis I, g, ..., g^k of Lin(<g>), stopping at the first power that is
// already spanned; k+1 <= n by Cayley-Hamilton. Throws Errc::singular_matrix
// for non-invertible g.
TaggedBasis cyclic_span_basis(const MatrixF& g);

// Basis of the smallest subspace containing c that is closed under left
// multiplication by g and right multiplication by h, built breadth-first,
// g-step proposed before h-step. Closure under invertible g and h on a
// finite-dimensional invariant subspace gives closure under their inverses
// too, so the result spans every g^i c h^j with i, j in Z.
TaggedBasis monomial_closure_basis(const MatrixF& g, const MatrixF& h, const MatrixF& c);

std::vector<FieldElement> express_in_span(const TaggedBasis& basis, const MatrixF& target);

} // namespace factorlab
