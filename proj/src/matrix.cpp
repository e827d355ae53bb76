#include "matrix.hpp"

#include <ostream>
#include <string>

namespace factorlab {

namespace {

void check_same_field(const MatrixF& a, const MatrixF& b) {
    if (!(a.field() == b.field())) {
        raise(Errc::modulus_mismatch,
              "matrices live over different fields: p=" + std::to_string(a.field().modulus()) +
                  " vs p=" + std::to_string(b.field().modulus()));
    }
}

void check_same_shape(const MatrixF& a, const MatrixF& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        raise(Errc::dimension_mismatch,
              "shape mismatch: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                  " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
}

void check_dim(uint32_t rows, uint32_t cols) {
    if (rows == 0 || cols == 0 || rows > MatrixF::kMaxDim * MatrixF::kMaxDim ||
        cols > MatrixF::kMaxDim * MatrixF::kMaxDim) {
        raise(Errc::dimension_mismatch,
              "unsupported matrix shape " + std::to_string(rows) + "x" + std::to_string(cols));
    }
}

} // namespace

MatrixF::MatrixF(uint32_t rows, uint32_t cols, PrimeField field)
    : rows_(rows), cols_(cols), field_(field),
      a_(static_cast<size_t>(rows) * cols, 0) {
    check_dim(rows, cols);
}

MatrixF MatrixF::identity(uint32_t n, PrimeField field) {
    MatrixF m(n, n, field);
    for (uint32_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

MatrixF MatrixF::from_rows(const std::vector<std::vector<int64_t>>& rows, PrimeField field) {
    if (rows.empty() || rows[0].empty()) {
        raise(Errc::dimension_mismatch, "matrix literal must be non-empty");
    }
    MatrixF m(static_cast<uint32_t>(rows.size()), static_cast<uint32_t>(rows[0].size()), field);
    for (uint32_t r = 0; r < m.rows(); ++r) {
        if (rows[r].size() != rows[0].size()) {
            raise(Errc::dimension_mismatch, "ragged matrix literal");
        }
        for (uint32_t c = 0; c < m.cols(); ++c) m.set(r, c, field.reduce(rows[r][c]));
    }
    return m;
}

MatrixF MatrixF::operator*(const MatrixF& rhs) const {
    check_same_field(*this, rhs);
    if (cols_ != rhs.rows_) {
        raise(Errc::dimension_mismatch,
              "cannot multiply " + std::to_string(rows_) + "x" + std::to_string(cols_) + " by " +
                  std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
    }
    const uint64_t p = field_.modulus();
    MatrixF out(rows_, rhs.cols_, field_);
    for (uint32_t i = 0; i < rows_; ++i) {
        for (uint32_t k = 0; k < cols_; ++k) {
            uint64_t aik = at(i, k);
            if (aik == 0) continue;
            for (uint32_t j = 0; j < rhs.cols_; ++j) {
                uint64_t acc = out.at(i, j) + (aik * rhs.at(k, j)) % p;
                out.set(i, j, static_cast<uint32_t>(acc >= p ? acc - p : acc));
            }
        }
    }
    return out;
}

MatrixF MatrixF::operator+(const MatrixF& rhs) const {
    check_same_field(*this, rhs);
    check_same_shape(*this, rhs);
    MatrixF out(rows_, cols_, field_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = field_.add(a_[i], rhs.a_[i]);
    return out;
}

MatrixF MatrixF::operator-(const MatrixF& rhs) const {
    check_same_field(*this, rhs);
    check_same_shape(*this, rhs);
    MatrixF out(rows_, cols_, field_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = field_.sub(a_[i], rhs.a_[i]);
    return out;
}

MatrixF MatrixF::scaled(uint32_t s) const {
    MatrixF out(rows_, cols_, field_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = field_.mul(a_[i], s);
    return out;
}

MatrixF MatrixF::pow(int64_t e) const {
    if (!is_square()) raise(Errc::dimension_mismatch, "pow requires a square matrix");
    MatrixF base = *this;
    uint64_t mag;
    if (e < 0) {
        base = inverse();
        mag = static_cast<uint64_t>(-(e + 1)) + 1;
    } else {
        mag = static_cast<uint64_t>(e);
    }
    MatrixF acc = identity(rows_, field_);
    while (mag != 0) {
        if (mag & 1) acc = acc * base;
        base = base * base;
        mag >>= 1;
    }
    return acc;
}

MatrixF MatrixF::inverse() const {
    if (!is_square()) raise(Errc::dimension_mismatch, "inverse requires a square matrix");
    const uint32_t n = rows_;
    // Gauss-Jordan on [a | I].
    MatrixF work(n, 2 * n, field_);
    for (uint32_t r = 0; r < n; ++r) {
        for (uint32_t c = 0; c < n; ++c) work.set(r, c, at(r, c));
        work.set(r, n + r, 1);
    }
    uint32_t row = 0;
    for (uint32_t col = 0; col < n; ++col) {
        uint32_t piv = row;
        while (piv < n && work.at(piv, col) == 0) ++piv;
        if (piv == n) raise(Errc::singular_matrix, "matrix is singular");
        if (piv != row) {
            for (uint32_t c = 0; c < 2 * n; ++c) {
                uint32_t t = work.at(row, c);
                work.set(row, c, work.at(piv, c));
                work.set(piv, c, t);
            }
        }
        uint32_t s = field_.inv(work.at(row, col));
        for (uint32_t c = 0; c < 2 * n; ++c) work.set(row, c, field_.mul(work.at(row, c), s));
        for (uint32_t r = 0; r < n; ++r) {
            if (r == row) continue;
            uint32_t f = work.at(r, col);
            if (f == 0) continue;
            for (uint32_t c = 0; c < 2 * n; ++c) {
                work.set(r, c, field_.sub(work.at(r, c), field_.mul(f, work.at(row, c))));
            }
        }
        ++row;
    }
    MatrixF out(n, n, field_);
    for (uint32_t r = 0; r < n; ++r) {
        for (uint32_t c = 0; c < n; ++c) out.set(r, c, work.at(r, n + c));
    }
    return out;
}

bool MatrixF::is_zero() const {
    for (uint32_t v : a_) {
        if (v != 0) return false;
    }
    return true;
}

bool MatrixF::operator==(const MatrixF& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && field_ == rhs.field_ && a_ == rhs.a_;
}

std::ostream& operator<<(std::ostream& os, const MatrixF& m) {
    os << "[";
    for (uint32_t r = 0; r < m.rows(); ++r) {
        os << (r ? ",[" : "[");
        for (uint32_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m.at(r, c);
        os << "]";
    }
    return os << "] mod " << m.field().modulus();
}

RrefResult rref(const MatrixF& a) {
    const PrimeField& f = a.field();
    MatrixF r = a;
    MatrixF t = MatrixF::identity(a.rows(), f);
    std::vector<uint32_t> pivots;
    uint32_t row = 0;
    for (uint32_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        // First nonzero entry scanning top to bottom; arithmetic is exact so
        // there is nothing to gain from pivot magnitude games.
        uint32_t piv = row;
        while (piv < a.rows() && r.at(piv, col) == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != row) {
            for (uint32_t c = 0; c < a.cols(); ++c) {
                uint32_t tmp = r.at(row, c);
                r.set(row, c, r.at(piv, c));
                r.set(piv, c, tmp);
            }
            for (uint32_t c = 0; c < a.rows(); ++c) {
                uint32_t tmp = t.at(row, c);
                t.set(row, c, t.at(piv, c));
                t.set(piv, c, tmp);
            }
        }
        uint32_t s = f.inv(r.at(row, col));
        for (uint32_t c = 0; c < a.cols(); ++c) r.set(row, c, f.mul(r.at(row, c), s));
        for (uint32_t c = 0; c < a.rows(); ++c) t.set(row, c, f.mul(t.at(row, c), s));
        for (uint32_t rr = 0; rr < a.rows(); ++rr) {
            if (rr == row) continue;
            uint32_t fac = r.at(rr, col);
            if (fac == 0) continue;
            for (uint32_t c = 0; c < a.cols(); ++c) {
                r.set(rr, c, f.sub(r.at(rr, c), f.mul(fac, r.at(row, c))));
            }
            for (uint32_t c = 0; c < a.rows(); ++c) {
                t.set(rr, c, f.sub(t.at(rr, c), f.mul(fac, t.at(row, c))));
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(r), std::move(pivots), std::move(t)};
}

uint32_t rank(const MatrixF& a) { return rref(a).rank(); }

bool is_invertible(const MatrixF& a) { return a.is_square() && rank(a) == a.rows(); }

std::vector<std::vector<uint32_t>> nullspace(const MatrixF& a) {
    const PrimeField& f = a.field();
    RrefResult rr = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (uint32_t c : rr.pivots) is_pivot[c] = true;

    std::vector<std::vector<uint32_t>> basis;
    for (uint32_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<uint32_t> v(a.cols(), 0);
        v[free] = 1;
        for (uint32_t i = 0; i < rr.pivots.size(); ++i) {
            v[rr.pivots[i]] = f.neg(rr.rref.at(i, free));
        }
        // Rescale so the leading nonzero coordinate is 1.
        for (uint32_t c = 0; c < a.cols(); ++c) {
            if (v[c] != 0) {
                uint32_t s = f.inv(v[c]);
                if (s != 1) {
                    for (uint32_t& x : v) x = f.mul(x, s);
                }
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace factorlab
