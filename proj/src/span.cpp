#include "span.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace factorlab {

std::vector<uint32_t> vectorize(const MatrixF& m) { return m.raw(); }

MatrixF unvectorize(const std::vector<uint32_t>& v, uint32_t rows, uint32_t cols,
                    const PrimeField& field) {
    if (v.size() != static_cast<size_t>(rows) * cols) {
        raise(Errc::dimension_mismatch,
              "vector of length " + std::to_string(v.size()) + " cannot fill " +
                  std::to_string(rows) + "x" + std::to_string(cols));
    }
    MatrixF m(rows, cols, field);
    for (uint32_t r = 0; r < rows; ++r) {
        for (uint32_t c = 0; c < cols; ++c) m.set(r, c, v[static_cast<size_t>(r) * cols + c]);
    }
    return m;
}

IncrementalEchelon::IncrementalEchelon(PrimeField field, size_t width)
    : field_(field), width_(width) {}

std::vector<std::pair<size_t, uint32_t>> IncrementalEchelon::reduce(
    std::vector<uint32_t>& v) const {
    std::vector<std::pair<size_t, uint32_t>> used;
    for (size_t i = 0; i < rows_.size(); ++i) {
        uint32_t coef = v[rows_[i].pivot];
        if (coef == 0) continue;
        const auto& row = rows_[i].vals;
        for (size_t c = rows_[i].pivot; c < width_; ++c) {
            if (row[c] != 0) v[c] = field_.sub(v[c], field_.mul(coef, row[c]));
        }
        used.emplace_back(i, coef);
    }
    return used;
}

bool IncrementalEchelon::insert(const std::vector<uint32_t>& v) {
    std::vector<uint32_t> w = v;
    auto used = reduce(w);
    size_t pivot = width_;
    for (size_t c = 0; c < width_; ++c) {
        if (w[c] != 0) { pivot = c; break; }
    }
    if (pivot == width_) return false; // already spanned

    uint32_t lead_inv = field_.inv(w[pivot]);
    for (auto& x : w) x = field_.mul(x, lead_inv);

    // new row = (v - sum coef_i * row_i) / lead, expressed over admitted
    // vectors: combo = (e_new - sum coef_i * combo_i) / lead.
    std::vector<uint32_t> combo(admitted_ + 1, 0);
    combo[admitted_] = lead_inv;
    for (auto [i, coef] : used) {
        const auto& ci = rows_[i].combo;
        uint32_t f = field_.mul(coef, lead_inv);
        for (size_t j = 0; j < ci.size(); ++j) {
            combo[j] = field_.sub(combo[j], field_.mul(f, ci[j]));
        }
    }
    ++admitted_;

    Row row{std::move(w), pivot, std::move(combo)};
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                                [](const Row& r, size_t p) { return r.pivot < p; });
    rows_.insert(pos, std::move(row));
    return true;
}

std::optional<std::vector<uint32_t>> IncrementalEchelon::coordinates(
    const std::vector<uint32_t>& v) const {
    std::vector<uint32_t> w = v;
    auto used = reduce(w);
    for (uint32_t x : w) {
        if (x != 0) return std::nullopt;
    }
    std::vector<uint32_t> coords(admitted_, 0);
    for (auto [i, coef] : used) {
        const auto& ci = rows_[i].combo;
        for (size_t j = 0; j < ci.size(); ++j) {
            coords[j] = field_.add(coords[j], field_.mul(coef, ci[j]));
        }
    }
    return coords;
}

TaggedBasis::TaggedBasis(MatrixF g, MatrixF h, MatrixF anchor)
    : g_(std::move(g)), h_(std::move(h)), anchor_(std::move(anchor)),
      echelon_(g_.field(), static_cast<size_t>(anchor_.rows()) * anchor_.cols()) {}

bool TaggedBasis::contains(const MatrixF& target) const {
    return echelon_.contains(vectorize(target));
}

std::vector<FieldElement> TaggedBasis::express(const MatrixF& target) const {
    auto coords = echelon_.coordinates(vectorize(target));
    if (!coords) raise(Errc::not_in_span, "target matrix lies outside the span");
    std::vector<FieldElement> out;
    out.reserve(coords->size());
    for (uint32_t c : *coords) out.push_back({c, g_.field().modulus()});
    return out;
}

bool TaggedBasis::admit(uint32_t u, uint32_t v, const MatrixF& mat) {
    if (!echelon_.insert(vectorize(mat))) return false;
    elements_.push_back({u, v, mat});
    return true;
}

namespace {

void require_invertible(const MatrixF& m, const char* name) {
    if (!is_invertible(m)) {
        raise(Errc::singular_matrix, std::string(name) + " must be invertible");
    }
}

} // namespace

TaggedBasis cyclic_span_basis(const MatrixF& g) {
    require_invertible(g, "generator g");
    const uint32_t n = g.rows();
    MatrixF id = MatrixF::identity(n, g.field());
    TaggedBasis basis(g, id, id);

    MatrixF power = id;
    uint32_t u = 0;
    basis.admit(0, 0, power);
    for (;;) {
        power = g * power;
        ++u;
        if (!basis.admit(u, 0, power)) break;
        if (basis.dim() > n) {
            raise(Errc::internal, "cyclic span exceeded dimension n; Cayley-Hamilton violated");
        }
    }
    return basis;
}

TaggedBasis monomial_closure_basis(const MatrixF& g, const MatrixF& h, const MatrixF& c) {
    require_invertible(g, "generator g");
    require_invertible(h, "generator h");
    const uint32_t n = g.rows();
    const size_t cap = static_cast<size_t>(n) * n + 1;

    TaggedBasis basis(g, h, c);
    std::deque<size_t> worklist;
    if (basis.admit(0, 0, c)) worklist.push_back(0);

    while (!worklist.empty()) {
        size_t idx = worklist.front();
        worklist.pop_front();
        // Copy: admit() may reallocate the element store.
        TaggedElement e = basis.elements()[idx];
        if (basis.admit(e.u + 1, e.v, g * e.mat)) worklist.push_back(basis.dim() - 1);
        if (basis.admit(e.u, e.v + 1, e.mat * h)) worklist.push_back(basis.dim() - 1);
        if (basis.dim() >= cap) {
            raise(Errc::internal, "monomial closure exceeded n^2 admitted elements");
        }
    }
    return basis;
}

std::vector<FieldElement> express_in_span(const TaggedBasis& basis, const MatrixF& target) {
    return basis.express(target);
}

} // namespace factorlab
