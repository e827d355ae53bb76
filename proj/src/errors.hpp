#pragma once

#include <stdexcept>
#include <string>

namespace factorlab {

enum class Errc {
    not_prime,
    zero_inverse,
    dimension_mismatch,
    modulus_mismatch,
    singular_matrix,
    not_in_span,
    empty_solution_space,
    no_invertible_combination,
    commuting_generators,
    generation_exhausted,
    parse_error,
    bad_spec,
    internal,
};

// Single exception type for the whole library; code() maps 1:1 onto the
// fl_status values of the C API.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) {
    throw Error(code, what);
}

} // namespace factorlab
