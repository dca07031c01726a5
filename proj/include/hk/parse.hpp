#pragma once

#include <string>
#include <vector>

#include "hk/poly.hpp"

namespace hk {

/// Parse the polynomial text syntax: terms joined by `+`/`-`; a term is an
/// optional integer coefficient and `*`-separated variable powers (`x^3`),
/// with `*` optional between factors; whitespace is ignored; coefficients
/// are reduced mod p. Example: `x^4+x^3*y+x^2*y^2+x*y^3+y^4`.
/// Throws parse_error with the offending position.
Poly parse_poly(const std::string& text, const Ambient& amb,
                const std::vector<std::string>& var_names);

/// Canonical rendering: terms in descending canonical order, coefficients in
/// [1, p), explicit `*` between factors and `^` for exponents > 1.
/// parse(print(f)) == f.
std::string poly_to_string(const Poly& f,
                           const std::vector<std::string>& var_names);

}  // namespace hk
