#include "hk/parse.hpp"

#include <cctype>
#include <optional>

namespace hk {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
};

std::uint64_t read_uint(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.i;
  std::uint64_t v = 0;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
    std::uint64_t digit = static_cast<std::uint64_t>(c.s[c.i] - '0');
    if (v > (0xffffffffffffffffull - digit) / 10)
      throw parse_error("integer literal too large", start);
    v = v * 10 + digit;
    ++c.i;
  }
  if (c.i == start) throw parse_error("expected an integer", start);
  return v;
}

/// Longest-match variable name lookup at the cursor, or nullopt.
std::optional<std::uint32_t> read_var(Cursor& c,
                                      const std::vector<std::string>& names) {
  c.skip_ws();
  std::size_t best_len = 0;
  std::uint32_t best_idx = 0;
  for (std::uint32_t idx = 0; idx < names.size(); ++idx) {
    const std::string& n = names[idx];
    if (n.size() > best_len && c.s.compare(c.i, n.size(), n) == 0) {
      best_len = n.size();
      best_idx = idx;
    }
  }
  if (best_len == 0) return std::nullopt;
  c.i += best_len;
  return best_idx;
}

// term := factor ( '*'? factor )*
// factor := INT ('^' INT)? | VAR ('^' INT)?
Poly parse_term(Cursor& c, const Ambient& amb,
                const std::vector<std::string>& names) {
  Poly acc = Poly::constant(amb, 1);
  bool first = true;
  while (true) {
    c.skip_ws();
    if (!first) {
      if (c.peek() == '*') {
        ++c.i;
        c.skip_ws();
      } else if (!(c.i < c.s.size() &&
                   (std::isdigit(static_cast<unsigned char>(c.s[c.i])) ||
                    std::isalpha(static_cast<unsigned char>(c.s[c.i])) ||
                    c.s[c.i] == '_'))) {
        break;  // end of term
      }
    }
    std::size_t at = c.i;
    Poly factor;
    if (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
      std::uint64_t v = read_uint(c);
      std::uint64_t exp = 1;
      if (c.peek() == '^') {
        ++c.i;
        exp = read_uint(c);
      }
      std::uint32_t base = static_cast<std::uint32_t>(v % amb.p);
      factor = Poly::constant(amb, fp_pow(base, exp, amb.p));
    } else {
      auto vi = read_var(c, names);
      if (!vi) {
        if (first) throw parse_error("expected a coefficient or variable", at);
        throw parse_error("unknown variable or symbol", at);
      }
      std::uint64_t exp = 1;
      if (c.peek() == '^') {
        ++c.i;
        exp = read_uint(c);
        if (exp > 0xffffffffull) throw parse_error("exponent too large", at);
      }
      factor = Poly::term(
          amb, Monomial::var(amb.nvars, *vi, static_cast<std::uint32_t>(exp)),
          1);
      if (exp == 0) factor = Poly::constant(amb, 1);
    }
    acc = acc * factor;
    first = false;
  }
  return acc;
}

}  // namespace

Poly parse_poly(const std::string& text, const Ambient& amb,
                const std::vector<std::string>& var_names) {
  if (var_names.size() != amb.nvars)
    throw precondition_error("variable name list does not match ambient");
  Cursor c{text};
  if (c.done()) throw parse_error("empty polynomial", 0);
  Poly result = Poly::zero(amb);
  bool negate = false;
  if (c.peek() == '+') {
    ++c.i;
  } else if (c.peek() == '-') {
    negate = true;
    ++c.i;
  }
  while (true) {
    Poly t = parse_term(c, amb, var_names);
    result = negate ? result - t : result + t;
    if (c.done()) break;
    char op = c.peek();
    if (op == '+') {
      negate = false;
      ++c.i;
    } else if (op == '-') {
      negate = true;
      ++c.i;
    } else {
      throw parse_error("expected '+' or '-'", c.i);
    }
    if (c.done()) throw parse_error("trailing operator", c.i);
  }
  return result;
}

std::string poly_to_string(const Poly& f,
                           const std::vector<std::string>& var_names) {
  if (f.is_zero()) return "0";
  std::string out;
  // Canonical storage is ascending; print descending.
  const auto& ts = f.terms();
  for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!out.empty()) out += '+';
    bool wrote_factor = false;
    if (c != 1 || m.is_one()) {
      out += std::to_string(c);
      wrote_factor = true;
    }
    for (std::uint32_t i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      if (wrote_factor) out += '*';
      out += var_names[i];
      if (m[i] > 1) {
        out += '^';
        out += std::to_string(m[i]);
      }
      wrote_factor = true;
    }
  }
  return out;
}

}  // namespace hk
