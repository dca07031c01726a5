#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "hk/error.hpp"
#include "hk/monomial.hpp"

namespace hk {

/// A term order on monomials. Built from one or more blocks; each block
/// compares the exponents of its own variables by lex or grevlex, and earlier
/// blocks dominate. A single-block order is a plain lex or grevlex order with
/// a chosen variable precedence; a two-block order with a lone variable in
/// front is the elimination order used for intersections and colons.
///
/// Every instance is a multiplicative well-order: blocks partition the
/// variables, and lex/grevlex restricted to a block are both multiplicative
/// with 1 minimal.
class MonomialOrder {
 public:
  enum class Kind { lex, grevlex };

  /// Lex with the given precedence (most significant variable first).
  static MonomialOrder lex(std::vector<std::uint32_t> precedence) {
    return MonomialOrder({Block{Kind::lex, std::move(precedence)}});
  }

  /// Graded reverse lex with the given precedence.
  static MonomialOrder grevlex(std::vector<std::uint32_t> precedence) {
    return MonomialOrder({Block{Kind::grevlex, std::move(precedence)}});
  }

  static std::vector<std::uint32_t> identity_precedence(std::uint32_t nvars) {
    std::vector<std::uint32_t> perm(nvars);
    std::iota(perm.begin(), perm.end(), 0u);
    return perm;
  }

  static MonomialOrder lex(std::uint32_t nvars) {
    return lex(identity_precedence(nvars));
  }

  static MonomialOrder grevlex(std::uint32_t nvars) {
    return grevlex(identity_precedence(nvars));
  }

  /// Elimination order for variable `var`: any monomial involving `var`
  /// is larger than any monomial that does not; ties fall through to `base`.
  static MonomialOrder eliminate_first(std::uint32_t var,
                                       const MonomialOrder& base) {
    std::vector<Block> blocks;
    blocks.push_back(Block{Kind::lex, {var}});
    for (const auto& b : base.blocks_) blocks.push_back(b);
    return MonomialOrder(std::move(blocks));
  }

  /// <0, 0, >0 as a is below, equal to, above b.
  int compare(const Monomial& a, const Monomial& b) const {
    for (const auto& blk : blocks_) {
      int c = blk.kind == Kind::lex ? cmp_lex(blk.vars, a, b)
                                    : cmp_grevlex(blk.vars, a, b);
      if (c != 0) return c;
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }

  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) > 0;
  }

  /// Kind of the primary block (the whole order, for single-block orders).
  Kind kind() const { return blocks_.front().kind; }

  /// Precedence of the primary block.
  const std::vector<std::uint32_t>& precedence() const {
    return blocks_.front().vars;
  }

  std::size_t block_count() const { return blocks_.size(); }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  struct Block {
    Kind kind;
    std::vector<std::uint32_t> vars;  // most significant first
    friend bool operator==(const Block&, const Block&) = default;
  };

  explicit MonomialOrder(std::vector<Block> blocks)
      : blocks_(std::move(blocks)) {
    if (blocks_.empty() || blocks_.front().vars.empty())
      throw precondition_error("monomial order needs at least one variable");
  }

  static int cmp_lex(const std::vector<std::uint32_t>& vars, const Monomial& a,
                     const Monomial& b) {
    for (auto v : vars) {
      if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
    }
    return 0;
  }

  static int cmp_grevlex(const std::vector<std::uint32_t>& vars,
                         const Monomial& a, const Monomial& b) {
    std::uint64_t da = 0, db = 0;
    for (auto v : vars) {
      da += a[v];
      db += b[v];
    }
    if (da != db) return da < db ? -1 : 1;
    // Reverse lex: last differing variable, smaller exponent wins.
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
      if (a[*it] != b[*it]) return a[*it] > b[*it] ? -1 : 1;
    }
    return 0;
  }

  std::vector<Block> blocks_;
};

}  // namespace hk
