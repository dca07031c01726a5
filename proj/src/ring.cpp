#include "hk/ring.hpp"

#include <algorithm>

namespace hk {

namespace {

std::vector<std::string> checked_vars(std::vector<std::string> vars) {
  if (vars.empty())
    throw precondition_error("ring needs at least one variable");
  std::vector<std::string> sorted = vars;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw precondition_error("duplicate variable name");
  return vars;
}

std::vector<Poly> validated_jgens(const Ambient& amb,
                                  const std::vector<Poly>& jgens) {
  std::vector<Poly> out;
  for (const auto& g : jgens) {
    if (g.is_zero()) continue;
    if (!(g.ambient() == amb))
      throw ambient_error("quotient generator from a different ambient ring");
    if (g.constant_term() != 0)
      throw precondition_error(
          "quotient generators must lie in the maximal ideal "
          "(zero constant term)");
    out.push_back(g);
  }
  return out;
}

}  // namespace

RingPresentation::RingPresentation(PrimeChar characteristic,
                                   std::vector<std::string> vars,
                                   std::vector<Poly> jgens)
    : char_(characteristic),
      vars_(checked_vars(std::move(vars))),
      jgens_(validated_jgens({characteristic.p,
                              static_cast<std::uint32_t>(vars_.size())},
                             jgens)),
      jgb_(reduced_gb(jgens_.empty()
                          ? std::vector<Poly>{Poly::zero(ambient())}
                          : jgens_,
                      MonomialOrder::grevlex(nvars()))),
      dim_(krull_dim(initial_ideal(jgb_))) {}

std::vector<Poly> RingPresentation::var_polys() const {
  std::vector<Poly> vs;
  vs.reserve(nvars());
  for (std::uint32_t i = 0; i < nvars(); ++i)
    vs.push_back(Poly::variable(ambient(), i));
  return vs;
}

}  // namespace hk
