#pragma once

#include <string>
#include <vector>

#include "cherednik/gl2.hpp"

namespace cherednik {

struct ModpClaim {
  std::string claim;     // e.g. "[x^9, g] = 0 for all generators g"
  bool pass;
  std::string residual;  // first failing commutator, empty when pass
};

struct ModpReport {
  std::uint64_t p;
  std::string c_text;
  std::vector<ModpClaim> entries;

  bool all_pass() const;
};

// Verifies v^{p^2} commutes with all eight generators; v must be one of
// x, y, x1, y1 and the algebra must live over F_p.
ModpClaim p_square_central(const Gl2CherednikAlgebra& algebra, Gen v);

// Verifies the normal form of [v^p, w] (v in {x, y}, w in {x1, y1}) contains
// no x1/y1 letters — i.e. lands in U(g ⋉ span(x, y)) — and coincides with
// the p-fold iterated bracket ad(v)^p(w) computed letterwise.
ModpClaim p_power_landing(const Gl2CherednikAlgebra& algebra, Gen v, Gen w);

// Verifies e^p, f^p, h^p - h, tau^p - tau are central; requires p >= 3
// (at p = 2 the restricted-power identities take a different shape, so the
// claim family is not asserted there).  One entry per element, so the report
// shows which generators centralize already at the first restricted power.
std::vector<ModpClaim> restricted_powers_central(const Gl2CherednikAlgebra& algebra);

// The full battery for one algebra over F_p: p_square_central on the four V
// letters, p_power_landing on the four (v, w) pairs, and (for p >= 3)
// restricted_powers_central.
ModpReport run_modp_suite(const Gl2CherednikAlgebra& algebra);

}  // namespace cherednik
