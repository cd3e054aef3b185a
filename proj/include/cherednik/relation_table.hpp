#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "cherednik/central_poly.hpp"
#include "cherednik/ncpoly.hpp"

namespace cherednik {

inline constexpr std::uint64_t kDefaultStepBudget = 10'000'000;

// Bracket table [a,b] for all generator pairs, values stored in PBW normal
// form with respect to the table's order.  The gl2 and gl2-on-V sectors are
// structural; the V-V sector is populated from a pair (F, G) of central
// polynomials via the Casimir embedding:
//   [y1,x] = 2hF+G,  [x1,x] = -4eF,  [y1,y] = 4fF,  [x1,y] = 2hF-G,
//   [x,y] = [x1,y1] = 0.
// Construction checks that every bracket value is biweight-homogeneous of the
// combined weight and lowers the rewriting measure (V-V values land in
// V-degree 0; mixed values are single letters).
class RelationTable {
 public:
  static RelationTable build(const Field& f, const GenOrder& order, const CentralPoly& Fc,
                             const CentralPoly& Gc, std::uint64_t step_budget = kDefaultStepBudget);
  static RelationTable build_undeformed(const Field& f, const GenOrder& order,
                                        std::uint64_t step_budget = kDefaultStepBudget);

  const Field& field() const { return field_; }
  const GenOrder& order() const { return *order_; }
  std::uint64_t step_budget() const { return step_budget_; }
  void set_step_budget(std::uint64_t b) { step_budget_ = b; }

  // [a, b] for any pair; antisymmetric, zero on the diagonal.
  NcPoly bracket(Gen a, Gen b) const;

 private:
  RelationTable(const Field& f, const GenOrder& order, std::uint64_t budget)
      : field_(f), order_(&order), step_budget_(budget) {}
  void set(Gen a, Gen b, NcPoly value);  // records [a,b]
  void validate() const;

  Field field_;
  const GenOrder* order_;
  std::uint64_t step_budget_;
  // Stored for hi > lo by generator enum index.
  std::array<std::array<std::optional<NcPoly>, 8>, 8> store_;
};

// Image of a central polynomial under Delta -> h^2 + 4ef - 2h, tau -> tau,
// normalized in the table's order.  A ring homomorphism into the
// gl2-sector; only gl2 brackets are exercised.
NcPoly embed_central(const CentralPoly& p, const RelationTable& table);

}  // namespace cherednik
