#pragma once

#include <memory>

#include "cherednik/engine.hpp"
#include "cherednik/fg.hpp"

namespace cherednik {

// The infinitesimal deformation H_c of U(gl2 ⋉ (k^2 ⊕ (k^2)*)), presented by
// bracket tables in both generator orders.  Construction computes (F(c),
// G(c)) and the Jacobi residual; admissible() reports whether the residual
// vanishes (equivalently, whether the rewriting system is consistent).
class Gl2CherednikAlgebra {
 public:
  static Gl2CherednikAlgebra build(const CentralPoly& c,
                                   std::uint64_t step_budget = kDefaultStepBudget);

  const Field& field() const { return field_; }
  const CentralPoly& c() const { return c_; }
  const CentralPoly& Fc() const { return Fc_; }
  const CentralPoly& Gc() const { return Gc_; }
  const CentralPoly& jacobi() const { return jacobi_; }
  bool admissible() const { return jacobi_.is_zero(); }

  const RelationTable& table() const { return default_table_; }
  const RelationTable& table(const GenOrder& order) const;
  FGTable& fg_table() const { return *fg_; }

  NcPoly embed(const CentralPoly& p) const { return embed_central(p, default_table_); }

 private:
  Gl2CherednikAlgebra(const Field& f, CentralPoly c, CentralPoly Fc, CentralPoly Gc,
                      CentralPoly jacobi, RelationTable def, RelationTable tri,
                      std::shared_ptr<FGTable> fgt)
      : field_(f), c_(std::move(c)), Fc_(std::move(Fc)), Gc_(std::move(Gc)),
        jacobi_(std::move(jacobi)), default_table_(std::move(def)),
        triangular_table_(std::move(tri)), fg_(std::move(fgt)) {}

  Field field_;
  CentralPoly c_, Fc_, Gc_, jacobi_;
  RelationTable default_table_, triangular_table_;
  std::shared_ptr<FGTable> fg_;
};

// The order-two anti-involution fixing tau and h, swapping e with f, and
// acting on V by x -> y1, y -> -x1, x1 -> -y, y1 -> x.  Words are reversed,
// letters mapped, the result normalized in the algebra's default order.
NcPoly apply_eta(const NcPoly& p, const Gl2CherednikAlgebra& algebra);

// The anti-involution of the subalgebra generated by e, f, h, x, y:
// x <-> y, h -> h, e -> -f, f -> -e.  Rejects words containing tau, x1, y1.
NcPoly apply_j(const NcPoly& p, const Gl2CherednikAlgebra& algebra);

struct DistinguishedElements {
  NcPoly b;   // y1 x - x1 y
  NcPoly d;   // tau (y1 x - x1 y) - (2 e y1 y + h (y1 x + x1 y) - 2 f x1 x)
  NcPoly t1;  // e y^2 + h x y - f x^2
  NcPoly t2;  // e y1^2 + h x1 y1 - f x1^2
};

// Normal forms in the algebra's default order.
DistinguishedElements distinguished_elements(const Gl2CherednikAlgebra& algebra);

}  // namespace cherednik
