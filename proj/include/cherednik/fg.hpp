#pragma once

#include <mutex>
#include <utility>
#include <vector>

#include "cherednik/central_poly.hpp"

namespace cherednik {

struct FGPair {
  CentralPoly F, G;
};

// Memoized rows (F(Delta^n), G(Delta^n)) of the deformation calculus,
// generated by the base cases F(1)=G(1)=0, F(Delta)=1, G(Delta)=-3 and the
// recursion
//   F(Delta b) = b + (Delta - 1) F(b) - G(b)
//   G(Delta b) = -3 b - 4 F(b) Delta + (Delta + 3) G(b).
// Row n has Delta-degree n-1 with leading coefficient n (checked as rows are
// appended).  Append-only; safe for concurrent readers (single internal
// lock).
class FGTable {
 public:
  explicit FGTable(const Field& f);

  const Field& field() const { return field_; }
  FGPair row(unsigned n) const;

 private:
  void extend(unsigned n) const;

  Field field_;
  mutable std::mutex mu_;
  mutable std::vector<FGPair> rows_;
};

// (F(alpha), G(alpha)) for arbitrary alpha in k[Delta, tau], via linearity
// and the tau-twist: for psi in k[tau],
//   F(psi(tau) b) = psi(tau - 1) F(b)
//   G(psi(tau) b) = psi(tau - 1) G(b) + (psi(tau) - psi(tau - 1)) b.
FGPair fg(const CentralPoly& alpha, const FGTable& table);

// 4 Delta F(F(c)) + 6 F(c) - 6 G(F(c)) - G(G(c)); zero iff the deformed
// bracket table is consistent.
CentralPoly jacobi_residual(const CentralPoly& c, const FGTable& table);

// The alpha with F(alpha) = beta and no pure-tau part, solved degree by
// degree down the triangular system.  Throws if the Delta-degree bound is
// exceeded or a leading coefficient is not invertible (small positive
// characteristic).
CentralPoly solve_F(const CentralPoly& beta, unsigned max_delta_degree, const FGTable& table);

}  // namespace cherednik
