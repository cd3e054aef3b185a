#include "cherednik/fg.hpp"

namespace cherednik {

FGTable::FGTable(const Field& f) : field_(f) {
  rows_.push_back({CentralPoly(f), CentralPoly(f)});  // F(1) = G(1) = 0
}

FGPair FGTable::row(unsigned n) const {
  std::lock_guard<std::mutex> lock(mu_);
  extend(n);
  return rows_[n];
}

void FGTable::extend(unsigned n) const {
  const Field& f = field_;
  CentralPoly delta = CentralPoly::delta(f);
  CentralPoly one = CentralPoly::constant(f, Scalar::one(f));
  CentralPoly three = CentralPoly::constant_int(f, 3);
  while (rows_.size() <= n) {
    unsigned m = static_cast<unsigned>(rows_.size());  // computing row m = prior row + 1
    CentralPoly b = delta.pow(m - 1);
    const CentralPoly& Fb = rows_[m - 1].F;
    const CentralPoly& Gb = rows_[m - 1].G;
    CentralPoly Fn = b + (delta - one) * Fb - Gb;
    CentralPoly Gn = -(three * b) - (Fb * delta) * Scalar::from_int(f, 4) + (delta + three) * Gb;
    // Shape invariant of row m.
    if (f.characteristic() == 0 || m % f.characteristic() != 0) {
      if (Fn.delta_degree() != static_cast<int>(m) - 1 ||
          Fn.delta_coefficient(static_cast<int>(m) - 1) !=
              CentralPoly::constant_int(f, static_cast<long long>(m)))
        throw Error("FGTable: row shape invariant violated");
    }
    rows_.push_back({std::move(Fn), std::move(Gn)});
  }
}

FGPair fg(const CentralPoly& alpha, const FGTable& table) {
  const Field& f = table.field();
  if (alpha.field() != f) throw FieldMismatchError("fg: field mismatch");
  CentralPoly F(f), G(f);
  Scalar minus_one = -Scalar::one(f);
  for (const auto& [k, c] : alpha.terms()) {
    auto [n, m] = k;
    FGPair row = table.row(static_cast<unsigned>(n));
    // psi(tau) = c tau^m; twist by psi(tau - 1), remainder (psi - psi(tau-1)) Delta^n.
    CentralPoly psi = CentralPoly::monomial(f, 0, m, c);
    CentralPoly psi_shift = substitute_shift(psi, CentralVar::tau, minus_one);
    F += psi_shift * row.F;
    G += psi_shift * row.G + (psi - psi_shift) * CentralPoly::delta(f).pow(static_cast<unsigned>(n));
  }
  return {F, G};
}

CentralPoly jacobi_residual(const CentralPoly& c, const FGTable& table) {
  const Field& f = table.field();
  FGPair first = fg(c, table);
  FGPair on_F = fg(first.F, table);
  FGPair on_G = fg(first.G, table);
  CentralPoly r = CentralPoly::delta(f) * on_F.F * Scalar::from_int(f, 4);
  r += first.F * Scalar::from_int(f, 6);
  r -= on_F.G * Scalar::from_int(f, 6);
  r -= on_G.G;
  return r;
}

CentralPoly solve_F(const CentralPoly& beta, unsigned max_delta_degree, const FGTable& table) {
  const Field& f = table.field();
  if (beta.field() != f) throw FieldMismatchError("solve_F: field mismatch");
  if (beta.delta_degree() + 1 > static_cast<int>(max_delta_degree))
    throw Error("solve_F: target needs Delta-degree " + std::to_string(beta.delta_degree() + 1) +
                ", bound is " + std::to_string(max_delta_degree));
  CentralPoly alpha(f);
  CentralPoly rem = beta;
  Scalar one = Scalar::one(f);
  while (!rem.is_zero()) {
    int n = rem.delta_degree() + 1;  // next row to peel off
    Scalar lead = Scalar::from_int(f, n);
    if (lead.is_zero())
      throw Error("solve_F: leading coefficient " + std::to_string(n) +
                  " is not invertible in " + f.name());
    // Coefficient of Delta^(n-1) in rem equals psi(tau - 1) * n.
    CentralPoly psi_shift = rem.delta_coefficient(n - 1) * lead.inverse();
    CentralPoly psi = substitute_shift(psi_shift, CentralVar::tau, one);
    FGPair row = table.row(static_cast<unsigned>(n));
    alpha += psi * CentralPoly::delta(f).pow(static_cast<unsigned>(n));
    rem -= psi_shift * row.F;
  }
  return alpha;
}

}  // namespace cherednik
