#pragma once

#include <map>
#include <string>
#include <utility>

#include "cherednik/field.hpp"

namespace cherednik {

// Commutative polynomial in Delta and tau over the session field, the model
// of Z(U gl2).  Invariant: no stored coefficient is zero.
class CentralPoly {
 public:
  // (delta_degree, tau_degree)
  using Key = std::pair<int, int>;

  explicit CentralPoly(const Field& f) : field_(f) {}

  static CentralPoly constant(const Field& f, const Scalar& c);
  static CentralPoly constant_int(const Field& f, long long c);
  static CentralPoly delta(const Field& f) { return monomial(f, 1, 0, Scalar::one(f)); }
  static CentralPoly tau(const Field& f) { return monomial(f, 0, 1, Scalar::one(f)); }
  static CentralPoly monomial(const Field& f, int delta_deg, int tau_deg, const Scalar& c);

  const Field& field() const { return field_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const;
  // Zero polynomial reports degree -1.
  int delta_degree() const;
  int tau_degree() const;
  int total_degree() const;

  Scalar coefficient(int delta_deg, int tau_deg) const;
  // Coefficient of Delta^n as a polynomial in tau alone.
  CentralPoly delta_coefficient(int n) const;
  // The part with delta_degree == 0.
  CentralPoly pure_tau_part() const;

  void add_term(int delta_deg, int tau_deg, const Scalar& c);

  CentralPoly operator-() const;
  CentralPoly operator+(const CentralPoly& o) const;
  CentralPoly operator-(const CentralPoly& o) const;
  CentralPoly operator*(const CentralPoly& o) const;
  CentralPoly operator*(const Scalar& s) const;
  CentralPoly& operator+=(const CentralPoly& o) { return *this = *this + o; }
  CentralPoly& operator-=(const CentralPoly& o) { return *this = *this - o; }
  CentralPoly pow(unsigned n) const;

  bool operator==(const CentralPoly& o) const;
  bool operator!=(const CentralPoly& o) const { return !(*this == o); }

  const std::map<Key, Scalar>& terms() const { return coeffs_; }

  // Canonical: monomials sorted by (total degree, then delta degree
  // descending), coefficients as reduced fractions / least residues.
  std::string to_string() const;

 private:
  void check_compatible(const CentralPoly& o) const;

  Field field_;
  std::map<Key, Scalar> coeffs_;
};

enum class CentralVar { delta, tau };

// psi(tau) - psi(tau - 1); rejects polynomials involving Delta.
CentralPoly discrete_derivative(const CentralPoly& psi);

// Substitute var -> var + shift, expanding exactly.
CentralPoly substitute_shift(const CentralPoly& p, CentralVar var, const Scalar& shift);

}  // namespace cherednik
