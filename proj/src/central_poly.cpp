#include "cherednik/central_poly.hpp"

#include <algorithm>
#include <vector>

namespace cherednik {

CentralPoly CentralPoly::constant(const Field& f, const Scalar& c) {
  return monomial(f, 0, 0, c);
}

CentralPoly CentralPoly::constant_int(const Field& f, long long c) {
  return monomial(f, 0, 0, Scalar::from_int(f, c));
}

CentralPoly CentralPoly::monomial(const Field& f, int delta_deg, int tau_deg, const Scalar& c) {
  CentralPoly p(f);
  p.add_term(delta_deg, tau_deg, c);
  return p;
}

bool CentralPoly::is_constant() const {
  return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == Key{0, 0});
}

int CentralPoly::delta_degree() const {
  int d = -1;
  for (const auto& [k, v] : coeffs_) d = std::max(d, k.first);
  return d;
}

int CentralPoly::tau_degree() const {
  int d = -1;
  for (const auto& [k, v] : coeffs_) d = std::max(d, k.second);
  return d;
}

int CentralPoly::total_degree() const {
  int d = -1;
  for (const auto& [k, v] : coeffs_) d = std::max(d, k.first + k.second);
  return d;
}

Scalar CentralPoly::coefficient(int delta_deg, int tau_deg) const {
  auto it = coeffs_.find({delta_deg, tau_deg});
  return it == coeffs_.end() ? Scalar::zero(field_) : it->second;
}

CentralPoly CentralPoly::delta_coefficient(int n) const {
  CentralPoly r(field_);
  for (const auto& [k, v] : coeffs_)
    if (k.first == n) r.add_term(0, k.second, v);
  return r;
}

CentralPoly CentralPoly::pure_tau_part() const { return delta_coefficient(0); }

void CentralPoly::add_term(int delta_deg, int tau_deg, const Scalar& c) {
  if (c.field() != field_)
    throw FieldMismatchError("coefficient field mismatch in CentralPoly");
  if (c.is_zero()) return;
  Key k{delta_deg, tau_deg};
  auto it = coeffs_.find(k);
  if (it == coeffs_.end()) {
    coeffs_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

void CentralPoly::check_compatible(const CentralPoly& o) const {
  if (field_ != o.field_)
    throw FieldMismatchError("CentralPoly field mismatch: " + field_.name() + " vs " + o.field_.name());
}

CentralPoly CentralPoly::operator-() const {
  CentralPoly r(field_);
  for (const auto& [k, v] : coeffs_) r.coeffs_.emplace(k, -v);
  return r;
}

CentralPoly CentralPoly::operator+(const CentralPoly& o) const {
  check_compatible(o);
  CentralPoly r = *this;
  for (const auto& [k, v] : o.coeffs_) r.add_term(k.first, k.second, v);
  return r;
}

CentralPoly CentralPoly::operator-(const CentralPoly& o) const { return *this + (-o); }

CentralPoly CentralPoly::operator*(const CentralPoly& o) const {
  check_compatible(o);
  CentralPoly r(field_);
  for (const auto& [ka, va] : coeffs_)
    for (const auto& [kb, vb] : o.coeffs_)
      r.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
  return r;
}

CentralPoly CentralPoly::operator*(const Scalar& s) const {
  CentralPoly r(field_);
  for (const auto& [k, v] : coeffs_) r.add_term(k.first, k.second, v * s);
  return r;
}

CentralPoly CentralPoly::pow(unsigned n) const {
  CentralPoly r = constant(field_, Scalar::one(field_));
  CentralPoly base = *this;
  while (n) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

bool CentralPoly::operator==(const CentralPoly& o) const {
  check_compatible(o);
  return coeffs_ == o.coeffs_;
}

std::string CentralPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::vector<std::pair<Key, Scalar>> ts(coeffs_.begin(), coeffs_.end());
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    int ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
    if (ta != tb) return ta < tb;
    return a.first.first > b.first.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [k, v] : ts) {
    std::string coeff = v.to_string();
    bool neg = !coeff.empty() && coeff[0] == '-';
    std::string mag = neg ? coeff.substr(1) : coeff;
    std::string mono;
    if (k.first > 0) mono += "Delta" + (k.first > 1 ? "^" + std::to_string(k.first) : "");
    if (k.second > 0) {
      if (!mono.empty()) mono += "*";
      mono += "tau" + (k.second > 1 ? "^" + std::to_string(k.second) : "");
    }
    std::string term;
    if (mono.empty()) {
      term = mag;
    } else if (mag == "1") {
      term = mono;
    } else {
      term = mag + "*" + mono;
    }
    if (first) {
      out = (neg ? "-" : "") + term;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
  }
  return out;
}

CentralPoly discrete_derivative(const CentralPoly& psi) {
  if (psi.delta_degree() > 0)
    throw Error("discrete_derivative: input must be a polynomial in tau alone");
  const Field& f = psi.field();
  return psi - substitute_shift(psi, CentralVar::tau, -Scalar::one(f));
}

CentralPoly substitute_shift(const CentralPoly& p, CentralVar var, const Scalar& shift) {
  const Field& f = p.field();
  // Binomial expansion of (v + shift)^k per monomial.
  CentralPoly out(f);
  for (const auto& [k, v] : p.terms()) {
    int deg = var == CentralVar::delta ? k.first : k.second;
    int other = var == CentralVar::delta ? k.second : k.first;
    // (v + s)^deg = sum_i C(deg, i) s^(deg-i) v^i, binomials over Z then
    // reduced into the field (field division would fail in small char).
    long long binom = 1;
    std::vector<Scalar> coeffs;
    coeffs.reserve(static_cast<std::size_t>(deg) + 1);
    for (int i = 0; i <= deg; ++i) {
      coeffs.push_back(Scalar::from_int(f, binom) * shift.pow(static_cast<std::uint64_t>(deg - i)));
      if (i < deg) binom = binom * (deg - i) / (i + 1);
    }
    for (int i = 0; i <= deg; ++i) {
      int dd = var == CentralVar::delta ? i : other;
      int td = var == CentralVar::delta ? other : i;
      out.add_term(dd, td, v * coeffs[static_cast<std::size_t>(i)]);
    }
  }
  return out;
}

}  // namespace cherednik
