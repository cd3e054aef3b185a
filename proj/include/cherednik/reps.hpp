#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cherednik/gl2.hpp"

namespace cherednik {

// The (lambda+1)-dimensional irreducible gl2 module with highest weight
// (lambda, mu): h v_i = (lambda - 2i) v_i, f v_i = v_{i+1} (v_{lambda+1} = 0),
// e v_i = i(lambda - i + 1) v_{i-1}, tau acts by mu.
class Gl2Irrep {
 public:
  Gl2Irrep(const Field& f, int lambda, const Scalar& mu);

  const Field& field() const { return field_; }
  int lambda() const { return lambda_; }
  const Scalar& mu() const { return mu_; }
  std::size_t dim() const { return static_cast<std::size_t>(lambda_) + 1; }

  std::vector<Scalar> zero_vector() const;
  std::vector<Scalar> basis_vector(int i) const;

  // Action of one generator (must be tau, h, e, or f).
  std::vector<Scalar> act_gen(Gen g, const std::vector<Scalar>& coords) const;
  // Action of an element of U(gl2): every word must use tau, h, e, f only;
  // letters act right-to-left.
  std::vector<Scalar> act(const NcPoly& u, const std::vector<Scalar>& coords) const;

 private:
  Field field_;
  int lambda_;
  Scalar mu_;
};

// Element of the Verma module M(lambda, mu): finite combination of basis
// vectors f^a x1^b y1^c . v indexed by exponent triples.
struct VermaElement {
  using Key = std::array<int, 3>;  // (a, b, c)

  VermaElement(const Field& f, const Scalar& lambda, const Scalar& mu)
      : field(f), lambda(lambda), mu(mu) {}

  static VermaElement highest_weight(const Field& f, const Scalar& lambda, const Scalar& mu);

  Field field;
  Scalar lambda, mu;
  std::map<Key, Scalar> coords;

  bool is_zero() const { return coords.empty(); }
  void add(const Key& k, const Scalar& c);

  // Additive offsets of the biweight against (lambda, mu):
  // h-offset -2a + b - c, tau-offset -(b + c).
  static std::pair<int, int> biweight_offset(const Key& k);

  VermaElement operator+(const VermaElement& o) const;
  VermaElement operator-(const VermaElement& o) const;
  bool operator==(const VermaElement& o) const;
  bool operator!=(const VermaElement& o) const { return !(*this == o); }
  std::string to_string() const;  // e.g. "(0,1,2): 3/2; (1,0,0): -1"
};

// Left action of g on w: normalizes g . f^a x1^b y1^c in the triangular
// order f < x1 < y1 < tau < h < e < x < y, then evaluates at the highest
// weight vector: trailing e, x, y letters annihilate, tau^s h^t contributes
// mu^s lambda^t, and the f/x1/y1 prefix indexes the output triple.
VermaElement verma_act(const NcPoly& g, const VermaElement& w,
                       const Gl2CherednikAlgebra& algebra);

struct AlphaM {
  // V-degree-0 component of [y^m, x1^m] normalized with x and y ranked last
  // (the part that survives on any vector killed by x and y), converted to
  // the default order for presentation.
  NcPoly value;
  // The same projection taken from the default-order normal form, where x, y
  // precede x1, y1.  Differs from `value` in general (for m >= 2 the
  // projection depends on which letters are swept to the right), so both are
  // reported; `value` is the one that acts on highest-weight theory.
  NcPoly default_order_projection;
  bool central_in_ug;  // value commutes with h, e, f
  // value expressed in Delta and tau, when central and expressible.
  std::optional<CentralPoly> central_form;
};

AlphaM alpha_m(const Gl2CherednikAlgebra& algebra, unsigned m);

struct FiniteDimReport {
  bool lambda_is_admissible;          // lambda is a non-negative integer
  std::optional<unsigned> witness_m;  // least m <= m_max with alpha_m . V = 0
  std::vector<std::string> notes;     // one line per performed check
  bool finite_dimensional_verdict() const {
    return lambda_is_admissible && witness_m.has_value();
  }
};

// Evaluates alpha_m on every basis vector of the irrep V(lambda, mu) for
// m = 1..m_max and reports the least annihilating m, if any.  The integer
// condition on lambda and the alpha_m witness are reported separately.
FiniteDimReport finite_dim_test(const Gl2CherednikAlgebra& algebra, long lambda,
                                const Scalar& mu, unsigned m_max);

// All w in the depth-truncated Verma module with e.w = x.w = y.w = 0,
// solved slice by slice in the biweight grading.  Action components that
// leave the truncation are computed exactly and required to vanish, so every
// returned vector is maximal in the full module.  The list always contains
// the highest-weight vector.
std::vector<VermaElement> maximal_vectors(const Gl2CherednikAlgebra& algebra,
                                          const Scalar& lambda, const Scalar& mu,
                                          int depth);

}  // namespace cherednik
