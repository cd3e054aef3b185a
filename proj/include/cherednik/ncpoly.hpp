#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "cherednik/generators.hpp"

namespace cherednik {

// Element of the tensor algebra on the eight generators, stored as a sparse
// word -> coefficient map tagged with a generator order.  The engine's
// normalize/multiply/commutator keep public values in PBW normal form with
// respect to that order; addition and scalar multiplication preserve
// normality without rewriting.  Invariant: no stored coefficient is zero.
class NcPoly {
 public:
  NcPoly(const Field& f, const GenOrder& order) : field_(f), order_(&order) {}

  static NcPoly constant(const Field& f, const GenOrder& order, const Scalar& c);
  static NcPoly constant_int(const Field& f, const GenOrder& order, long long c);
  static NcPoly generator(const Field& f, const GenOrder& order, Gen g);
  static NcPoly from_word(const Field& f, const GenOrder& order, const Word& w, const Scalar& c);

  const Field& field() const { return field_; }
  const GenOrder& order() const { return *order_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Word, Scalar>& terms() const { return terms_; }
  Scalar coefficient(const Word& w) const;

  // Max over stored words; zero polynomial reports -1.
  int v_degree() const;
  int max_word_length() const;

  NcPoly component_of_v_degree(int k) const;
  // The V-degree-0 part: words in tau, h, e, f only.
  NcPoly ug_part() const { return component_of_v_degree(0); }

  // (h-weight, tau-weight) if every word agrees, nullopt otherwise.
  std::optional<std::pair<int, int>> biweight() const;

  void add_term(const Word& w, const Scalar& c);

  NcPoly operator-() const;
  NcPoly operator+(const NcPoly& o) const;
  NcPoly operator-(const NcPoly& o) const;
  NcPoly operator*(const Scalar& s) const;
  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o) { return *this += -o; }

  bool operator==(const NcPoly& o) const;
  bool operator!=(const NcPoly& o) const { return !(*this == o); }

  // Canonical: terms sorted by (word length, then rank-lexicographic), the
  // empty word printed as its bare coefficient.
  std::string to_string() const;

 private:
  void check_compatible(const NcPoly& o) const;

  Field field_;
  const GenOrder* order_;
  std::map<Word, Scalar> terms_;
};

}  // namespace cherednik
