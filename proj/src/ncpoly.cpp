#include "cherednik/ncpoly.hpp"

#include <algorithm>
#include <vector>

namespace cherednik {

NcPoly NcPoly::constant(const Field& f, const GenOrder& order, const Scalar& c) {
  NcPoly p(f, order);
  p.add_term({}, c);
  return p;
}

NcPoly NcPoly::constant_int(const Field& f, const GenOrder& order, long long c) {
  return constant(f, order, Scalar::from_int(f, c));
}

NcPoly NcPoly::generator(const Field& f, const GenOrder& order, Gen g) {
  NcPoly p(f, order);
  p.add_term({g}, Scalar::one(f));
  return p;
}

NcPoly NcPoly::from_word(const Field& f, const GenOrder& order, const Word& w, const Scalar& c) {
  NcPoly p(f, order);
  p.add_term(w, c);
  return p;
}

Scalar NcPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

int NcPoly::v_degree() const {
  int d = -1;
  for (const auto& [w, c] : terms_) d = std::max(d, word_v_degree(w));
  return d;
}

int NcPoly::max_word_length() const {
  int d = -1;
  for (const auto& [w, c] : terms_) d = std::max(d, static_cast<int>(w.size()));
  return d;
}

NcPoly NcPoly::component_of_v_degree(int k) const {
  NcPoly r(field_, *order_);
  for (const auto& [w, c] : terms_)
    if (word_v_degree(w) == k) r.terms_.emplace(w, c);
  return r;
}

std::optional<std::pair<int, int>> NcPoly::biweight() const {
  std::optional<std::pair<int, int>> bw;
  for (const auto& [w, c] : terms_) {
    std::pair<int, int> cur{word_h_weight(w), word_tau_weight(w)};
    if (!bw) {
      bw = cur;
    } else if (*bw != cur) {
      return std::nullopt;
    }
  }
  return bw;
}

void NcPoly::add_term(const Word& w, const Scalar& c) {
  if (c.field() != field_) throw FieldMismatchError("coefficient field mismatch in NcPoly");
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void NcPoly::check_compatible(const NcPoly& o) const {
  if (field_ != o.field_)
    throw FieldMismatchError("NcPoly field mismatch: " + field_.name() + " vs " + o.field_.name());
  if (!(*order_ == *o.order_))
    throw Error("NcPoly generator-order mismatch: " + order_->name() + " vs " + o.order_->name());
}

NcPoly NcPoly::operator-() const {
  NcPoly r(field_, *order_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

NcPoly NcPoly::operator+(const NcPoly& o) const {
  NcPoly r = *this;
  r += o;
  return r;
}

NcPoly NcPoly::operator-(const NcPoly& o) const {
  NcPoly r = *this;
  r += -o;
  return r;
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  check_compatible(o);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NcPoly NcPoly::operator*(const Scalar& s) const {
  NcPoly r(field_, *order_);
  for (const auto& [w, c] : terms_) r.add_term(w, c * s);
  return r;
}

bool NcPoly::operator==(const NcPoly& o) const {
  check_compatible(o);
  return terms_ == o.terms_;
}

std::string NcPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Word, Scalar>*> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) ts.push_back(&t);
  const GenOrder* order = order_;
  std::sort(ts.begin(), ts.end(), [order](const auto* a, const auto* b) {
    if (a->first.size() != b->first.size()) return a->first.size() < b->first.size();
    for (std::size_t i = 0; i < a->first.size(); ++i) {
      int ra = order->rank(a->first[i]), rb = order->rank(b->first[i]);
      if (ra != rb) return ra < rb;
    }
    return false;
  });
  std::string out;
  bool first = true;
  for (const auto* t : ts) {
    std::string coeff = t->second.to_string();
    bool neg = !coeff.empty() && coeff[0] == '-';
    std::string mag = neg ? coeff.substr(1) : coeff;
    std::string term;
    if (t->first.empty()) {
      term = mag;
    } else if (mag == "1") {
      term = word_to_string(t->first);
    } else {
      term = mag + "*" + word_to_string(t->first);
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

}  // namespace cherednik
