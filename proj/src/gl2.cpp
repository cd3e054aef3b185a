#include "cherednik/gl2.hpp"

#include <stdexcept>
#include <utility>

namespace cherednik {

Gl2CherednikAlgebra Gl2CherednikAlgebra::build(const CentralPoly& c,
                                               std::uint64_t step_budget) {
  const Field& f = c.field();
  auto fgt = std::make_shared<FGTable>(f);
  FGPair pair = fg(c, *fgt);
  CentralPoly jac = jacobi_residual(c, *fgt);
  RelationTable def = RelationTable::build(f, default_order(), pair.F, pair.G, step_budget);
  RelationTable tri = RelationTable::build(f, triangular_order(), pair.F, pair.G, step_budget);
  return Gl2CherednikAlgebra(f, c, std::move(pair.F), std::move(pair.G),
                             std::move(jac), std::move(def), std::move(tri),
                             std::move(fgt));
}

const RelationTable& Gl2CherednikAlgebra::table(const GenOrder& order) const {
  if (order == default_order()) return default_table_;
  if (order == triangular_order()) return triangular_table_;
  throw Error("Gl2CherednikAlgebra: no table cached for order " + order.name());
}

namespace {

// Letter images under eta, as (generator, sign).
std::pair<Gen, int> eta_letter(Gen g) {
  switch (g) {
    case Gen::tau: return {Gen::tau, +1};
    case Gen::h:   return {Gen::h, +1};
    case Gen::e:   return {Gen::f, +1};
    case Gen::f:   return {Gen::e, +1};
    case Gen::x:   return {Gen::y1, +1};
    case Gen::y:   return {Gen::x1, -1};
    case Gen::x1:  return {Gen::y, -1};
    case Gen::y1:  return {Gen::x, +1};
  }
  throw Error("eta_letter: unreachable");
}

std::pair<Gen, int> j_letter(Gen g) {
  switch (g) {
    case Gen::h: return {Gen::h, +1};
    case Gen::e: return {Gen::f, -1};
    case Gen::f: return {Gen::e, -1};
    case Gen::x: return {Gen::y, +1};
    case Gen::y: return {Gen::x, +1};
    default:
      throw Error("apply_j: generator " + std::string(gen_name(g)) +
                  " is outside the e,f,h,x,y subalgebra");
  }
}

// Shared shape of an anti-homomorphism on words: reverse, map letters,
// accumulate signs, renormalize.
template <typename LetterMap>
NcPoly apply_anti(const NcPoly& p, const RelationTable& table, LetterMap&& img) {
  std::map<Word, Scalar> raw;
  for (const auto& [word, coef] : p.terms()) {
    Word out;
    out.reserve(word.size());
    int sign = 1;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      auto [g, s] = img(*it);
      out.push_back(g);
      sign *= s;
    }
    Scalar c = sign >= 0 ? coef : -coef;
    auto [it2, inserted] = raw.emplace(std::move(out), c);
    if (!inserted) {
      it2->second = it2->second + c;
      if (it2->second.is_zero()) raw.erase(it2);
    }
  }
  return normalize_terms(std::move(raw), table);
}

}  // namespace

NcPoly apply_eta(const NcPoly& p, const Gl2CherednikAlgebra& algebra) {
  return apply_anti(p, algebra.table(), eta_letter);
}

NcPoly apply_j(const NcPoly& p, const Gl2CherednikAlgebra& algebra) {
  return apply_anti(p, algebra.table(), j_letter);
}

DistinguishedElements distinguished_elements(const Gl2CherednikAlgebra& algebra) {
  const RelationTable& t = algebra.table();
  const Field& f = algebra.field();
  const Scalar two = Scalar::from_int(f, 2);
  auto g = [&](Gen gen) { return NcPoly::generator(f, t.order(), gen); };
  auto word2 = [&](Gen a, Gen b) { return multiply(g(a), g(b), t); };
  auto word3 = [&](Gen a, Gen b, Gen c) { return multiply(g(a), word2(b, c), t); };

  NcPoly b = word2(Gen::y1, Gen::x) - word2(Gen::x1, Gen::y);
  NcPoly d = multiply(g(Gen::tau), b, t) -
             (word3(Gen::e, Gen::y1, Gen::y) * two +
              word3(Gen::h, Gen::y1, Gen::x) + word3(Gen::h, Gen::x1, Gen::y) -
              word3(Gen::f, Gen::x1, Gen::x) * two);
  NcPoly t1 = word3(Gen::e, Gen::y, Gen::y) + word3(Gen::h, Gen::x, Gen::y) -
              word3(Gen::f, Gen::x, Gen::x);
  NcPoly t2 = word3(Gen::e, Gen::y1, Gen::y1) + word3(Gen::h, Gen::x1, Gen::y1) -
              word3(Gen::f, Gen::x1, Gen::x1);
  return DistinguishedElements{std::move(b), std::move(d), std::move(t1), std::move(t2)};
}

}  // namespace cherednik
