#include "cherednik/relation_table.hpp"

#include "cherednik/engine.hpp"

namespace cherednik {

NcPoly RelationTable::bracket(Gen a, Gen b) const {
  if (a == b) return NcPoly(field_, *order_);
  std::size_t ia = gen_index(a), ib = gen_index(b);
  bool flip = ia < ib;
  const auto& slot = flip ? store_[ib][ia] : store_[ia][ib];
  if (!slot) throw Error("RelationTable: bracket not populated");
  return flip ? -*slot : *slot;
}

void RelationTable::set(Gen a, Gen b, NcPoly value) {
  std::size_t ia = gen_index(a), ib = gen_index(b);
  if (ia == ib) throw Error("RelationTable: diagonal bracket");
  if (ia > ib) {
    store_[ia][ib] = std::move(value);
  } else {
    store_[ib][ia] = -value;
  }
}

RelationTable RelationTable::build_undeformed(const Field& f, const GenOrder& order,
                                              std::uint64_t step_budget) {
  CentralPoly zero(f);
  return build(f, order, zero, zero, step_budget);
}

RelationTable RelationTable::build(const Field& f, const GenOrder& order, const CentralPoly& Fc,
                                   const CentralPoly& Gc, std::uint64_t step_budget) {
  RelationTable t(f, order, step_budget);
  auto gen = [&](Gen g) { return NcPoly::generator(f, order, g); };
  auto scaled = [&](Gen g, long long k) {
    return NcPoly::from_word(f, order, {g}, Scalar::from_int(f, k));
  };
  NcPoly zero(f, order);

  // gl2 sector.
  t.set(Gen::h, Gen::e, scaled(Gen::e, 2));
  t.set(Gen::h, Gen::f, scaled(Gen::f, -2));
  t.set(Gen::e, Gen::f, gen(Gen::h));
  t.set(Gen::tau, Gen::h, zero);
  t.set(Gen::tau, Gen::e, zero);
  t.set(Gen::tau, Gen::f, zero);

  // gl2 acting on V: h and tau act by the weights, e and f by
  // [e,x]=0, [e,y]=x, [f,x]=y, [f,y]=0 and the same pattern on x1, y1.
  for (Gen v : {Gen::x, Gen::y, Gen::x1, Gen::y1}) {
    t.set(Gen::h, v, scaled(v, h_weight(v)));
    t.set(Gen::tau, v, scaled(v, tau_weight(v)));
  }
  t.set(Gen::e, Gen::x, zero);
  t.set(Gen::e, Gen::y, gen(Gen::x));
  t.set(Gen::e, Gen::x1, zero);
  t.set(Gen::e, Gen::y1, gen(Gen::x1));
  t.set(Gen::f, Gen::x, gen(Gen::y));
  t.set(Gen::f, Gen::y, zero);
  t.set(Gen::f, Gen::x1, gen(Gen::y1));
  t.set(Gen::f, Gen::y1, zero);

  // V-V sector, from the deformation pair (F, G).  The embeddings only
  // exercise the gl2 sector populated above.
  NcPoly embF = embed_central(Fc, t);
  NcPoly embG = embed_central(Gc, t);
  NcPoly two_h_F = multiply(scaled(Gen::h, 2), embF, t);
  t.set(Gen::x, Gen::y, zero);
  t.set(Gen::x1, Gen::y1, zero);
  t.set(Gen::y1, Gen::x, two_h_F + embG);
  t.set(Gen::x1, Gen::x, multiply(scaled(Gen::e, -4), embF, t));
  t.set(Gen::y1, Gen::y, multiply(scaled(Gen::f, 4), embF, t));
  t.set(Gen::x1, Gen::y, two_h_F - embG);

  t.validate();
  return t;
}

void RelationTable::validate() const {
  for (std::size_t hi = 0; hi < kGenCount; ++hi) {
    for (std::size_t lo = 0; lo < hi; ++lo) {
      const auto& slot = store_[hi][lo];
      if (!slot) throw Error("RelationTable: missing bracket");
      Gen a = static_cast<Gen>(hi), b = static_cast<Gen>(lo);
      if (slot->is_zero()) continue;
      auto bw = slot->biweight();
      if (!bw || bw->first != h_weight(a) + h_weight(b) ||
          bw->second != tau_weight(a) + tau_weight(b))
        throw Error("RelationTable: bracket [" + std::string(gen_name(a)) + "," + gen_name(b) +
                    "] is not biweight-homogeneous of the combined weight");
      // Rewriting measure: V-V values must land in V-degree 0; mixed and gl2
      // values must be single letters.
      int va = v_degree(a), vb = v_degree(b);
      if (va + vb == 2) {
        if (slot->v_degree() > 0)
          throw Error("RelationTable: V-V bracket does not lower the V-degree");
      } else if (slot->max_word_length() > 1) {
        throw Error("RelationTable: bracket value longer than a single letter");
      }
      for (const auto& [w, c] : slot->terms())
        if (!word_is_normal(w, *order_))
          throw Error("RelationTable: bracket value not in normal form");
    }
  }
}

NcPoly embed_central(const CentralPoly& p, const RelationTable& table) {
  const Field& f = table.field();
  const GenOrder& order = table.order();
  // Delta -> h^2 + 4ef - 2h.
  NcPoly casimir(f, order);
  casimir.add_term({Gen::h, Gen::h}, Scalar::one(f));
  casimir.add_term({Gen::e, Gen::f}, Scalar::from_int(f, 4));
  casimir.add_term({Gen::h}, Scalar::from_int(f, -2));
  casimir = normalize(casimir, table);

  int dmax = p.delta_degree();
  std::vector<NcPoly> delta_pow;
  delta_pow.push_back(NcPoly::constant(f, order, Scalar::one(f)));
  for (int n = 1; n <= dmax; ++n) delta_pow.push_back(multiply(delta_pow.back(), casimir, table));

  NcPoly out(f, order);
  for (const auto& [k, c] : p.terms()) {
    Word taus(static_cast<std::size_t>(k.second), Gen::tau);
    NcPoly term = multiply(delta_pow[static_cast<std::size_t>(k.first)],
                           NcPoly::from_word(f, order, taus, c), table);
    out += term;
  }
  return out;
}

}  // namespace cherednik
