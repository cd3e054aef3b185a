#include "cherednik/modp.hpp"

#include <algorithm>

namespace cherednik {

namespace {

std::uint64_t require_prime_field(const Gl2CherednikAlgebra& algebra) {
  std::uint64_t p = algebra.field().characteristic();
  if (p == 0) throw Error("mod-p suite requires a prime field");
  return p;
}

// First nonzero commutator with a generator, rendered for the report.
std::string centrality_residual(const NcPoly& value, const RelationTable& t) {
  for (Gen g : kAllGens) {
    NcPoly r = commutator(value, NcPoly::generator(t.field(), t.order(), g), t);
    if (!r.is_zero())
      return std::string("[value, ") + gen_name(g) + "] = " + r.to_string();
  }
  return "";
}

std::string power_name(Gen g, std::uint64_t n) {
  return std::string(gen_name(g)) + "^" + std::to_string(n);
}

}  // namespace

bool ModpReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const ModpClaim& e) { return e.pass; });
}

ModpClaim p_square_central(const Gl2CherednikAlgebra& algebra, Gen v) {
  std::uint64_t p = require_prime_field(algebra);
  if (v_degree(v) != 1)
    throw Error("p_square_central: expected one of x, y, x1, y1");
  const RelationTable& t = algebra.table();
  NcPoly vp2 = power(NcPoly::generator(t.field(), t.order(), v),
                     static_cast<unsigned>(p * p), t);
  std::string residual = centrality_residual(vp2, t);
  return ModpClaim{power_name(v, p * p) + " commutes with all generators",
                   residual.empty(), residual};
}

ModpClaim p_power_landing(const Gl2CherednikAlgebra& algebra, Gen v, Gen w) {
  std::uint64_t p = require_prime_field(algebra);
  if (v != Gen::x && v != Gen::y) throw Error("p_power_landing: v must be x or y");
  if (w != Gen::x1 && w != Gen::y1) throw Error("p_power_landing: w must be x1 or y1");
  const RelationTable& t = algebra.table();
  const Field& f = t.field();

  NcPoly vp = power(NcPoly::generator(f, t.order(), v), static_cast<unsigned>(p), t);
  NcPoly bracket = commutator(vp, NcPoly::generator(f, t.order(), w), t);

  std::string name = "[" + power_name(v, p) + ", " + gen_name(w) +
                     "] lands in U(g ⋉ span(x,y)) and equals ad(" + gen_name(v) +
                     ")^" + std::to_string(p) + "(" + gen_name(w) + ")";

  for (const auto& [word, c] : bracket.terms()) {
    for (Gen letter : word) {
      if (letter == Gen::x1 || letter == Gen::y1)
        return ModpClaim{name, false,
                         "normal form retains a dual letter: " + word_to_string(word)};
    }
  }

  NcPoly iterated = NcPoly::generator(f, t.order(), w);
  NcPoly vgen = NcPoly::generator(f, t.order(), v);
  for (std::uint64_t i = 0; i < p; ++i) iterated = commutator(vgen, iterated, t);
  if (bracket != iterated)
    return ModpClaim{name, false,
                     "normal form " + bracket.to_string() + " differs from iterated bracket " +
                         iterated.to_string()};
  return ModpClaim{name, true, ""};
}

std::vector<ModpClaim> restricted_powers_central(const Gl2CherednikAlgebra& algebra) {
  std::uint64_t p = require_prime_field(algebra);
  if (p < 3) throw Error("restricted_powers_central requires p >= 3");
  const RelationTable& t = algebra.table();
  const Field& f = t.field();
  auto g = [&](Gen gen) { return NcPoly::generator(f, t.order(), gen); };

  std::vector<std::pair<std::string, NcPoly>> elements;
  elements.emplace_back(power_name(Gen::e, p), power(g(Gen::e), (unsigned)p, t));
  elements.emplace_back(power_name(Gen::f, p), power(g(Gen::f), (unsigned)p, t));
  elements.emplace_back(power_name(Gen::h, p) + " - h", power(g(Gen::h), (unsigned)p, t) - g(Gen::h));
  elements.emplace_back(power_name(Gen::tau, p) + " - tau",
                        power(g(Gen::tau), (unsigned)p, t) - g(Gen::tau));

  std::vector<ModpClaim> out;
  for (auto& [name, value] : elements) {
    std::string residual = centrality_residual(value, t);
    out.push_back(ModpClaim{name + " commutes with all generators", residual.empty(),
                            std::move(residual)});
  }
  return out;
}

ModpReport run_modp_suite(const Gl2CherednikAlgebra& algebra) {
  std::uint64_t p = require_prime_field(algebra);
  ModpReport report{p, algebra.c().to_string(), {}};
  for (Gen v : {Gen::x, Gen::y, Gen::x1, Gen::y1})
    report.entries.push_back(p_square_central(algebra, v));
  for (Gen v : {Gen::x, Gen::y})
    for (Gen w : {Gen::x1, Gen::y1})
      report.entries.push_back(p_power_landing(algebra, v, w));
  if (p >= 3)
    for (ModpClaim& claim : restricted_powers_central(algebra))
      report.entries.push_back(std::move(claim));
  return report;
}

}  // namespace cherednik
