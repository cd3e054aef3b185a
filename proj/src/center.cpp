#include "cherednik/center.hpp"

#include <algorithm>
#include <functional>

namespace cherednik {

namespace {

void require_central(const NcPoly& value, const RelationTable& t, const std::string& who) {
  for (Gen g : kAllGens) {
    NcPoly r = commutator(value, NcPoly::generator(t.field(), t.order(), g), t);
    if (!r.is_zero())
      throw CentralityError(who + ": commutator with " + std::string(gen_name(g)) +
                            " is nonzero: " + r.to_string());
  }
}

// Monomials Delta^n tau^m, n <= dmax, m <= tmax, in a fixed scan order.
std::vector<CentralPoly> monomial_box(const Field& f, int dmax, int tmax) {
  std::vector<CentralPoly> out;
  for (int n = 0; n <= dmax; ++n)
    for (int m = 0; m <= tmax; ++m)
      out.push_back(CentralPoly::monomial(f, n, m, Scalar::one(f)));
  return out;
}

}  // namespace

FGPair fg_extract(const CentralPoly& alpha, const Gl2CherednikAlgebra& algebra) {
  const Field& f = algebra.field();
  if (f.characteristic() == 2)
    throw Error("fg_extract: recovering F needs 2 invertible; use the recursion in characteristic 2");
  const RelationTable& t = algebra.table();
  NcPoly gx = NcPoly::generator(f, t.order(), Gen::x);
  NcPoly gy = NcPoly::generator(f, t.order(), Gen::y);
  NcPoly k = commutator(embed_central(alpha, t), gx, t);

  for (const auto& [w, c] : k.terms()) {
    bool ok = !w.empty() && (w.back() == Gen::x || w.back() == Gen::y) &&
              word_v_degree(w) == 1;
    if (!ok)
      throw Error("fg_extract: [alpha, x] has a term outside Ug*x + Ug*y: " +
                  word_to_string(w));
  }

  // Unknown F rides on 2h*mu*x + 4e*mu*y, unknown G on mu*x, per central
  // monomial mu; matching coefficients keeps everything division-free.
  std::vector<CentralPoly> mus =
      monomial_box(f, std::max(0, alpha.delta_degree()), std::max(0, alpha.tau_degree()));
  std::vector<NcPoly> span;
  span.reserve(2 * mus.size());
  const Scalar two = Scalar::from_int(f, 2);
  const Scalar four = Scalar::from_int(f, 4);
  NcPoly gh = NcPoly::generator(f, t.order(), Gen::h);
  NcPoly ge = NcPoly::generator(f, t.order(), Gen::e);
  for (const CentralPoly& mu : mus) {
    NcPoly emb = embed_central(mu, t);
    span.push_back(multiply(gh, multiply(emb, gx, t), t) * two +
                   multiply(ge, multiply(emb, gy, t), t) * four);
  }
  for (const CentralPoly& mu : mus)
    span.push_back(multiply(embed_central(mu, t), gx, t));

  auto sol = express_in_span(k, span);
  if (!sol)
    throw Error("fg_extract: [alpha, x] does not match the 2hF+G / 4eF ansatz");

  FGPair out{CentralPoly(f), CentralPoly(f)};
  for (std::size_t i = 0; i < mus.size(); ++i) {
    if (!(*sol)[i].is_zero()) out.F += mus[i] * (*sol)[i];
    if (!(*sol)[mus.size() + i].is_zero()) out.G += mus[i] * (*sol)[mus.size() + i];
  }
  return out;
}

NcPoly central_b(const Gl2CherednikAlgebra& algebra) {
  const RelationTable& t = algebra.table();
  const Field& f = algebra.field();
  auto g = [&](Gen gen) { return NcPoly::generator(f, t.order(), gen); };
  NcPoly b = multiply(g(Gen::y1), g(Gen::x), t) - multiply(g(Gen::x1), g(Gen::y), t) -
             algebra.embed(algebra.c());
  require_central(b, t, "central_b");
  return b;
}

const char* lift_match_name(LiftMatch m) {
  switch (m) {
    case LiftMatch::exact: return "exact";
    case LiftMatch::constant_offset: return "constant offset";
    case LiftMatch::pure_tau_offset: return "pure-tau offset";
    case LiftMatch::other: return "differs in Delta";
  }
  return "?";
}

namespace {

LiftMatch classify_difference(const CentralPoly& diff) {
  if (diff.is_zero()) return LiftMatch::exact;
  if (diff.delta_degree() > 0) return LiftMatch::other;
  return diff.tau_degree() == 0 ? LiftMatch::constant_offset : LiftMatch::pure_tau_offset;
}

}  // namespace

CentralLift central_d_lift(const Gl2CherednikAlgebra& algebra, int degree_bound) {
  const Field& f = algebra.field();
  const RelationTable& t = algebra.table();
  NcPoly d = distinguished_elements(algebra).d;
  NcPoly gx = NcPoly::generator(f, t.order(), Gen::x);
  NcPoly rhs = commutator(d, gx, t);

  std::vector<CentralPoly> mus = monomial_box(f, degree_bound, degree_bound);
  std::vector<NcPoly> span;
  span.reserve(mus.size());
  for (const CentralPoly& mu : mus)
    span.push_back(commutator(embed_central(mu, t), gx, t));

  auto sol = express_in_span(rhs, span);
  if (!sol)
    throw Error("central_d_lift: [d, x] is not matched by any z with degrees <= " +
                std::to_string(degree_bound) + "; raise the bound");

  CentralPoly z(f);
  for (std::size_t i = 0; i < mus.size(); ++i)
    if (!(*sol)[i].is_zero()) z += mus[i] * (*sol)[i];
  // The constant monomial's commutator column is zero, so the solver leaves
  // its coefficient free (= 0); strip any residue for a canonical z anyway.
  z -= CentralPoly::constant(f, z.coefficient(0, 0));

  CentralLift out{std::move(z), NcPoly(f, t.order()), CentralPoly(f), {}};
  out.D = d - algebra.embed(out.z);
  require_central(out.D, t, "central_d_lift");

  if (f.characteristic() != 2) {
    try {
      const CentralPoly& c = algebra.c();
      CentralPoly beta = c + CentralPoly::delta(f) * algebra.Fc();
      out.alpha = solve_F(beta, std::max(degree_bound, beta.delta_degree() + 1),
                          algebra.fg_table());
      const Scalar half = Scalar::from_fraction(f, 1, 2);
      CentralPoly tau_plus = CentralPoly::tau(f) + CentralPoly::constant(f, Scalar::from_fraction(f, 3, 2));
      CentralPoly half_alpha = out.alpha * half;
      auto add_candidate = [&](std::string formula, CentralPoly value) {
        CentralPoly diff = value - out.z;
        out.candidates.push_back(LiftCandidate{std::move(formula), std::move(value),
                                               classify_difference(diff), std::move(diff)});
      };
      add_candidate("(tau + 3/2)*c + 1/2*alpha", tau_plus * c + half_alpha);
      add_candidate("tau + 3/2*c + 1/2*alpha",
                    CentralPoly::tau(f) + c * Scalar::from_fraction(f, 3, 2) + half_alpha);
      add_candidate("(tau + 3/2)*c + 1/2*Delta*c - 1/2*alpha",
                    tau_plus * c + CentralPoly::delta(f) * c * half - half_alpha);
    } catch (const Error&) {
      // solve_F can fail in small characteristic; the lift itself stands.
      out.alpha = CentralPoly(f);
      out.candidates.clear();
    }
  }
  return out;
}

bool ScanBox::contains(const Word& w) const {
  if ((int)w.size() > effective_total()) return false;
  int v = 0;
  for (Gen g : w) v += v_degree(g);
  return v <= v_max && (int)w.size() - v <= ug_max;
}

std::vector<Word> enumerate_box(const ScanBox& box, const GenOrder& order) {
  std::vector<Word> out;
  Word cur;
  // Non-decreasing rank sequences, grown from a given minimum rank.
  std::function<void(int)> grow = [&](int min_rank) {
    out.push_back(cur);
    if ((int)cur.size() >= box.effective_total()) return;
    for (int r = min_rank; r < kGenCount; ++r) {
      cur.push_back(order.at_rank(r));
      if (box.contains(cur)) grow(r);
      cur.pop_back();
    }
  };
  grow(0);
  std::stable_sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    return a.size() < b.size();
  });
  return out;
}

ScanResult center_scan(const Gl2CherednikAlgebra& algebra, const ScanBox& box, Exec exec) {
  const Field& f = algebra.field();
  const RelationTable& t = algebra.table();
  std::vector<Word> words = enumerate_box(box, t.order());
  std::vector<NcPoly> search;
  search.reserve(words.size());
  for (const Word& w : words)
    search.push_back(NcPoly::from_word(f, t.order(), w, Scalar::one(f)));

  ScanResult out{solve_centrality(t, search, exec), CompanionStatus::skipped, ""};

  if (!algebra.admissible()) {
    out.companion_detail = "companion comparison skipped: parameter fails the consistency condition";
    return out;
  }

  NcPoly cb = central_b(algebra);
  int cdeg = std::max(algebra.c().delta_degree(), algebra.c().tau_degree());
  CentralLift lift = central_d_lift(algebra, std::max(2, cdeg + 3));

  std::vector<NcPoly> products;
  std::string names;
  int total = box.effective_total();
  for (int i = 0; 2 * i <= total + 2; ++i) {
    for (int j = 0; 2 * i + 3 * j <= total + 2; ++j) {
      NcPoly p = multiply(power(cb, (unsigned)i, t), power(lift.D, (unsigned)j, t), t);
      bool inside = true;
      for (const auto& [w, c] : p.terms())
        if (!box.contains(w)) { inside = false; break; }
      if (!inside) continue;
      products.push_back(std::move(p));
      if (!names.empty()) names += ", ";
      names += "B^" + std::to_string(i) + "*D^" + std::to_string(j);
    }
  }

  bool equal = same_span_nc(out.basis, products, f);
  out.companion = equal ? CompanionStatus::pass : CompanionStatus::fail;
  out.companion_detail = "scan dimension " + std::to_string(out.basis.size()) +
                         "; products inside the box: {" + names + "}" +
                         (equal ? "; spans agree" : "; spans DIFFER");
  return out;
}

}  // namespace cherednik
