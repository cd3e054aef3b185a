#include "cherednik/engine.hpp"

#include <algorithm>

#include "cherednik/linalg.hpp"

namespace cherednik {

namespace {

// Leftmost adjacent pair with descending rank, or npos if normal.
std::size_t leftmost_descent(const Word& w, const GenOrder& order) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (order.rank(w[i]) > order.rank(w[i + 1])) return i;
  return static_cast<std::size_t>(-1);
}

void add_to(std::map<Word, Scalar>& acc, const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = acc.find(w);
  if (it == acc.end()) {
    acc.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) acc.erase(it);
}

}  // namespace

NcPoly normalize_terms(std::map<Word, Scalar> raw, const RelationTable& table) {
  const GenOrder& order = table.order();
  NcPoly result(table.field(), order);
  std::map<Word, Scalar> pending = std::move(raw);
  std::uint64_t steps = 0;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word& w = node.key();
    const Scalar& c = node.mapped();
    std::size_t i = leftmost_descent(w, order);
    if (i == static_cast<std::size_t>(-1)) {
      result.add_term(w, c);
      continue;
    }
    if (++steps > table.step_budget())
      throw StepBudgetExceededError("normalize: step budget of " +
                                    std::to_string(table.step_budget()) + " rewrites exceeded");
    Word swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    add_to(pending, swapped, c);
    NcPoly br = table.bracket(w[i], w[i + 1]);
    for (const auto& [bw, bc] : br.terms()) {
      Word spliced;
      spliced.reserve(w.size() - 2 + bw.size());
      spliced.insert(spliced.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      spliced.insert(spliced.end(), bw.begin(), bw.end());
      spliced.insert(spliced.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
      add_to(pending, spliced, c * bc);
    }
  }
  return result;
}

NcPoly normalize(const NcPoly& p, const RelationTable& table) {
  if (p.field() != table.field()) throw FieldMismatchError("normalize: field mismatch");
  // Also serves as the order-conversion map when p carries another order.
  return normalize_terms(std::map<Word, Scalar>(p.terms().begin(), p.terms().end()), table);
}

NcPoly multiply(const NcPoly& a, const NcPoly& b, const RelationTable& table) {
  if (a.field() != b.field()) throw FieldMismatchError("multiply: field mismatch");
  std::map<Word, Scalar> raw;
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      Word w;
      w.reserve(wa.size() + wb.size());
      w.insert(w.end(), wa.begin(), wa.end());
      w.insert(w.end(), wb.begin(), wb.end());
      add_to(raw, w, ca * cb);
    }
  }
  return normalize_terms(std::move(raw), table);
}

NcPoly power(const NcPoly& a, unsigned n, const RelationTable& table) {
  NcPoly r = NcPoly::constant(a.field(), table.order(), Scalar::one(a.field()));
  for (unsigned i = 0; i < n; ++i) r = multiply(r, a, table);
  return r;
}

NcPoly commutator(const NcPoly& a, const NcPoly& b, const RelationTable& table) {
  if (a.field() != b.field()) throw FieldMismatchError("commutator: field mismatch");
  std::map<Word, Scalar> raw;
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      Word ab, ba;
      ab.reserve(wa.size() + wb.size());
      ba.reserve(wa.size() + wb.size());
      ab.insert(ab.end(), wa.begin(), wa.end());
      ab.insert(ab.end(), wb.begin(), wb.end());
      ba.insert(ba.end(), wb.begin(), wb.end());
      ba.insert(ba.end(), wa.begin(), wa.end());
      Scalar c = ca * cb;
      add_to(raw, ab, c);
      add_to(raw, ba, -c);
    }
  }
  return normalize_terms(std::move(raw), table);
}

PbwReport pbw_check(const RelationTable& table, Exec exec) {
  const Field& f = table.field();
  const GenOrder& order = table.order();
  std::vector<std::array<Gen, 3>> triples;
  for (int i = 0; i < kGenCount; ++i)
    for (int j = i + 1; j < kGenCount; ++j)
      for (int k = j + 1; k < kGenCount; ++k)
        triples.push_back({order.at_rank(i), order.at_rank(j), order.at_rank(k)});

  std::vector<std::optional<NcPoly>> residuals(triples.size());
  parallel_for(triples.size(), exec, [&](std::size_t t) {
    auto [a, b, c] = triples[t];
    NcPoly pa = NcPoly::generator(f, order, a);
    NcPoly pb = NcPoly::generator(f, order, b);
    NcPoly pc = NcPoly::generator(f, order, c);
    NcPoly r = commutator(table.bracket(a, b), pc, table);
    r += commutator(table.bracket(b, c), pa, table);
    r += commutator(table.bracket(c, a), pb, table);
    residuals[t] = std::move(r);
  });

  PbwReport report;
  report.pass = true;
  for (std::size_t t = 0; t < triples.size(); ++t) {
    if (!residuals[t]->is_zero()) {
      report.pass = false;
      report.failures.push_back({triples[t], *residuals[t]});
    }
  }
  if (report.pass) {
    report.certificate =
        "jacobi-triples: residual [[a,b],c]+[[b,c],a]+[[c,a],b] vanishes for all " +
        std::to_string(triples.size()) +
        " distinct generator triples; taken as the operative PBW certificate because "
        "every table value lowers the rewriting measure (V-V brackets land in V-degree 0)";
  } else {
    report.certificate = "jacobi-triples: " + std::to_string(report.failures.size()) +
                         " of " + std::to_string(triples.size()) +
                         " generator triples have nonvanishing residual "
                         "[[a,b],c]+[[b,c],a]+[[c,a],b]; the rewriting system is "
                         "inconsistent and normal forms are not canonical";
  }
  return report;
}

std::vector<NcPoly> solve_centrality(const RelationTable& table,
                                     const std::vector<NcPoly>& search_space, Exec exec) {
  const Field& f = table.field();
  const GenOrder& order = table.order();
  std::size_t n = search_space.size();

  // Column i, generator g: commutator(search_space[i], g).
  std::vector<std::array<std::optional<NcPoly>, 8>> cols(n);
  parallel_for(n, exec, [&](std::size_t i) {
    for (Gen g : kAllGens)
      cols[i][gen_index(g)] = commutator(search_space[i], NcPoly::generator(f, order, g), table);
  });

  // Equations indexed by (generator, word).
  std::map<std::pair<std::size_t, Word>, SparseRow> eqs;
  for (std::size_t i = 0; i < n; ++i)
    for (Gen g : kAllGens)
      for (const auto& [w, c] : cols[i][gen_index(g)]->terms())
        eqs[{gen_index(g), w}].emplace_back(i, c);

  std::vector<SparseRow> rows;
  rows.reserve(eqs.size());
  for (auto& [k, r] : eqs) rows.push_back(std::move(r));

  std::vector<std::vector<Scalar>> kernel = nullspace(rows, n, f);
  std::vector<NcPoly> basis;
  basis.reserve(kernel.size());
  for (const auto& v : kernel) {
    NcPoly z(f, order);
    for (std::size_t i = 0; i < n; ++i)
      if (!v[i].is_zero()) z += search_space[i] * v[i];
    basis.push_back(std::move(z));
  }
  return basis;
}

}  // namespace cherednik
