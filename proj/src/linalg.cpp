#include "cherednik/linalg.hpp"

#include <algorithm>
#include <map>

#include "cherednik/ncpoly.hpp"

namespace cherednik {

namespace {

// row -= factor * pivot (sparse merge); both sorted by column.
SparseRow row_axpy(const SparseRow& row, const Scalar& factor, const SparseRow& pivot) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -(factor * pivot[j].second));
      ++j;
    } else {
      Scalar v = row[i].second - factor * pivot[j].second;
      if (!v.is_zero()) out.emplace_back(row[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

// Forward elimination into a column->row pivot map.  Pivot rows have leading
// coefficient 1.  Returns the reduced remainder of `row`.
SparseRow reduce_row(SparseRow row, const std::map<std::size_t, SparseRow>& pivots) {
  while (!row.empty()) {
    auto it = pivots.find(row.front().first);
    if (it == pivots.end()) break;
    row = row_axpy(row, row.front().second, it->second);
  }
  return row;
}

std::map<std::size_t, SparseRow> echelon(const std::vector<SparseRow>& rows) {
  std::map<std::size_t, SparseRow> pivots;
  for (const SparseRow& r : rows) {
    SparseRow red = reduce_row(r, pivots);
    if (red.empty()) continue;
    Scalar lead = red.front().second;
    for (auto& [c, v] : red) v = v / lead;
    pivots.emplace(red.front().first, std::move(red));
  }
  return pivots;
}

// Back-substitution: given v fixed on free columns, fill pivot columns.
void back_substitute(std::vector<Scalar>& v, const std::map<std::size_t, SparseRow>& pivots,
                     const Field& f) {
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    const SparseRow& row = it->second;
    Scalar acc = Scalar::zero(f);
    for (std::size_t k = 1; k < row.size(); ++k)
      acc += row[k].second * v[row[k].first];
    v[it->first] = -acc;
  }
}

}  // namespace

std::vector<std::vector<Scalar>> nullspace(const std::vector<SparseRow>& rows,
                                           std::size_t ncols, const Field& f) {
  auto pivots = echelon(rows);
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t c = 0; c < ncols; ++c) {
    if (pivots.count(c)) continue;
    std::vector<Scalar> v(ncols, Scalar::zero(f));
    v[c] = Scalar::one(f);
    back_substitute(v, pivots, f);
    basis.push_back(std::move(v));
  }
  rref_dense(basis, f);
  return basis;
}

std::optional<std::vector<Scalar>> solve_affine(const std::vector<SparseRow>& rows,
                                                std::size_t ncols, const Field& f) {
  auto pivots = echelon(rows);
  if (pivots.count(ncols)) return std::nullopt;  // pivot in the rhs column
  std::vector<Scalar> v(ncols + 1, Scalar::zero(f));
  v[ncols] = -Scalar::one(f);  // so that pivot rows read sum a_j v_j - b = 0
  back_substitute(v, pivots, f);
  v.pop_back();
  return v;
}

std::size_t rref_dense(std::vector<std::vector<Scalar>>& m, const Field& f) {
  std::size_t rank = 0;
  if (m.empty()) return 0;
  std::size_t ncols = m[0].size();
  for (std::size_t col = 0; col < ncols && rank < m.size(); ++col) {
    std::size_t sel = rank;
    while (sel < m.size() && m[sel][col].is_zero()) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[rank], m[sel]);
    Scalar inv = m[rank][col].inverse();
    for (auto& v : m[rank]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      Scalar factor = m[r][col];
      for (std::size_t c2 = 0; c2 < ncols; ++c2) m[r][c2] -= factor * m[rank][c2];
    }
    ++rank;
  }
  m.resize(rank, std::vector<Scalar>());
  return rank;
}

bool same_span(const std::vector<std::vector<Scalar>>& a,
               const std::vector<std::vector<Scalar>>& b, const Field& f) {
  std::vector<std::vector<Scalar>> ra = a, rb = b;
  rref_dense(ra, f);
  rref_dense(rb, f);
  if (ra.size() != rb.size()) return false;
  for (std::size_t i = 0; i < ra.size(); ++i)
    if (ra[i] != rb[i]) return false;
  return true;
}

std::optional<std::vector<Scalar>> express_in_span(const NcPoly& target,
                                                   const std::vector<NcPoly>& span) {
  const Field& f = target.field();
  // One equation per word, one unknown per span element, rhs in the extra
  // column.  Column order within a row follows span order, so rows are sorted.
  std::map<Word, SparseRow> eqs;
  for (std::size_t i = 0; i < span.size(); ++i)
    for (const auto& [w, c] : span[i].terms()) eqs[w].emplace_back(i, c);
  for (const auto& [w, c] : target.terms()) eqs[w].emplace_back(span.size(), c);
  std::vector<SparseRow> rows;
  rows.reserve(eqs.size());
  for (auto& [w, r] : eqs) rows.push_back(std::move(r));
  return solve_affine(rows, span.size(), f);
}

bool same_span_nc(const std::vector<NcPoly>& a, const std::vector<NcPoly>& b,
                  const Field& f) {
  std::map<Word, std::size_t> index;
  for (const auto* list : {&a, &b})
    for (const NcPoly& p : *list)
      for (const auto& [w, c] : p.terms()) index.emplace(w, index.size());
  auto densify = [&](const std::vector<NcPoly>& list) {
    std::vector<std::vector<Scalar>> rows;
    rows.reserve(list.size());
    for (const NcPoly& p : list) {
      std::vector<Scalar> v(index.size(), Scalar::zero(f));
      for (const auto& [w, c] : p.terms()) v[index.at(w)] = c;
      rows.push_back(std::move(v));
    }
    return rows;
  };
  return same_span(densify(a), densify(b), f);
}

}  // namespace cherednik
