#include "cherednik/reps.hpp"

#include <algorithm>

#include "cherednik/linalg.hpp"

namespace cherednik {

Gl2Irrep::Gl2Irrep(const Field& f, int lambda, const Scalar& mu)
    : field_(f), lambda_(lambda), mu_(mu) {
  if (lambda < 0) throw Error("Gl2Irrep: highest weight must be a non-negative integer");
}

std::vector<Scalar> Gl2Irrep::zero_vector() const {
  return std::vector<Scalar>(dim(), Scalar::zero(field_));
}

std::vector<Scalar> Gl2Irrep::basis_vector(int i) const {
  std::vector<Scalar> v = zero_vector();
  v.at(static_cast<std::size_t>(i)) = Scalar::one(field_);
  return v;
}

std::vector<Scalar> Gl2Irrep::act_gen(Gen g, const std::vector<Scalar>& coords) const {
  std::vector<Scalar> out = zero_vector();
  const long long lam = lambda_;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].is_zero()) continue;
    const long long ii = static_cast<long long>(i);
    switch (g) {
      case Gen::tau:
        out[i] += coords[i] * mu_;
        break;
      case Gen::h:
        out[i] += coords[i] * Scalar::from_int(field_, lam - 2 * ii);
        break;
      case Gen::e:
        if (i > 0) out[i - 1] += coords[i] * Scalar::from_int(field_, ii * (lam - ii + 1));
        break;
      case Gen::f:
        if (i + 1 < coords.size()) out[i + 1] += coords[i];
        break;
      default:
        throw Error("Gl2Irrep: generator " + std::string(gen_name(g)) +
                    " does not act on a gl2 module");
    }
  }
  return out;
}

std::vector<Scalar> Gl2Irrep::act(const NcPoly& u, const std::vector<Scalar>& coords) const {
  std::vector<Scalar> total = zero_vector();
  for (const auto& [word, c] : u.terms()) {
    std::vector<Scalar> cur = coords;
    for (auto it = word.rbegin(); it != word.rend(); ++it) cur = act_gen(*it, cur);
    for (std::size_t i = 0; i < total.size(); ++i) total[i] += cur[i] * c;
  }
  return total;
}

VermaElement VermaElement::highest_weight(const Field& f, const Scalar& lambda,
                                          const Scalar& mu) {
  VermaElement w(f, lambda, mu);
  w.add({0, 0, 0}, Scalar::one(f));
  return w;
}

void VermaElement::add(const Key& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coords.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coords.erase(it);
  }
}

std::pair<int, int> VermaElement::biweight_offset(const Key& k) {
  return {-2 * k[0] + k[1] - k[2], -(k[1] + k[2])};
}

VermaElement VermaElement::operator+(const VermaElement& o) const {
  VermaElement out = *this;
  for (const auto& [k, c] : o.coords) out.add(k, c);
  return out;
}

VermaElement VermaElement::operator-(const VermaElement& o) const {
  VermaElement out = *this;
  for (const auto& [k, c] : o.coords) out.add(k, -c);
  return out;
}

bool VermaElement::operator==(const VermaElement& o) const {
  return lambda == o.lambda && mu == o.mu && coords == o.coords;
}

std::string VermaElement::to_string() const {
  if (coords.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : coords) {
    if (!s.empty()) s += "; ";
    s += "(" + std::to_string(k[0]) + "," + std::to_string(k[1]) + "," +
         std::to_string(k[2]) + "): " + c.to_string();
  }
  return s;
}

VermaElement verma_act(const NcPoly& g, const VermaElement& w,
                       const Gl2CherednikAlgebra& algebra) {
  const RelationTable& tri = algebra.table(triangular_order());
  const Field& f = algebra.field();
  VermaElement out(f, w.lambda, w.mu);
  for (const auto& [gword, gc] : g.terms()) {
    for (const auto& [key, wc] : w.coords) {
      Word word = gword;
      word.insert(word.end(), static_cast<std::size_t>(key[0]), Gen::f);
      word.insert(word.end(), static_cast<std::size_t>(key[1]), Gen::x1);
      word.insert(word.end(), static_cast<std::size_t>(key[2]), Gen::y1);
      std::map<Word, Scalar> raw;
      raw.emplace(std::move(word), gc * wc);
      NcPoly nf = normalize_terms(std::move(raw), tri);
      for (const auto& [nw, nc] : nf.terms()) {
        VermaElement::Key k{0, 0, 0};
        int taus = 0, hs = 0;
        bool killed = false;
        for (Gen letter : nw) {
          switch (letter) {
            case Gen::f:  ++k[0]; break;
            case Gen::x1: ++k[1]; break;
            case Gen::y1: ++k[2]; break;
            case Gen::tau: ++taus; break;
            case Gen::h:   ++hs; break;
            default: killed = true; break;  // e, x, y annihilate v
          }
          if (killed) break;
        }
        if (killed) continue;
        out.add(k, nc * w.mu.pow(static_cast<std::uint64_t>(taus)) *
                       w.lambda.pow(static_cast<std::uint64_t>(hs)));
      }
    }
  }
  return out;
}

AlphaM alpha_m(const Gl2CherednikAlgebra& algebra, unsigned m) {
  const Field& f = algebra.field();
  const RelationTable& tri = algebra.table(triangular_order());
  const RelationTable& def = algebra.table();

  auto bracket_power = [&](const RelationTable& t) {
    NcPoly ym = power(NcPoly::generator(f, t.order(), Gen::y), m, t);
    NcPoly x1m = power(NcPoly::generator(f, t.order(), Gen::x1), m, t);
    return commutator(ym, x1m, t);
  };

  AlphaM out{NcPoly(f, def.order()), NcPoly(f, def.order()), false, std::nullopt};
  out.value = normalize(bracket_power(tri).ug_part(), def);
  out.default_order_projection = bracket_power(def).ug_part();

  out.central_in_ug = true;
  for (Gen g : {Gen::h, Gen::e, Gen::f}) {
    if (!commutator(out.value, NcPoly::generator(f, def.order(), g), def).is_zero()) {
      out.central_in_ug = false;
      break;
    }
  }

  if (out.central_in_ug) {
    int len = std::max(0, out.value.max_word_length());
    std::vector<CentralPoly> mus;
    std::vector<NcPoly> span;
    for (int n = 0; 2 * n <= len + 2; ++n) {
      for (int k = 0; 2 * n + k <= len + 2; ++k) {
        mus.push_back(CentralPoly::monomial(f, n, k, Scalar::one(f)));
        span.push_back(embed_central(mus.back(), def));
      }
    }
    if (auto sol = express_in_span(out.value, span)) {
      CentralPoly form(f);
      for (std::size_t i = 0; i < mus.size(); ++i)
        if (!(*sol)[i].is_zero()) form += mus[i] * (*sol)[i];
      out.central_form = std::move(form);
    }
  }
  return out;
}

FiniteDimReport finite_dim_test(const Gl2CherednikAlgebra& algebra, long lambda,
                                const Scalar& mu, unsigned m_max) {
  FiniteDimReport report{lambda >= 0, std::nullopt, {}};
  if (!report.lambda_is_admissible) {
    report.notes.push_back("highest weight " + std::to_string(lambda) +
                           " is not a non-negative integer; module cannot be finite-dimensional");
    return report;
  }
  report.notes.push_back("highest weight " + std::to_string(lambda) +
                         " is a non-negative integer");
  Gl2Irrep rep(algebra.field(), static_cast<int>(lambda), mu);
  for (unsigned m = 1; m <= m_max; ++m) {
    NcPoly am = alpha_m(algebra, m).value;
    bool annihilates = true;
    for (int i = 0; i < static_cast<int>(rep.dim()); ++i) {
      std::vector<Scalar> image = rep.act(am, rep.basis_vector(i));
      bool zero = std::all_of(image.begin(), image.end(),
                              [](const Scalar& s) { return s.is_zero(); });
      if (!zero) {
        annihilates = false;
        report.notes.push_back("m = " + std::to_string(m) + ": alpha_m acts nontrivially (v_" +
                               std::to_string(i) + " is not killed)");
        break;
      }
    }
    if (annihilates) {
      report.witness_m = m;
      report.notes.push_back("m = " + std::to_string(m) +
                             ": alpha_m annihilates the whole module");
      break;
    }
  }
  if (!report.witness_m)
    report.notes.push_back("no annihilating m up to " + std::to_string(m_max));
  return report;
}

std::vector<VermaElement> maximal_vectors(const Gl2CherednikAlgebra& algebra,
                                          const Scalar& lambda, const Scalar& mu,
                                          int depth) {
  const Field& f = algebra.field();
  const RelationTable& tri = algebra.table(triangular_order());

  // Basis triples within the window, grouped by biweight offset.
  std::map<std::pair<int, int>, std::vector<VermaElement::Key>> slices;
  for (int a = 0; a <= depth; ++a)
    for (int b = 0; a + b <= depth; ++b)
      for (int c = 0; a + b + c <= depth; ++c)
        slices[VermaElement::biweight_offset({a, b, c})].push_back({a, b, c});

  const std::array<Gen, 3> killers = {Gen::e, Gen::x, Gen::y};
  std::vector<VermaElement> out;
  for (const auto& [offset, keys] : slices) {
    // Images of each candidate basis vector under e, x, y — kept exact, with
    // out-of-window triples included as ordinary equation rows.
    std::map<std::pair<std::size_t, VermaElement::Key>, SparseRow> rows;
    for (std::size_t col = 0; col < keys.size(); ++col) {
      VermaElement w(f, lambda, mu);
      w.add(keys[col], Scalar::one(f));
      for (std::size_t gi = 0; gi < killers.size(); ++gi) {
        NcPoly gp = NcPoly::generator(f, tri.order(), killers[gi]);
        VermaElement image = verma_act(gp, w, algebra);
        for (const auto& [k, c] : image.coords)
          rows[{gi, k}].emplace_back(col, c);
      }
    }
    std::vector<SparseRow> mat;
    mat.reserve(rows.size());
    for (auto& [k, r] : rows) mat.push_back(std::move(r));
    for (const std::vector<Scalar>& sol : nullspace(mat, keys.size(), f)) {
      VermaElement w(f, lambda, mu);
      for (std::size_t col = 0; col < keys.size(); ++col) w.add(keys[col], sol[col]);
      out.push_back(std::move(w));
    }
  }
  return out;
}

}  // namespace cherednik
