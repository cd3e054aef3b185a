#include "cherednik/generators.hpp"

namespace cherednik {

const char* gen_name(Gen g) {
  constexpr std::array<const char*, 8> names = {"tau", "h", "e", "f", "x", "y", "x1", "y1"};
  return names[gen_index(g)];
}

GenOrder::GenOrder(std::string name, const std::array<Gen, 8>& ascending) : name_(std::move(name)) {
  std::array<bool, 8> seen{};
  for (int r = 0; r < kGenCount; ++r) {
    Gen g = ascending[static_cast<std::size_t>(r)];
    if (seen[gen_index(g)]) throw Error("GenOrder: duplicate generator");
    seen[gen_index(g)] = true;
    rank_[gen_index(g)] = r;
    by_rank_[static_cast<std::size_t>(r)] = g;
  }
}

const GenOrder& default_order() {
  static const GenOrder order("default", {Gen::tau, Gen::h, Gen::e, Gen::f,
                                          Gen::x, Gen::y, Gen::x1, Gen::y1});
  return order;
}

const GenOrder& triangular_order() {
  static const GenOrder order("triangular", {Gen::f, Gen::x1, Gen::y1, Gen::tau,
                                             Gen::h, Gen::e, Gen::x, Gen::y});
  return order;
}

int word_v_degree(const Word& w) {
  int d = 0;
  for (Gen g : w) d += v_degree(g);
  return d;
}

int word_h_weight(const Word& w) {
  int d = 0;
  for (Gen g : w) d += h_weight(g);
  return d;
}

int word_tau_weight(const Word& w) {
  int d = 0;
  for (Gen g : w) d += tau_weight(g);
  return d;
}

bool word_is_normal(const Word& w, const GenOrder& order) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (order.rank(w[i]) > order.rank(w[i + 1])) return false;
  return true;
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += "*";
    out += gen_name(w[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace cherednik
