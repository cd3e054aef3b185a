#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cherednik/field.hpp"

namespace cherednik {

// The eight generators: tau, h, e, f span gl2 (tau central in gl2); x, y span
// the vector representation, x1, y1 its dual.
enum class Gen : std::uint8_t { tau = 0, h, e, f, x, y, x1, y1 };

inline constexpr int kGenCount = 8;
inline constexpr std::array<Gen, 8> kAllGens = {Gen::tau, Gen::h, Gen::e, Gen::f,
                                                Gen::x,   Gen::y, Gen::x1, Gen::y1};

constexpr std::size_t gen_index(Gen g) { return static_cast<std::size_t>(g); }

// ad(h) eigenvalues.
constexpr int h_weight(Gen g) {
  constexpr std::array<int, 8> w = {0, 0, 2, -2, 1, -1, 1, -1};
  return w[gen_index(g)];
}

// ad(tau) eigenvalues.
constexpr int tau_weight(Gen g) {
  constexpr std::array<int, 8> w = {0, 0, 0, 0, 1, 1, -1, -1};
  return w[gen_index(g)];
}

// Filtration degree: 0 on gl2, 1 on the V letters.
constexpr int v_degree(Gen g) { return gen_index(g) >= 4 ? 1 : 0; }

const char* gen_name(Gen g);

// A total order on generators defining the PBW normal form (words with
// non-decreasing rank are normal).
class GenOrder {
 public:
  GenOrder(std::string name, const std::array<Gen, 8>& ascending);

  const std::string& name() const { return name_; }
  int rank(Gen g) const { return rank_[gen_index(g)]; }
  Gen at_rank(int r) const { return by_rank_[static_cast<std::size_t>(r)]; }

  bool operator==(const GenOrder& o) const { return rank_ == o.rank_; }

 private:
  std::string name_;
  std::array<int, 8> rank_;
  std::array<Gen, 8> by_rank_;
};

// tau < h < e < f < x < y < x1 < y1: U(gl2) coefficients end up leftmost,
// V letters rightmost, so V-coefficient extraction is a suffix scan.
const GenOrder& default_order();

// f < x1 < y1 < tau < h < e < x < y: lowering/creation letters leftmost,
// annihilating letters rightmost; used for Verma-module evaluation.
const GenOrder& triangular_order();

using Word = std::vector<Gen>;

int word_v_degree(const Word& w);
int word_h_weight(const Word& w);
int word_tau_weight(const Word& w);
// Count of adjacent-rank inversions is zero, i.e. ranks non-decreasing.
bool word_is_normal(const Word& w, const GenOrder& order);
std::string word_to_string(const Word& w);  // e.g. "tau^2*h*x"

}  // namespace cherednik
