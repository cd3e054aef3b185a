#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "cherednik/parallel.hpp"
#include "cherednik/relation_table.hpp"

namespace cherednik {

struct StepBudgetExceededError : Error {
  explicit StepBudgetExceededError(const std::string& msg) : Error(msg) {}
};

// Rewrites an arbitrary word combination into PBW normal form for the
// table's order.  Strategy: repeatedly resolve the leftmost descent
// a b -> b a + [a,b].  Terminates because each generated word decreases the
// measure (V-degree, length, inversion count) lexicographically; each
// elementary rewrite counts against the table's step budget.
NcPoly normalize_terms(std::map<Word, Scalar> raw, const RelationTable& table);

// Identity on already-normal input.
NcPoly normalize(const NcPoly& p, const RelationTable& table);

NcPoly multiply(const NcPoly& a, const NcPoly& b, const RelationTable& table);
NcPoly power(const NcPoly& a, unsigned n, const RelationTable& table);
NcPoly commutator(const NcPoly& a, const NcPoly& b, const RelationTable& table);

struct JacobiTripleResidual {
  std::array<Gen, 3> triple;  // ascending table rank
  NcPoly residual;
};

struct PbwReport {
  bool pass;
  std::vector<JacobiTripleResidual> failures;
  // The operative consistency certificate, recorded explicitly.
  std::string certificate;
};

// For every unordered triple of distinct generators, the residual
// [[a,b],c] + [[b,c],a] + [[c,a],b] with inner brackets from the table and
// outer brackets computed by the engine must normalize to zero.
PbwReport pbw_check(const RelationTable& table, Exec exec = Exec::parallel);

// Echelonized basis of { z in span(search_space) : [z, g] = 0 for all
// generators g }.  Commutator columns are evaluated independently
// (parallelizable); elimination is exact.
std::vector<NcPoly> solve_centrality(const RelationTable& table,
                                     const std::vector<NcPoly>& search_space,
                                     Exec exec = Exec::parallel);

}  // namespace cherednik
