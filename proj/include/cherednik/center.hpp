#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cherednik/gl2.hpp"
#include "cherednik/linalg.hpp"

namespace cherednik {

struct CentralityError : Error {
  explicit CentralityError(const std::string& msg) : Error(msg) {}
};

// Recovers (F(alpha), G(alpha)) from the commutator [embed(alpha), x] by
// splitting it as A·x + B·y and solving 2h·F + G = A, 4e·F = B.  Independent
// of the recursion in FGTable, hence usable as its oracle.  The split solves
// a linear system over embedded central monomials rather than dividing by
// 2h or 4e, but recovering F from 4e·F still needs 2 invertible, so
// characteristic 2 is rejected.
FGPair fg_extract(const CentralPoly& alpha, const Gl2CherednikAlgebra& algebra);

// B = y1 x - x1 y - embed(c), in normal form.  Verifies [B, g] = 0 for all
// eight generators; throws CentralityError naming the offending generator
// and residual otherwise.
NcPoly central_b(const Gl2CherednikAlgebra& algebra);

enum class LiftMatch {
  exact,            // candidate - z == 0
  constant_offset,  // difference is a nonzero constant
  pure_tau_offset,  // difference is a nonconstant polynomial in tau alone
  other,            // difference involves Delta
};

const char* lift_match_name(LiftMatch m);

struct LiftCandidate {
  std::string formula;  // human-readable closed form that was tried
  CentralPoly value;
  LiftMatch match;
  CentralPoly difference;  // value - z
};

struct CentralLift {
  CentralPoly z;      // solved coefficient polynomial, constant term zero
  NcPoly D;           // d - embed(z), verified central
  CentralPoly alpha;  // solve_F(c + Delta·F(c)), zero pure-tau part
  std::vector<LiftCandidate> candidates;
};

// Solves commutator(d - embed(z), x) = 0 for z in the monomial box
// {Delta^n tau^m : n, m <= degree_bound}.  The kernel of z -> [embed(z), x]
// on the box is the constants (in characteristic 0), so z is canonicalized
// by zero constant term.  D is verified central against all eight
// generators.  Also evaluates several closed-form candidates for z built
// from alpha and records how each differs from the solved value.
CentralLift central_d_lift(const Gl2CherednikAlgebra& algebra, int degree_bound = 6);

// Monomial box for center scans: at most v_max V-letters (x, y, x1, y1), at
// most ug_max letters from tau, h, e, f, and total length at most total_max
// (negative total_max means v_max + ug_max).
struct ScanBox {
  int v_max;
  int ug_max;
  int total_max = -1;

  int effective_total() const { return total_max < 0 ? v_max + ug_max : total_max; }
  bool contains(const Word& w) const;
};

enum class CompanionStatus { pass, fail, skipped };

struct ScanResult {
  std::vector<NcPoly> basis;  // echelonized central elements in the box
  // Comparison of span(basis) against span{ B^i D^j inside the box }.
  CompanionStatus companion;
  std::string companion_detail;
};

// Solves [z, g] = 0 for all generators g over the span of every normal
// monomial in the box, then compares the result against the products of the
// two distinguished central elements that land in the same box.  The
// companion comparison is skipped when the parameter is inadmissible.
ScanResult center_scan(const Gl2CherednikAlgebra& algebra, const ScanBox& box,
                       Exec exec = Exec::parallel);

// All normal words w (for the table's order) with box.contains(w), in
// rank-lexicographic order by length.  Exposed for tests.
std::vector<Word> enumerate_box(const ScanBox& box, const GenOrder& order);

}  // namespace cherednik
