// Compares the serial reference path against the OpenMP path on the two
// parallelizable kernels (pbw-check and center-scan) and verifies bitwise
// identical results.  Wall times depend on the machine; the equality check
// does not.
#include <chrono>
#include <iostream>

#include "cherednik/center.hpp"

using namespace cherednik;

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

template <typename Fn>
auto timed(const char* label, Fn&& fn, double& ms) {
  auto start = std::chrono::steady_clock::now();
  auto result = fn();
  ms = ms_since(start);
  std::cout << "  " << label << ": " << ms << " ms\n";
  return result;
}

}  // namespace

int main() {
  Field f = Field::rationals();
  // c = Delta + 3 tau^2: the smallest admissible parameter with a Delta term.
  CentralPoly c = CentralPoly::delta(f) +
                  CentralPoly::monomial(f, 0, 2, Scalar::from_int(f, 3));
  Gl2CherednikAlgebra algebra = Gl2CherednikAlgebra::build(c);

  bool all_equal = true;
  double serial_ms = 0, parallel_ms = 0;

  std::cout << "pbw-check (56 generator triples)\n";
  PbwReport ps = timed("serial  ", [&] { return pbw_check(algebra.table(), Exec::serial); },
                       serial_ms);
  PbwReport pp = timed("parallel", [&] { return pbw_check(algebra.table(), Exec::parallel); },
                       parallel_ms);
  bool pbw_equal = ps.pass == pp.pass && ps.failures.size() == pp.failures.size();
  all_equal = all_equal && pbw_equal;
  std::cout << "  results identical: " << (pbw_equal ? "yes" : "NO") << ", speedup "
            << (parallel_ms > 0 ? serial_ms / parallel_ms : 0) << "x\n";

  std::cout << "center-scan (V <= 2, Ug <= 2)\n";
  ScanBox box{2, 2, -1};
  ScanResult ss = timed("serial  ", [&] { return center_scan(algebra, box, Exec::serial); },
                        serial_ms);
  ScanResult sp = timed("parallel", [&] { return center_scan(algebra, box, Exec::parallel); },
                        parallel_ms);
  bool scan_equal = ss.basis.size() == sp.basis.size();
  for (std::size_t i = 0; scan_equal && i < ss.basis.size(); ++i)
    scan_equal = ss.basis[i] == sp.basis[i];
  all_equal = all_equal && scan_equal;
  std::cout << "  results identical: " << (scan_equal ? "yes" : "NO") << ", speedup "
            << (parallel_ms > 0 ? serial_ms / parallel_ms : 0) << "x\n";

  std::cout << (all_equal ? "OK: serial and parallel paths agree\n"
                          : "ERROR: paths disagree\n");
  return all_equal ? 0 : 1;
}
