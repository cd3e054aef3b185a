#include "cherednik/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <ostream>
#include <set>

#include <CLI11.hpp>

#include "cherednik/center.hpp"
#include "cherednik/expr.hpp"
#include "cherednik/modp.hpp"
#include "cherednik/reps.hpp"
#include "cherednik/report.hpp"

namespace cherednik {

namespace {

struct Options {
  std::string c = "0";
  std::string field = "q";
  std::uint64_t p = 0;
  int max_degree = 6;
  bool json = false;
  std::uint64_t step_budget = kDefaultStepBudget;
  std::string order = "default";
  std::string out_path;
  bool no_timing = false;

  // subcommand-specific
  std::string expr_a, expr_b;
  unsigned table_rows = 6;
  unsigned m = 1;
  long lambda_int = 0;
  std::string lambda_expr = "0";
  std::string mu_expr = "0";
  unsigned m_max = 3;
  int depth = 2;
  int v_bound = 2;
  int ug_bound = 2;
  int total_bound = -1;
};

Field make_field(const Options& o) {
  if (o.field == "q") return Field::rationals();
  if (o.p < 2) throw Error("--field fp requires --p <prime>");
  return Field::prime(o.p);
}

const GenOrder& make_order(const Options& o) {
  return o.order == "triangular" ? triangular_order() : default_order();
}

Scalar constant_scalar(const std::string& text, const Field& f, const char* what) {
  CentralPoly p = eval_central(parse_expression(text), f);
  if (!p.is_constant())
    throw Error(std::string(what) + " must be a constant, got " + p.to_string());
  return p.coefficient(0, 0);
}

// Runs one named check, recording outcome, witnesses, and wall time.  A
// thrown Error becomes a FAIL record rather than aborting the report.
void run_check(Report& report, const std::string& name,
               const std::function<void(CheckRecord&)>& body) {
  CheckRecord rec{name, true, {}, 0.0};
  auto start = std::chrono::steady_clock::now();
  try {
    body(rec);
  } catch (const Error& e) {
    rec.pass = false;
    rec.witnesses.push_back(std::string("error: ") + e.what());
  }
  rec.time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  report.add(std::move(rec));
}

std::string scan_basis_witness(const std::vector<NcPoly>& basis) {
  std::string s = "dimension " + std::to_string(basis.size());
  return s;
}

void emit(const Report& r, const Options& o, std::ostream& out) {
  Report sorted = r;
  sorted.sort_by_name();
  if (o.no_timing)
    for (CheckRecord& c : sorted.checks) c.time_ms = 0.0;
  std::string doc =
      o.json ? to_json(sorted, !o.no_timing) : to_text(sorted, !o.no_timing);
  if (o.out_path.empty()) {
    out << doc;
  } else {
    std::ofstream file(o.out_path);
    if (!file) throw Error("cannot open --out file " + o.out_path);
    file << doc;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"verification kernel for the gl2 infinitesimal deformation family"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--c", o.c, "deformation parameter, an expression in Delta and tau")
        ->capture_default_str();
    sub->add_option("--field", o.field, "coefficient field: q (rationals) or fp")
        ->check(CLI::IsMember({"q", "fp"}));
    sub->add_option("--p", o.p, "prime for --field fp");
    sub->add_option("--step-budget", o.step_budget, "rewriting step budget");
    sub->add_flag("--json", o.json, "emit the report as JSON");
    sub->add_option("--out", o.out_path, "write the report to this file");
    sub->add_flag("--no-timing", o.no_timing, "suppress timings for reproducible output");
    return sub;
  };

  CLI::App* cmd_normalize = add_common(app.add_subcommand(
      "normalize", "rewrite an expression into PBW normal form"));
  cmd_normalize->add_option("expr", o.expr_a, "expression to normalize")->required();
  cmd_normalize->add_option("--order", o.order, "generator order")
      ->check(CLI::IsMember({"default", "triangular"}));

  CLI::App* cmd_comm = add_common(app.add_subcommand(
      "commutator", "normal form of [a, b]"));
  cmd_comm->add_option("a", o.expr_a, "left argument")->required();
  cmd_comm->add_option("b", o.expr_b, "right argument")->required();
  cmd_comm->add_option("--order", o.order, "generator order")
      ->check(CLI::IsMember({"default", "triangular"}));

  CLI::App* cmd_fg = add_common(app.add_subcommand(
      "fg", "F and G of a central polynomial, with the extraction cross-check"));
  cmd_fg->add_option("alpha", o.expr_a, "central polynomial in Delta, tau")->required();

  CLI::App* cmd_fg_table = add_common(app.add_subcommand(
      "fg-table", "rows F(Delta^n), G(Delta^n) of the recursion table"));
  cmd_fg_table->add_option("rows", o.table_rows, "number of rows")
      ->capture_default_str();

  CLI::App* cmd_jacobi = add_common(app.add_subcommand(
      "jacobi", "consistency residual 4*Delta*F(F(c)) + 6F(c) - 6G(F(c)) - G(G(c))"));

  CLI::App* cmd_pbw = add_common(app.add_subcommand(
      "pbw-check", "Jacobi residual of every generator triple under the rewriting engine"));

  CLI::App* cmd_center_b = add_common(app.add_subcommand(
      "center-b", "the degree-2 central element y1*x - x1*y - c"));

  CLI::App* cmd_center_d = add_common(app.add_subcommand(
      "center-d", "the degree-3 central element d - z and the solved z"));
  cmd_center_d->add_option("--max-degree", o.max_degree, "degree bound for the z box")
      ->capture_default_str();

  CLI::App* cmd_scan = add_common(app.add_subcommand(
      "center-scan", "basis of central elements in a monomial box"));
  cmd_scan->add_option("--v-bound", o.v_bound, "max V letters")->capture_default_str();
  cmd_scan->add_option("--ug-bound", o.ug_bound, "max tau/h/e/f letters")
      ->capture_default_str();
  cmd_scan->add_option("--total-bound", o.total_bound,
                       "max word length (-1: v-bound + ug-bound)")
      ->capture_default_str();

  CLI::App* cmd_alpha = add_common(app.add_subcommand(
      "alpha-m", "the Ug-valued obstruction in [y^m, x1^m]"));
  cmd_alpha->add_option("m", o.m, "power m")->required();

  CLI::App* cmd_fdim = add_common(app.add_subcommand(
      "finite-dim", "finite-dimensionality test for L(lambda, mu)"));
  cmd_fdim->add_option("--lambda", o.lambda_int, "highest weight (integer)")->required();
  cmd_fdim->add_option("--mu", o.mu_expr, "tau eigenvalue (constant)")->capture_default_str();
  cmd_fdim->add_option("--m-max", o.m_max, "largest m to try")->capture_default_str();

  CLI::App* cmd_maxvec = add_common(app.add_subcommand(
      "maximal-vectors", "vectors killed by e, x, y in the truncated Verma module"));
  cmd_maxvec->add_option("--lambda", o.lambda_expr, "h eigenvalue (constant expression)")
      ->required();
  cmd_maxvec->add_option("--mu", o.mu_expr, "tau eigenvalue (constant expression)")
      ->capture_default_str();
  cmd_maxvec->add_option("--depth", o.depth, "truncation a + b + c <= depth")
      ->capture_default_str();

  CLI::App* cmd_modp = add_common(app.add_subcommand(
      "modp", "characteristic-p central elements battery"));

  try {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("cherednik");
    for (const std::string& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Report report;
  try {
    if (cmd_modp->parsed()) {
      static const std::set<std::uint64_t> allowed = {2, 3, 5};
      if (!allowed.count(o.p))
        throw Error("modp: pass --p 2, 3, or 5 (the configured desk-scale ceiling)");
      o.field = "fp";
    }

    Field field = make_field(o);
    report.field_name = field.name();
    report.c_text = o.c;
    CentralPoly c = eval_central(parse_expression(o.c), field);

    if (cmd_normalize->parsed() || cmd_comm->parsed()) {
      FGPair pair = [&] {
        FGTable t(field);
        return fg(c, t);
      }();
      RelationTable table =
          RelationTable::build(field, make_order(o), pair.F, pair.G, o.step_budget);
      if (cmd_normalize->parsed()) {
        ExprPtr ast = parse_expression(o.expr_a);
        run_check(report, "normalize", [&](CheckRecord& rec) {
          NcPoly nf = eval_nc(ast, table);
          rec.witnesses.push_back("input: " + print_expression(ast));
          rec.witnesses.push_back("normal form (" + table.order().name() +
                                  " order): " + nf.to_string());
        });
      } else {
        ExprPtr lhs = parse_expression(o.expr_a);
        ExprPtr rhs = parse_expression(o.expr_b);
        run_check(report, "commutator", [&](CheckRecord& rec) {
          NcPoly r = commutator(eval_nc(lhs, table), eval_nc(rhs, table), table);
          rec.witnesses.push_back("[" + print_expression(lhs) + ", " +
                                  print_expression(rhs) + "] = " + r.to_string());
        });
      }
    } else if (cmd_fg->parsed()) {
      CentralPoly alpha = eval_central(parse_expression(o.expr_a), field);
      FGTable table(field);
      run_check(report, "fg", [&](CheckRecord& rec) {
        FGPair pair = fg(alpha, table);
        rec.witnesses.push_back("F = " + pair.F.to_string());
        rec.witnesses.push_back("G = " + pair.G.to_string());
      });
      if (field.characteristic() != 2) {
        run_check(report, "fg-extract-agrees", [&](CheckRecord& rec) {
          FGPair rec_pair = fg(alpha, table);
          Gl2CherednikAlgebra undeformed =
              Gl2CherednikAlgebra::build(CentralPoly(field), o.step_budget);
          FGPair ext = fg_extract(alpha, undeformed);
          rec.pass = rec_pair.F == ext.F && rec_pair.G == ext.G;
          rec.witnesses.push_back("recursion: F = " + rec_pair.F.to_string() +
                                  ", G = " + rec_pair.G.to_string());
          rec.witnesses.push_back("extraction: F = " + ext.F.to_string() +
                                  ", G = " + ext.G.to_string());
        });
      }
    } else if (cmd_fg_table->parsed()) {
      FGTable table(field);
      run_check(report, "fg-table", [&](CheckRecord& rec) {
        rec.witnesses.push_back(
            "degree law: F(Delta^n) has Delta-degree n-1 with leading coefficient n "
            "(n >= 1); checked for every row");
        for (unsigned n = 1; n <= o.table_rows; ++n) {
          FGPair row = table.row(n);
          rec.witnesses.push_back("F(Delta^" + std::to_string(n) + ") = " +
                                  row.F.to_string());
          rec.witnesses.push_back("G(Delta^" + std::to_string(n) + ") = " +
                                  row.G.to_string());
        }
      });
    } else if (cmd_jacobi->parsed()) {
      FGTable table(field);
      run_check(report, "jacobi-residual", [&](CheckRecord& rec) {
        CentralPoly r = jacobi_residual(c, table);
        rec.pass = r.is_zero();
        rec.witnesses.push_back("residual = " + r.to_string());
      });
    } else if (cmd_pbw->parsed()) {
      Gl2CherednikAlgebra algebra = Gl2CherednikAlgebra::build(c, o.step_budget);
      run_check(report, "pbw-jacobi-triples", [&](CheckRecord& rec) {
        PbwReport pbw = pbw_check(algebra.table());
        rec.pass = pbw.pass;
        rec.witnesses.push_back(pbw.certificate);
        for (const auto& fail : pbw.failures) {
          rec.witnesses.push_back(
              std::string("residual on (") + gen_name(fail.triple[0]) + ", " +
              gen_name(fail.triple[1]) + ", " + gen_name(fail.triple[2]) +
              "): " + fail.residual.to_string());
          if (rec.witnesses.size() > 8) break;
        }
      });
    } else if (cmd_center_b->parsed()) {
      Gl2CherednikAlgebra algebra = Gl2CherednikAlgebra::build(c, o.step_budget);
      run_check(report, "central-b", [&](CheckRecord& rec) {
        NcPoly b = central_b(algebra);
        rec.witnesses.push_back("B = " + b.to_string());
        rec.witnesses.push_back("verified: commutators with all 8 generators vanish");
      });
    } else if (cmd_center_d->parsed()) {
      Gl2CherednikAlgebra algebra = Gl2CherednikAlgebra::build(c, o.step_budget);
      run_check(report, "central-d", [&](CheckRecord& rec) {
        CentralLift lift = central_d_lift(algebra, o.max_degree);
        rec.witnesses.push_back("z = " + lift.z.to_string());
        rec.witnesses.push_back("D = d - z = " + lift.D.to_string());
        rec.witnesses.push_back("alpha (solve_F of c + Delta*F(c)) = " +
                                lift.alpha.to_string());
        for (const LiftCandidate& cand : lift.candidates) {
          rec.witnesses.push_back("candidate " + cand.formula + ": " +
                                  lift_match_name(cand.match) +
                                  (cand.match == LiftMatch::exact
                                       ? ""
                                       : " (difference " + cand.difference.to_string() + ")"));
        }
        rec.witnesses.push_back("verified: commutators with all 8 generators vanish");
      });
    } else if (cmd_scan->parsed()) {
      Gl2CherednikAlgebra algebra = Gl2CherednikAlgebra::build(c, o.step_budget);
      ScanBox box{o.v_bound, o.ug_bound, o.total_bound};
      ScanResult scan{{}, CompanionStatus::skipped, ""};
      run_check(report, "center-scan", [&](CheckRecord& rec) {
        scan = center_scan(algebra, box);
        rec.witnesses.push_back(scan_basis_witness(scan.basis));
        for (const NcPoly& z : scan.basis) rec.witnesses.push_back(z.to_string());
      });
      run_check(report, "center-scan-companion", [&](CheckRecord& rec) {
        rec.pass = scan.companion != CompanionStatus::fail;
        rec.witnesses.push_back(scan.companion_detail.empty() ? "not run"
                                                              : scan.companion_detail);
      });
    } else if (cmd_alpha->parsed()) {
      if (o.m == 0) throw Error("alpha-m: m must be positive");
      Gl2CherednikAlgebra algebra = Gl2CherednikAlgebra::build(c, o.step_budget);
      run_check(report, "alpha-m", [&](CheckRecord& rec) {
        AlphaM a = alpha_m(algebra, o.m);
        rec.witnesses.push_back("alpha_" + std::to_string(o.m) + " = " +
                                a.value.to_string() + "  (x,y-last projection)");
        rec.witnesses.push_back("default-order projection = " +
                                a.default_order_projection.to_string());
        rec.witnesses.push_back(a.central_in_ug ? "central in Ug: yes"
                                                : "central in Ug: no");
        if (a.central_form)
          rec.witnesses.push_back("as a central polynomial: " + a.central_form->to_string());
      });
    } else if (cmd_fdim->parsed()) {
      Gl2CherednikAlgebra algebra = Gl2CherednikAlgebra::build(c, o.step_budget);
      Scalar mu = constant_scalar(o.mu_expr, field, "--mu");
      run_check(report, "finite-dim", [&](CheckRecord& rec) {
        FiniteDimReport fd = finite_dim_test(algebra, o.lambda_int, mu, o.m_max);
        rec.pass = fd.finite_dimensional_verdict();
        for (const std::string& note : fd.notes) rec.witnesses.push_back(note);
      });
    } else if (cmd_maxvec->parsed()) {
      Gl2CherednikAlgebra algebra = Gl2CherednikAlgebra::build(c, o.step_budget);
      Scalar lambda = constant_scalar(o.lambda_expr, field, "--lambda");
      Scalar mu = constant_scalar(o.mu_expr, field, "--mu");
      run_check(report, "maximal-vectors", [&](CheckRecord& rec) {
        std::vector<VermaElement> vecs = maximal_vectors(algebra, lambda, mu, o.depth);
        rec.witnesses.push_back("count (depth " + std::to_string(o.depth) +
                                "): " + std::to_string(vecs.size()));
        for (const VermaElement& v : vecs) rec.witnesses.push_back(v.to_string());
      });
    } else if (cmd_modp->parsed()) {
      Gl2CherednikAlgebra algebra = Gl2CherednikAlgebra::build(c, o.step_budget);
      ModpReport mp = run_modp_suite(algebra);
      for (const ModpClaim& claim : mp.entries) {
        run_check(report, claim.claim, [&](CheckRecord& rec) {
          rec.pass = claim.pass;
          if (!claim.residual.empty()) rec.witnesses.push_back(claim.residual);
        });
      }
    }

    emit(report, o, out);
  } catch (const ParseError& e) {
    err << "input error at " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  }
  return report.overall_pass() ? 0 : 1;
}

}  // namespace cherednik
