// Command-line front end: basis listings, products (closed formula vs the
// Hecke oracle), the verification suites, the tensor-space action, and
// structure-constant tables.  All results go to stdout as deterministic JSON
// (the wall_ms timing field is the one value that varies between runs);
// diagnostics go to stderr.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ischur/json_io.hpp"
#include "ischur/longform.hpp"
#include "ischur/parallel.hpp"
#include "ischur/verify.hpp"

namespace {

using ischur::Json;

void check_caps(int n, int r) {
  // n and r are range-checked by the parser; the basis cap still needs an
  // explicit guard because (4,4) blows past it.
  unsigned long long dim = ischur::xi_size(n, r);
  if (dim > 10000)
    throw std::invalid_argument(
        "basis size " + std::to_string(dim) + " at (n,r)=(" +
        std::to_string(n) + "," + std::to_string(r) +
        ") exceeds the 10^4 cap");
}

ischur::ThetaMatrix parse_matrix_arg(const std::string& text, int n, int r,
                                     const char* which) {
  Json j = Json::parse(text);  // parse_error propagates -> exit 2
  ischur::ThetaMatrix a = ischur::matrix_from_json(j);
  if (a.n() != n)
    throw std::invalid_argument(std::string(which) + " must be " +
                                std::to_string(2 * n) + "x" +
                                std::to_string(2 * n));
  if (a.total() != 2 * r)
    throw std::invalid_argument(std::string(which) + " must have entry sum " +
                                std::to_string(2 * r));
  return a;
}

int cmd_basis(int n, int r) {
  check_caps(n, r);
  const auto& ctx = ischur::SchurContext::get(n, r);
  Json out = Json::object();
  out["n"] = n;
  out["r"] = r;
  out["dim"] = ctx.basis().size();
  Json mats = Json::array();
  for (const auto& a : ctx.basis()) mats.push_back(ischur::matrix_to_json(a));
  out["matrices"] = std::move(mats);
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_mult(int n, int r, const std::string& lhs_text,
             const std::string& rhs_text, const std::string& method) {
  check_caps(n, r);
  const auto& ctx = ischur::SchurContext::get(n, r);
  ischur::ThetaMatrix a = parse_matrix_arg(lhs_text, n, r, "--lhs");
  ischur::ThetaMatrix b = parse_matrix_arg(rhs_text, n, r, "--rhs");

  Json out = Json::object();
  out["n"] = n;
  out["r"] = r;
  out["method"] = method;
  int rc = 0;
  if (method == "oracle") {
    out["value"] = ischur::schur_to_json(ctx.oracle_product(a, b));
  } else if (method == "formula") {
    out["value"] = ischur::schur_to_json(ischur::formula_product(ctx, a, b));
  } else {
    ischur::SchurElement oracle = ctx.oracle_product(a, b);
    ischur::SchurElement formula = ischur::formula_product(ctx, a, b);
    bool match = oracle == formula;
    out["oracle"] = ischur::schur_to_json(oracle);
    out["formula"] = ischur::schur_to_json(formula);
    out["match"] = match;
    if (!match) {
      std::cerr << "mismatch between formula and oracle\n";
      rc = 1;
    }
  }
  std::cout << out.dump() << "\n";
  return rc;
}

int cmd_verify(const std::string& suite, const ischur::SuiteParams& params) {
  ischur::SuiteReport rep = ischur::run_suite(suite, params);
  std::cerr << "suite=" << rep.suite << " cases=" << rep.cases
            << " failed=" << rep.failed << " wall_ms=" << rep.wall_ms << "\n";
  std::cout << ischur::report_to_json(rep).dump() << "\n";
  return rep.ok() ? 0 : 1;
}

int cmd_tensor_act(int n, int r, const std::string& gen,
                   const std::vector<int>& index) {
  if (static_cast<int>(index.size()) != r)
    throw std::invalid_argument("--index must have exactly r entries");
  for (int x : index)
    if (x < 1 || x > 2 * n)
      throw std::invalid_argument("--index entries must lie in [1, 2n]");

  ischur::UiGenerator g = ischur::UiGenerator::t();
  if (gen == "t") {
    // keep the default
  } else if (gen.size() > 2 && (gen[0] == 'd' || gen[0] == 'e' || gen[0] == 'f')
             && gen[1] == '_') {
    int idx = 0;
    try {
      idx = std::stoi(gen.substr(2));
    } catch (const std::exception&) {
      throw std::invalid_argument("--gen: bad generator index in '" + gen +
                                  "'");
    }
    if (gen[0] == 'd') {
      if (idx < 1 || idx > n)
        throw std::invalid_argument("--gen d_j needs j in [1, n]");
      g = ischur::UiGenerator::d(idx);
    } else {
      if (idx < 1 || idx >= n)
        throw std::invalid_argument("--gen e_h/f_h needs h in [1, n)");
      g = gen[0] == 'e' ? ischur::UiGenerator::e(idx)
                        : ischur::UiGenerator::f(idx);
    }
  } else {
    throw std::invalid_argument("--gen must be one of d_j, e_h, f_h, t");
  }

  ischur::TensorVector w = ischur::TensorVector::basis(n, r, index);
  ischur::TensorVector out = ischur::ui_action_closed(g, w);
  Json j = Json::object();
  j["n"] = n;
  j["r"] = r;
  j["gen"] = g.str();
  j["index"] = index;
  j["value"] = ischur::tensor_to_json(out);
  std::cout << j.dump() << "\n";
  return 0;
}

int cmd_table(int n, int r, const std::string& path) {
  check_caps(n, r);
  if (ischur::xi_size(n, r) > 200)
    throw std::invalid_argument(
        "table: dimension " + std::to_string(ischur::xi_size(n, r)) +
        " exceeds the 200 cap for full structure-constant tables");
  const auto& ctx = ischur::SchurContext::get(n, r);
  const auto& basis = ctx.basis();

  Json out = Json::object();
  out["n"] = n;
  out["r"] = r;
  out["dim"] = basis.size();
  Json mats = Json::array();
  for (const auto& a : basis) mats.push_back(ischur::matrix_to_json(a));
  out["matrices"] = std::move(mats);

  // Only pairs with matching inner profiles multiply to something nonzero.
  Json prods = Json::array();
  long nonzero = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (basis[i].col_sums() != basis[j].row_sums()) continue;
      ischur::SchurElement p = ctx.oracle_product(basis[i], basis[j]);
      if (p.is_zero()) continue;
      Json entry = Json::object();
      entry["i"] = i;
      entry["j"] = j;
      Json terms = Json::array();
      for (const auto& [m, c] : p.terms()) {
        Json t = Json::object();
        t["k"] = ctx.basis_index(m);
        t["coeff"] = ischur::laurent_to_json(c);
        terms.push_back(std::move(t));
      }
      entry["terms"] = std::move(terms);
      prods.push_back(std::move(entry));
      ++nonzero;
    }
  }
  out["products"] = std::move(prods);

  std::ofstream f(path);
  if (!f) throw std::invalid_argument("table: cannot open '" + path + "'");
  f << out.dump() << "\n";
  f.close();
  if (!f) throw std::invalid_argument("table: write to '" + path + "' failed");

  Json summary = Json::object();
  summary["written"] = path;
  summary["n"] = n;
  summary["r"] = r;
  summary["dim"] = basis.size();
  summary["products"] = nonzero;
  std::cout << summary.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact computations in the type-C q-Schur algebra S^i(n,r): bases, "
      "products, verification suites, and the tensor-space action"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "0.1.0");

  int n = 2, r = 2;
  auto add_nr = [&](CLI::App* cmd) {
    cmd->add_option("--n", n, "rank parameter n")
        ->required()
        ->check(CLI::Range(1, 4));
    cmd->add_option("--r", r, "degree parameter r")
        ->required()
        ->check(CLI::Range(1, 4));
  };

  CLI::App* basis = app.add_subcommand("basis", "list the basis of S^i(n,r)");
  add_nr(basis);

  std::string lhs_text, rhs_text, method = "both";
  CLI::App* mult = app.add_subcommand(
      "mult", "multiply two basis elements [A][B], by oracle and/or formula");
  add_nr(mult);
  mult->add_option("--lhs", lhs_text, "left matrix as a JSON array of rows")
      ->required();
  mult->add_option("--rhs", rhs_text, "right matrix as a JSON array of rows")
      ->required();
  mult->add_option("--method", method, "oracle, formula, or both")
      ->check(CLI::IsMember({"oracle", "formula", "both"}));

  std::string suite;
  ischur::SuiteParams params;
  CLI::App* verify = app.add_subcommand(
      "verify", "run a verification suite against the Hecke oracle");
  verify->add_option("suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember(ischur::suite_names()));
  verify->add_option("--n", params.n, "rank parameter n")
      ->check(CLI::Range(1, 4));
  verify->add_option("--r", params.r, "degree parameter r")
      ->check(CLI::Range(1, 4));
  verify->add_option("--mmax", params.mmax,
                     "largest multiplicity / power in the sweeps");
  verify->add_option("--jbox", params.jbox,
                     "exponent vectors range over {-jbox,...,jbox}^(2n)");
  verify->add_option("--amax", params.amax,
                     "entry-sum bound for the off-diagonal matrices");
  verify->add_option("--rset", params.rset,
                     "stability: evaluation degrees (comma separated)")
      ->delimiter(',');
  verify->add_flag("--perturb", params.perturb,
                   "inject a coefficient error (negative control; the run "
                   "must then report failures)");
  verify->add_option("--threads", params.threads,
                     "worker threads (0: ISCHUR_THREADS, then hardware)");

  std::string gen;
  std::vector<int> index;
  CLI::App* tact = app.add_subcommand(
      "tensor-act", "apply a generator to a tensor-space basis vector");
  add_nr(tact);
  tact->add_option("--gen", gen, "generator: d_j, e_h, f_h, or t")
      ->required();
  tact->add_option("--index", index,
                   "basis multi-index i_1,...,i_r (entries in [1, 2n])")
      ->required()
      ->delimiter(',');

  std::string out_path;
  CLI::App* table = app.add_subcommand(
      "table", "write the full structure-constant table to a file");
  add_nr(table);
  table->add_option("--out", out_path, "output file path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (basis->parsed()) return cmd_basis(n, r);
    if (mult->parsed()) return cmd_mult(n, r, lhs_text, rhs_text, method);
    if (verify->parsed()) return cmd_verify(suite, params);
    if (tact->parsed()) return cmd_tensor_act(n, r, gen, index);
    if (table->parsed()) return cmd_table(n, r, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
