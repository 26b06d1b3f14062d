#include "nilpair/cli.hpp"

#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "nilpair/invariants.hpp"
#include "nilpair/json_io.hpp"

namespace nilpair {

namespace {

struct AlgebraArgs {
  std::string source;
  std::vector<std::string> params;
  std::string eps;
};

catalog::Params parse_params(const AlgebraArgs& args) {
  catalog::Params params;
  for (const std::string& kv : args.params) {
    size_t eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::invalid_argument("--params expects key=value, got '" + kv + "'");
    params[kv.substr(0, eq)] = Rational::parse(kv.substr(eq + 1));
  }
  if (!args.eps.empty()) params["eps"] = Rational::parse(args.eps);
  return params;
}

LieAlgebra resolve_algebra(const std::string& spec, const catalog::Params& params) {
  if (spec.rfind("file:", 0) == 0) return load_algebra_file(spec.substr(5));
  return catalog::lookup(spec, params);
}

std::string fmt_cell(const std::string& s, size_t w) {
  std::string out = s;
  if (out.size() < w) out.append(w - out.size(), ' ');
  return out;
}

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return;
  std::vector<size_t> widths(rows[0].size(), 0);
  for (const auto& row : rows)
    for (size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) out << fmt_cell(row[i], widths[i] + (i + 1 < row.size() ? 2 : 0));
    out << "\n";
  }
}

int cmd_catalog(const std::string& format, std::ostream& out) {
  nlohmann::json jrows = nlohmann::json::array();
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"name", "dim", "dimL2", "dimZ", "dimM", "s", "t"});
  for (const std::string& name : catalog::listing_names()) {
    LieAlgebra alg = catalog::lookup(name);
    InvariantRecord inv = invariants_of(alg);
    long l2 = alg.derived_subalgebra().rank();
    long z = alg.center().rank();
    if (format == "json") {
      nlohmann::json row;
      row["name"] = name;
      row["dim"] = alg.dim();
      row["dimL2"] = l2;
      row["dimZ"] = z;
      row["dimM"] = inv.multiplier;
      row["s"] = inv.s;
      row["t"] = inv.t;
      row["algebra"] = algebra_to_json(alg);
      jrows.push_back(std::move(row));
    } else {
      rows.push_back({name, std::to_string(alg.dim()), std::to_string(l2), std::to_string(z),
                      std::to_string(inv.multiplier), std::to_string(inv.s),
                      std::to_string(inv.t)});
    }
  }
  if (format == "json")
    out << jrows.dump(2) << "\n";
  else
    print_table(out, rows);
  return 0;
}

int cmd_multiplier(const AlgebraArgs& args, bool dump_matrices, const std::string& format,
                   std::ostream& out) {
  LieAlgebra alg = resolve_algebra(args.source, parse_params(args));
  long m = multiplier_dim(alg);
  if (format == "json" || dump_matrices) {
    nlohmann::json doc;
    doc["algebra"] = alg.label().empty() ? args.source : alg.label();
    doc["dimM"] = m;
    if (dump_matrices) {
      doc["d2"] = matrix_to_json(d2_matrix(alg));
      doc["d3"] = matrix_to_json(d3_matrix(alg));
    }
    out << doc.dump(2) << "\n";
  } else {
    out << m << "\n";
  }
  return 0;
}

int cmd_invariants(const AlgebraArgs& args, const std::string& format, std::ostream& out) {
  LieAlgebra alg = resolve_algebra(args.source, parse_params(args));
  ValidationReport vr = alg.validate();
  if (!vr.ok()) throw std::invalid_argument("algebra fails the Jacobi identity");
  InvariantRecord inv = invariants_of(alg);
  NilpotencyInfo nil = alg.nilpotency();
  if (format == "json") {
    nlohmann::json doc;
    doc["algebra"] = alg.label().empty() ? args.source : alg.label();
    doc["dim"] = alg.dim();
    doc["dimL2"] = alg.derived_subalgebra().rank();
    doc["dimZ"] = alg.center().rank();
    doc["dimM"] = inv.multiplier;
    doc["s"] = inv.s;
    doc["t"] = inv.t;
    doc["nilpotent"] = nil.nilpotent;
    if (nil.nilpotent) doc["class"] = nil.nil_class;
    out << doc.dump(2) << "\n";
  } else {
    out << "dim   " << alg.dim() << "\n";
    out << "dimL2 " << alg.derived_subalgebra().rank() << "\n";
    out << "dimZ  " << alg.center().rank() << "\n";
    out << "dimM  " << inv.multiplier << "\n";
    out << "s     " << inv.s << "\n";
    out << "t     " << inv.t << "\n";
    out << "nilpotent " << (nil.nilpotent ? "yes, class " + std::to_string(nil.nil_class) : "no")
        << "\n";
  }
  return 0;
}

int cmd_pair(const AlgebraArgs& n_args, const AlgebraArgs& k_args, const std::string& which,
             const std::string& format, std::ostream& out) {
  LieAlgebra n_alg = resolve_algebra(n_args.source, parse_params(n_args));
  LieAlgebra k_alg = resolve_algebra(k_args.source, parse_params(k_args));
  SplitPair p = make_split_pair(std::move(n_alg), std::move(k_alg));
  InvariantRecord inv = pair_invariants_of(p);
  if (format == "json") {
    nlohmann::json doc;
    doc["N"] = p.N.label().empty() ? n_args.source : p.N.label();
    doc["K"] = p.K.label().empty() ? k_args.source : p.K.label();
    doc["n"] = p.n;
    doc["m"] = p.m;
    doc["dimN2"] = p.d;
    doc["dimK2"] = p.c;
    doc["dimM"] = inv.multiplier;
    doc["s"] = inv.s;
    doc["t"] = inv.t;
    doc["s_lower_bound_ok"] = s_lower_bound_check(p);
    out << doc.dump(2) << "\n";
    return 0;
  }
  if (which == "s") {
    out << inv.s << "\n";
  } else if (which == "t") {
    out << inv.t << "\n";
  } else if (which == "m") {
    out << inv.multiplier << "\n";
  } else {
    out << "dimM " << inv.multiplier << "\n";
    out << "s    " << inv.s << "\n";
    out << "t    " << inv.t << "\n";
  }
  return 0;
}

int cmd_classify(int sigma, bool allow_trivial_flag, const std::string& format,
                 std::ostream& out) {
  classifier::ClassifyOptions options;
  if (allow_trivial_flag) options.allow_trivial_k = true;
  classifier::ClassificationReport report = classifier::classify(sigma, options);
  if (format == "json") {
    out << classification_to_json(report).dump(2) << "\n";
    return 0;
  }
  out << "s(N,L) = " << sigma << (report.allow_trivial ? "   (K = 0 admitted)" : "") << "\n";
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"s(N)", "N", "K", "L"});
  for (const classifier::PairSolution& sol : report.solutions)
    rows.push_back({std::to_string(sol.source_s_n), sol.n_display(), sol.K.note(),
                    sol.l_display()});
  print_table(out, rows);
  out << report.solutions.size() << " solution(s)\n";
  return 0;
}

int print_verify(const classifier::VerifyReport& vr, const std::string& format,
                 std::ostream& out) {
  if (format == "json") {
    out << verify_to_json(vr).dump(2) << "\n";
    return vr.clean() ? 0 : 1;
  }
  out << "s = " << vr.sigma << ": " << vr.matched << " matched, " << vr.annotated
      << " annotated errata, " << vr.unexplained << " unexplained\n";
  for (const classifier::DiffEntry& e : vr.entries) {
    if (e.kind == classifier::DiffEntry::Kind::Matched) continue;
    out << "  " << (e.kind == classifier::DiffEntry::Kind::Missing ? "missing" : "extra  ")
        << "  (" << e.n_display << ", K = " << e.k_display << ")";
    if (!e.erratum.empty()) out << "   [erratum: " << e.erratum << "]";
    out << "\n";
  }
  for (const std::string& note : vr.notes) out << "  note: " << note << "\n";
  return vr.clean() ? 0 : 1;
}

int cmd_verify(std::optional<int> sigma, const std::string& format, std::ostream& out) {
  int rc = 0;
  if (sigma) {
    rc = print_verify(classifier::verify_theorems(*sigma), format, out);
  } else {
    nlohmann::json all = nlohmann::json::array();
    for (const classifier::VerifyReport& vr : classifier::verify_all()) {
      if (format == "json")
        all.push_back(verify_to_json(vr));
      else
        rc |= print_verify(vr, format, out);
      if (!vr.clean()) rc = 1;
    }
    if (format == "json") out << all.dump(2) << "\n";
  }
  if (rc == 0 && format != "json") out << "verification passed\n";
  return rc;
}

int cmd_selfcheck(int max_dim, const std::string& format, std::ostream& out) {
  catalog::SelfCheckReport report = catalog::self_check(max_dim);
  if (format == "json") {
    nlohmann::json doc;
    doc["all_ok"] = report.all_ok;
    nlohmann::json entries = nlohmann::json::array();
    for (const catalog::SelfCheckEntry& e : report.entries) {
      nlohmann::json one;
      one["family"] = e.family;
      one["instance"] = e.instance;
      one["expected_s"] = e.expected_s;
      one["computed_s"] = e.computed_s;
      one["expected_d"] = e.expected_d;
      one["computed_d"] = e.computed_d;
      one["valid"] = e.valid;
      one["ok"] = e.ok;
      entries.push_back(std::move(one));
    }
    doc["entries"] = std::move(entries);
    out << doc.dump(2) << "\n";
    return report.all_ok ? 0 : 1;
  }
  int shown = 0;
  for (const catalog::SelfCheckEntry& e : report.entries)
    if (!e.ok) {
      out << "MISMATCH " << e.instance << ": computed s = " << e.computed_s << " (reference "
          << e.expected_s << "), computed dimN2 = " << e.computed_d << " (reference "
          << e.expected_d << ")" << (e.valid ? "" : ", INVALID ALGEBRA") << "\n";
      ++shown;
    }
  out << report.entries.size() << " instances checked, " << shown << " mismatch(es)\n";
  return report.all_ok ? 0 : 1;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact invariants and pair classification for nilpotent Lie algebras"};
  app.require_subcommand(1);

  std::string format = "table";

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
  };

  CLI::App* c_catalog = app.add_subcommand("catalog", "list the built-in algebras with invariants");
  add_format(c_catalog);

  AlgebraArgs a1;
  bool dump_matrices = false;
  CLI::App* c_mult = app.add_subcommand("multiplier", "multiplier dimension of an algebra");
  c_mult->add_option("--algebra", a1.source, "catalog name or file:path")->required();
  c_mult->add_option("--params", a1.params, "algebra parameters, key=value");
  c_mult->add_option("--eps", a1.eps, "value of the family parameter eps");
  c_mult->add_flag("--dump-matrices", dump_matrices, "include the boundary matrices (debug)");
  add_format(c_mult);

  AlgebraArgs a2;
  CLI::App* c_inv = app.add_subcommand("invariants", "dim M, s, t and subalgebra data");
  c_inv->add_option("--algebra", a2.source, "catalog name or file:path")->required();
  c_inv->add_option("--params", a2.params, "algebra parameters, key=value");
  c_inv->add_option("--eps", a2.eps, "value of the family parameter eps");
  add_format(c_inv);

  AlgebraArgs pn, pk;
  std::vector<std::string> shared_params;
  std::string which = "all";
  CLI::App* c_pair = app.add_subcommand("pair", "invariants of a split pair L = N + K");
  c_pair->add_option("--n", pn.source, "the ideal N (catalog name or file:path)")->required();
  c_pair->add_option("--k", pk.source, "the complement K (catalog name or file:path)")->required();
  c_pair->add_option("--params", shared_params, "parameters for N and K, key=value");
  c_pair->add_option("--n-params", pn.params, "parameters for N only");
  c_pair->add_option("--k-params", pk.params, "parameters for K only");
  c_pair->add_option("--eps", pn.eps, "value of eps for N");
  c_pair->add_option("--invariant", which, "which invariant to print")
      ->check(CLI::IsMember({"s", "t", "m", "all"}));
  add_format(c_pair);

  int sigma = 0;
  bool allow_trivial = false;
  CLI::App* c_classify = app.add_subcommand("classify", "all split pairs with s(N,L) = s");
  c_classify->add_option("--s", sigma, "target value of s(N,L)")->required()->check(CLI::Range(0, 7));
  c_classify->add_flag("--allow-trivial-k", allow_trivial, "admit K = 0 pairs");
  add_format(c_classify);

  int vsigma = -1;
  bool vall = false;
  CLI::App* c_verify = app.add_subcommand("verify", "diff classification against the reference lists");
  c_verify->add_option("--s", vsigma, "verify a single s value")->check(CLI::Range(0, 7));
  c_verify->add_flag("--all", vall, "verify s = 0..7 (default)");
  add_format(c_verify);

  int max_dim = 12;
  CLI::App* c_self = app.add_subcommand("selfcheck", "recompute catalog s-values against references");
  c_self->add_option("--max-dim", max_dim, "dimension cap for family instances")
      ->check(CLI::Range(3, 16));
  add_format(c_self);

  std::vector<const char*> argv;
  argv.push_back("nilpair");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(c_catalog)) return cmd_catalog(format, out);
    if (app.got_subcommand(c_mult)) return cmd_multiplier(a1, dump_matrices, format, out);
    if (app.got_subcommand(c_inv)) return cmd_invariants(a2, format, out);
    if (app.got_subcommand(c_pair)) {
      pn.params.insert(pn.params.end(), shared_params.begin(), shared_params.end());
      pk.params.insert(pk.params.end(), shared_params.begin(), shared_params.end());
      return cmd_pair(pn, pk, which, format, out);
    }
    if (app.got_subcommand(c_classify)) return cmd_classify(sigma, allow_trivial, format, out);
    if (app.got_subcommand(c_verify))
      return cmd_verify(!vall && vsigma >= 0 ? std::optional<int>(vsigma) : std::nullopt, format,
                        out);
    if (app.got_subcommand(c_self)) return cmd_selfcheck(max_dim, format, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace nilpair
