#include "davenport/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "davenport/bounds.hpp"
#include "davenport/certificate.hpp"
#include "davenport/constructions.hpp"
#include "davenport/error.hpp"
#include "davenport/zero_sum.hpp"

namespace davenport {

namespace {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::EmptyGroup:
    case ErrorKind::BadOrder:
    case ErrorKind::RankMismatch:
      return kExitParse;
    case ErrorKind::PGroup:
      return kExitPGroup;
    case ErrorKind::BudgetExceeded:
      return kExitBudget;
    default:
      return kExitPrecondition;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_certificate(const Certificate& cert, const std::string& path, std::ostream& out) {
  const auto text = serialize(cert);
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::ParseError, "cannot write '" + path + "'");
  f << text;
  out << "wrote " << path << ": length " << cert.terms.size() << ", claim "
      << (cert.claim == ClaimKind::ZeroSumFree
              ? std::string("zero-sum-free")
              : "non-dispersive " + std::to_string(cert.unique_length))
      << "\n";
}

std::optional<Formula> parse_formula(const std::string& name) {
  for (auto f : {Formula::DStar, Formula::Lzfs, Formula::Zhihe, Formula::Est, Formula::Gene,
                 Formula::Exact}) {
    auto lower = to_string(f);
    for (auto& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (name == lower || name == to_string(f)) return f;
  }
  return std::nullopt;
}

void print_bound_table(const GroupSpec& g, const std::vector<BoundReport>& rows,
                       std::size_t best, std::ostream& out) {
  out << "group " << format_group(g) << "  D* = " << d_star(g) << "\n";
  out << "  " << std::left << std::setw(9) << "formula" << std::setw(36) << "params"
      << std::right << std::setw(8) << "bound" << std::setw(7) << "delta" << "\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    out << (i == best ? "* " : "  ") << std::left << std::setw(9) << to_string(r.formula)
        << std::setw(36) << format_params(r) << std::right << std::setw(8) << r.lower_bound
        << std::setw(7) << r.delta << "\n";
  }
  const auto& b = rows[best];
  out << "best: " << to_string(b.formula) << " " << b.lower_bound << " (delta " << b.delta
      << ")\n";
  if (b.certificate_ref) out << "witness: " << *b.certificate_ref << "\n";
}

// Shape C_n^r + C_kn with a certified lzfs excess, used to seed the search.
std::optional<GSequence> lzfs_seed(const GroupSpec& g) {
  const auto& inv = g.invariants();
  if (inv.size() < 2) return std::nullopt;
  const std::int64_t n = inv.front();
  for (std::size_t i = 0; i + 1 < inv.size(); ++i)
    if (inv[i] != n) return std::nullopt;
  if (inv.back() == n) return std::nullopt;
  const auto r = static_cast<std::int64_t>(inv.size() - 1), k = inv.back() / n;
  const auto rep = bound_lzfs(n, k, r);
  if (!rep.params) return std::nullopt;
  const auto& b = *rep.params;
  const auto cert = build_lzfs_certificate({n, k, r, b.p, b.k1, b.t, b.ell});
  // The certificate lives on the canonical orders; express it in the given ones.
  GSequence s{g, {}};
  for (const auto& t : cert.terms) s.terms.push_back(g.from_canonical(t.residues));
  return s;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Davenport constant bounds, constructions and certificates", "davenport"};
  app.require_subcommand(1);

  std::string group_lit, formula_name;
  bool with_exact = false;
  auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate every applicable lower bound");
  bounds_cmd->add_option("--group", group_lit, "Group literal, e.g. 2,2,2,2,6")->required();
  bounds_cmd->add_option("--formula", formula_name, "Only this formula (dstar, lzfs, zhihe, est, gene, exact)");
  bounds_cmd->add_flag("--exact", with_exact, "Also run the exhaustive search");

  std::string mode, out_path;
  std::int64_t n = 0, p = 0, r = 0, k = 0, k1 = 0, t = 0;
  int ell = 0;
  auto* construct_cmd = app.add_subcommand("construct", "Build a certificate");
  construct_cmd->add_option("--mode", mode)->required()->check(CLI::IsMember({"nondispersive", "lzfs"}));
  construct_cmd->add_option("--n", n)->required();
  construct_cmd->add_option("--p", p)->required();
  construct_cmd->add_option("--ell", ell)->required();
  construct_cmd->add_option("--r", r)->required();
  construct_cmd->add_option("--k", k);
  construct_cmd->add_option("--k1", k1);
  construct_cmd->add_option("--t", t);
  construct_cmd->add_option("--out", out_path, "Output file; stdout when omitted");

  std::string cert_path;
  auto* verify_cmd = app.add_subcommand("verify", "Check a certificate's claim");
  verify_cmd->add_option("file", cert_path)->required();
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Print the zero-sum length spectrum of a certificate");
  spectrum_cmd->add_option("file", cert_path)->required();

  std::string what = "davenport";
  std::uint64_t budget = 0;
  auto* exact_cmd = app.add_subcommand("exact", "Exhaustive computation of D(G) or disc(G)");
  exact_cmd->add_option("--group", group_lit)->required();
  exact_cmd->add_option("--what", what)->check(CLI::IsMember({"davenport", "disc"}));
  exact_cmd->add_option("--budget", budget, "Node limit for the search");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*bounds_cmd) {
      const auto g = parse_group_literal(group_lit);
      BoundOptions opts;
      if (formula_name.empty()) {
        opts.run_exact = with_exact;
        const auto rows = evaluate_bounds(g, opts);
        print_bound_table(g, rows, best_row(rows), out);
        return kExitOk;
      }
      const auto f = parse_formula(formula_name);
      if (!f) throw Error(ErrorKind::ParseError, "unknown formula '" + formula_name + "'");
      if (*f == Formula::Gene) {
        print_bound_table(g, {bound_gene(g)}, 0, out);
        return kExitOk;
      }
      opts.run_exact = *f == Formula::Exact;
      std::vector<BoundReport> rows;
      for (auto& row : evaluate_bounds(g, opts))
        if (row.formula == *f) rows.push_back(std::move(row));
      if (rows.empty()) {
        out << to_string(*f) << " does not apply to " << format_group(g) << "\n";
        return kExitOk;
      }
      print_bound_table(g, rows, best_row(rows), out);
      return kExitOk;
    }

    if (*construct_cmd) {
      if (mode == "nondispersive") {
        const auto nd = build_nondispersive({n, p, ell, r});
        Certificate cert{nd.sequence.group, ClaimKind::NonDispersive, nd.unique_length,
                         "nondispersive n=" + std::to_string(n) + " p=" + std::to_string(p) +
                             " ell=" + std::to_string(ell) + " r=" + std::to_string(r),
                         nd.sequence.terms};
        write_certificate(cert, out_path, out);
      } else {
        if (k == 0 || k1 == 0 || t == 0)
          throw Error(ErrorKind::PreconditionFailed, "lzfs mode needs --k, --k1 and --t");
        write_certificate(build_lzfs_certificate({n, k, r, p, k1, t, ell}), out_path, out);
      }
      return kExitOk;
    }

    if (*verify_cmd || *spectrum_cmd) {
      const auto cert = parse_certificate(read_file(cert_path));
      const auto rep = verify_certificate(cert);
      if (*spectrum_cmd) {
        out << "length " << cert.terms.size() << " spectrum " << format_spectrum(rep.spectrum)
            << "\n";
        return kExitOk;
      }
      out << (rep.pass ? "PASS" : "FAIL") << " " << rep.detail << ", spectrum "
          << format_spectrum(rep.spectrum) << "\n";
      return rep.pass ? kExitOk : kExitVerifyFailed;
    }

    if (*exact_cmd) {
      const auto g = parse_group_literal(group_lit);
      SearchLimits limits;
      if (budget > 0) limits.max_nodes = budget;
      const bool disc = what == "disc";
      if (!disc)
        if (auto seed = lzfs_seed(g)) limits.seeds.push_back(std::move(*seed));
      try {
        const auto res = disc ? disc_exact(g, limits) : davenport_exact(g, limits);
        out << (disc ? "disc" : "D") << "(" << format_group(g) << ") = " << res.value
            << "  (D* = " << d_star(g) << ", nodes " << res.nodes_explored << ")\n";
        out << "witness (" << res.witness.size() << " terms):\n";
        for (const auto& e : res.witness.terms) out << format_element(e) << "\n";
        return kExitOk;
      } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        if (e.lower_bound())
          out << (disc ? "disc" : "D") << "(" << format_group(g) << ") >= " << *e.lower_bound()
              << "  (partial)\n";
        return kExitBudget;
      }
    }
  } catch (const Error& e) {
    err << "error [" << to_string(e.kind()) << "]: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kExitOk;
}

}  // namespace davenport
