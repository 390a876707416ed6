#include "qseries/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qseries/oracle.hpp"
#include "qseries/qcombinat.hpp"
#include "qseries/selberg.hpp"
#include "qseries/serialize.hpp"
#include "qseries/verify.hpp"

namespace qseries::cli {

namespace {

// A usage error detected after flag parsing.
struct BadInput {
  std::string message;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw BadInput{message};
}

void require_range(int value, int lo, int hi, const std::string& flag) {
  require(value >= lo && value <= hi, flag + " must be in [" + std::to_string(lo) + ", " +
                                          std::to_string(hi) + "], got " + std::to_string(value));
}

int report_exit(std::ostream& out, const std::vector<VerificationReport>& reports) {
  write_report_header(out);
  for (const auto& r : reports) write_report(out, r);
  return all_matched(reports) ? kExitMatch : kExitMismatch;
}

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    require(static_cast<bool>(in), "cannot open input file " + path);
    buffer << in.rdbuf();
  }
  return buffer.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-series engine for Rogers-Selberg recursions and Gordon identities",
               "qseries"};
  app.require_subcommand(1);

  int k = 0;
  int x_max = 0;
  int q_max = 0;
  int l = 0;
  int t = 0;
  int e = 0;
  std::string format = "json";
  std::string input;

  auto* solve_cmd = app.add_subcommand("solve", "Solve the recursion system at level k");
  solve_cmd->add_option("--k", k, "level")->required();
  solve_cmd->add_option("--xmax", x_max, "maximum x-exponent")->required();
  solve_cmd->add_option("--qmax", q_max, "maximum q-exponent")->required();
  solve_cmd->add_option("--format", format, "json or tsv")
      ->check(CLI::IsMember({"json", "tsv"}));

  auto* gordon_cmd =
      app.add_subcommand("verify-gordon", "Check Gordon and Andrews-Gordon identities");
  gordon_cmd->add_option("--l", l, "modulus parameter (level l-1)")->required();
  gordon_cmd->add_option("--t", t, "1 <= t <= l")->required();
  gordon_cmd->add_option("--qmax", q_max, "maximum q-exponent")->required();

  int m_max = 0;
  int w_max = 0;
  auto* oracle_cmd =
      app.add_subcommand("oracle", "Bigraded dimensions of the ideal quotient A/A_Lambda");
  oracle_cmd->add_option("--k", k, "level")->required();
  oracle_cmd->add_option("--e", e, "exponent of the y_{-1} generator, 1..k+1")->required();
  oracle_cmd->add_option("--mmax", m_max, "maximum charge")->required();
  oracle_cmd->add_option("--wmax", w_max, "maximum weight")->required();
  oracle_cmd->add_option("--format", format, "tsv or json")
      ->check(CLI::IsMember({"json", "tsv"}));

  auto* cross_cmd =
      app.add_subcommand("crosscheck", "Compare solver, multisum and oracle for every e");
  cross_cmd->add_option("--k", k, "level")->required();
  cross_cmd->add_option("--mmax", m_max, "maximum charge")->required();
  cross_cmd->add_option("--wmax", w_max, "maximum weight")->required();

  auto* residual_cmd =
      app.add_subcommand("check-recursions", "Residuals of a stored family (JSON)");
  residual_cmd->add_option("--input", input, "family JSON file, or - for stdin")->required();

  std::vector<std::string> argv_storage{"qseries"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    // oracle defaults to TSV, everything else to JSON.
    oracle_cmd->parse_complete_callback([&] {
      if (oracle_cmd->count("--format") == 0) format = "tsv";
    });
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& ex) {
    if (ex.get_exit_code() == 0) {
      app.exit(ex, out, err);
      return kExitMatch;
    }
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*solve_cmd) {
      require_range(k, 1, Limits::max_level, "--k");
      require_range(x_max, 0, Limits::max_x_order, "--xmax");
      require_range(q_max, 0, Limits::max_q_order, "--qmax");
      err << "solving level " << k << " on window (" << x_max << ", " << q_max << ")\n";
      const RecursionFamily fam = solve(k, x_max, q_max);
      if (format == "tsv") {
        write_family_tsv(out, fam);
      } else {
        out << dump(family_to_json(fam));
      }
      return kExitMatch;
    }
    if (*gordon_cmd) {
      require_range(l, 2, Limits::max_gordon_l, "--l");
      require_range(t, 1, l, "--t");
      require_range(q_max, 0, Limits::max_gordon_q, "--qmax");
      err << "verifying Gordon identities for l=" << l << ", t=" << t << " up to q^" << q_max
          << "\n";
      return report_exit(out, verify_gordon(GordonCondition(l, t), q_max));
    }
    if (*oracle_cmd) {
      require_range(k, 1, Limits::max_level, "--k");
      require_range(e, 1, k + 1, "--e");
      require_range(m_max, 0, Limits::max_oracle_charge, "--mmax");
      require_range(w_max, 0, Limits::max_oracle_weight, "--wmax");
      err << "oracle table k=" << k << ", e=" << e << "\n";
      const DimensionTable table = hilbert_table(k, e, m_max, w_max);
      if (format == "json") {
        out << dump(table_to_json(table));
      } else {
        write_table_tsv(out, table);
      }
      return kExitMatch;
    }
    if (*cross_cmd) {
      require_range(k, 1, Limits::max_level, "--k");
      require_range(m_max, 0, Limits::max_oracle_charge, "--mmax");
      require_range(w_max, 0, Limits::max_oracle_weight, "--wmax");
      err << "crosschecking level " << k << " on window (" << m_max << ", " << w_max << ")\n";
      return report_exit(out, crosscheck(k, m_max, w_max));
    }
    if (*residual_cmd) {
      const RecursionFamily fam = family_from_json(parse_json(read_input(input)));
      const ResidualReport report = check_recursions(fam);
      out << "equation\tstatus\tnonzero_terms\n";
      for (std::size_t i = 0; i < report.residuals.size(); ++i) {
        const BiSeries& r = report.residuals[i];
        out << report.labels[i] << '\t' << (r.is_zero() ? "zero" : "nonzero") << '\t'
            << r.nonzero_count() << '\n';
      }
      return report.all_zero() ? kExitMatch : kExitMismatch;
    }
  } catch (const BadInput& ex) {
    err << "error: " << ex.message << "\n";
    return kExitUsage;
  } catch (const FormatError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qseries::cli
