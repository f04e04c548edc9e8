#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tornheim/constants/format.hpp"
#include "tornheim/error.hpp"
#include "tornheim/io/record.hpp"

namespace {

using tornheim::io::OutputRecord;

enum ExitCode { kOk = 0, kInternal = 1, kUsage = 2, kVerification = 3 };

struct Common {
  int digits = 30;
  double tolerance = 1e-10;
  std::string format = "text";

  tornheim::numeric::Precision precision() const {
    tornheim::numeric::Precision p{digits, tolerance};
    p.validate();
    return p;
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--prec", c.digits, "working precision in decimal digits (default: TORNHEIM_PREC or 30)");
  cmd->add_option("--tol", c.tolerance, "relative tolerance of the numeric check")->capture_default_str();
  cmd->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"text", "json", "latex"}))
      ->capture_default_str();
}

void print_check(const OutputRecord& r) {
  if (!r.check) return;
  const auto& c = *r.check;
  std::printf("check: %s (relative residual %.3g, tolerance %.3g, %d digits, cutoff %d)\n",
              c.pass ? "pass" : "FAIL", c.rel_residual, c.tolerance, c.digits, c.cutoff);
}

void print_record(const OutputRecord& r, const std::string& format, const std::string& basis) {
  if (format == "json") {
    std::cout << tornheim::io::to_json(r).dump() << "\n";
    return;
  }
  const auto& value = r.results.at(basis);
  if (format == "latex") {
    std::cout << tornheim::sym::to_latex(value) << "\n";
    return;
  }
  std::cout << tornheim::sym::to_text(value) << "\n";
  print_check(r);
}

int exit_for(const OutputRecord& r) {
  if (r.error) return kInternal;
  return r.check && !r.check->pass ? kVerification : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact odd-weight evaluation of Tornheim double series and G2 zeta values"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tornheim::io::kVersion);

  Common eval_opts;
  try {
    eval_opts.digits = tornheim::numeric::Precision::from_env().digits;
  } catch (const tornheim::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  int a = 1;
  int b = 1;
  std::vector<int> k;
  std::string basis = "clausen";
  bool verify = false;
  auto* eval = app.add_subcommand("eval", "closed form of zeta_{a,b}(k1,k2,k3) at odd weight");
  eval->add_option("--a", a, "coefficient of m in am+bn")->required();
  eval->add_option("--b", b, "coefficient of n in am+bn")->required();
  eval->add_option("--k", k, "exponents k1 k2 k3")->required()->expected(3);
  eval->add_option("--basis", basis, "constant basis")
      ->check(CLI::IsMember({"clausen", "dirichlet"}))
      ->capture_default_str();
  eval->add_flag("--verify", verify, "compare against the lattice sum");
  add_common(eval, eval_opts);

  std::vector<int> g2k;
  bool show_reduction = false;
  auto* g2 = app.add_subcommand("g2", "zeta(k1,...,k6; G2) at odd weight, always verified");
  g2->add_option("--k", g2k, "exponents k1..k6 of m, n, m+n, m+2n, m+3n, 2m+3n")->required()->expected(6);
  g2->add_flag("--show-reduction", show_reduction, "print the Tornheim terms of the reduction");
  Common g2_opts = eval_opts;
  add_common(g2, g2_opts);

  int weight = 5;
  std::vector<std::string> pair_args{"1,1"};
  auto* table = app.add_subcommand("table", "every composition of a weight, as verified JSON lines");
  table->add_option("--weight", weight, "odd total weight")->required();
  table->add_option("--pairs", pair_args, "pairs a,b")->capture_default_str();
  table->add_option("--basis", basis, "constant basis")->check(CLI::IsMember({"clausen", "dirichlet"}));
  Common table_opts = eval_opts;
  table_opts.format = "json";
  add_common(table, table_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const Common& common = *eval ? eval_opts : *g2 ? g2_opts : table_opts;
  try {
    const auto prec = common.precision();
    if (*eval) {
      const OutputRecord r =
          tornheim::io::eval_record({a, b, k[0], k[1], k[2]}, tornheim::io::parse_basis(basis), verify, prec);
      print_record(r, common.format, basis);
      return exit_for(r);
    }
    if (*g2) {
      tornheim::g2::G2Request req;
      std::copy(g2k.begin(), g2k.end(), req.k.begin());
      const OutputRecord r = tornheim::io::g2_record(req, show_reduction, prec);
      if (common.format == "json") {
        std::cout << tornheim::io::to_json(r).dump() << "\n";
      } else if (common.format == "latex") {
        std::cout << tornheim::sym::to_latex(r.results.at("clausen")) << "\n"
                  << tornheim::sym::to_latex(r.results.at("dirichlet")) << "\n";
      } else {
        std::cout << "clausen:   " << tornheim::sym::to_text(r.results.at("clausen")) << "\n"
                  << "dirichlet: " << tornheim::sym::to_text(r.results.at("dirichlet")) << "\n";
        print_check(r);
        if (show_reduction) {
          std::cout << "reduction:\n";
          for (const auto& t : r.reduction.at("terms")) {
            const auto c = tornheim::sym::rational_from_json(t.at("coefficient"));
            std::cout << "  " << tornheim::to_string(c) << " zeta_{" << t.at("a") << "," << t.at("b") << "}("
                      << t.at("k")[0] << "," << t.at("k")[1] << "," << t.at("k")[2] << ")\n";
          }
        }
      }
      return exit_for(r);
    }
    std::vector<std::pair<int, int>> pairs;
    for (const auto& p : pair_args) {
      const auto comma = p.find(',');
      if (comma == std::string::npos) throw tornheim::UsageError("pair '" + p + "' is not of the form a,b");
      const int pa = std::stoi(p.substr(0, comma));
      const int pb = std::stoi(p.substr(comma + 1));
      if (pa < 1 || pb < 1) throw tornheim::UsageError("pair '" + p + "' needs positive entries");
      pairs.emplace_back(pa, pb);
    }
    const auto requests = tornheim::io::table_requests(weight, pairs);
    int status = kOk;
    tornheim::io::table_records(requests, tornheim::io::parse_basis(basis), prec, [&](const OutputRecord& r) {
      if (common.format == "json") {
        std::cout << tornheim::io::to_json(r).dump() << std::endl;
      } else {
        const auto& req = r.request;
        std::cout << "zeta_{" << req.at("a") << "," << req.at("b") << "}(" << req.at("k")[0] << "," << req.at("k")[1]
                  << "," << req.at("k")[2] << ") = "
                  << (r.error ? "error: " + *r.error : tornheim::sym::to_text(r.results.begin()->second)) << "\n";
        print_check(r);
      }
      const int code = exit_for(r);
      if (code != kOk && status != kInternal) status = code;
    });
    return status;
  } catch (const tornheim::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const tornheim::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const tornheim::VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kVerification;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
