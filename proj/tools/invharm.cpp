#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "invharm/errors.hpp"
#include "invharm/frobenius.hpp"
#include "invharm/involution.hpp"
#include "invharm/json_io.hpp"
#include "invharm/oracle.hpp"
#include "invharm/sweeps.hpp"

using namespace invharm;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kLimit = 3 };

// a usage problem tied to a specific flag
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 0;
  int a = 0;
  std::optional<int> d;
  int max_n = 0;
  std::string method;
  std::string format = "text";
  bool allow_large = false;
};

LocusSize locus(const Options& o) {
  try {
    return LocusSize(o.n, o.a);
  } catch (const InvalidArguments& e) {
    throw UsageError(std::string("--n/--a: ") + e.what());
  }
}

OracleConfig oracle_config(const Options& o) {
  OracleConfig config = OracleConfig::from_environment();
  if (o.allow_large) config.max_n = std::max(config.max_n, o.n);
  return config;
}

void print_schur(const SchurPoly& f, const std::string& format) {
  if (format == "json") {
    std::cout << to_json(f).dump() << '\n';
    return;
  }
  if (f.is_zero()) std::cout << "0\n";
  for (const auto& [lambda, c] : f.terms()) {
    std::cout << "s" << lambda.to_string() << "  " << c.to_string() << '\n';
  }
}

int run_grfrob(const Options& o) {
  const LocusSize size = locus(o);
  SchurPoly f;
  if (o.method == "signed") {
    f = grfrob_signed(size);
  } else if (o.method == "positive") {
    f = grfrob_positive(size);
  } else if (o.method == "oracle") {
    f = frobenius_of_character(graded_character(size, oracle_config(o)));
  } else {
    f = grfrob_width(size);
  }
  print_schur(f, o.format);
  return kOk;
}

int run_hilb(const Options& o) {
  const LocusSize size = locus(o);
  const QPoly h = o.method == "oracle" ? graded_hilbert(size, oracle_config(o))
                                       : hilbert_series(grfrob_width(size));
  if (o.format == "json") {
    std::cout << to_json(h).dump() << '\n';
  } else {
    std::cout << h.to_string() << '\n';
  }
  return kOk;
}

int report_sweep(const SweepReport& r, const std::string& format) {
  if (format == "json") {
    json out{{"check", r.name},
             {"checks", r.checks},
             {"result", r.pass() ? "PASS" : "FAIL"},
             {"failures", r.failures}};
    std::cout << out.dump() << '\n';
  } else {
    for (const auto& f : r.failures) std::cout << "  " << f << '\n';
    std::cout << (r.pass() ? "PASS " : "FAIL ") << r.name << ": " << r.checks << " checks, "
              << r.failures.size() << " failed\n";
  }
  return r.pass() ? kOk : kFail;
}

int run_check(const std::string& what, const Options& o) {
  if (what == "basis") {
    const BasisVerdict v = verify_monomial_basis(locus(o), oracle_config(o));
    if (o.format == "json") {
      std::cout << to_json(v).dump() << '\n';
    } else {
      std::cout << "hilbert  " << v.hilbert.to_string() << "\nprofile ";
      for (int c : v.profile) std::cout << ' ' << c;
      std::cout << '\n' << (v.pass ? "PASS" : "FAIL " + v.reason) << '\n';
    }
    return v.pass ? kOk : kFail;
  }
  if (o.max_n < 0) throw UsageError("--max-n: must be nonnegative");
  if (what == "formulas") return report_sweep(check_formulas(o.max_n), o.format);
  if (what == "bijections") return report_sweep(check_bijections(o.max_n), o.format);
  return report_sweep(check_width(o.max_n), o.format);
}

int run_enumerate_stripes(const Options& o) {
  const LocusSize size = locus(o);
  if (o.d && (*o.d < 0 || *o.d > size.pairs())) {
    throw UsageError("--d: must lie in [0, " + std::to_string(size.pairs()) + "]");
  }
  json out = json::array();
  for (const IndexedStripe& e : width_index_stripes(size)) {
    if (o.d && e.degree != *o.d) continue;
    if (o.format == "json") {
      json item = to_json(e.stripe);
      item["width"] = e.width;
      item["degree"] = e.degree;
      out.push_back(std::move(item));
    } else {
      std::cout << e.stripe.to_string() << "  width " << e.width << "  degree " << e.degree
                << "  path " << path_of_stripe(e.stripe).to_string() << '\n';
    }
  }
  if (o.format == "json") std::cout << out.dump() << '\n';
  return kOk;
}

int run_enumerate_involutions(const Options& o) {
  const LocusSize size = locus(o);
  std::map<int, long> by_degree;
  json points = json::array();
  for (const InvolutionPoint& w : enumerate_locus(size)) {
    const DimImage image = dim_bijection(w);
    const int degree = (size.n() + size.a() - width(image.stripe)) / 2;
    ++by_degree[degree];
    if (o.format == "json") {
      json item = to_json(w);
      item["tableau"] = to_json(image.tableau);
      item["stripe"] = to_json(image.stripe);
      item["degree"] = degree;
      points.push_back(std::move(item));
    } else {
      std::cout << w.to_string() << "  ->  " << image.tableau.to_string() << "  "
                << image.stripe.to_string() << "  degree " << degree << '\n';
    }
  }
  std::vector<long> distribution(static_cast<std::size_t>(size.pairs()) + 1, 0);
  for (const auto& [d, count] : by_degree) distribution[static_cast<std::size_t>(d)] = count;
  if (o.format == "json") {
    std::cout << json{{"points", points}, {"degree_distribution", distribution}}.dump() << '\n';
  } else {
    std::cout << "degree distribution:";
    for (long c : distribution) std::cout << ' ' << c;
    std::cout << '\n';
  }
  return kOk;
}

void add_size(CLI::App* cmd, Options& o) {
  cmd->add_option("--n", o.n, "number of points")->required();
  cmd->add_option("--a", o.a, "number of fixed points")->required();
}

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

void add_large(CLI::App* cmd, Options& o) {
  cmd->add_flag("--allow-large", o.allow_large,
                std::string("lift the oracle size cap (also via ") + OracleConfig::kEnvOverride +
                    ")");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded Frobenius images of involution loci: formulas, bijections, oracle"};
  app.require_subcommand(1);
  Options o;

  auto* grfrob = app.add_subcommand("grfrob", "graded Frobenius image");
  add_size(grfrob, o);
  grfrob->add_option("--method", o.method, "signed|positive|width|oracle")
      ->check(CLI::IsMember({"signed", "positive", "width", "oracle"}))
      ->default_str("width");
  add_format(grfrob, o);
  add_large(grfrob, o);

  auto* hilb = app.add_subcommand("hilb", "graded Hilbert series");
  add_size(hilb, o);
  hilb->add_option("--method", o.method, "formula|oracle")
      ->check(CLI::IsMember({"formula", "oracle"}))
      ->default_str("formula");
  add_format(hilb, o);
  add_large(hilb, o);

  auto* check = app.add_subcommand("check", "exhaustive verification");
  check->require_subcommand(1);
  std::map<std::string, CLI::App*> sweeps;
  for (const char* name : {"formulas", "bijections", "width"}) {
    auto* cmd = check->add_subcommand(name);
    cmd->add_option("--max-n", o.max_n, "largest size swept")->required();
    add_format(cmd, o);
    sweeps[name] = cmd;
  }
  sweeps["formulas"]->description("signed = positive = width and mass checks");
  sweeps["bijections"]->description("phi and shadow map sweeps");
  sweeps["width"]->description("width routes agree (--max-n bounds |lambda|)");
  auto* basis = check->add_subcommand("basis", "candidate monomial basis verdict");
  add_size(basis, o);
  add_format(basis, o);
  add_large(basis, o);

  auto* enumerate = app.add_subcommand("enumerate", "list index sets");
  enumerate->require_subcommand(1);
  auto* stripes = enumerate->add_subcommand("stripes", "width-indexed stripes");
  add_size(stripes, o);
  stripes->add_option("--d", o.d, "only this q-degree");
  add_format(stripes, o);
  auto* involutions =
      enumerate->add_subcommand("involutions", "locus points with their DIM images");
  add_size(involutions, o);
  add_format(involutions, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (o.method.empty()) o.method = hilb->parsed() ? "formula" : "width";
  try {
    if (grfrob->parsed()) return run_grfrob(o);
    if (hilb->parsed()) return run_hilb(o);
    if (basis->parsed()) return run_check("basis", o);
    for (const auto& [name, cmd] : sweeps) {
      if (cmd->parsed()) return run_check(name, o);
    }
    if (stripes->parsed()) return run_enumerate_stripes(o);
    if (involutions->parsed()) return run_enumerate_involutions(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << " (use --allow-large or "
              << OracleConfig::kEnvOverride << ")\n";
    return kLimit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}
