// Command-line front door: build objects from JSON, run the library's
// identities as named checks, emit CSV tables, and run the acceptance
// self-test.  Exit codes: 0 success, 1 bad input, 2 numerical contract
// violation (certificate refuted, aliasing above the requested tolerance).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "acceptance.hpp"
#include "json.hpp"
#include "tempered/distribution.hpp"
#include "tempered/lcs.hpp"
#include "tempered/sobolev.hpp"

namespace {

using namespace tempered;

constexpr int kExitBadInput = 1;
constexpr int kExitContractViolation = 2;

struct ContractViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string resolve_path(const std::string& path) {
  if (path == "-") return path;
  if (std::ifstream probe(path); probe.good()) return path;
  if (const char* dir = std::getenv("TEMPERED_FIXTURES")) {
    const std::string alt = std::string(dir) + "/" + path;
    if (std::ifstream probe(alt); probe.good()) return alt;
  }
  return path;
}

nlohmann::json load_json(const std::string& path) {
  try {
    if (path == "-") return nlohmann::json::parse(std::cin);
    const std::string resolved = resolve_path(path);
    std::ifstream in(resolved);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in '" + path + "': " + e.what());
  }
}

SchwartzFn load_schwartz(const std::string& path) { return schwartz_from_json(load_json(path)); }

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
  out << text;
}

SchwartzOp op_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("op"))
    throw std::invalid_argument("operator JSON must be {\"op\": ...}");
  const std::string name = j.at("op").get<std::string>();
  if (name == "identity") return identity_op();
  if (name == "fourier") return fourier_op();
  if (name == "inverse_fourier") return inverse_fourier_op();
  if (name == "derivative") return derivative_op();
  if (name == "mul_x") return mul_x_op();
  if (name == "scale") {
    const auto& f = j.at("factor");
    return scale_op(Complex(f.at(0).get<double>(), f.at(1).get<double>()));
  }
  if (name == "mul_poly") return mul_poly_op(j.at("poly").get<Poly>());
  throw std::invalid_argument("unknown operator '" + name + "'");
}

int run(int argc, char** argv) {
  CLI::App app{"numerical calculus for Schwartz functions and tempered distributions"};
  app.require_subcommand(1);

  // eval
  std::string eval_input;
  double eval_x = 0.0;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a function at a point");
  eval_cmd->add_option("input", eval_input, "function JSON (or - for stdin)")->required();
  eval_cmd->add_option("x", eval_x, "evaluation point")->required();

  // fourier
  std::string fourier_input, fourier_output;
  bool fourier_inverse = false;
  auto* fourier_cmd = app.add_subcommand("fourier", "exact Fourier transform");
  fourier_cmd->add_option("input", fourier_input)->required();
  fourier_cmd->add_option("-o,--output", fourier_output, "output path (default stdout)");
  fourier_cmd->add_flag("--inverse", fourier_inverse, "apply the inverse transform");

  // seminorms
  std::string semi_input;
  unsigned semi_kmax = 2, semi_nmax = 2;
  std::vector<unsigned> semi_grid;
  auto* semi_cmd = app.add_subcommand("seminorms", "CSV table of p_{k,n}(f)");
  semi_cmd->add_option("input", semi_input)->required();
  semi_cmd->add_option("--grid", semi_grid, "kmax nmax")->expected(2);

  // pair
  std::string pair_f, pair_g;
  auto* pair_cmd = app.add_subcommand("pair", "bilinear pairing and hermitian inner product");
  pair_cmd->add_option("f", pair_f)->required();
  pair_cmd->add_option("g", pair_g)->required();

  // apply-dist
  std::string dist_spec, dist_input;
  auto* dist_cmd = app.add_subcommand("apply-dist", "apply a tempered distribution");
  dist_cmd->add_option("dist", dist_spec, "oracle label (delta, const_one) or JSON path")
      ->required();
  dist_cmd->add_option("input", dist_input)->required();

  // multiplier
  std::string mult_label, mult_input, mult_output;
  long mult_proj = -1;
  double mult_tol = -1.0;
  auto* mult_cmd = app.add_subcommand("multiplier", "apply a Fourier multiplier by label");
  mult_cmd->add_option("label", mult_label, "one | laplacian_2pi | japanese_bracket:<s>")
      ->required();
  mult_cmd->add_option("input", mult_input)->required();
  mult_cmd->add_option("--proj-degree", mult_proj, "projection degree (default: auto)");
  mult_cmd->add_option("--tol", mult_tol, "fail (exit 2) if aliasing residual exceeds this");
  mult_cmd->add_option("-o,--output", mult_output);

  // sobolev
  std::string sob_input;
  double sob_s = 0.0;
  long sob_proj = -1;
  auto* sob_cmd = app.add_subcommand("sobolev", "H^s norm and aliasing residual");
  sob_cmd->add_option("input", sob_input)->required();
  sob_cmd->add_option("--s", sob_s, "regularity order")->required();
  sob_cmd->add_option("--proj-degree", sob_proj);

  // plancherel
  std::string plan_input;
  auto* plan_cmd = app.add_subcommand("plancherel", "||f||_2, ||Ff||_2 and their difference");
  plan_cmd->add_option("input", plan_input)->required();

  // certify
  std::string cert_op, cert_cert, cert_output;
  unsigned cert_trials = 1000, cert_degree = 16;
  std::uint64_t cert_seed = 0;
  auto* cert_cmd = app.add_subcommand("certify", "run the continuity-certificate falsifier");
  cert_cmd->add_option("op", cert_op, "operator JSON")->required();
  cert_cmd->add_option("cert", cert_cert, "certificate JSON")->required();
  cert_cmd->add_option("--trials", cert_trials);
  cert_cmd->add_option("--seed", cert_seed);
  cert_cmd->add_option("--degree", cert_degree, "max test-function degree");
  cert_cmd->add_option("-o,--output", cert_output);

  // selftest
  auto* self_cmd = app.add_subcommand("selftest", "run the full acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitBadInput;
  }

  if (eval_cmd->parsed()) {
    const Complex v = load_schwartz(eval_input).eval(eval_x);
    emit("", fmt17(v.real()) + "," + fmt17(v.imag()) + "\n");
  } else if (fourier_cmd->parsed()) {
    const SchwartzFn f = load_schwartz(fourier_input);
    const SchwartzFn g = fourier_inverse ? inverse_fourier(f) : fourier(f);
    emit(fourier_output, to_json(g).dump() + "\n");
  } else if (semi_cmd->parsed()) {
    if (semi_grid.size() == 2) {
      semi_kmax = semi_grid[0];
      semi_nmax = semi_grid[1];
    }
    const SchwartzFn f = load_schwartz(semi_input);
    std::ostringstream table;
    table << "k,n,seminorm\n";
    for (unsigned k = 0; k <= semi_kmax; ++k)
      for (unsigned n = 0; n <= semi_nmax; ++n)
        table << k << "," << n << "," << fmt17(seminorm(f, {k, n})) << "\n";
    emit("", table.str());
  } else if (pair_cmd->parsed()) {
    const SchwartzFn f = load_schwartz(pair_f);
    const SchwartzFn g = load_schwartz(pair_g);
    const Complex p = pairing(f, g);
    const Complex h = inner(f, g);
    emit("", "pairing_re,pairing_im,inner_re,inner_im\n" + fmt17(p.real()) + "," +
                 fmt17(p.imag()) + "," + fmt17(h.real()) + "," + fmt17(h.imag()) + "\n");
  } else if (dist_cmd->parsed()) {
    TemperedDist u;
    if (dist_spec == "delta" || dist_spec == "const_one")
      u = dist_from_label(dist_spec);
    else
      u = dist_from_json(load_json(dist_spec));
    const Complex v = apply(u, load_schwartz(dist_input));
    emit("", fmt17(v.real()) + "," + fmt17(v.imag()) + "\n");
  } else if (mult_cmd->parsed()) {
    const Multiplier m = multiplier_from_label(mult_label);
    const SchwartzFn f = load_schwartz(mult_input);
    const std::size_t pd =
        mult_proj >= 0 ? static_cast<std::size_t>(mult_proj) : default_proj_degree(f, m);
    const MultiplierResult res = apply_multiplier(m, f, pd);
    nlohmann::json j = to_json(res.value);
    j["aliasing_residual"] = res.aliasing_residual;
    emit(mult_output, j.dump() + "\n");
    if (mult_tol >= 0.0 && res.aliasing_residual > mult_tol)
      throw ContractViolation("aliasing residual " + fmt17(res.aliasing_residual) +
                              " above tolerance " + fmt17(mult_tol));
  } else if (sob_cmd->parsed()) {
    const SchwartzFn f = load_schwartz(sob_input);
    const Multiplier m = japanese_bracket(sob_s);
    const std::size_t pd =
        sob_proj >= 0 ? static_cast<std::size_t>(sob_proj) : default_proj_degree(f, m);
    const MultiplierResult res = lambda_s(sob_s, f, pd);
    emit("", "s,sobolev_norm,aliasing_residual\n" + fmt17(sob_s) + "," +
                 fmt17(l2_norm(res.value)) + "," + fmt17(res.aliasing_residual) + "\n");
  } else if (plan_cmd->parsed()) {
    const SchwartzFn f = load_schwartz(plan_input);
    const double a = l2_norm(f);
    const double b = l2_norm(fourier(f));
    emit("", "norm_f,norm_Ff,difference\n" + fmt17(a) + "," + fmt17(b) + "," + fmt17(b - a) +
                 "\n");
  } else if (cert_cmd->parsed()) {
    const SchwartzOp op = op_from_json(load_json(cert_op));
    const BoundCertificate cert = certificate_from_json(load_json(cert_cert));
    const CertReport report = validate_certificate(op, cert, cert_trials, cert_degree, cert_seed);
    emit(cert_output, to_json(report).dump() + "\n");
    if (!report.clean())
      throw ContractViolation("certificate violated in " +
                              std::to_string(report.violations.size()) + " trial(s)");
  } else if (self_cmd->parsed()) {
    if (!tempered::acceptance::run_all(std::cout)) return kExitContractViolation;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ContractViolation& e) {
    std::cerr << "contract violation: " << e.what() << "\n";
    return kExitContractViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}
