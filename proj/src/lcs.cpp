#include "tempered/lcs.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "tempered/random.hpp"

namespace tempered {

SeminormFamily schwartz_seminorm_family() {
  return {"(k, n) in N x N: p_{k,n}(f) = sup |x|^k |f^(n)(x)|",
          [](SeminormIndex idx, const SchwartzFn& f) { return seminorm(f, idx); }};
}

double finset_sup(const SchwartzFn& f, const std::set<SeminormIndex>& indices) {
  if (indices.empty())
    throw std::invalid_argument("finset_sup: empty index set");
  double sup = 0.0;
  for (const SeminormIndex& idx : indices) sup = std::fmax(sup, seminorm(f, idx));
  return sup;
}

bool in_ball(const SchwartzFn& f, const BasisBall& ball) {
  if (!(ball.radius > 0.0))
    throw std::invalid_argument("in_ball: radius must be positive");
  return finset_sup(f, ball.indices) < ball.radius;  // strict, per the sup-ball definition
}

namespace {

void spot_check_linearity(const SchwartzOp& op, Rng& rng, unsigned max_degree) {
  const std::size_t deg = std::max<std::size_t>(4, max_degree);
  for (int i = 0; i < 10; ++i) {
    const SchwartzFn f = sample_schwartz(rng, deg);
    const SchwartzFn g = sample_schwartz(rng, deg);
    const Complex c = rng.complex_normal();
    const SchwartzFn af = op.apply(f);
    const SchwartzFn ag = op.apply(g);
    const double scale_ref = 1.0 + l2_norm(af) + l2_norm(ag);
    const SchwartzFn sum_resid =
        add(op.apply(add(f, g)), scale(Complex(-1.0, 0.0), add(af, ag)));
    if (l2_norm(sum_resid) > 1e-9 * scale_ref)
      throw std::invalid_argument("validate_certificate: operator is not additive");
    const SchwartzFn hom_resid =
        add(op.apply(scale(c, f)), scale(Complex(-1.0, 0.0), scale(c, af)));
    if (l2_norm(hom_resid) > 1e-9 * (1.0 + std::abs(c)) * scale_ref)
      throw std::invalid_argument("validate_certificate: operator is not homogeneous");
  }
}

}  // namespace

CertReport validate_certificate(const SchwartzOp& op, const BoundCertificate& cert,
                                unsigned trials, unsigned max_degree,
                                std::uint64_t seed) {
  if (cert.bounds.empty())
    throw std::invalid_argument("validate_certificate: empty certificate");
  for (const auto& [out, entry] : cert.bounds) {
    if (entry.inputs.empty())
      throw std::invalid_argument("validate_certificate: empty input index set");
    if (entry.constant < 0.0)
      throw std::invalid_argument("validate_certificate: negative constant");
  }

  Rng rng(seed);
  spot_check_linearity(op, rng, max_degree);

  CertReport report;
  report.seed = seed;
  report.trials = trials;
  report.max_degree = max_degree;
  for (const auto& [out, entry] : cert.bounds) report.max_ratio[out] = 0.0;

  for (unsigned trial = 0; trial < trials; ++trial) {
    const SchwartzFn f = sample_schwartz(rng, max_degree);
    const SchwartzFn af = op.apply(f);
    for (const auto& [out, entry] : cert.bounds) {
      const double lhs = seminorm(af, out);
      const double sup = finset_sup(f, entry.inputs);
      const double bound = entry.constant * sup;
      double ratio;
      if (sup > 0.0)
        ratio = lhs / sup;
      else
        ratio = lhs > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
      report.max_ratio[out] = std::fmax(report.max_ratio[out], ratio);
      if (lhs > bound * (1.0 + 1e-8))
        report.violations.push_back({out, trial, lhs, bound, ratio});
      else if (std::fabs(lhs - bound) <= 1e-12 * (1.0 + bound))
        report.boundary.push_back({out, trial, lhs, bound, ratio});
    }
  }
  return report;
}

double vonn_bounded_diagnostic(const std::vector<SchwartzFn>& samples,
                               const std::set<SeminormIndex>& indices) {
  if (samples.empty())
    throw std::invalid_argument("vonn_bounded_diagnostic: empty sample list");
  double sup = 0.0;
  for (const SchwartzFn& f : samples) sup = std::fmax(sup, finset_sup(f, indices));
  return std::fmax((1.0 + 1e-9) * sup, 1e-9);
}

namespace {

nlohmann::json index_to_json(const SeminormIndex& idx) {
  return nlohmann::json::array({idx.k, idx.n});
}

SeminormIndex index_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_unsigned() || !j[1].is_number_unsigned())
    throw std::invalid_argument("certificate_from_json: index must be [k, n]");
  return {j[0].get<unsigned>(), j[1].get<unsigned>()};
}

nlohmann::json case_to_json(const CertCase& c) {
  return {{"out", index_to_json(c.out)},
          {"trial", c.trial},
          {"lhs", c.lhs},
          {"bound", c.bound},
          {"ratio", c.ratio}};
}

}  // namespace

nlohmann::json to_json(const BoundCertificate& cert) {
  nlohmann::json bounds = nlohmann::json::array();
  for (const auto& [out, entry] : cert.bounds) {
    nlohmann::json in = nlohmann::json::array();
    for (const SeminormIndex& idx : entry.inputs) in.push_back(index_to_json(idx));
    bounds.push_back({{"out", index_to_json(out)}, {"in", std::move(in)}, {"C", entry.constant}});
  }
  return {{"bounds", std::move(bounds)}};
}

BoundCertificate certificate_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("bounds") || !j["bounds"].is_array())
    throw std::invalid_argument("certificate_from_json: expected {\"bounds\": [...]}");
  BoundCertificate cert;
  for (const auto& b : j["bounds"]) {
    BoundEntry entry;
    entry.constant = b.at("C").get<double>();
    for (const auto& idx : b.at("in")) entry.inputs.insert(index_from_json(idx));
    cert.bounds[index_from_json(b.at("out"))] = std::move(entry);
  }
  return cert;
}

nlohmann::json to_json(const CertReport& report) {
  nlohmann::json ratios = nlohmann::json::array();
  for (const auto& [out, ratio] : report.max_ratio)
    ratios.push_back({{"out", index_to_json(out)}, {"ratio", ratio}});
  nlohmann::json violations = nlohmann::json::array();
  for (const CertCase& c : report.violations) violations.push_back(case_to_json(c));
  nlohmann::json boundary = nlohmann::json::array();
  for (const CertCase& c : report.boundary) boundary.push_back(case_to_json(c));
  return {{"seed", report.seed},
          {"trials", report.trials},
          {"max_degree", report.max_degree},
          {"max_ratio", std::move(ratios)},
          {"violations", std::move(violations)},
          {"boundary", std::move(boundary)}};
}

}  // namespace tempered
