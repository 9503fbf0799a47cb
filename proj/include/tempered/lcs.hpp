#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "tempered/schwartz.hpp"

// Finite-sample diagnostics for the locally convex structure of the Schwartz
// space: seminorm families, sup-balls, boundedness witnesses, and continuity
// certificates in the bounds => continuity style.  A clean falsifier report
// is evidence of continuity, not a proof.

namespace tempered {

struct SeminormFamily {
  std::string index_description;
  std::function<double(SeminormIndex, const SchwartzFn&)> evaluate;
};

// The canonical family p_{k,n}(f) = sup |x|^k |f^(n)(x)|.
SeminormFamily schwartz_seminorm_family();

// max over the index set of seminorm(f, idx); rejects the empty set.
double finset_sup(const SchwartzFn& f, const std::set<SeminormIndex>& indices);

// Neighborhood-basis ball: all f with sup over `indices` strictly below
// `radius`.
struct BasisBall {
  std::set<SeminormIndex> indices;  // nonempty
  double radius = 1.0;              // > 0
};

bool in_ball(const SchwartzFn& f, const BasisBall& ball);

// Continuity certificate: for each output index (k,n), a finite input index
// set s and a constant C claiming seminorm(A f, (k,n)) <= C * finset_sup(f, s).
struct BoundEntry {
  std::set<SeminormIndex> inputs;  // nonempty
  double constant = 0.0;           // >= 0
};

struct BoundCertificate {
  std::map<SeminormIndex, BoundEntry> bounds;
};

struct CertCase {
  SeminormIndex out;
  unsigned trial = 0;
  double lhs = 0.0;    // seminorm(op(f), out)
  double bound = 0.0;  // C * finset_sup(f, inputs)
  double ratio = 0.0;  // lhs / finset_sup(f, inputs)
};

struct CertReport {
  std::uint64_t seed = 0;
  unsigned trials = 0;
  unsigned max_degree = 0;
  std::map<SeminormIndex, double> max_ratio;
  std::vector<CertCase> violations;  // lhs > bound * (1 + 1e-8)
  std::vector<CertCase> boundary;    // |lhs - bound| <= 1e-12 * (1 + bound)

  bool clean() const { return violations.empty(); }
};

// Seeded falsification run.  Spot-checks that `op` is additive and
// homogeneous (10 random pairs, 1e-9) and throws std::invalid_argument
// otherwise or when the certificate is empty.  Test functions follow the
// fixed sampler distribution of random.hpp.
CertReport validate_certificate(const SchwartzOp& op, const BoundCertificate& cert,
                                unsigned trials, unsigned max_degree,
                                std::uint64_t seed);

// Witness radius for a finite sample set: smallest r (up to the 1e-9 slack
// and floor) with finset_sup(f, indices) < r for every sample.
double vonn_bounded_diagnostic(const std::vector<SchwartzFn>& samples,
                               const std::set<SeminormIndex>& indices);

// {"bounds":[{"out":[k,n],"in":[[k,n],...],"C":c},...]}
nlohmann::json to_json(const BoundCertificate& cert);
BoundCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CertReport& report);

}  // namespace tempered
