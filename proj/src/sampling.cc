// Copyright 2026 The Trustmax Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "trustmax/sampling.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "trustmax/errors.h"
#include "trustmax/rng.h"

namespace trustmax {

std::string OpinionDistribution::Name() const {
  switch (kind) {
    case DistributionKind::kUniform: return "uniform";
    case DistributionKind::kNormal: return "normal";
    case DistributionKind::kDegreeCorrelated: return "degree";
    case DistributionKind::kPowerLaw: {
      std::ostringstream out;
      out << "pow" << alpha;
      return out.str();
    }
  }
  return "?";
}

OpinionDistribution ParseDistribution(std::string_view name,
                                      std::uint64_t seed) {
  OpinionDistribution d;
  d.seed = seed;
  if (name == "uniform") {
    d.kind = DistributionKind::kUniform;
  } else if (name == "normal") {
    d.kind = DistributionKind::kNormal;
  } else if (name == "degree") {
    d.kind = DistributionKind::kDegreeCorrelated;
  } else if (name.starts_with("pow")) {
    const std::string_view rest = name.substr(3);
    double alpha = 0.0;
    auto [ptr, ec] =
        std::from_chars(rest.data(), rest.data() + rest.size(), alpha);
    if (ec != std::errc() || ptr != rest.data() + rest.size() ||
        !(alpha > 0.0)) {
      throw UsageError("bad power-law exponent in '" + std::string(name) + "'");
    }
    d.kind = DistributionKind::kPowerLaw;
    d.alpha = alpha;
  } else {
    throw UsageError("unknown distribution '" + std::string(name) + "'");
  }
  return d;
}

std::vector<std::string> StandardDistributionNames() {
  return {"uniform", "normal", "pow1", "pow2", "degree"};
}

OpinionVector SampleOpinions(const OpinionDistribution& dist,
                             const SignedTrustGraph& g, std::string* warning) {
  const int n = g.num_nodes();
  SplitMix64 rng(dist.seed);
  Eigen::VectorXd s(n);
  switch (dist.kind) {
    case DistributionKind::kUniform:
      for (int i = 0; i < n; ++i) s[i] = rng.Uniform(-1.0, 1.0);
      break;
    case DistributionKind::kNormal:
      for (int i = 0; i < n; ++i) s[i] = std::clamp(rng.Normal(), -1.0, 1.0);
      break;
    case DistributionKind::kPowerLaw:
      for (int i = 0; i < n; ++i) {
        const double magnitude =
            std::pow(rng.UniformOpenClosed(), 1.0 / dist.alpha);
        s[i] = rng.Bernoulli(0.5) ? -magnitude : magnitude;
      }
      break;
    case DistributionKind::kDegreeCorrelated: {
      const Eigen::VectorXd trust = g.TrustSums();
      const double top = trust.maxCoeff();
      if (top == 0.0) {
        if (warning) *warning = "degree distribution on an edgeless graph";
        s.setZero();
        break;
      }
      for (int i = 0; i < n; ++i) {
        const double magnitude = trust[i] / top;
        s[i] = rng.Bernoulli(0.5) ? -magnitude : magnitude;
      }
      break;
    }
  }
  return OpinionVector::Internal(std::move(s));
}

}  // namespace trustmax
