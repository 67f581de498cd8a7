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

#ifndef TRUSTMAX_SAMPLING_H_
#define TRUSTMAX_SAMPLING_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "trustmax/dynamics.h"
#include "trustmax/graph.h"

namespace trustmax {

enum class DistributionKind { kUniform, kNormal, kPowerLaw, kDegreeCorrelated };

struct OpinionDistribution {
  DistributionKind kind = DistributionKind::kUniform;
  double alpha = 1.0;  // power-law exponent
  std::uint64_t seed = 0;

  // uniform, normal, pow<alpha>, degree
  std::string Name() const;
};

// Accepts uniform, normal, pow1, pow2, pow<real>, degree.
OpinionDistribution ParseDistribution(std::string_view name,
                                      std::uint64_t seed);

// The five standard internal-opinion settings: uniform, normal, pow1, pow2,
// degree.
std::vector<std::string> StandardDistributionNames();

// Draws an internal-valid opinion vector.
//   uniform: U(-1, 1)
//   normal:  N(0, 1) clamped to [-1, 1]
//   pow:     |s| = u^(1/alpha), u ~ U(0, 1], sign flipped with prob 1/2
//   degree:  |s_i| = trust_i / max trust, sign flipped with prob 1/2
// An edgeless graph under `degree` gives all zeros and sets `warning`.
OpinionVector SampleOpinions(const OpinionDistribution& dist,
                             const SignedTrustGraph& g,
                             std::string* warning = nullptr);

}  // namespace trustmax

#endif  // TRUSTMAX_SAMPLING_H_
