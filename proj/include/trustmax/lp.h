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

#ifndef TRUSTMAX_LP_H_
#define TRUSTMAX_LP_H_

#include <Eigen/Dense>

namespace trustmax {

struct LpResult {
  Eigen::VectorXd x;
  double objective = 0.0;
  bool bounded = true;
};

// max c^T x  s.t.  A x <= b, x >= 0, with b >= 0 so the origin is feasible.
// Dense tableau simplex with Bland's rule; meant for small verification
// problems only.
LpResult SolveLp(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                 const Eigen::VectorXd& c);

}  // namespace trustmax

#endif  // TRUSTMAX_LP_H_
