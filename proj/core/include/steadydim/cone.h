// Copyright 2026 The steadydim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef STEADYDIM_CONE_H_
#define STEADYDIM_CONE_H_

#include <optional>

#include "steadydim/rational.h"
#include "steadydim/ratmat.h"

namespace steadydim {

struct ConeResult {
  enum class Status { PositiveVectorExists, Empty };
  Status status = Status::Empty;
  /// Present iff status == PositiveVectorExists; N w = 0 and every w_i >= 1.
  std::optional<RationalVector> witness;

  bool exists() const { return status == Status::PositiveVectorExists; }
  friend bool operator==(const ConeResult&, const ConeResult&) = default;
};

/// Decides whether ker(N) meets the open positive orthant by solving
/// {N w = 0, w >= 1} with an exact phase-1 simplex (Bland's rule). The
/// witness is validated exactly before it is returned and is scaled to
/// integer entries.
ConeResult PositiveKernelVector(const RatMatrix& n_mat);

}  // namespace steadydim

#endif  // STEADYDIM_CONE_H_
