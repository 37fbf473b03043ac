// Copyright 2026 The mda-solvers Authors.
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

#ifndef MDA_MEASURE_H_
#define MDA_MEASURE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "mda/grid.h"
#include "mda/rng.h"

namespace mda {

// Weights smaller than this are clamped to exactly zero on construction, so
// log-space code never sees subnormal garbage.
inline constexpr double kWeightFloor = 1e-300;

// A mixed strategy: a probability vector over a strategy grid. Immutable
// after construction; weights are renormalized to sum to one.
class DiscreteMeasure {
 public:
  DiscreteMeasure(GridPtr grid, std::vector<double> weights);

  static DiscreteMeasure Uniform(GridPtr grid);
  static DiscreteMeasure Vertex(GridPtr grid, int index);

  const GridPtr& grid() const { return grid_; }
  int size() const { return static_cast<int>(weights_.size()); }
  double operator[](int i) const { return weights_[i]; }
  std::span<const double> weights() const { return weights_; }

  // True iff every weight is strictly positive.
  bool interior() const { return interior_; }

  double min_weight() const;

 private:
  GridPtr grid_;
  std::vector<double> weights_;
  bool interior_;
};

// Real values attached to the grid points: flat derivatives, dual
// potentials, payoff gradients. All values must be finite.
class GridFunction {
 public:
  GridFunction(GridPtr grid, std::vector<double> values);

  static GridFunction Zero(GridPtr grid);
  static GridFunction Constant(GridPtr grid, double c);

  const GridPtr& grid() const { return grid_; }
  int size() const { return static_cast<int>(values_.size()); }
  double operator[](int i) const { return values_[i]; }
  std::span<const double> values() const { return values_; }

  GridFunction ShiftedBy(double c) const;
  double MaxAbs() const;
  double Max() const;
  double Min() const;

 private:
  GridPtr grid_;
  std::vector<double> values_;
};

// <f, m> = sum_i f_i m_i. Probability weights already absorb cell weights.
double Pairing(const GridFunction& f, const DiscreteMeasure& m);

// <f, a - b>.
double PairingDifference(const GridFunction& f, const DiscreteMeasure& a,
                         const DiscreteMeasure& b);

// (1/2) sum_i |a_i - b_i|.
double TvDistance(const DiscreteMeasure& a, const DiscreteMeasure& b);

// sum_i a_i log(a_i / b_i) with 0 log 0 = 0. Returns +infinity when a puts
// mass where b has none. Always >= 0.
double KlDivergence(const DiscreteMeasure& a, const DiscreteMeasure& b);

// (1 - lambda) a + lambda b, lambda in [0, 1].
DiscreteMeasure ConvexCombination(const DiscreteMeasure& a,
                                  const DiscreteMeasure& b, double lambda);

// ((count - 1) avg + next) / count; count >= 1 is the new total.
DiscreteMeasure RunningAverage(const DiscreteMeasure& avg,
                               const DiscreteMeasure& next,
                               std::int64_t count);

// Dirichlet(1,...,1) sample; interior with probability one.
DiscreteMeasure RandomInteriorMeasure(const GridPtr& grid, Rng& rng);

}  // namespace mda

#endif  // MDA_MEASURE_H_
