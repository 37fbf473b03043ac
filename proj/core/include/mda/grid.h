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

#ifndef MDA_GRID_H_
#define MDA_GRID_H_

#include <memory>
#include <span>
#include <vector>

namespace mda {

// A finite set of pure strategies embedded in R^d. Each point carries a
// positive cell weight, the quadrature surrogate for Lebesgue measure used
// by the dual-space checks; it never enters the simplex algebra itself.
class StrategyGrid {
 public:
  // `points` is a list of d-dimensional coordinates, at least 2 of them.
  // Empty `cell_weights` defaults to 1/K per point.
  StrategyGrid(std::vector<std::vector<double>> points,
               std::vector<double> cell_weights = {});

  static std::shared_ptr<const StrategyGrid> Uniform1d(int num_points,
                                                       double lo, double hi);
  static std::shared_ptr<const StrategyGrid> FromPoints(
      std::vector<std::vector<double>> points,
      std::vector<double> cell_weights = {});

  int size() const { return static_cast<int>(cell_weights_.size()); }
  int dim() const { return dim_; }

  std::span<const double> point(int i) const {
    return {coords_.data() + static_cast<std::size_t>(i) * dim_,
            static_cast<std::size_t>(dim_)};
  }
  double cell_weight(int i) const { return cell_weights_[i]; }
  std::span<const double> cell_weights() const { return cell_weights_; }

  // Maximum pairwise Euclidean distance between grid points.
  double diameter() const { return diameter_; }

  // Grids are usually shared by pointer; structurally identical grids are
  // also accepted wherever a shared grid is required.
  bool SameAs(const StrategyGrid& other) const;

 private:
  int dim_;
  std::vector<double> coords_;  // row-major, size() * dim()
  std::vector<double> cell_weights_;
  double diameter_;
};

using GridPtr = std::shared_ptr<const StrategyGrid>;

// Throws GridMismatchError unless a and b are the same grid.
void CheckSameGrid(const GridPtr& a, const GridPtr& b, const char* where);

}  // namespace mda

#endif  // MDA_GRID_H_
