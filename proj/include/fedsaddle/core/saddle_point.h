// Copyright 2026 The fedsaddle Authors
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

#ifndef FEDSADDLE_CORE_SADDLE_POINT_H_
#define FEDSADDLE_CORE_SADDLE_POINT_H_

#include <span>

#include "Eigen/Core"

namespace fedsaddle {

// A joint primal-dual point z = (x, y), stored as one contiguous vector with
// the primal block first. Gradient mappings and search directions share this
// shape, so they are SaddlePoints too.
class SaddlePoint {
 public:
  SaddlePoint() = default;
  // Zero point with primal dimension m and dual dimension d.
  SaddlePoint(Eigen::Index primal_dim, Eigen::Index dual_dim);
  SaddlePoint(const Eigen::VectorXd& x, const Eigen::VectorXd& y);
  SaddlePoint(Eigen::VectorXd joint, Eigen::Index primal_dim);

  static SaddlePoint Constant(Eigen::Index primal_dim, Eigen::Index dual_dim,
                              double value);

  Eigen::Index primal_dim() const { return primal_dim_; }
  Eigen::Index dual_dim() const { return joint_.size() - primal_dim_; }
  Eigen::Index size() const { return joint_.size(); }

  auto x() { return joint_.head(primal_dim_); }
  auto x() const { return joint_.head(primal_dim_); }
  auto y() { return joint_.tail(dual_dim()); }
  auto y() const { return joint_.tail(dual_dim()); }

  Eigen::VectorXd& joint() { return joint_; }
  const Eigen::VectorXd& joint() const { return joint_; }

  double SquaredNorm() const { return joint_.squaredNorm(); }
  double Norm() const { return joint_.norm(); }
  bool SameShape(const SaddlePoint& other) const {
    return primal_dim_ == other.primal_dim_ && size() == other.size();
  }
  bool AllFinite() const { return joint_.allFinite(); }

  SaddlePoint& operator+=(const SaddlePoint& other);
  SaddlePoint& operator-=(const SaddlePoint& other);
  SaddlePoint& operator*=(double scale);
  // this += scale * other, without a temporary.
  SaddlePoint& AddScaled(double scale, const SaddlePoint& other);

  friend SaddlePoint operator+(SaddlePoint a, const SaddlePoint& b) {
    return a += b;
  }
  friend SaddlePoint operator-(SaddlePoint a, const SaddlePoint& b) {
    return a -= b;
  }
  friend SaddlePoint operator*(double scale, SaddlePoint a) {
    return a *= scale;
  }
  // Bitwise equality of shape and coordinates.
  friend bool operator==(const SaddlePoint& a, const SaddlePoint& b);

 private:
  Eigen::VectorXd joint_;
  Eigen::Index primal_dim_ = 0;
};

double SquaredDistance(const SaddlePoint& a, const SaddlePoint& b);
double Distance(const SaddlePoint& a, const SaddlePoint& b);
double Dot(const SaddlePoint& a, const SaddlePoint& b);

// Arithmetic mean, computed as points[0] + (1/n) sum_i (points[i] - points[0])
// in ascending order, so identical inputs reproduce the input bitwise.
SaddlePoint Mean(std::span<const SaddlePoint> points);

}  // namespace fedsaddle

#endif  // FEDSADDLE_CORE_SADDLE_POINT_H_
