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

#include "fedsaddle/core/saddle_point.h"

#include <utility>

#include "fedsaddle/core/errors.h"

namespace fedsaddle {
namespace {

void CheckShape(const SaddlePoint& a, const SaddlePoint& b) {
  if (!a.SameShape(b)) {
    throw InvalidInputError("saddle point dimension mismatch");
  }
}

}  // namespace

SaddlePoint::SaddlePoint(Eigen::Index primal_dim, Eigen::Index dual_dim)
    : joint_(Eigen::VectorXd::Zero(primal_dim + dual_dim)),
      primal_dim_(primal_dim) {
  if (primal_dim < 0 || dual_dim < 0) {
    throw InvalidInputError("negative saddle point dimension");
  }
}

SaddlePoint::SaddlePoint(const Eigen::VectorXd& x, const Eigen::VectorXd& y)
    : joint_(x.size() + y.size()), primal_dim_(x.size()) {
  joint_.head(x.size()) = x;
  joint_.tail(y.size()) = y;
}

SaddlePoint::SaddlePoint(Eigen::VectorXd joint, Eigen::Index primal_dim)
    : joint_(std::move(joint)), primal_dim_(primal_dim) {
  if (primal_dim < 0 || primal_dim > joint_.size()) {
    throw InvalidInputError("primal dimension exceeds joint vector size");
  }
}

SaddlePoint SaddlePoint::Constant(Eigen::Index primal_dim,
                                  Eigen::Index dual_dim, double value) {
  SaddlePoint z(primal_dim, dual_dim);
  z.joint_.setConstant(value);
  return z;
}

SaddlePoint& SaddlePoint::operator+=(const SaddlePoint& other) {
  CheckShape(*this, other);
  joint_ += other.joint_;
  return *this;
}

SaddlePoint& SaddlePoint::operator-=(const SaddlePoint& other) {
  CheckShape(*this, other);
  joint_ -= other.joint_;
  return *this;
}

SaddlePoint& SaddlePoint::operator*=(double scale) {
  joint_ *= scale;
  return *this;
}

SaddlePoint& SaddlePoint::AddScaled(double scale, const SaddlePoint& other) {
  CheckShape(*this, other);
  joint_ += scale * other.joint_;
  return *this;
}

bool operator==(const SaddlePoint& a, const SaddlePoint& b) {
  if (!a.SameShape(b)) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a.joint_[i] != b.joint_[i]) return false;
  }
  return true;
}

double SquaredDistance(const SaddlePoint& a, const SaddlePoint& b) {
  CheckShape(a, b);
  return (a.joint() - b.joint()).squaredNorm();
}

double Distance(const SaddlePoint& a, const SaddlePoint& b) {
  CheckShape(a, b);
  return (a.joint() - b.joint()).norm();
}

double Dot(const SaddlePoint& a, const SaddlePoint& b) {
  CheckShape(a, b);
  return a.joint().dot(b.joint());
}

SaddlePoint Mean(std::span<const SaddlePoint> points) {
  if (points.empty()) throw InvalidInputError("mean of zero points");
  const SaddlePoint& base = points.front();
  Eigen::VectorXd offset = Eigen::VectorXd::Zero(base.size());
  for (const SaddlePoint& p : points) {
    CheckShape(base, p);
    offset += p.joint() - base.joint();
  }
  return SaddlePoint(base.joint() + offset / static_cast<double>(points.size()),
                     base.primal_dim());
}

}  // namespace fedsaddle
