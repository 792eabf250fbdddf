#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hullwalk/linalg.hpp"
#include "hullwalk/rng.hpp"

namespace hullwalk {

enum class IncrementKind {
  gaussian,
  uniform_sphere,
  uniform_cube,
  centered_exponential,
  scaled_mixture,
};

// Discrete law of a positive random scale, used by the scaled-mixture kind.
struct ScaleLaw {
  std::vector<double> values;
  std::vector<double> weights;  // normalized at construction

  static ScaleLaw point_mass(double v) { return ScaleLaw{{v}, {1.0}}; }
  static ScaleLaw uniform_on(std::vector<double> vs);

  double sample(RngStream& rng) const;
  double second_moment() const;
};

// A sampleable increment law with its symmetry/mean/covariance metadata.
// Construction validates the covariance (condition (H) needs it non-degenerate).
class IncrementSpec {
 public:
  static IncrementSpec gaussian(Matrix covariance);
  static IncrementSpec standard_gaussian(int d);
  static IncrementSpec uniform_sphere(int d, double radius = 1.0);
  static IncrementSpec uniform_cube(int d, double half_width = 1.0);
  // Exp(rate) - 1/rate per coordinate: asymmetric, zero mean, finite variance.
  static IncrementSpec centered_exponential(int d, double rate = 1.0);
  static IncrementSpec scaled_mixture(IncrementSpec base, ScaleLaw law);

  IncrementKind kind() const { return kind_; }
  int dim() const { return d_; }
  bool symmetric() const { return symmetric_; }
  const std::vector<double>& mean() const { return mean_; }
  const Matrix& covariance() const { return covariance_; }
  const IncrementSpec& base() const;
  const ScaleLaw& scale_law() const { return scale_law_; }
  std::string name() const;

  // One increment into out[0..d). scaled_mixture draws its own scale here,
  // making the increments i.i.d.; the shared-scale exchangeable variant lives
  // in walkgen.
  void sample_increment(RngStream& rng, double* out) const;

  // Increment given an externally drawn scale (scaled_mixture only).
  void sample_base_increment(RngStream& rng, double* out) const;

 private:
  IncrementSpec() = default;

  IncrementKind kind_ = IncrementKind::gaussian;
  int d_ = 0;
  bool symmetric_ = false;
  std::vector<double> mean_;
  Matrix covariance_;
  Matrix chol_;  // gaussian only
  double radius_ = 1.0;
  double half_width_ = 1.0;
  double rate_ = 1.0;
  std::shared_ptr<const IncrementSpec> base_;
  ScaleLaw scale_law_;
};

}  // namespace hullwalk
