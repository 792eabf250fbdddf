#include "hullwalk/increment_spec.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hullwalk {

ScaleLaw ScaleLaw::uniform_on(std::vector<double> vs) {
  ScaleLaw law;
  law.values = std::move(vs);
  law.weights.assign(law.values.size(), 1.0 / static_cast<double>(law.values.size()));
  return law;
}

double ScaleLaw::sample(RngStream& rng) const {
  const double u = rng.uniform();
  double acc = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    acc += weights[i];
    if (u < acc) return values[i];
  }
  return values.back();
}

double ScaleLaw::second_moment() const {
  double s = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) s += weights[i] * values[i] * values[i];
  return s;
}

IncrementSpec IncrementSpec::gaussian(Matrix covariance) {
  IncrementSpec s;
  s.kind_ = IncrementKind::gaussian;
  s.d_ = covariance.rows;
  if (s.d_ < 1) throw std::invalid_argument("gaussian: dimension must be positive");
  s.chol_ = cholesky(covariance);  // rejects non-SPD input
  s.covariance_ = std::move(covariance);
  s.symmetric_ = true;
  s.mean_.assign(s.d_, 0.0);
  return s;
}

IncrementSpec IncrementSpec::standard_gaussian(int d) { return gaussian(Matrix::identity(d)); }

IncrementSpec IncrementSpec::uniform_sphere(int d, double radius) {
  if (d < 1 || radius <= 0.0) throw std::invalid_argument("uniform_sphere: bad parameters");
  IncrementSpec s;
  s.kind_ = IncrementKind::uniform_sphere;
  s.d_ = d;
  s.radius_ = radius;
  s.symmetric_ = true;
  s.mean_.assign(d, 0.0);
  s.covariance_ = Matrix::identity(d);
  for (int i = 0; i < d; ++i) s.covariance_(i, i) = radius * radius / d;
  return s;
}

IncrementSpec IncrementSpec::uniform_cube(int d, double half_width) {
  if (d < 1 || half_width <= 0.0) throw std::invalid_argument("uniform_cube: bad parameters");
  IncrementSpec s;
  s.kind_ = IncrementKind::uniform_cube;
  s.d_ = d;
  s.half_width_ = half_width;
  s.symmetric_ = true;
  s.mean_.assign(d, 0.0);
  s.covariance_ = Matrix::identity(d);
  for (int i = 0; i < d; ++i) s.covariance_(i, i) = half_width * half_width / 3.0;
  return s;
}

IncrementSpec IncrementSpec::centered_exponential(int d, double rate) {
  if (d < 1 || rate <= 0.0) throw std::invalid_argument("centered_exponential: bad parameters");
  IncrementSpec s;
  s.kind_ = IncrementKind::centered_exponential;
  s.d_ = d;
  s.rate_ = rate;
  s.symmetric_ = false;
  s.mean_.assign(d, 0.0);  // centered by construction
  s.covariance_ = Matrix::identity(d);
  for (int i = 0; i < d; ++i) s.covariance_(i, i) = 1.0 / (rate * rate);
  return s;
}

IncrementSpec IncrementSpec::scaled_mixture(IncrementSpec base, ScaleLaw law) {
  if (base.kind_ == IncrementKind::scaled_mixture)
    throw std::invalid_argument("scaled_mixture: nesting not supported");
  if (law.values.empty()) throw std::invalid_argument("scaled_mixture: empty scale law");
  for (double v : law.values)
    if (v <= 0.0) throw std::invalid_argument("scaled_mixture: scale values must be positive");
  IncrementSpec s;
  s.kind_ = IncrementKind::scaled_mixture;
  s.d_ = base.d_;
  s.symmetric_ = base.symmetric_;
  s.mean_.assign(s.d_, 0.0);
  const double m2 = law.second_moment();
  s.covariance_ = base.covariance_;
  for (double& x : s.covariance_.a) x *= m2;
  s.scale_law_ = std::move(law);
  s.base_ = std::make_shared<const IncrementSpec>(std::move(base));
  return s;
}

const IncrementSpec& IncrementSpec::base() const {
  if (!base_) throw std::logic_error("base(): not a scaled mixture");
  return *base_;
}

std::string IncrementSpec::name() const {
  switch (kind_) {
    case IncrementKind::gaussian: return "gaussian";
    case IncrementKind::uniform_sphere: return "uniform-sphere";
    case IncrementKind::uniform_cube: return "uniform-cube";
    case IncrementKind::centered_exponential: return "centered-exponential";
    case IncrementKind::scaled_mixture: return "scaled-mixture(" + base_->name() + ")";
  }
  return "?";
}

void IncrementSpec::sample_base_increment(RngStream& rng, double* out) const {
  switch (kind_) {
    case IncrementKind::gaussian: {
      // out = L z with z standard normal
      std::vector<double> z(d_);
      for (int i = 0; i < d_; ++i) z[i] = rng.gaussian();
      for (int i = 0; i < d_; ++i) {
        double s = 0.0;
        for (int j = 0; j <= i; ++j) s += chol_(i, j) * z[j];
        out[i] = s;
      }
      break;
    }
    case IncrementKind::uniform_sphere: {
      double nrm2 = 0.0;
      do {
        nrm2 = 0.0;
        for (int i = 0; i < d_; ++i) {
          out[i] = rng.gaussian();
          nrm2 += out[i] * out[i];
        }
      } while (nrm2 == 0.0);
      const double f = radius_ / std::sqrt(nrm2);
      for (int i = 0; i < d_; ++i) out[i] *= f;
      break;
    }
    case IncrementKind::uniform_cube:
      for (int i = 0; i < d_; ++i) out[i] = rng.uniform(-half_width_, half_width_);
      break;
    case IncrementKind::centered_exponential:
      for (int i = 0; i < d_; ++i) out[i] = rng.exponential(rate_) - 1.0 / rate_;
      break;
    case IncrementKind::scaled_mixture:
      base_->sample_base_increment(rng, out);
      break;
  }
}

void IncrementSpec::sample_increment(RngStream& rng, double* out) const {
  if (kind_ == IncrementKind::scaled_mixture) {
    const double s = scale_law_.sample(rng);
    base_->sample_base_increment(rng, out);
    for (int i = 0; i < d_; ++i) out[i] *= s;
  } else {
    sample_base_increment(rng, out);
  }
}

}  // namespace hullwalk
