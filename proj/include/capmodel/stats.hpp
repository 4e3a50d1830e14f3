#pragma once

#include <cmath>
#include <string>
#include <vector>

#include <boost/math/distributions/students_t.hpp>

#include "capmodel/errors.hpp"

namespace capmodel {

inline double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

// Two-sided p-value of a standard normal z statistic.
inline double z_test_p(double z) { return std::erfc(std::abs(z) / std::sqrt(2.0)); }

// Survival function of chi-square with 1 df: P(X > s) = erfc(sqrt(s/2)).
inline double chi2_sf_1df(double s) {
  if (s <= 0.0) return 1.0;
  return std::erfc(std::sqrt(s / 2.0));
}

// Two-sided p-value of a t statistic with df degrees of freedom.
inline double t_test_two_sided_p(double t, double df) {
  if (df <= 0) throw ValidationError("t-test requires positive degrees of freedom");
  boost::math::students_t dist(df);
  return 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t)));
}

enum class Stars { none, one, two, three };

struct SignificanceLevels {
  double one = 0.10;
  double two = 0.05;
  double three = 0.01;
};

inline Stars stars_for_p(double p, const SignificanceLevels& levels = {}) {
  if (p < levels.three) return Stars::three;
  if (p < levels.two) return Stars::two;
  if (p < levels.one) return Stars::one;
  return Stars::none;
}

inline const char* to_string(Stars s) {
  switch (s) {
    case Stars::one: return "*";
    case Stars::two: return "**";
    case Stars::three: return "***";
    default: return "";
  }
}

inline double mean(const std::vector<double>& xs) {
  if (xs.empty()) throw ValidationError("mean of empty column");
  double s = 0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

// Sample standard deviation, n-1 denominator.
inline double sample_sd(const std::vector<double>& xs) {
  if (xs.empty()) throw ValidationError("sd of empty column");
  if (xs.size() == 1) return 0.0;
  const double mu = mean(xs);
  double s = 0;
  for (double x : xs) s += (x - mu) * (x - mu);
  return std::sqrt(s / static_cast<double>(xs.size() - 1));
}

inline double pearson_r(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw ValidationError("pearson correlation needs two equal-length columns of size >= 2");
  const double mx = mean(x), my = mean(y);
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0)
    throw ValidationError("pearson correlation undefined for zero-variance column");
  return sxy / std::sqrt(sxx * syy);
}

// Significance of a correlation coefficient: t = r sqrt((n-2)/(1-r^2)),
// two-sided with n-2 df.
inline double pearson_p(double r, std::size_t n) {
  if (n < 3) throw ValidationError("correlation significance needs n >= 3");
  const double denom = 1.0 - r * r;
  if (denom <= 0.0) return 0.0;
  const double t = r * std::sqrt(static_cast<double>(n - 2) / denom);
  return t_test_two_sided_p(t, static_cast<double>(n - 2));
}

}  // namespace capmodel
