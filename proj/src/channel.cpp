#include "relaysec/channel.hpp"

#include <cmath>

#include "relaysec/numeric.hpp"

namespace relaysec {

namespace {

inline double exponential_draw(double u01, double mu) { return -mu * std::log(u01); }

}  // namespace

FadingRealization fading_at(const MeanGains& means, const RngStream& rng,
                            std::uint64_t sample_index, std::uint64_t block_offset) {
  const auto a = rng.uniforms_at(sample_index, 2 * block_offset);
  const auto b = rng.uniforms_at(sample_index, 2 * block_offset + 1);
  return FadingRealization{
      exponential_draw(a[0], means.mu_s1r), exponential_draw(a[1], means.mu_s2r),
      exponential_draw(a[2], means.mu_s1j), exponential_draw(a[3], means.mu_s2j),
      exponential_draw(b[0], means.mu_rj)};
}

FadingRealization sample_fading(const MeanGains& means, RngStream& rng) {
  return fading_at(means, rng, rng.advance());
}

double gain_pdf(double g, double mu) {
  if (g < 0.0) return 0.0;
  return std::exp(-g / mu) / mu;
}

namespace {

// e^(-a) - e^(-b) with the smaller exponent factored out, so expm1 never
// sees a positive argument and the result has no cancellation near a = b.
inline double exp_diff(double a, double b) {
  if (a <= b) return -std::exp(-a) * std::expm1(a - b);
  return std::exp(-b) * std::expm1(b - a);
}

}  // namespace

double sum_pdf(double s, double m_x, double m_y) {
  if (s < 0.0) return 0.0;
  if (nearly_equal_rel(m_x, m_y)) {
    const double m = 0.5 * (m_x + m_y);
    return m * m * s * std::exp(-m * s);
  }
  // (m_x m_y / (m_x - m_y)) (e^(-m_y s) - e^(-m_x s)), nonnegative for any
  // ordering of the rates.
  return m_x * m_y / (m_x - m_y) * exp_diff(m_y * s, m_x * s);
}

double inverse_sum_pdf(double h, double mu_r, double mu_s) {
  if (h <= 0.0) return 0.0;
  if (nearly_equal_rel(mu_r, mu_s)) {
    const double mu = 0.5 * (mu_r + mu_s);
    return std::exp(-1.0 / (h * mu)) / (h * h * h * mu * mu);
  }
  const double a = 1.0 / (h * mu_s);
  const double b = 1.0 / (h * mu_r);
  return exp_diff(a, b) / (h * h * (mu_s - mu_r));
}

double inverse_sum_pdf_printed(double h, double mu_r, double mu_s) {
  if (h <= 0.0) return 0.0;
  if (nearly_equal_rel(mu_r, mu_s)) {
    const double mu = 0.5 * (mu_r + mu_s);
    return std::exp(-1.0 / (h * mu)) / (h * mu * mu);
  }
  return inverse_sum_pdf(h, mu_r, mu_s);
}

}  // namespace relaysec
