#pragma once

#include <cstdint>

#include "relaysec/params.hpp"
#include "relaysec/rng.hpp"

namespace relaysec {

// One joint draw of the five channel power gains.
struct FadingRealization {
  double x;  // |h_S1R|^2
  double y;  // |h_S2R|^2
  double z;  // |h_S1J|^2
  double w;  // |h_S2J|^2
  double u;  // |h_RJ|^2
};

// Gains for a given global sample index; pure in (seed, stream, index).
// block_offset selects an independent redraw for the same index.
FadingRealization fading_at(const MeanGains& means, const RngStream& rng,
                            std::uint64_t sample_index, std::uint64_t block_offset = 0);

// Sequential draw: uses the stream cursor, then advances it.
FadingRealization sample_fading(const MeanGains& means, RngStream& rng);

// Exponential density of a single channel power gain: (1/mu) e^(-g/mu) for
// g >= 0, zero below the support.
double gain_pdf(double g, double mu);

// Density of the sum of two independent exponentials with rate parameters
// m_x, m_y (a hypoexponential). Near-equal rates take the m^2 s e^(-m s)
// branch; the general branch is evaluated with expm1 so it stays finite and
// nonnegative arbitrarily close to equality.
double sum_pdf(double s, double m_x, double m_y);

// Density of H = 1/(R+S) where R, S are exponential with means mu_r, mu_s.
// The equal-means branch is the change-of-variables result
// (1/(h^3 mu^2)) e^(-1/(h mu)); the form printed in the source material,
// (1/(h mu^2)) e^(-1/(h mu)), does not normalize and is kept only as
// inverse_sum_pdf_printed for audit.
double inverse_sum_pdf(double h, double mu_r, double mu_s);
double inverse_sum_pdf_printed(double h, double mu_r, double mu_s);

}  // namespace relaysec
