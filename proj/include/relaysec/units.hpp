#pragma once

#include <cmath>
#include <stdexcept>

namespace relaysec {

// All internal computation runs in linear watts. dB / dBW / dBm appear only
// at the configuration boundary, through these conversions.

inline double db_to_linear(double value_db) {
  if (!std::isfinite(value_db)) {
    throw std::invalid_argument("db_to_linear: value must be finite");
  }
  return std::pow(10.0, value_db / 10.0);
}

inline double linear_to_db(double ratio) {
  if (!(ratio > 0.0) || !std::isfinite(ratio)) {
    throw std::invalid_argument("linear_to_db: ratio must be positive and finite");
  }
  return 10.0 * std::log10(ratio);
}

// dBm = dBW + 30
inline double dbm_to_watts(double value_dbm) { return db_to_linear(value_dbm - 30.0); }
inline double dbw_to_watts(double value_dbw) { return db_to_linear(value_dbw); }

}  // namespace relaysec
