#pragma once

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace relaysec {

// Thin wrappers over double-exponential quadrature, used by the validation
// checks and the test oracles.

template <typename F>
double integrate_half_line(F&& f, double tol = 1e-10) {
  boost::math::quadrature::exp_sinh<double> integrator;
  return integrator.integrate(std::forward<F>(f), tol);
}

template <typename F>
double integrate(F&& f, double a, double b, double tol = 1e-10) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  return integrator.integrate(std::forward<F>(f), a, b, tol);
}

}  // namespace relaysec
