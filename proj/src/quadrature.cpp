// SPDX-License-Identifier: Apache-2.0
#include "qpc/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <sstream>

#include "qpc/errors.hpp"

namespace qpc {

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double target_rel_tol, double required_rel_err,
                                    const std::string& what) {
  if (!(b > a)) return {};
  double err = 0.0;
  double l1 = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      f, a, b, 15, target_rel_tol, &err, &l1);
  QuadratureResult out{value, err, 0.0};
  if (value != 0.0) out.rel_err = err / std::abs(value);
  if (!std::isfinite(value) || out.rel_err > required_rel_err) {
    std::ostringstream os;
    os << what << ": quadrature did not converge on [" << a << ", " << b
       << "] (rel_err=" << out.rel_err << ")";
    throw QuadratureError(os.str());
  }
  return out;
}

}  // namespace qpc
