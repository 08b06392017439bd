// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <string>

namespace qpc {

struct QuadratureResult {
  double value = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;  // error estimate relative to |value| (0 when value == 0)
};

/// Adaptive 61-point Gauss-Kronrod on a finite interval. Integrands are
/// expected to be bounded; callers substitute away endpoint singularities.
/// Throws QuadratureError tagged with `what` if the estimate exceeds
/// `required_rel_err`.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double target_rel_tol, double required_rel_err,
                                    const std::string& what);

}  // namespace qpc
