// SPDX-License-Identifier: Apache-2.0
#include "qpc/rates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "qpc/errors.hpp"
#include "qpc/quadrature.hpp"

namespace qpc {
namespace {

using units::kPi;

void require_superconductor(const MaterialParams& mat, const char* op) {
  if (!mat.is_superconductor()) {
    throw DomainError(std::string(op) + ": material '" + mat.name + "' has no gap");
  }
}

[[noreturn]] void throw_domain(const char* op, const char* what, double value, double gap) {
  std::ostringstream os;
  os << op << ": " << what << " (energy=" << value << " K, gap=" << gap << " K)";
  throw DomainError(os.str());
}

// Piecewise integration over eps' = gap + u^2, u from the DoS floor up to the
// point where the occupation is negligible. `weighted` receives eps' and
// must already include the Jacobian-weighted density of states.
struct OccupationWindow {
  double x_floor;  // (eps' - gap) / gap at the lower limit
  double x_cut;    // (eps' - gap) / gap at the upper limit, 0 if f == 0
};

OccupationWindow occupation_window(const std::function<double(double)>& f, double gap,
                                   double dos_floor, const char* op) {
  constexpr double kTruncation = 1e-12;
  constexpr int kPerDecade = 50;
  constexpr double kLogLo = -10.0;
  constexpr double kLogHi = 6.0;
  const int n = static_cast<int>((kLogHi - kLogLo) * kPerDecade) + 1;
  std::vector<double> xs(n), fs(n);
  double peak = 0.0;
  for (int k = 0; k < n; ++k) {
    xs[k] = std::pow(10.0, kLogLo + static_cast<double>(k) / kPerDecade);
    fs[k] = f(gap * (1.0 + xs[k]));
    if (fs[k] < 0.0 || !std::isfinite(fs[k])) {
      std::ostringstream os;
      os << op << ": occupation must be finite and non-negative (f=" << fs[k] << " at "
         << gap * (1.0 + xs[k]) << " K)";
      throw DomainError(os.str());
    }
    peak = std::max(peak, fs[k]);
  }
  if (peak == 0.0) return {dos_floor, 0.0};
  int last = -1;
  for (int k = 0; k < n; ++k) {
    if (fs[k] >= kTruncation * peak) last = k;
  }
  if (last == n - 1) {
    throw ConvergenceError(std::string(op) + ": occupation has not decayed below 1e-12 of its peak by 1e6 * gap");
  }
  return {dos_floor, xs[last + 1]};
}

// After substitution the integrands are finite at the gap, so the sliver
// between the gap and the DoS floor is restored with one trapezoid panel.
// This keeps results independent of the floor.
double floor_sliver(const std::function<double(double)>& f, double t_floor) {
  return t_floor > 0.0 ? 0.5 * (f(0.0) + f(t_floor)) * t_floor : 0.0;
}

QuadratureResult integrate_above_floor(const std::function<double(double)>& f, double t_floor,
                                       double t_end, const QuadratureOptions& opts, const char* op) {
  t_floor = std::min(t_floor, t_end);
  QuadratureResult q;
  if (t_floor < t_end) {
    q = integrate_adaptive(f, t_floor, t_end, opts.target_rel_tol, opts.required_rel_err, op);
  }
  q.value += floor_sliver(f, t_floor);
  q.rel_err = q.value != 0.0 ? q.abs_err / std::abs(q.value) : 0.0;
  return q;
}

QuadratureResult integrate_occupation(const std::function<double(double)>& weighted, double gap,
                                      const OccupationWindow& w, const QuadratureOptions& opts,
                                      const char* op) {
  QuadratureResult total;
  if (w.x_cut <= w.x_floor) return total;
  // Split at decades of (eps' - gap)/gap so narrow near-gap occupations are resolved.
  std::vector<double> edges{w.x_floor};
  for (double d = std::pow(10.0, std::ceil(std::log10(w.x_floor))); d < w.x_cut; d *= 10.0) {
    if (d > edges.back()) edges.push_back(d);
  }
  edges.push_back(w.x_cut);
  auto in_u = [&](double u) {
    const double e = gap + u * u;
    return weighted(e);
  };
  total.value += floor_sliver(in_u, std::sqrt(gap * w.x_floor));
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const auto seg = integrate_adaptive(in_u, std::sqrt(gap * edges[i]),
                                        std::sqrt(gap * edges[i + 1]), opts.target_rel_tol,
                                        std::numeric_limits<double>::infinity(), op);
    total.value += seg.value;
    total.abs_err += seg.abs_err;
  }
  if (total.value != 0.0) total.rel_err = total.abs_err / std::abs(total.value);
  if (total.rel_err > opts.required_rel_err) {
    std::ostringstream os;
    os << op << ": quadrature error estimate " << total.rel_err << " above "
       << opts.required_rel_err;
    throw QuadratureError(os.str());
  }
  return total;
}

}  // namespace

std::string_view to_string(RateMethod m) {
  switch (m) {
    case RateMethod::integral: return "integral";
    case RateMethod::fit: return "fit";
    case RateMethod::power: return "power";
    case RateMethod::tabulated: return "tabulated";
  }
  return "?";
}

RateResult qp_scatter_rate_integral(double eps_K, const MaterialParams& mat,
                                    const QuadratureOptions& opts) {
  constexpr const char* kOp = "qp_scatter_rate_integral";
  require_superconductor(mat, kOp);
  const double gap = mat.gap_K;
  if (!(eps_K > gap)) throw_domain(kOp, "requires eps > gap", eps_K, gap);

  // eps' = gap + a t^2 absorbs the 1/sqrt singularity of rho at the gap:
  // rho(e') (1 - gap^2/(eps e')) de' = 2 sqrt(a) (eps e' - gap^2) / (eps sqrt(e' + gap)) dt
  const double a = eps_K - gap;
  const double t_min = std::min(1.0, std::sqrt(gap * opts.dos_floor / a));
  auto integrand = [&](double t) {
    const double e = gap + a * t * t;
    const double emitted = a * (1.0 - t * t);
    return emitted * emitted * 2.0 * std::sqrt(a) * (eps_K * e - gap * gap) /
           (eps_K * std::sqrt(e + gap));
  };
  const auto q = integrate_above_floor(integrand, t_min, 1.0, opts, kOp);
  const double tc3 = mat.tc_K * mat.tc_K * mat.tc_K;
  return {q.value / (mat.tau0_ns * tc3), RateMethod::integral, q.rel_err};
}

RateResult qp_scatter_rate_fit(double eps_K, const MaterialParams& mat) {
  constexpr const char* kOp = "qp_scatter_rate_fit";
  require_superconductor(mat, kOp);
  const double gap = mat.gap_K;
  if (eps_K < gap) throw_domain(kOp, "requires eps >= gap", eps_K, gap);
  const double x = eps_K - gap;
  return {1.8 * x * x * x / (mat.tau0_ns * gap * gap * gap), RateMethod::fit, 0.0};
}

RateResult qp_recomb_rate(double n_ratio, const MaterialParams& mat) {
  if (!(n_ratio >= 0.0 && n_ratio <= 1.0)) {
    std::ostringstream os;
    os << "qp_recomb_rate: density ratio must lie in [0, 1] (got " << n_ratio << ")";
    throw DomainError(os.str());
  }
  return {tabulated::kRecombNumerator / mat.tau0_ns * n_ratio, RateMethod::fit, 0.0};
}

RateResult qp_recomb_rate_integral(double eps_K, const std::function<double(double)>& occupation,
                                   const MaterialParams& mat, const QuadratureOptions& opts) {
  constexpr const char* kOp = "qp_recomb_rate_integral";
  require_superconductor(mat, kOp);
  const double gap = mat.gap_K;
  if (!(eps_K > gap)) throw_domain(kOp, "requires eps > gap", eps_K, gap);
  const auto window = occupation_window(occupation, gap, opts.dos_floor, kOp);
  // rho(e')(1 + gap^2/(eps e')) de' with e' = gap + u^2 -> 2 (eps e' + gap^2) / (eps sqrt(e' + gap)) du
  auto weighted = [&](double e) {
    const double s = eps_K + e;
    return s * s * occupation(e) * 2.0 * (eps_K * e + gap * gap) / (eps_K * std::sqrt(e + gap));
  };
  const auto q = integrate_occupation(weighted, gap, window, opts, kOp);
  const double tc3 = mat.tc_K * mat.tc_K * mat.tc_K;
  return {q.value / (mat.tau0_ns * tc3), RateMethod::integral, q.rel_err};
}

double qp_density_ratio_from_occupation(const std::function<double(double)>& occupation,
                                        const MaterialParams& mat,
                                        const QuadratureOptions& opts) {
  constexpr const char* kOp = "qp_density_ratio_from_occupation";
  require_superconductor(mat, kOp);
  const double gap = mat.gap_K;
  const auto window = occupation_window(occupation, gap, opts.dos_floor, kOp);
  auto weighted = [&](double e) { return occupation(e) * 2.0 * e / std::sqrt(e + gap); };
  return 2.0 / gap * integrate_occupation(weighted, gap, window, opts, kOp).value;
}

RateResult phonon_pairbreak_rate_integral(double ep_K, const MaterialParams& mat,
                                          const QuadratureOptions& opts) {
  constexpr const char* kOp = "phonon_pairbreak_rate_integral";
  require_superconductor(mat, kOp);
  const double gap = mat.gap_K;
  if (ep_K <= 2.0 * gap) return {0.0, RateMethod::integral, 0.0};

  // eps = gap + b sin^2(pi t / 2) regularizes both endpoints at once:
  // rho(eps) rho(E-eps) (1 + gap^2/(eps (E-eps))) d eps
  //   = pi (eps eps2 + gap^2) / sqrt((eps + gap)(eps2 + gap)) dt.
  // The integrand is symmetric about t = 1/2.
  const double b = ep_K - 2.0 * gap;
  const double s_floor = std::min(1.0, std::sqrt(gap * opts.dos_floor / b));
  const double t_min = 2.0 / kPi * std::asin(s_floor);
  auto integrand = [&](double t) {
    const double s = std::sin(0.5 * kPi * t);
    const double c = std::cos(0.5 * kPi * t);
    const double e1 = gap + b * s * s;
    const double e2 = gap + b * c * c;
    return kPi * (e1 * e2 + gap * gap) / std::sqrt((e1 + gap) * (e2 + gap));
  };
  const auto q = integrate_above_floor(integrand, t_min, 0.5, opts, kOp);
  return {2.0 * q.value / (kPi * mat.tau0ph_ns * gap), RateMethod::integral, q.rel_err};
}

RateResult phonon_pairbreak_rate_fit(double ep_K, const MaterialParams& mat,
                                     bool linear_asymptote) {
  constexpr const char* kOp = "phonon_pairbreak_rate_fit";
  require_superconductor(mat, kOp);
  const double gap = mat.gap_K;
  if (!(ep_K > 2.0 * gap)) throw_domain(kOp, "requires E_p > 2 gap", ep_K, gap);
  const double scale = 1.0 / (kPi * mat.tau0ph_ns * gap);
  if (linear_asymptote) return {scale * 1.4 * ep_K, RateMethod::fit, 0.0};
  return {scale * (ep_K + 3.8 * gap / std::pow(ep_K / gap + 2.3, 0.8)), RateMethod::fit, 0.0};
}

namespace {

template <class Fit, class Integral>
double max_residual(double lo, double hi, int points, Fit fit, Integral integral) {
  if (points < 2 || !(hi > lo)) throw DomainError("fit residual scan: need hi > lo and >= 2 points");
  double worst = 0.0;
  for (int i = 0; i < points; ++i) {
    const double r = lo + (hi - lo) * i / (points - 1);
    const double exact = integral(r);
    worst = std::max(worst, std::abs(fit(r) - exact) / exact);
  }
  return worst;
}

}  // namespace

double max_pairbreak_fit_residual(const MaterialParams& mat, double lo_over_gap, double hi_over_gap,
                                  int points) {
  const double gap = mat.gap_K;
  return max_residual(
      lo_over_gap, hi_over_gap, points,
      [&](double r) { return phonon_pairbreak_rate_fit(r * gap, mat).rate_per_ns; },
      [&](double r) { return phonon_pairbreak_rate_integral(r * gap, mat).rate_per_ns; });
}

double max_qp_scatter_fit_residual(const MaterialParams& mat, double lo_over_gap,
                                   double hi_over_gap, int points) {
  const double gap = mat.gap_K;
  return max_residual(
      lo_over_gap, hi_over_gap, points,
      [&](double r) { return qp_scatter_rate_fit(r * gap, mat).rate_per_ns; },
      [&](double r) { return qp_scatter_rate_integral(r * gap, mat).rate_per_ns; });
}

double power_ep(double te_K, double tp_K, const MaterialParams& mat, double volume_um3) {
  if (te_K < 0.0 || tp_K < 0.0) throw DomainError("power_ep: temperatures must be >= 0");
  return mat.sigma_ep_nW_per_um3K5 * volume_um3 * (std::pow(te_K, 5) - std::pow(tp_K, 5));
}

PowerRates power_rates(double t_K, const MaterialParams& mat) {
  if (!(t_K > 0.0)) throw DomainError("power_rates: temperature must be positive");
  // nW/um^3 over 1e-9 nJ/um^3 is 1/s * 1e9, i.e. exactly 1/ns.
  const double p = power_ep(t_K, 0.0, mat, 1.0);
  const double u_p = mat.c_p_coeff * std::pow(t_K, 4) / 4.0;
  const double u_e = mat.c_e_coeff * t_K * t_K / 2.0;
  return {p / u_p, p / u_e};
}

PowerRates tabulated_rates(double energy_K, const MaterialParams& mat) {
  if (!(energy_K > 0.0)) throw DomainError("tabulated_rates: energy must be positive");
  const double e3 = energy_K * energy_K * energy_K;
  if (mat.is_superconductor()) {
    const double x = std::max(0.0, energy_K - mat.gap_K);
    return {energy_K / tabulated::kPairBreakNsK, x * x * x / tabulated::kQpScatterNsK3};
  }
  if (mat.name == "n-Al") {
    return {energy_K / tabulated::kNAlPhononNsK, e3 / tabulated::kNAlElectronNsK3};
  }
  if (mat.name == "Cu") {
    return {energy_K / tabulated::kCuPhononNsK, e3 / tabulated::kCuElectronNsK3};
  }
  throw DomainError("tabulated_rates: no tabulated rates for '" + mat.name + "'");
}

LengthEntry scattering_lengths(double energy_K, const MaterialParams& mat,
                               double film_thickness_um, RateSource source) {
  if (!(energy_K > 0.0) || !(film_thickness_um > 0.0)) {
    throw DomainError("scattering_lengths: energy and thickness must be positive");
  }
  PowerRates r;
  if (source == RateSource::tabulated) {
    r = tabulated_rates(energy_K, mat);
  } else if (mat.is_superconductor()) {
    r.electron_per_ns = energy_K > mat.gap_K ? qp_scatter_rate_fit(energy_K, mat).rate_per_ns : 0.0;
    r.phonon_per_ns =
        energy_K > 2.0 * mat.gap_K ? phonon_pairbreak_rate_fit(energy_K, mat).rate_per_ns : 0.0;
  } else {
    r = power_rates(energy_K, mat);
  }
  constexpr double kInf = std::numeric_limits<double>::infinity();
  LengthEntry out;
  out.energy_K = energy_K;
  out.electron_rate_per_ns = r.electron_per_ns;
  out.phonon_rate_per_ns = r.phonon_per_ns;
  const double v_e_um_per_ns = mat.v_e_mm_per_ns * units::kUmPerMm;
  out.electron_diffusion_um = r.electron_per_ns > 0.0
                                  ? std::sqrt(v_e_um_per_ns * film_thickness_um / r.electron_per_ns)
                                  : kInf;
  out.phonon_length_um = r.phonon_per_ns > 0.0 ? mat.v_p_um_per_ns / r.phonon_per_ns : kInf;
  return out;
}

std::vector<LengthEntry> scattering_length_table(const MaterialParams& mat,
                                                 double film_thickness_um, RateSource source,
                                                 std::vector<double> energies_K) {
  std::vector<LengthEntry> out;
  out.reserve(energies_K.size());
  for (double e : energies_K) out.push_back(scattering_lengths(e, mat, film_thickness_um, source));
  return out;
}

}  // namespace qpc
