#include "bezout/separation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "bezout/error.hpp"

namespace bezout {
namespace {

double pow3(int k) { return std::pow(3.0, k); }

struct Simplex {
  std::array<Complex, 3> v;
  std::array<double, 3> f;
};

// Nelder-Mead on the plane; the objective is nonsmooth at zeros of A and B.
template <class F>
void nelder_mead(const F& objective, Simplex& s, int iterations) {
  for (int it = 0; it < iterations; ++it) {
    std::array<int, 3> order{0, 1, 2};
    std::sort(order.begin(), order.end(), [&](int a, int b) { return s.f[a] < s.f[b]; });
    const int best = order[0];
    const int mid = order[1];
    const int worst = order[2];
    const Complex centroid = 0.5 * (s.v[best] + s.v[mid]);
    const Complex reflected = centroid + (centroid - s.v[worst]);
    const double fr = objective(reflected);
    if (fr < s.f[best]) {
      const Complex expanded = centroid + 2.0 * (centroid - s.v[worst]);
      const double fe = objective(expanded);
      if (fe < fr) {
        s.v[worst] = expanded;
        s.f[worst] = fe;
      } else {
        s.v[worst] = reflected;
        s.f[worst] = fr;
      }
    } else if (fr < s.f[mid]) {
      s.v[worst] = reflected;
      s.f[worst] = fr;
    } else {
      const bool outside = fr < s.f[worst];
      const Complex contracted = outside ? centroid + 0.5 * (reflected - centroid)
                                         : centroid + 0.5 * (s.v[worst] - centroid);
      const double fc = objective(contracted);
      if (fc < std::min(fr, s.f[worst])) {
        s.v[worst] = contracted;
        s.f[worst] = fc;
      } else {
        for (int k : {mid, worst}) {
          s.v[k] = s.v[best] + 0.5 * (s.v[k] - s.v[best]);
          s.f[k] = objective(s.v[k]);
        }
      }
    }
  }
}

template <class F>
std::pair<Complex, double> local_minimize(const F& objective, Complex start, double step,
                                          const SeparationOptions& options) {
  Complex best = start;
  double fbest = objective(start);
  for (int restart = 0; restart <= options.max_restarts; ++restart) {
    Simplex s;
    s.v = {best, best + Complex(step, 0.0), best + Complex(0.0, step)};
    for (int k = 0; k < 3; ++k) s.f[k] = objective(s.v[k]);
    nelder_mead(objective, s, options.local_iterations);
    const auto k = static_cast<std::size_t>(std::min_element(s.f.begin(), s.f.end()) - s.f.begin());
    const double improvement = fbest - s.f[k];
    double diameter = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) diameter = std::max(diameter, std::abs(s.v[i] - s.v[j]));
    if (s.f[k] < fbest) {
      best = s.v[k];
      fbest = s.f[k];
    }
    if (improvement <= options.restart_tolerance && diameter < 1e-9 * (1.0 + std::abs(best))) break;
    step = std::max(2.0 * diameter, 1e-12 * (1.0 + std::abs(best)));
  }
  return {best, fbest};
}

// Van der Corput radical inverse.
double radical_inverse(std::int64_t i, int base) {
  double inv = 1.0 / base;
  double f = inv;
  double r = 0.0;
  while (i > 0) {
    r += f * static_cast<double>(i % base);
    i /= base;
    f *= inv;
  }
  return r;
}

}  // namespace

DeltaValue delta_value(const Polynomial& A, const Polynomial& B, const RootSet& rootsA, const RootSet& rootsB) {
  DeltaValue out;
  out.value = std::numeric_limits<double>::infinity();
  for (Complex a : rootsA.roots) {
    const double v = std::abs(B(a));
    if (v < out.value) out = {v, a, true};
  }
  for (Complex b : rootsB.roots) {
    const double v = std::abs(A(b));
    if (v < out.value) out = {v, b, false};
  }
  return out;
}

double delta(const Polynomial& A, const Polynomial& B, const RootSet& rootsA, const RootSet& rootsB,
             const SeparationOptions& options) {
  if (A.degree() < 1 || B.degree() < 1) throw Error(ErrorKind::DegreeZero, "delta needs nonconstant polynomials");
  const DeltaValue d = delta_value(A, B, rootsA, rootsB);
  const double zero = options.common_root_threshold * std::max(coeff_norm(A), coeff_norm(B));
  if (!(d.value > zero)) {
    std::ostringstream msg;
    msg << "delta = " << d.value << " at " << d.witness << " is below the zero threshold " << zero;
    throw Error(ErrorKind::CommonRoot, msg.str());
  }
  return d.value;
}

DeltaTildeBracket delta_tilde(const Polynomial& A, const Polynomial& B, const RootSet& rootsA, const RootSet& rootsB,
                              double delta_val, const SeparationOptions& options) {
  const auto objective = [&](Complex z) { return std::abs(A(z)) + std::abs(B(z)); };

  std::vector<Complex> seeds;
  seeds.insert(seeds.end(), rootsA.roots.begin(), rootsA.roots.end());
  seeds.insert(seeds.end(), rootsB.roots.begin(), rootsB.roots.end());
  for (const Polynomial* p : {&A, &B}) {
    const Polynomial dp = derivative(*p);
    if (dp.degree() >= 1) {
      const RootSet rd = find_roots(dp);
      seeds.insert(seeds.end(), rd.roots.begin(), rd.roots.end());
    }
  }
  const double radius = std::max(rootsA.cauchy_bound, rootsB.cauchy_bound);
  const int g = options.grid_per_axis;
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) {
      const Complex z(radius * (2.0 * (i + 0.5) / g - 1.0), radius * (2.0 * (j + 0.5) / g - 1.0));
      if (std::abs(z) <= radius) seeds.push_back(z);
    }
  }

  DeltaTildeBracket out;
  out.upper = std::numeric_limits<double>::infinity();
  const double step = 0.05 * radius;
  for (Complex seed : seeds) {
    const auto [z, f] = local_minimize(objective, seed, step, options);
    if (f < out.upper) {
      out.upper = f;
      out.witness = z;
    }
  }
  const int m = std::max(A.degree(), B.degree());
  out.lower = std::max(delta_val / pow3(m), 0.0);
  return out;
}

DeltaTildeBracket delta_tilde(const Polynomial& A, const Polynomial& B, const SeparationOptions& options) {
  if (A.degree() < 1 || B.degree() < 1) throw Error(ErrorKind::DegreeZero, "delta_tilde needs nonconstant polynomials");
  const RootSet ra = find_roots(A);
  const RootSet rb = find_roots(B);
  return delta_tilde(A, B, ra, rb, delta_value(A, B, ra, rb).value, options);
}

DeltaReport analyze_separation(const Polynomial& A, const Polynomial& B, const RootSet& rootsA,
                               const RootSet& rootsB, const SeparationOptions& options) {
  DeltaReport r;
  const DeltaValue d = delta_value(A, B, rootsA, rootsB);
  r.delta = delta(A, B, rootsA, rootsB, options);
  r.argmin_witness = d.witness;
  const DeltaTildeBracket t = delta_tilde(A, B, rootsA, rootsB, r.delta, options);
  r.delta_tilde_lower = t.lower;
  r.delta_tilde_upper = t.upper;
  r.delta_tilde_witness = t.witness;
  const double tol = options.sandwich_tolerance;
  r.sandwich_ok = t.lower - tol <= t.upper && t.upper <= r.delta + tol;
  return r;
}

DeltaReport analyze_separation(const Polynomial& A, const Polynomial& B, const SeparationOptions& options) {
  if (A.degree() < 1 || B.degree() < 1) throw Error(ErrorKind::DegreeZero, "delta needs nonconstant polynomials");
  return analyze_separation(A, B, find_roots(A), find_roots(B), options);
}

bool sublevel_member(const Polynomial& p, double eps, Complex z) {
  if (!(eps > 0.0)) throw Error(ErrorKind::InvalidArgument, "sub-level threshold must be positive");
  return std::abs(p(z)) < eps;
}

SeparationReport check_separation(const Polynomial& A, const Polynomial& B, const RootSet& rootsA,
                                  const RootSet& rootsB, double delta_val, std::int64_t n_samples) {
  if (!(delta_val > 0.0)) throw Error(ErrorKind::InvalidArgument, "separation check needs delta > 0");
  SeparationReport rep;
  rep.level_A = delta_val / pow3(A.degree());
  rep.level_B = delta_val / pow3(B.degree());

  const auto probe = [&](Complex z) {
    const bool in_a = std::abs(A(z)) < rep.level_A;
    const bool in_b = std::abs(B(z)) < rep.level_B;
    ++rep.samples;
    rep.hits_A += in_a;
    rep.hits_B += in_b;
    if (in_a && in_b) {
      ++rep.joint_hits;
      std::ostringstream msg;
      msg << "point " << z << " lies in both sub-level sets (|A| = " << std::abs(A(z)) << " < " << rep.level_A
          << ", |B| = " << std::abs(B(z)) << " < " << rep.level_B << ")";
      throw Error(ErrorKind::SeparationViolation, msg.str());
    }
  };

  const double radius = std::max(rootsA.cauchy_bound, rootsB.cauchy_bound);
  const std::int64_t disk_samples = n_samples - n_samples / 2;
  for (std::int64_t i = 1; i <= disk_samples; ++i) {
    const double r = radius * std::sqrt(radical_inverse(i, 2));
    const double t = 2.0 * std::numbers::pi * radical_inverse(i, 3);
    probe(std::polar(r, t));
  }

  std::vector<Complex> centers = rootsA.roots;
  centers.insert(centers.end(), rootsB.roots.begin(), rootsB.roots.end());
  const std::int64_t ring_budget = n_samples - disk_samples;
  constexpr int rings = 16;
  const std::int64_t per_root = ring_budget / static_cast<std::int64_t>(centers.size());
  const std::int64_t per_ring = std::max<std::int64_t>(1, per_root / rings);
  std::int64_t ring_used = 0;
  for (std::size_t c = 0; c < centers.size(); ++c) {
    for (int k = 0; k < rings && ring_used < ring_budget; ++k) {
      // Radii from 1e-10 * radius up to radius, geometrically spaced.
      const double rr = radius * std::pow(10.0, -10.0 + 10.0 * k / (rings - 1));
      for (std::int64_t a = 0; a < per_ring && ring_used < ring_budget; ++a, ++ring_used) {
        const double t = 2.0 * std::numbers::pi * (static_cast<double>(a) + 0.5 * static_cast<double>(c % 2)) /
                         static_cast<double>(per_ring);
        probe(centers[c] + std::polar(rr, t));
      }
    }
  }
  // Whatever the even split left over goes to the disk sequence.
  for (std::int64_t i = disk_samples + 1; ring_used < ring_budget; ++i, ++ring_used) {
    const double r = radius * std::sqrt(radical_inverse(i, 2));
    const double t = 2.0 * std::numbers::pi * radical_inverse(i, 3);
    probe(std::polar(r, t));
  }
  return rep;
}

}  // namespace bezout
