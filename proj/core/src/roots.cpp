#include "bezout/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "bezout/error.hpp"

namespace bezout {
namespace {

// Parlett-Reinsch diagonal balancing with radix-2 scale factors.
void balance(Eigen::MatrixXcd& m) {
  const Eigen::Index n = m.rows();
  constexpr double radix = 2.0;
  bool converged = false;
  for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
    converged = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double c = 0.0;
      double r = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(m(j, i));
        r += std::abs(m(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      const double s = c + r;
      double f = 1.0;
      double g = r / radix;
      while (c < g) {
        f *= radix;
        c *= radix * radix;
      }
      g = r * radix;
      while (c >= g) {
        f /= radix;
        c /= radix * radix;
      }
      if ((c + r) / f < 0.95 * s) {
        converged = false;
        m.row(i) /= f;
        m.col(i) *= f;
      }
    }
  }
}

void polish(const Polynomial& p, const Polynomial& dp, Complex& root, int steps) {
  double best = std::abs(p(root));
  for (int s = 0; s < steps && best > 0.0; ++s) {
    const Complex d = dp(root);
    if (d == Complex{0.0}) break;
    const Complex candidate = root - p(root) / d;
    const double value = std::abs(p(candidate));
    if (!(value < best)) break;
    root = candidate;
    best = value;
  }
}

// Union-find labels over roots that are too close to be told apart.
std::vector<int> cluster_labels(const Polynomial& p, const std::vector<Complex>& roots, double bound,
                                const RootOptions& options) {
  const std::size_t n = roots.size();
  const Polynomial dp = derivative(p);
  std::vector<double> step(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex d = dp(roots[i]);
    step[i] = d == Complex{0.0} ? std::numeric_limits<double>::infinity() : std::abs(p(roots[i]) / d);
  }
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  const double radius = options.cluster_tolerance * (1.0 + bound);
  const double newton_factor = 10.0 * static_cast<double>(p.degree());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = std::abs(roots[i] - roots[j]);
      if (d < radius || d < newton_factor * std::max(step[i], step[j]))
        parent[static_cast<std::size_t>(find(static_cast<int>(i)))] = find(static_cast<int>(j));
    }
  }
  std::vector<int> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = find(static_cast<int>(i));
  return labels;
}

}  // namespace

bool RootSet::all_simple() const noexcept {
  return std::none_of(multiplicity_suspect.begin(), multiplicity_suspect.end(), [](bool b) { return b; });
}

double cauchy_bound(const Polynomial& p) { return 1.0 + coeff_norm(p) / std::abs(p.leading()); }

RootSet find_roots(const Polynomial& p, const RootOptions& options) {
  const int n = p.degree();
  if (n < 1) throw Error(ErrorKind::DegreeZero, "constant polynomial has no roots");

  RootSet out;
  out.cauchy_bound = cauchy_bound(p);
  const Complex lead = p.leading();

  if (n == 1) {
    out.roots = {-p.coeff(0) / lead};
  } else {
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -p.coeff(i) / lead;
    balance(companion);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success) throw Error(ErrorKind::NonConvergence, "companion eigenvalue iteration failed");
    out.roots.assign(solver.eigenvalues().begin(), solver.eigenvalues().end());
    const Polynomial dp = derivative(p);
    for (auto& r : out.roots) polish(p, dp, r, options.newton_steps);
  }

  // Deterministic order: by real part, then imaginary part.
  std::sort(out.roots.begin(), out.roots.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });

  const double norm = coeff_norm(p);
  out.verified = true;
  out.residuals.reserve(out.roots.size());
  for (Complex r : out.roots) {
    const double res = std::abs(p(r));
    out.residuals.push_back(res);
    const double allowed = options.residual_tolerance * norm * std::pow(1.0 + std::abs(r), n);
    if (!(res <= allowed)) out.verified = false;
  }

  const auto labels = cluster_labels(p, out.roots, out.cauchy_bound, options);
  out.multiplicity_suspect.assign(out.roots.size(), false);
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = 0; j < labels.size(); ++j)
      if (i != j && labels[i] == labels[j]) out.multiplicity_suspect[i] = true;
  return out;
}

namespace {

Polynomial jittered(const Polynomial& p, const RootSet& rs, double h, const RootOptions& options) {
  const auto labels = cluster_labels(p, rs.roots, rs.cauchy_bound, options);
  std::vector<Complex> moved = rs.roots;
  std::vector<bool> done(moved.size(), false);
  for (std::size_t i = 0; i < moved.size(); ++i) {
    if (done[i]) continue;
    std::vector<std::size_t> members;
    for (std::size_t j = 0; j < moved.size(); ++j)
      if (labels[j] == labels[i]) members.push_back(j);
    for (auto j : members) done[j] = true;
    if (members.size() < 2) continue;
    Complex centroid = 0.0;
    for (auto j : members) centroid += rs.roots[j];
    centroid /= static_cast<double>(members.size());
    const double m = static_cast<double>(members.size());
    for (std::size_t k = 0; k < members.size(); ++k) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / m + 0.5;
      moved[members[k]] = centroid + std::polar(h, angle);
    }
  }
  const Polynomial sharp = Polynomial::from_roots(moved, p.leading());
  return scale(sharp, coeff_norm(p) / coeff_norm(sharp));
}

}  // namespace

std::pair<Polynomial, Polynomial> perturb_to_simple(const Polynomial& A, const Polynomial& B, double epsilon,
                                                    const RootOptions& options) {
  if (A.degree() < 1 || B.degree() < 1) throw Error(ErrorKind::DegreeZero, "perturb_to_simple needs nonconstant inputs");
  if (!(epsilon > 0.0)) throw Error(ErrorKind::InvalidArgument, "epsilon must be positive");
  const RootSet ra = find_roots(A, options);
  const RootSet rb = find_roots(B, options);
  if (ra.all_simple() && rb.all_simple()) return {A, B};

  std::pair<Polynomial, Polynomial> best{A, B};
  for (double h = epsilon / 2.0; h > 1e-300; h /= 2.0) {
    Polynomial a2 = ra.all_simple() ? A : jittered(A, ra, h, options);
    Polynomial b2 = rb.all_simple() ? B : jittered(B, rb, h, options);
    const double moved = coeff_distance(a2, A) + coeff_distance(b2, B);
    if (moved <= epsilon) {
      best = {std::move(a2), std::move(b2)};
      break;
    }
  }
  return best;
}

}  // namespace bezout
