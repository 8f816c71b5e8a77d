#include "bezout/backends.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "bezout/error.hpp"
#include "bezout/separation.hpp"
#include "bezout/sylvester.hpp"

namespace bezout {
namespace {

void require_simple(const RootSet& rs, const char* which) {
  if (!rs.all_simple())
    throw Error(ErrorKind::MultipleRoots, std::string("roots of ") + which +
                                              " are clustered; use the Sylvester backend or perturb_to_simple");
}

void require_rhs_degree(const Polynomial& P, int N, int K) {
  if (P.degree() > N + K - 1) {
    std::ostringstream msg;
    msg << "right-hand side degree " << P.degree() << " exceeds N+K-1 = " << N + K - 1;
    throw Error(ErrorKind::InvalidArgument, msg.str());
  }
}

// Degree <= n-1 polynomial through (nodes[i], values[i]) in the Lagrange form
// sum_i values[i] w_i prod_{k != i} (z - nodes[k]).
Polynomial interpolate(const std::vector<Complex>& nodes, const std::vector<Complex>& values) {
  const std::size_t n = nodes.size();
  std::vector<Complex> acc(n, 0.0);
  std::vector<Complex> others;
  others.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex denom = 1.0;
    others.clear();
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i) continue;
      denom *= nodes[i] - nodes[k];
      others.push_back(nodes[k]);
    }
    const Complex w = 1.0 / denom;
    const Complex coef = values[i] * w;
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag()) || !std::isfinite(coef.real()) ||
        !std::isfinite(coef.imag()))
      throw Error(ErrorKind::IllConditionedInterpolation, "barycentric weights overflow");
    const Polynomial basis = Polynomial::from_roots(others);
    for (std::size_t k = 0; k < n; ++k) acc[k] += coef * basis.coeff(static_cast<int>(k));
  }
  return Polynomial(std::move(acc));
}

void check_windings(const ContourSystem& c, const std::vector<Complex>& inside, const std::vector<Complex>& outside,
                    const char* name) {
  try {
    for (Complex z : inside)
      if (winding_number(c, z) != 1)
        throw Error(ErrorKind::BadContour, std::string(name) + " does not wind once around an enclosed root");
    for (Complex z : outside)
      if (winding_number(c, z) != 0)
        throw Error(ErrorKind::BadContour, std::string(name) + " winds around an excluded root");
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::BadContour) throw;
    throw Error(ErrorKind::BadContour, std::string(name) + ": " + e.what());
  }
}

// (1/2 pi i) * integral of P zeta^m / (A B) for m = 0..count-1, each arc cut
// into pieces of sweep <= pi/2 with an order-point rule per piece.
std::vector<Complex> moments(const ContourSystem& c, const Polynomial& A, const Polynomial& B, const Polynomial& P,
                             int count, int order) {
  const GaussLegendre& gl = gauss_legendre(order);
  std::vector<Complex> mu(static_cast<std::size_t>(count), 0.0);
  for (const Arc& a : c.arcs) {
    const int pieces = std::max(1, static_cast<int>(std::ceil(std::abs(a.sweep()) / (0.5 * std::numbers::pi) - 1e-12)));
    const double width = a.sweep() / pieces;
    for (int p = 0; p < pieces; ++p) {
      const double lo = a.start_angle + p * width;
      for (std::size_t k = 0; k < gl.nodes.size(); ++k) {
        const double t = lo + 0.5 * width * (gl.nodes[k] + 1.0);
        const Complex e = std::polar(a.circle.radius, t);
        const Complex zeta = a.circle.center + e;
        Complex term = gl.weights[k] * 0.5 * width * Complex(0.0, 1.0) * e * P(zeta) / (A(zeta) * B(zeta));
        for (int m = 0; m < count; ++m) {
          mu[static_cast<std::size_t>(m)] += term;
          term *= zeta;
        }
      }
    }
  }
  for (auto& v : mu) v /= Complex(0.0, 2.0 * std::numbers::pi);
  return mu;
}

// Coefficients of sum_k g_k (zeta^k - z^k)/(zeta - z) integrated against the moments.
Polynomial assemble(const Polynomial& G, const std::vector<Complex>& mu) {
  const int n = G.degree();
  std::vector<Complex> out(static_cast<std::size_t>(n), 0.0);
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k <= n; ++k) out[static_cast<std::size_t>(j)] += G.coeff(k) * mu[static_cast<std::size_t>(k - j - 1)];
  return Polynomial(std::move(out));
}

double change(const Polynomial& p, const Polynomial& q) {
  const double size = std::max({1.0, coeff_norm(p), coeff_norm(q)});
  return coeff_distance(p, q) / size;
}

}  // namespace

DifferenceQuotientKernel::DifferenceQuotientKernel(Polynomial base) : base_(std::move(base)) {}

Polynomial DifferenceQuotientKernel::in_z(Complex zeta) const {
  const int n = base_.degree();
  if (n == 0) return Polynomial();
  std::vector<Complex> c(static_cast<std::size_t>(n));
  c[static_cast<std::size_t>(n - 1)] = base_.coeff(n);
  for (int j = n - 1; j >= 1; --j) c[static_cast<std::size_t>(j - 1)] = base_.coeff(j) + zeta * c[static_cast<std::size_t>(j)];
  return Polynomial(std::move(c));
}

Complex DifferenceQuotientKernel::operator()(Complex zeta, Complex z) const { return in_z(zeta)(z); }

BezoutSolution solve_residue(const Polynomial& A, const Polynomial& B, const RootSet& rootsA,
                             const RootSet& rootsB, const Polynomial& P) {
  const int N = A.degree();
  const int K = B.degree();
  if (N < 1 || K < 1) throw Error(ErrorKind::ConstantPolynomial, "residue backend needs nonconstant A and B");
  require_rhs_degree(P, N, K);
  require_simple(rootsA, "A");
  require_simple(rootsB, "B");
  delta(A, B, rootsA, rootsB);  // CommonRoot guard

  std::vector<Complex> vs;
  for (Complex a : rootsA.roots) vs.push_back(P(a) / B(a));
  std::vector<Complex> vr;
  for (Complex b : rootsB.roots) vr.push_back(P(b) / A(b));

  BezoutSolution sol;
  sol.S = interpolate(rootsA.roots, vs);
  sol.R = interpolate(rootsB.roots, vr);
  sol.residual = bezout_residual(A, B, sol.R, sol.S, P);
  sol.backend = "residue";
  return sol;
}

Polynomial residue_sum_S(const Polynomial& A, const Polynomial& B, const RootSet& rootsA, const Polynomial& P) {
  const int N = A.degree();
  const Polynomial dA = derivative(A);
  std::vector<Complex> s(static_cast<std::size_t>(N), 0.0);
  for (Complex alpha : rootsA.roots) {
    const Complex w = P(alpha) / (dA(alpha) * B(alpha));
    for (int j = 0; j < N; ++j) {
      Complex sum = 0.0;
      for (int k = j + 1; k <= N; ++k) sum += A.coeff(k) * std::pow(alpha, k - j - 1);
      s[static_cast<std::size_t>(j)] += w * sum;
    }
  }
  return Polynomial(std::move(s));
}

ContourPair default_contours(const RootSet& rootsA, const RootSet& rootsB) {
  // Hole loops come out clockwise; the winding checks at every pole decide admissibility.
  return {build_region(make_region_spec(RegionKind::EA, rootsA, rootsB, false, true)),
          build_region(make_region_spec(RegionKind::EB, rootsA, rootsB, false, true))};
}

BezoutSolution solve_quadrature(const Polynomial& A, const Polynomial& B, const RootSet& rootsA,
                                const RootSet& rootsB, const ContourPair& contours, const Polynomial& P,
                                const QuadratureRule& rule) {
  const int N = A.degree();
  const int K = B.degree();
  if (N < 1 || K < 1) throw Error(ErrorKind::ConstantPolynomial, "quadrature backend needs nonconstant A and B");
  require_rhs_degree(P, N, K);
  check_windings(contours.gamma1, rootsA.roots, rootsB.roots, "gamma1");
  check_windings(contours.gamma2, rootsB.roots, rootsA.roots, "gamma2");

  const auto evaluate = [&](int order) {
    BezoutSolution s;
    s.S = assemble(A, moments(contours.gamma1, A, B, P, N, order));
    s.R = assemble(B, moments(contours.gamma2, A, B, P, K, order));
    return s;
  };

  int order = rule.order;
  BezoutSolution prev = evaluate(order);
  for (;;) {
    const int next_order = order * 2;
    if (next_order > rule.max_order) {
      std::ostringstream msg;
      msg << "coefficients still moving at order " << order;
      throw Error(ErrorKind::QuadratureNotConverged, msg.str());
    }
    BezoutSolution next = evaluate(next_order);
    const double moved = std::max(change(prev.R, next.R), change(prev.S, next.S));
    order = next_order;
    prev = std::move(next);
    if (moved <= rule.tolerance) break;
  }
  prev.residual = bezout_residual(A, B, prev.R, prev.S, P);
  prev.backend = "quadrature";
  return prev;
}

std::string to_string(InnerBackend b) {
  switch (b) {
    case InnerBackend::Sylvester: return "sylvester";
    case InnerBackend::Residue: return "residue";
    case InnerBackend::Quadrature: return "quadrature";
  }
  return "?";
}

BezoutSolution solve_reversed(const Polynomial& A, const Polynomial& B, InnerBackend inner,
                              std::optional<Complex> shift) {
  const int N = A.degree();
  const int K = B.degree();
  if (N < 1 || K < 1) throw Error(ErrorKind::ConstantPolynomial, "reversal needs nonconstant A and B");
  const Complex z0 = shift.value_or(0.0);
  const Polynomial At = shift ? translate(A, z0) : A;
  const Polynomial Bt = shift ? translate(B, z0) : B;
  if (At.coeff(0) == Complex{0.0} || Bt.coeff(0) == Complex{0.0})
    throw Error(ErrorKind::ZeroRoot, shift ? "a root sits at the shift point" : "A(0) or B(0) vanishes; supply a shift");

  const Polynomial Ar = reverse(At, N);
  const Polynomial Br = reverse(Bt, K);
  const Polynomial P = Polynomial::monomial(N + K - 1);
  BezoutSolution rs;
  switch (inner) {
    case InnerBackend::Sylvester: rs = solve_rhs(build_sylvester(Ar, Br), P); break;
    case InnerBackend::Residue: rs = solve_residue(Ar, Br, find_roots(Ar), find_roots(Br), P); break;
    case InnerBackend::Quadrature: {
      const RootSet ra = find_roots(Ar);
      const RootSet rb = find_roots(Br);
      rs = solve_quadrature(Ar, Br, ra, rb, default_contours(ra, rb), P);
      break;
    }
  }
  BezoutSolution sol;
  sol.R = reverse(rs.R, K - 1);
  sol.S = reverse(rs.S, N - 1);
  if (shift) {
    sol.R = translate(sol.R, -z0);
    sol.S = translate(sol.S, -z0);
  }
  sol.residual = bezout_residual(A, B, sol.R, sol.S, Polynomial{1.0});
  sol.backend = "reversed/" + to_string(inner);
  return sol;
}

MainPipelineReport solve_main_pipeline(const Polynomial& A, const Polynomial& B, const QuadratureRule& rule) {
  const int N = A.degree();
  const int K = B.degree();
  if (N < 1 || K < 1) throw Error(ErrorKind::ConstantPolynomial, "main pipeline needs nonconstant A and B");
  MainPipelineReport rep;
  rep.shift = choose_origin_shift(find_roots(A), find_roots(B));
  const Complex z0 = rep.shift.z0;
  const Polynomial At = translate(A, z0);
  const Polynomial Bt = translate(B, z0);
  const RootSet ra = find_roots(At);
  const RootSet rb = find_roots(Bt);
  require_simple(ra, "A");
  require_simple(rb, "B");
  const double d = delta(At, Bt, ra, rb);

  const ContourSystem g1 = build_region(make_region_spec(RegionKind::Gamma1, ra, rb, false, true));
  const ContourSystem g2 = build_region(make_region_spec(RegionKind::Gamma2, ra, rb, false, true));
  rep.gamma1_metrics = contour_metrics(g1, At, Bt, d, rep.shift.epsilon);
  rep.inverted = {invert_contour(g1), invert_contour(g2)};

  const Polynomial Ar = reverse(At, N);
  const Polynomial Br = reverse(Bt, K);
  const BezoutSolution rs = solve_quadrature(Ar, Br, find_roots(Ar), find_roots(Br), rep.inverted,
                                             Polynomial::monomial(N + K - 1), rule);
  rep.solution.R = translate(reverse(rs.R, K - 1), -z0);
  rep.solution.S = translate(reverse(rs.S, N - 1), -z0);
  rep.solution.residual = bezout_residual(A, B, rep.solution.R, rep.solution.S, Polynomial{1.0});
  rep.solution.backend = "main-pipeline";
  return rep;
}

}  // namespace bezout
