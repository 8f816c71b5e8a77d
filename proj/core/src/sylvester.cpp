#include "bezout/sylvester.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bezout/error.hpp"

namespace bezout {
namespace {

struct Factored {
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu;
  double rcond = 0.0;
};

Factored factor(const SylvesterMatrix& M) {
  Factored f{Eigen::PartialPivLU<Eigen::MatrixXcd>(M.entries), 0.0};
  const auto& lu = f.lu.matrixLU();
  for (Eigen::Index i = 0; i < lu.rows(); ++i)
    if (lu(i, i) == Complex{0.0}) throw Error(ErrorKind::SingularSystem, "zero pivot in the Sylvester LU");
  f.rcond = f.lu.rcond();
  if (!(f.rcond >= 1e-15)) {
    std::ostringstream msg;
    msg << "Sylvester matrix is numerically singular (rcond " << f.rcond << "); A and B share a root";
    throw Error(ErrorKind::SingularSystem, msg.str());
  }
  return f;
}

Eigen::VectorXcd rhs_vector(const Polynomial& P, int n) {
  if (P.degree() > n - 1) {
    std::ostringstream msg;
    msg << "right-hand side degree " << P.degree() << " exceeds N+K-1 = " << n - 1;
    throw Error(ErrorKind::InvalidArgument, msg.str());
  }
  Eigen::VectorXcd p = Eigen::VectorXcd::Zero(n);
  for (int t = 0; t <= P.degree(); ++t) p(t) = P.coeff(t);
  return p;
}

BezoutSolution unpack(const SylvesterMatrix& M, const Eigen::VectorXcd& x, const Polynomial& P) {
  std::vector<Complex> r(static_cast<std::size_t>(M.K));
  std::vector<Complex> s(static_cast<std::size_t>(M.N));
  for (int k = 0; k < M.K; ++k) r[static_cast<std::size_t>(k)] = x(k);
  for (int k = 0; k < M.N; ++k) s[static_cast<std::size_t>(k)] = x(M.K + k);
  BezoutSolution sol;
  sol.R = Polynomial(std::move(r));
  sol.S = Polynomial(std::move(s));
  sol.residual = bezout_residual(M.A, M.B, sol.R, sol.S, P);
  sol.backend = "sylvester";
  return sol;
}

Eigen::VectorXcd solve_refined(const SylvesterMatrix& M, const Factored& f, const Eigen::VectorXcd& p,
                               double refine_tolerance) {
  Eigen::VectorXcd x = f.lu.solve(p);
  const Eigen::VectorXcd r = p - M.entries * x;
  const double scale = std::max(p.cwiseAbs().maxCoeff(), 1e-300);
  if (r.cwiseAbs().maxCoeff() > refine_tolerance * scale) x += f.lu.solve(r);
  return x;
}

}  // namespace

double bezout_residual(const Polynomial& A, const Polynomial& B, const Polynomial& R, const Polynomial& S,
                       const Polynomial& P) {
  return coeff_distance(A * R + B * S, P);
}

SylvesterMatrix build_sylvester(const Polynomial& A, const Polynomial& B) {
  const int N = A.degree();
  const int K = B.degree();
  if (N < 1 || K < 1) throw Error(ErrorKind::ConstantPolynomial, "Sylvester matrix needs nonconstant A and B");
  SylvesterMatrix M;
  M.N = N;
  M.K = K;
  M.A = A;
  M.B = B;
  M.entries = Eigen::MatrixXcd::Zero(N + K, N + K);
  for (int c = 0; c < K; ++c)
    for (int k = 0; k <= N; ++k) M.entries(c + k, c) = A.coeff(k);
  for (int c = 0; c < N; ++c)
    for (int k = 0; k <= K; ++k) M.entries(c + k, K + c) = B.coeff(k);
  return M;
}

Eigen::VectorXcd pack_solution(const Polynomial& R, const Polynomial& S, int N, int K) {
  Eigen::VectorXcd x(N + K);
  for (int k = 0; k < K; ++k) x(k) = R.coeff(k);
  for (int k = 0; k < N; ++k) x(K + k) = S.coeff(k);
  return x;
}

BezoutSolution solve_rhs(const SylvesterMatrix& M, const Polynomial& P, double refine_tolerance) {
  const Factored f = factor(M);
  const Eigen::VectorXcd p = rhs_vector(P, M.N + M.K);
  return unpack(M, solve_refined(M, f, p, refine_tolerance), P);
}

ResultantReport resultant(const Polynomial& A, const Polynomial& B, const RootSet& rootsA, const RootSet& rootsB) {
  const SylvesterMatrix M = build_sylvester(A, B);
  ResultantReport rep;
  rep.determinant = Eigen::PartialPivLU<Eigen::MatrixXcd>(M.entries).determinant();
  rep.abs_determinant = std::abs(rep.determinant);
  const int N = M.N;
  const int K = M.K;
  // Products in log form to keep large degrees from overflowing.
  double logB = N * std::log(std::abs(B.leading()));
  for (Complex b : rootsB.roots) logB += std::log(std::abs(A(b)));
  double logA = K * std::log(std::abs(A.leading()));
  for (Complex a : rootsA.roots) logA += std::log(std::abs(B(a)));
  rep.via_roots_of_B = std::exp(logB);
  rep.via_roots_of_A = std::exp(logA);
  const double vals[] = {rep.abs_determinant, rep.via_roots_of_B, rep.via_roots_of_A};
  const double hi = *std::max_element(std::begin(vals), std::end(vals));
  const double lo = *std::min_element(std::begin(vals), std::end(vals));
  rep.max_relative_spread = hi > 0.0 ? (hi - lo) / hi : 0.0;
  rep.agree = rep.max_relative_spread <= 1e-6;
  return rep;
}

double default_C3(int N, int K) {
  const int m = std::max(N, K);
  const int e = N + K + m - 1;
  return m * std::pow(static_cast<double>(m), m) * std::pow(3.0, N + K) * std::pow(10.0 / 3.0, e);
}

InverseNormReport inverse_norm_report(const Polynomial& A, const Polynomial& B, double delta, double C3) {
  if (!(delta > 0.0)) throw Error(ErrorKind::InvalidArgument, "inverse-norm report needs delta > 0");
  const MonomialFamily fam = solve_monomial_all(A, B);
  const int N = A.degree();
  const int K = B.degree();
  InverseNormReport rep;
  rep.max_entry = fam.inverse.cwiseAbs().maxCoeff();
  rep.two_norm = Eigen::JacobiSVD<Eigen::MatrixXcd>(fam.inverse).singularValues()(0);
  rep.inf_norm = fam.inverse.cwiseAbs().rowwise().sum().maxCoeff();
  rep.delta = delta;
  rep.M = std::max(coeff_norm(A) / std::abs(A.leading()), coeff_norm(B) / std::abs(B.leading()));
  rep.exponent = N + K + std::max(N, K) - 1;
  if (C3 > 0.0) {
    rep.C3 = C3;
    rep.C3_source = "user supplied";
  } else {
    rep.C3 = default_C3(N, K);
    rep.C3_source = "default m*m^m*3^(N+K)*(10/3)^e, m = max(N,K); engineering choice, not a sharp constant";
  }
  const double Me = std::pow(rep.M, rep.exponent);
  rep.bound = rep.C3 * Me / (delta * delta);
  rep.ratio = rep.max_entry * delta * delta / Me;
  rep.norm_cap = std::max(coeff_norm(A), coeff_norm(B));
  rep.unnormalized_bound = rep.bound * rep.norm_cap;
  rep.unnormalized_ratio = rep.ratio / rep.norm_cap;
  rep.within_bound = rep.max_entry <= (rep.norm_cap > 1.0 ? rep.unnormalized_bound : rep.bound);
  return rep;
}

MonomialFamily solve_monomial_all(const Polynomial& A, const Polynomial& B) {
  const SylvesterMatrix M = build_sylvester(A, B);
  const Factored f = factor(M);
  const int n = M.N + M.K;
  MonomialFamily fam;
  fam.inverse = f.lu.inverse();
  fam.solutions.reserve(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l) {
    const Polynomial P = Polynomial::monomial(l);
    fam.solutions.push_back(unpack(M, fam.inverse.col(l), P));
  }
  return fam;
}

}  // namespace bezout
