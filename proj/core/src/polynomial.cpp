#include "bezout/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "bezout/error.hpp"

namespace bezout {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DegreeZero: return "DegreeZero";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::CommonRoot: return "CommonRoot";
    case ErrorKind::SeparationViolation: return "SeparationViolation";
    case ErrorKind::DegenerateArrangement: return "DegenerateArrangement";
    case ErrorKind::OriginInRegion: return "OriginInRegion";
    case ErrorKind::OriginTooClose: return "OriginTooClose";
    case ErrorKind::OnContour: return "OnContour";
    case ErrorKind::NestedLoops: return "NestedLoops";
    case ErrorKind::OpenLoop: return "OpenLoop";
    case ErrorKind::ConstantPolynomial: return "ConstantPolynomial";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::MultipleRoots: return "MultipleRoots";
    case ErrorKind::IllConditionedInterpolation: return "IllConditionedInterpolation";
    case ErrorKind::BadContour: return "BadContour";
    case ErrorKind::QuadratureNotConverged: return "QuadratureNotConverged";
    case ErrorKind::ZeroRoot: return "ZeroRoot";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

Polynomial::Polynomial() : coeffs_{Complex{0.0}} {}

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
  recompute_degree();
}

Polynomial::Polynomial(std::initializer_list<Complex> coeffs)
    : Polynomial(std::vector<Complex>(coeffs)) {}

void Polynomial::recompute_degree() {
  degree_ = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k] != Complex{0.0}) {
      degree_ = static_cast<int>(k);
      return;
    }
  }
}

Polynomial Polynomial::monomial(int k, Complex c) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "monomial power must be nonnegative");
  std::vector<Complex> v(static_cast<std::size_t>(k) + 1, 0.0);
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_roots(std::span<const Complex> roots, Complex leading) {
  std::vector<Complex> c{leading};
  c.reserve(roots.size() + 1);
  for (Complex r : roots) {
    c.push_back(0.0);
    for (std::size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - r * c[k];
    c[0] = -r * c[0];
  }
  return Polynomial(std::move(c));
}

bool Polynomial::is_zero() const noexcept { return degree_ == 0 && coeffs_[0] == Complex{0.0}; }

Complex Polynomial::coeff(int k) const noexcept {
  if (k < 0 || k > degree_) return 0.0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Complex Polynomial::operator()(Complex z) const noexcept {
  Complex acc = coeffs_[static_cast<std::size_t>(degree_)];
  for (int k = degree_ - 1; k >= 0; --k) acc = acc * z + coeffs_[static_cast<std::size_t>(k)];
  return acc;
}

Polynomial Polynomial::normalized(double rel_tol) const {
  const double cutoff = rel_tol * coeff_norm(*this);
  int d = degree_;
  while (d > 0 && std::abs(coeffs_[static_cast<std::size_t>(d)]) < cutoff) --d;
  return Polynomial(std::vector<Complex>(coeffs_.begin(), coeffs_.begin() + d + 1));
}

std::vector<Complex> Polynomial::dense() const {
  return {coeffs_.begin(), coeffs_.begin() + degree_ + 1};
}

Complex eval(const Polynomial& p, Complex z) noexcept { return p(z); }

double coeff_norm(const Polynomial& p) noexcept {
  double m = 0.0;
  for (int k = 0; k <= p.degree(); ++k) m = std::max(m, std::abs(p.coeff(k)));
  return m;
}

Polynomial reverse(const Polynomial& p, int target_degree) {
  if (target_degree < p.degree())
    throw Error(ErrorKind::InvalidArgument, "reverse: target degree below polynomial degree");
  std::vector<Complex> c(static_cast<std::size_t>(target_degree) + 1, 0.0);
  for (int k = 0; k <= p.degree(); ++k) c[static_cast<std::size_t>(target_degree - k)] = p.coeff(k);
  return Polynomial(std::move(c));
}

Polynomial add(const Polynomial& p, const Polynomial& q) {
  std::vector<Complex> c(static_cast<std::size_t>(std::max(p.degree(), q.degree())) + 1, 0.0);
  for (int k = 0; k <= p.degree(); ++k) c[static_cast<std::size_t>(k)] += p.coeff(k);
  for (int k = 0; k <= q.degree(); ++k) c[static_cast<std::size_t>(k)] += q.coeff(k);
  return Polynomial(std::move(c));
}

Polynomial sub(const Polynomial& p, const Polynomial& q) { return add(p, scale(q, -1.0)); }

Polynomial mul(const Polynomial& p, const Polynomial& q) {
  std::vector<Complex> c(static_cast<std::size_t>(p.degree() + q.degree()) + 1, 0.0);
  for (int i = 0; i <= p.degree(); ++i)
    for (int j = 0; j <= q.degree(); ++j) c[static_cast<std::size_t>(i + j)] += p.coeff(i) * q.coeff(j);
  return Polynomial(std::move(c));
}

Polynomial scale(const Polynomial& p, Complex c) {
  std::vector<Complex> v = p.dense();
  for (auto& x : v) x *= c;
  return Polynomial(std::move(v));
}

Polynomial translate(const Polynomial& p, Complex z0) {
  // Coefficient j of p(z + z0) is sum_{k>=j} a_k C(k, j) z0^(k-j).
  // Accumulated in long double: the round trip amplifies rounding by about (1+|z0|)^(2n).
  using Wide = std::complex<long double>;
  const int n = p.degree();
  std::vector<Wide> acc(static_cast<std::size_t>(n) + 1, Wide(0.0L));
  std::vector<long double> binom(static_cast<std::size_t>(n) + 1, 0.0L);
  const Wide w0(z0.real(), z0.imag());
  for (int k = 0; k <= n; ++k) {
    // Row k of Pascal's triangle, built in place.
    binom[static_cast<std::size_t>(k)] = 1.0L;
    for (int j = k - 1; j > 0; --j) binom[static_cast<std::size_t>(j)] += binom[static_cast<std::size_t>(j - 1)];
    const Wide ak(p.coeff(k).real(), p.coeff(k).imag());
    Wide power(1.0L);
    for (int j = k; j >= 0; --j) {
      acc[static_cast<std::size_t>(j)] += ak * binom[static_cast<std::size_t>(j)] * power;
      power *= w0;
    }
  }
  std::vector<Complex> out(acc.size());
  for (std::size_t j = 0; j < acc.size(); ++j)
    out[j] = Complex(static_cast<double>(acc[j].real()), static_cast<double>(acc[j].imag()));
  return Polynomial(std::move(out));
}

Polynomial derivative(const Polynomial& p) {
  if (p.degree() == 0) return Polynomial();
  std::vector<Complex> c(static_cast<std::size_t>(p.degree()));
  for (int k = 1; k <= p.degree(); ++k) c[static_cast<std::size_t>(k - 1)] = static_cast<double>(k) * p.coeff(k);
  return Polynomial(std::move(c));
}

double coeff_distance(const Polynomial& p, const Polynomial& q) noexcept {
  double m = 0.0;
  for (int k = 0; k <= std::max(p.degree(), q.degree()); ++k) m = std::max(m, std::abs(p.coeff(k) - q.coeff(k)));
  return m;
}

Polynomial deflate(const Polynomial& p, Complex root, Complex* remainder) {
  const int n = p.degree();
  if (n == 0) {
    if (remainder) *remainder = p.coeff(0);
    return Polynomial();
  }
  std::vector<Complex> q(static_cast<std::size_t>(n));
  Complex acc = p.coeff(n);
  for (int k = n - 1; k >= 0; --k) {
    q[static_cast<std::size_t>(k)] = acc;
    acc = p.coeff(k) + root * acc;
  }
  if (remainder) *remainder = acc;
  return Polynomial(std::move(q));
}

}  // namespace bezout
