#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace bezout {

using Complex = std::complex<double>;

/**
 * Dense univariate polynomial with complex coefficients.
 *
 * coeffs()[k] is the coefficient of z^k. The degree is the index of the last
 * coefficient that is exactly nonzero; trailing zeros may be stored but never
 * count towards the degree. Small-but-nonzero leading coefficients are kept
 * as given until normalized() is called explicitly.
 *
 * The zero polynomial has degree 0 and coefficients {0}.
 */
class Polynomial {
 public:
  Polynomial();
  explicit Polynomial(std::vector<Complex> coeffs);
  Polynomial(std::initializer_list<Complex> coeffs);

  /// c * z^k
  static Polynomial monomial(int k, Complex c = 1.0);
  /// leading * prod (z - r)
  static Polynomial from_roots(std::span<const Complex> roots, Complex leading = 1.0);

  int degree() const noexcept { return degree_; }
  bool is_zero() const noexcept;
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  /// Coefficient of z^k; zero beyond the stored range.
  Complex coeff(int k) const noexcept;
  Complex leading() const noexcept { return coeffs_[static_cast<std::size_t>(degree_)]; }

  /// Horner evaluation.
  Complex operator()(Complex z) const noexcept;

  /// Trailing coefficients with modulus below rel_tol * coeff_norm are dropped.
  Polynomial normalized(double rel_tol = 1e-14) const;
  /// Coefficient vector of length degree()+1.
  std::vector<Complex> dense() const;

  /// Equal as polynomials: trailing zero coefficients are ignored.
  friend bool operator==(const Polynomial& p, const Polynomial& q) noexcept {
    if (p.degree_ != q.degree_) return false;
    for (int k = 0; k <= p.degree_; ++k)
      if (p.coeffs_[static_cast<std::size_t>(k)] != q.coeffs_[static_cast<std::size_t>(k)]) return false;
    return true;
  }

 private:
  void recompute_degree();

  std::vector<Complex> coeffs_;
  int degree_ = 0;
};

Complex eval(const Polynomial& p, Complex z) noexcept;

/// max_k |a_k| over the coefficients up to the degree.
double coeff_norm(const Polynomial& p) noexcept;

/// z^target_degree * p(1/z); throws InvalidArgument if target_degree < degree(p).
Polynomial reverse(const Polynomial& p, int target_degree);

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial sub(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial scale(const Polynomial& p, Complex c);
/// p(z + z0), by exact binomial convolution.
Polynomial translate(const Polynomial& p, Complex z0);
Polynomial derivative(const Polynomial& p);

/// Max-modulus coefficient distance, padding the shorter operand with zeros.
double coeff_distance(const Polynomial& p, const Polynomial& q) noexcept;

/// Synthetic division by (z - root): returns the quotient, remainder in *remainder.
Polynomial deflate(const Polynomial& p, Complex root, Complex* remainder = nullptr);

inline Polynomial operator+(const Polynomial& p, const Polynomial& q) { return add(p, q); }
inline Polynomial operator-(const Polynomial& p, const Polynomial& q) { return sub(p, q); }
inline Polynomial operator*(const Polynomial& p, const Polynomial& q) { return mul(p, q); }
inline Polynomial operator*(Complex c, const Polynomial& p) { return scale(p, c); }

}  // namespace bezout
