#pragma once

#include <optional>
#include <string>

#include "bezout/polynomial.hpp"

namespace bezout {

/// Outcome of checking ||R||, ||S|| against delta^-2 (normalized and crude forms).
struct MainBoundCertificate {
  double delta = 0.0;
  double norm_R = 0.0;
  double norm_S = 0.0;
  double norm_cap = 1.0;  // max(1, ||A||, ||B||)
  double ratio_R = 0.0;   // ||R|| delta^2 / norm_cap
  double ratio_S = 0.0;
  double crude_ratio_R = 0.0;  // ||R|| delta^min(N,K)
  double crude_ratio_S = 0.0;
  std::optional<double> ceiling;  // empirical table value; absent beyond the table
  std::string ceiling_source;
  bool passed = false;
};

/// Minimal solution pair of A R + B S = P.
struct BezoutSolution {
  Polynomial R;
  Polynomial S;
  double residual = 0.0;  // ||A R + B S - P||
  std::string backend;
  std::optional<MainBoundCertificate> bound_report;
};

/// ||A R + B S - P|| in the coefficient max norm.
double bezout_residual(const Polynomial& A, const Polynomial& B, const Polynomial& R, const Polynomial& S,
                       const Polynomial& P);

}  // namespace bezout
