#include "bezout/regions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "bezout/error.hpp"
#include "bezout/quadrature.hpp"

namespace bezout {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_positive(double angle) {
  double a = std::fmod(angle, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  return a;
}

double spec_scale(const RegionSpec& spec) {
  double m = 0.0;
  for (Complex a : spec.alphas) m = std::max(m, std::abs(a));
  for (Complex b : spec.betas) m = std::max(m, std::abs(b));
  return 1.0 + m;
}

bool in_E(const std::vector<Complex>& own, const std::vector<Complex>& other, Complex z) {
  for (Complex b : other) {
    bool covered = false;
    for (Complex a : own) {
      if (std::abs(z - a) < std::abs(b - a) / 3.0) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

bool in_D(const std::vector<Complex>& own, Complex z) {
  for (Complex a : own)
    if (std::abs(z - a) < 0.75 * std::abs(a)) return true;
  return false;
}

bool base_membership(const RegionSpec& spec, Complex z) {
  switch (spec.kind) {
    case RegionKind::EA: return in_E(spec.alphas, spec.betas, z);
    case RegionKind::EB: return in_E(spec.betas, spec.alphas, z);
    case RegionKind::DA: return in_D(spec.alphas, z);
    case RegionKind::DB: return in_D(spec.betas, z);
    case RegionKind::Gamma1: return in_D(spec.alphas, z) && in_E(spec.alphas, spec.betas, z);
    case RegionKind::Gamma2: return in_D(spec.betas, z) && in_E(spec.betas, spec.alphas, z);
  }
  return false;
}

void append_E_circles(const std::vector<Complex>& own, const std::vector<Complex>& other, std::vector<Disk>& out) {
  for (Complex a : own)
    for (Complex b : other) out.push_back({a, std::abs(b - a) / 3.0});
}

void append_D_circles(const std::vector<Complex>& own, std::vector<Disk>& out) {
  for (Complex a : own) {
    if (a == Complex{0.0}) throw Error(ErrorKind::ZeroRoot, "D-disk around a root at the origin is empty");
    out.push_back({a, 0.75 * std::abs(a)});
  }
}

// Angle of a point on the circle, chosen in [0, 2 pi).
double angle_on(const Disk& d, Complex z) { return wrap_positive(std::arg(z - d.center)); }

// Angular position of `angle` measured from the arc start in the arc's direction.
bool angle_within(const Arc& arc, double angle) {
  if (arc.ccw) return wrap_positive(angle - arc.start_angle) <= arc.sweep();
  return wrap_positive(arc.start_angle - angle) <= -arc.sweep();
}

double arc_distance(const Arc& arc, Complex z) {
  const Complex rel = z - arc.circle.center;
  const double ang = std::arg(rel);
  if (std::abs(arc.sweep()) >= kTwoPi - 1e-15 || angle_within(arc, ang))
    return std::abs(std::abs(rel) - arc.circle.radius);
  return std::min(std::abs(z - arc.start()), std::abs(z - arc.end()));
}

// Change of arg(zeta - z) along the arc, evaluated on a branch that stays continuous.
double arc_winding_angle(const Arc& arc, Complex z) {
  const Complex w = (z - arc.circle.center) / arc.circle.radius;
  const double t0 = arc.start_angle;
  const double t1 = arc.end_angle;
  if (std::abs(w) <= 1.0) {
    // zeta - z = r e^{it} (1 - w e^{-it}); the second factor has positive real part.
    return (t1 - t0) + std::arg(1.0 - w * std::polar(1.0, -t1)) - std::arg(1.0 - w * std::polar(1.0, -t0));
  }
  // zeta - z = -r w (1 - e^{it} / w); again a factor with positive real part.
  return std::arg(1.0 - std::polar(1.0, t1) / w) - std::arg(1.0 - std::polar(1.0, t0) / w);
}

void finalize_lengths(ContourSystem& c) {
  c.total_length = 0.0;
  for (const auto& a : c.arcs) c.total_length += a.length();
}

void certify(ContourSystem& c, const std::vector<Complex>& inside, const std::vector<Complex>& outside) {
  c.orientation_certificate.clear();
  for (Complex p : inside) c.orientation_certificate.push_back({p, winding_number(c, p)});
  for (Complex p : outside) c.orientation_certificate.push_back({p, winding_number(c, p)});
  for (std::size_t i = 0; i < c.orientation_certificate.size(); ++i) {
    const int expected = i < inside.size() ? 1 : 0;
    if (c.orientation_certificate[i].winding != expected) {
      std::ostringstream msg;
      msg << "winding " << c.orientation_certificate[i].winding << " at " << c.orientation_certificate[i].point
          << ", expected " << expected;
      throw Error(ErrorKind::BadContour, msg.str());
    }
  }
}

}  // namespace

ContourSystem ContourSystem::circle(const Disk& d, bool ccw) {
  if (!(d.radius > 0.0)) throw Error(ErrorKind::InvalidArgument, "circle radius must be positive");
  ContourSystem c;
  c.arcs.push_back(ccw ? Arc{d, 0.0, kTwoPi, true} : Arc{d, kTwoPi, 0.0, false});
  c.loop_of_arc = {0};
  c.loop_count = 1;
  c.scale = 1.0 + std::abs(d.center) + d.radius;
  finalize_lengths(c);
  return c;
}

std::vector<Arc> ContourSystem::loop(int index) const {
  std::vector<Arc> out;
  for (std::size_t i = 0; i < arcs.size(); ++i)
    if (loop_of_arc[i] == index) out.push_back(arcs[i]);
  return out;
}

std::string to_string(RegionKind kind) {
  switch (kind) {
    case RegionKind::EA: return "EA";
    case RegionKind::EB: return "EB";
    case RegionKind::DA: return "DA";
    case RegionKind::DB: return "DB";
    case RegionKind::Gamma1: return "gamma1";
    case RegionKind::Gamma2: return "gamma2";
  }
  return "?";
}

RegionKind region_kind_from_string(const std::string& name) {
  for (RegionKind k : {RegionKind::EA, RegionKind::EB, RegionKind::DA, RegionKind::DB, RegionKind::Gamma1,
                       RegionKind::Gamma2})
    if (to_string(k) == name) return k;
  throw Error(ErrorKind::InvalidArgument, "unknown region kind '" + name + "' (EA, EB, DA, DB, gamma1, gamma2)");
}

std::vector<Disk> RegionSpec::circles() const {
  std::vector<Disk> raw;
  switch (kind) {
    case RegionKind::EA: append_E_circles(alphas, betas, raw); break;
    case RegionKind::EB: append_E_circles(betas, alphas, raw); break;
    case RegionKind::DA: append_D_circles(alphas, raw); break;
    case RegionKind::DB: append_D_circles(betas, raw); break;
    case RegionKind::Gamma1:
      append_E_circles(alphas, betas, raw);
      append_D_circles(alphas, raw);
      break;
    case RegionKind::Gamma2:
      append_E_circles(betas, alphas, raw);
      append_D_circles(betas, raw);
      break;
  }
  const double tol = 1e-12 * spec_scale(*this);
  std::vector<Disk> out;
  for (const Disk& d : raw) {
    const bool dup = std::any_of(out.begin(), out.end(), [&](const Disk& e) {
      return std::abs(e.center - d.center) <= tol && std::abs(e.radius - d.radius) <= tol;
    });
    if (!dup) out.push_back(d);
  }
  return out;
}

std::pair<std::vector<Complex>, std::vector<Complex>> RegionSpec::probes() const {
  std::vector<Complex> in;
  std::vector<Complex> out;
  switch (kind) {
    case RegionKind::EA:
    case RegionKind::Gamma1:
      in = alphas;
      out = betas;
      break;
    case RegionKind::EB:
    case RegionKind::Gamma2:
      in = betas;
      out = alphas;
      break;
    case RegionKind::DA:
      in = alphas;
      out = {Complex{0.0}};
      break;
    case RegionKind::DB:
      in = betas;
      out = {Complex{0.0}};
      break;
  }
  return {in, out};
}

RegionSpec make_region_spec(RegionKind kind, const RootSet& rootsA, const RootSet& rootsB, bool inverted,
                            bool allow_holes) {
  return {kind, rootsA.roots, rootsB.roots, inverted, allow_holes};
}

bool membership(const RegionSpec& spec, Complex z) {
  if (!spec.inverted) return base_membership(spec, z);
  if (z == Complex{0.0}) return false;
  return base_membership(spec, 1.0 / z);
}

ContourSystem build_region(const RegionSpec& spec) {
  if (spec.inverted) {
    RegionSpec base = spec;
    base.inverted = false;
    const ContourSystem c = build_region(base);
    if (distance_to_contour(c, 0.0) > 1e-9 * c.scale && winding_number(c, 0.0) != 0)
      throw Error(ErrorKind::OriginInRegion, "origin is enclosed; the inverted region would be unbounded");
    return invert_contour(c);
  }
  if (spec.alphas.empty() || spec.betas.empty())
    throw Error(ErrorKind::InvalidArgument, "region construction needs roots of both polynomials");

  const double scale = spec_scale(spec);
  const std::vector<Disk> circles = spec.circles();
  const std::size_t n = circles.size();

  // Split angles per circle.
  std::vector<std::vector<double>> cuts(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Disk& c1 = circles[i];
      const Disk& c2 = circles[j];
      const Complex dv = c2.center - c1.center;
      const double d = std::abs(dv);
      if (d == 0.0) continue;
      if (d > c1.radius + c2.radius || d < std::abs(c1.radius - c2.radius)) {
        // Disjoint or nested; reject only near-tangency.
        const double gap = std::min(std::abs(d - c1.radius - c2.radius), std::abs(d - std::abs(c1.radius - c2.radius)));
        if (gap <= 1e-12 * scale)
          throw Error(ErrorKind::DegenerateArrangement, "two circles of the arrangement are tangent");
        continue;
      }
      const double a = (d * d + c1.radius * c1.radius - c2.radius * c2.radius) / (2.0 * d);
      const double h2 = c1.radius * c1.radius - a * a;
      if (h2 / (c1.radius * c1.radius) < 1e-12 || h2 / (c2.radius * c2.radius) < 1e-12)
        throw Error(ErrorKind::DegenerateArrangement, "two circles of the arrangement are (nearly) tangent");
      const double h = std::sqrt(h2);
      const Complex base = c1.center + a * dv / d;
      const Complex perp = Complex(-dv.imag(), dv.real()) / d;
      for (Complex p : {base + h * perp, base - h * perp}) {
        cuts[i].push_back(angle_on(c1, p));
        cuts[j].push_back(angle_on(c2, p));
      }
    }
  }

  const auto nearest_other = [&](std::size_t self, Complex z) {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k)
      if (k != self) m = std::min(m, std::abs(std::abs(z - circles[k].center) - circles[k].radius));
    return m;
  };

  std::vector<Arc> kept;
  for (std::size_t i = 0; i < n; ++i) {
    const Disk& c = circles[i];
    auto& t = cuts[i];
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end(), [](double x, double y) { return y - x < 1e-13; }), t.end());
    if (t.size() >= 2 && (t.front() + kTwoPi) - t.back() < 1e-13) t.pop_back();
    std::vector<std::pair<double, double>> pieces;
    if (t.empty()) {
      pieces.emplace_back(0.0, kTwoPi);
    } else {
      for (std::size_t k = 0; k + 1 < t.size(); ++k) pieces.emplace_back(t[k], t[k + 1]);
      pieces.emplace_back(t.back(), t.front() + kTwoPi);
    }
    for (auto [s, e] : pieces) {
      const double mid = 0.5 * (s + e);
      const Complex on = c.center + std::polar(c.radius, mid);
      const double h = std::min({1e-7 * scale, 0.25 * nearest_other(i, on), 0.5 * c.radius});
      const Complex dir = std::polar(1.0, mid);
      const bool inside = base_membership(spec, on - h * dir);
      const bool outside = base_membership(spec, on + h * dir);
      if (inside && !outside) kept.push_back({c, s, e, true});
    }
  }
  if (kept.empty()) throw Error(ErrorKind::BadContour, "region has an empty boundary");

  // Chain arcs head to tail into loops.
  ContourSystem out;
  out.scale = scale;
  std::vector<bool> used(kept.size(), false);
  const double close_tol = 1e-9 * scale;
  for (std::size_t first = 0; first < kept.size(); ++first) {
    if (used[first]) continue;
    const int loop = out.loop_count++;
    std::size_t current = first;
    used[current] = true;
    out.arcs.push_back(kept[current]);
    out.loop_of_arc.push_back(loop);
    for (;;) {
      const Complex tail = kept[current].end();
      double best = std::abs(tail - kept[first].start());
      std::size_t next = first;
      for (std::size_t k = 0; k < kept.size(); ++k) {
        if (used[k]) continue;
        const double gap = std::abs(tail - kept[k].start());
        if (gap < best) {
          best = gap;
          next = k;
        }
      }
      if (best > close_tol) {
        std::ostringstream msg;
        msg << "loop " << loop << " does not close (gap " << best << ")";
        throw Error(ErrorKind::OpenLoop, msg.str());
      }
      if (next == first) break;
      used[next] = true;
      current = next;
      out.arcs.push_back(kept[current]);
      out.loop_of_arc.push_back(loop);
    }
  }
  finalize_lengths(out);

  for (int l = 0; l < out.loop_count; ++l) {
    const auto arcs = out.loop(l);
    if (signed_area(arcs) <= 0.0 && !spec.allow_holes)
      throw Error(ErrorKind::NestedLoops, "region boundary has a loop enclosing a hole");
  }

  const auto [inside, outside] = spec.probes();
  certify(out, inside, outside);
  return out;
}

double winding_value(const ContourSystem& contour, Complex z) {
  double total = 0.0;
  for (const Arc& a : contour.arcs) total += arc_winding_angle(a, z);
  return total / kTwoPi;
}

double distance_to_contour(const ContourSystem& contour, Complex z) {
  double m = std::numeric_limits<double>::infinity();
  for (const Arc& a : contour.arcs) m = std::min(m, arc_distance(a, z));
  return m;
}

int winding_number(const ContourSystem& contour, Complex z) {
  if (distance_to_contour(contour, z) <= 1e-9 * contour.scale) {
    std::ostringstream msg;
    msg << "point " << z << " lies on the contour";
    throw Error(ErrorKind::OnContour, msg.str());
  }
  const double v = winding_value(contour, z);
  const double r = std::round(v);
  if (std::abs(v - r) > 1e-6) {
    std::ostringstream msg;
    msg << "winding value " << v << " is not an integer; the contour is not closed";
    throw Error(ErrorKind::BadContour, msg.str());
  }
  return static_cast<int>(r);
}

double signed_area(std::span<const Arc> loop) {
  double twice = 0.0;
  for (const Arc& a : loop) {
    const double r = a.circle.radius;
    const double cx = a.circle.center.real();
    const double cy = a.circle.center.imag();
    const double t0 = a.start_angle;
    const double t1 = a.end_angle;
    twice += r * cx * (std::sin(t1) - std::sin(t0)) - r * cy * (std::cos(t1) - std::cos(t0)) + r * r * (t1 - t0);
  }
  return 0.5 * twice;
}

Complex contour_integral(const ContourSystem& contour, const std::function<Complex(Complex)>& f, int order,
                         int pieces_per_quarter) {
  const GaussLegendre& gl = gauss_legendre(order);
  Complex sum = 0.0;
  for (const Arc& a : contour.arcs) {
    const int pieces =
        std::max(1, static_cast<int>(std::ceil(std::abs(a.sweep()) / (0.5 * std::numbers::pi) - 1e-12))) *
        pieces_per_quarter;
    const double width = a.sweep() / pieces;
    for (int p = 0; p < pieces; ++p) {
      const double lo = a.start_angle + p * width;
      for (std::size_t k = 0; k < gl.nodes.size(); ++k) {
        const double t = lo + 0.5 * width * (gl.nodes[k] + 1.0);
        const Complex e = std::polar(a.circle.radius, t);
        const Complex zeta = a.circle.center + e;
        // d(zeta) = i r e^{it} dt
        sum += gl.weights[k] * 0.5 * width * f(zeta) * Complex(0.0, 1.0) * e;
      }
    }
  }
  return sum / Complex(0.0, kTwoPi);
}

ContourMetrics contour_metrics(const ContourSystem& contour, const Polynomial& A, const Polynomial& B, double delta,
                               double epsilon, int samples_per_arc) {
  ContourMetrics m;
  const int N = A.degree();
  const int K = B.degree();
  m.total_length = contour.total_length;

  // Integral of |du|/|u| by composite Gauss-Legendre, refined until stable.
  const auto log_length = [&](int pieces) {
    const GaussLegendre& gl = gauss_legendre(24);
    double sum = 0.0;
    for (const Arc& a : contour.arcs) {
      const double width = a.sweep() / pieces;
      for (int p = 0; p < pieces; ++p) {
        const double lo = a.start_angle + p * width;
        for (std::size_t k = 0; k < gl.nodes.size(); ++k) {
          const double t = lo + 0.5 * width * (gl.nodes[k] + 1.0);
          sum += gl.weights[k] * 0.5 * std::abs(width) * a.circle.radius / std::abs(a.point(t));
        }
      }
    }
    return sum;
  };
  int pieces = 4;
  double prev = log_length(pieces);
  for (int it = 0; it < 8; ++it) {
    pieces *= 2;
    const double next = log_length(pieces);
    const bool done = std::abs(next - prev) <= 1e-12 * std::abs(next);
    prev = next;
    if (done) break;
  }
  m.log_length = prev;
  m.log_length_bound = 6.0 * std::numbers::pi * std::pow(static_cast<double>(N), K + 1);

  m.min_abs_A = std::numeric_limits<double>::infinity();
  m.min_abs_B = std::numeric_limits<double>::infinity();
  for (const Arc& a : contour.arcs) {
    for (int s = 0; s <= samples_per_arc; ++s) {
      const Complex z = a.point(a.start_angle + a.sweep() * s / samples_per_arc);
      m.min_abs_A = std::min(m.min_abs_A, std::abs(A(z)));
      m.min_abs_B = std::min(m.min_abs_B, std::abs(B(z)));
    }
  }

  // sup_{|z|<=eps} |A| >= |a_k| eps^k for every k (Cauchy estimate), hence
  // >= ||A|| min(1, eps)^N.
  m.c5 = std::pow(std::min(1.0, epsilon), N);
  m.c5_formula = "C5 = min(1, eps)^N from |a_k| eps^k <= sup_{|z|<=eps} |A(z)|";
  m.B_floor = delta / std::pow(3.0, K);
  m.A_floor = std::min(m.c5 * coeff_norm(A) / std::pow(2.0, N), delta / std::pow(3.0, N));
  m.B_floor_ok = m.min_abs_B >= m.B_floor * (1.0 - 1e-9) - 1e-15;
  m.A_floor_ok = m.min_abs_A >= m.A_floor * (1.0 - 1e-9) - 1e-15;
  m.log_length_ok = m.log_length <= m.log_length_bound;
  return m;
}

ContourSystem invert_contour(const ContourSystem& contour) {
  const double clearance = distance_to_contour(contour, 0.0);
  if (!(clearance > 1e-9 * contour.scale))
    throw Error(ErrorKind::OriginTooClose, "origin lies on or next to the contour");
  const bool enclosed = winding_number(contour, 0.0) != 0;

  ContourSystem out;
  out.loop_count = contour.loop_count;
  out.loop_of_arc = contour.loop_of_arc;
  for (const Arc& a : contour.arcs) {
    const Complex c = a.circle.center;
    const double r = a.circle.radius;
    const double denom = std::norm(c) - r * r;
    if (std::abs(denom) <= 1e-12 * std::max(std::norm(c), r * r))
      throw Error(ErrorKind::OriginTooClose, "an arc's circle passes through the origin");
    const Disk image{std::conj(c) / denom, r / std::abs(denom)};
    const bool ccw = denom > 0.0 ? a.ccw : !a.ccw;
    const double full = std::abs(a.sweep());
    Arc m;
    m.circle = image;
    m.ccw = ccw;
    m.start_angle = std::arg(1.0 / a.start() - image.center);
    if (full >= kTwoPi - 1e-12) {
      m.end_angle = m.start_angle + (ccw ? kTwoPi : -kTwoPi);
    } else {
      const double e = std::arg(1.0 / a.end() - image.center);
      m.end_angle = ccw ? m.start_angle + wrap_positive(e - m.start_angle)
                        : m.start_angle - wrap_positive(m.start_angle - e);
    }
    out.arcs.push_back(m);
  }
  if (enclosed) {
    // The image region is unbounded; hand back the boundary of its complement.
    std::vector<Arc> flipped;
    std::vector<int> loops;
    for (int l = 0; l < out.loop_count; ++l) {
      std::vector<Arc> arcs;
      for (std::size_t i = 0; i < out.arcs.size(); ++i)
        if (out.loop_of_arc[i] == l) arcs.push_back(out.arcs[i]);
      for (auto it = arcs.rbegin(); it != arcs.rend(); ++it) {
        flipped.push_back(it->reversed());
        loops.push_back(l);
      }
    }
    out.arcs = std::move(flipped);
    out.loop_of_arc = std::move(loops);
  }

  double extent = 0.0;
  for (const auto& p : contour.orientation_certificate)
    if (p.point != Complex{0.0}) extent = std::max(extent, std::abs(1.0 / p.point));
  for (const auto& a : out.arcs) extent = std::max(extent, std::abs(a.circle.center) + a.circle.radius);
  out.scale = 1.0 + extent;
  finalize_lengths(out);

  for (const auto& p : contour.orientation_certificate) {
    if (p.point == Complex{0.0}) continue;
    const Complex q = 1.0 / p.point;
    const int expected = enclosed ? 1 - p.winding : p.winding;
    const int w = winding_number(out, q);
    if (w != expected) {
      std::ostringstream msg;
      msg << "inverted contour winds " << w << " times around " << q << ", expected " << expected;
      throw Error(ErrorKind::BadContour, msg.str());
    }
    out.orientation_certificate.push_back({q, w});
  }
  if (enclosed) out.orientation_certificate.push_back({0.0, winding_number(out, 0.0)});
  return out;
}

OriginShift choose_origin_shift(const RootSet& rootsA, const RootSet& rootsB) {
  const int n = static_cast<int>(rootsA.size() + rootsB.size());
  OriginShift best;
  best.epsilon = 1.0 / (4.0 * (n + 2));
  best.clearance = -1.0;
  for (int k = 0; k <= n; ++k) {
    const Complex z0((k - 0.5 * n) * 5.0 * best.epsilon, 0.0);
    double clearance = std::numeric_limits<double>::infinity();
    for (Complex r : rootsA.roots) clearance = std::min(clearance, std::abs(r - z0));
    for (Complex r : rootsB.roots) clearance = std::min(clearance, std::abs(r - z0));
    if (clearance > best.clearance) {
      best.clearance = clearance;
      best.z0 = z0;
    }
  }
  return best;
}

}  // namespace bezout
