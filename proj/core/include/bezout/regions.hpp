#pragma once

#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bezout/polynomial.hpp"
#include "bezout/roots.hpp"

namespace bezout {

/// Open disk D(center, radius).
struct Disk {
  Complex center;
  double radius = 0.0;

  bool contains(Complex z) const noexcept { return std::abs(z - center) < radius; }
};

/**
 * Circular arc from start_angle to end_angle on `circle`.
 *
 * Counterclockwise arcs have end_angle > start_angle, clockwise ones
 * end_angle < start_angle; sweep() is signed accordingly.
 */
struct Arc {
  Disk circle;
  double start_angle = 0.0;
  double end_angle = 0.0;
  bool ccw = true;

  double sweep() const noexcept { return end_angle - start_angle; }
  double length() const noexcept { return circle.radius * std::abs(sweep()); }
  Complex point(double angle) const noexcept { return circle.center + std::polar(circle.radius, angle); }
  Complex start() const noexcept { return point(start_angle); }
  Complex end() const noexcept { return point(end_angle); }
  Arc reversed() const noexcept { return {circle, end_angle, start_angle, !ccw}; }
};

struct WindingProbe {
  Complex point;
  int winding = 0;
};

/**
 * Oriented boundary of a disk-arrangement region as closed loops of arcs.
 *
 * Arcs of one loop are stored contiguously and chained head to tail;
 * loop_of_arc[i] is the loop index of arcs[i]. The orientation certificate
 * records the winding number measured at designated interior and exterior
 * probes when the contour was built.
 */
struct ContourSystem {
  std::vector<Arc> arcs;
  std::vector<int> loop_of_arc;
  int loop_count = 0;
  double total_length = 0.0;
  double scale = 1.0;
  std::vector<WindingProbe> orientation_certificate;

  static ContourSystem circle(const Disk& d, bool ccw = true);
  std::vector<Arc> loop(int index) const;
};

enum class RegionKind {
  EA,        // intersection over beta_j of the union over alpha_i of D(alpha_i, |beta_j - alpha_i| / 3)
  EB,        // same with the roles of A and B swapped
  DA,        // union of D(alpha_i, 3|alpha_i| / 4)
  DB,
  Gamma1,    // D_A intersected with E_A
  Gamma2,    // D_B intersected with E_B
};

std::string to_string(RegionKind kind);
RegionKind region_kind_from_string(const std::string& name);

struct RegionSpec {
  RegionKind kind = RegionKind::EA;
  std::vector<Complex> alphas;
  std::vector<Complex> betas;
  /// Region {1/z : z in base region}.
  bool inverted = false;
  /// Accept loops that bound holes (clockwise) instead of throwing NestedLoops.
  bool allow_holes = false;

  /// Every circle of the arrangement, exact duplicates removed.
  std::vector<Disk> circles() const;
  /// Probes whose winding must be 1 (first) and 0 (second).
  std::pair<std::vector<Complex>, std::vector<Complex>> probes() const;
};

RegionSpec make_region_spec(RegionKind kind, const RootSet& rootsA, const RootSet& rootsB, bool inverted = false,
                            bool allow_holes = false);

/// Direct evaluation of the intersection/union disk predicate.
bool membership(const RegionSpec& spec, Complex z);

/**
 * Oriented boundary of the region, interior winding +1.
 *
 * Each circle is split at its intersections with the others; a sub-arc is
 * boundary iff a probe just inside the circle belongs to the region and a
 * probe just outside does not. Throws DegenerateArrangement on tangencies,
 * NestedLoops when a loop encloses a hole, BadContour when a designated
 * probe gets the wrong winding number.
 */
ContourSystem build_region(const RegionSpec& spec);

/// Winding number of the contour around z. Throws OnContour near the arcs.
int winding_number(const ContourSystem& contour, Complex z);
/// Unrounded (1/2 pi i) * integral of d(zeta)/(zeta - z); exact per arc.
double winding_value(const ContourSystem& contour, Complex z);
double distance_to_contour(const ContourSystem& contour, Complex z);

/// Enclosed area of one loop, positive for counterclockwise loops.
double signed_area(std::span<const Arc> loop);

/// (1/2 pi i) * integral of f(zeta) d(zeta) over the contour by composite
/// Gauss-Legendre on every arc.
Complex contour_integral(const ContourSystem& contour, const std::function<Complex(Complex)>& f, int order = 32,
                         int pieces_per_quarter = 2);

struct ContourMetrics {
  double total_length = 0.0;
  double log_length = 0.0;  // integral of |du| / |u|
  double log_length_bound = 0.0;  // 6 pi N^(K+1)
  double min_abs_A = 0.0;
  double min_abs_B = 0.0;
  double B_floor = 0.0;  // delta / 3^K
  double A_floor = 0.0;  // min(C5 ||A|| / 2^N, delta / 3^N)
  double c5 = 0.0;
  std::string c5_formula;
  bool B_floor_ok = false;
  bool A_floor_ok = false;
  bool log_length_ok = false;
};

/**
 * Length, logarithmic length and the |A|, |B| floors along a Gamma1 contour.
 *
 * `epsilon` is the disk radius used to place the origin: no root of A or B
 * lies in the closed disk D(0, 2 epsilon). Failed floors are reported, not
 * thrown.
 */
ContourMetrics contour_metrics(const ContourSystem& contour, const Polynomial& A, const Polynomial& B, double delta,
                               double epsilon, int samples_per_arc = 256);

/**
 * Image under z -> 1/z. The map is conformal, so the image region stays on
 * the left of every image arc. When 0 is enclosed the image region is
 * unbounded and the loops come back reversed, bounding its complement
 * (the side holding 0). Throws OriginTooClose near the arcs.
 */
ContourSystem invert_contour(const ContourSystem& contour);

/// Shift z0 chosen from N+K+1 disjoint disks of radius 2 epsilon in the unit
/// disk so that D(z0, 2 epsilon) holds no root; epsilon = 1 / (4 (N+K+2)).
struct OriginShift {
  Complex z0;
  double epsilon = 0.0;
  double clearance = 0.0;  // distance from z0 to the nearest root
};
OriginShift choose_origin_shift(const RootSet& rootsA, const RootSet& rootsB);

/// Deterministic SVG: contours as path elements, markers as small circles.
std::string render_svg(const std::vector<ContourSystem>& contours, const std::vector<Complex>& markers);
void emit_svg(const std::vector<ContourSystem>& contours, const std::vector<Complex>& markers,
              const std::filesystem::path& path);

}  // namespace bezout
