#pragma once

#include <array>
#include <optional>
#include <utility>

#include "quadcover/geometry.hpp"

namespace quadcover {

/// 3x3 projective map of the plane, stored row-major. Invariants enforced at
/// construction: sum of squared entries = 1, |det| > 1e-12, and the sign fixed
/// so h33 >= 0 (first nonzero entry positive if h33 == 0).
class Homography {
public:
  /// Normalizes and sign-fixes the given row-major coefficients.
  /// Throws DegenerateConfigurationError when the matrix is (near-)singular.
  static Homography from_row_major(const std::array<double, 9>& h);

  static Homography identity();

  double at(int row, int col) const { return h_[static_cast<std::size_t>(3 * row + col)]; }
  const std::array<double, 9>& coeffs() const { return h_; }
  double det() const;

  /// (x,y) -> ((h11 x + h12 y + h13)/w, (h21 x + h22 y + h23)/w),
  /// w = h31 x + h32 y + h33. Throws LineAtInfinityError when |w| < 1e-14.
  Point2 apply(Point2 p) const;

  /// Inverse map via the adjugate; same at-infinity guard.
  Point2 apply_inverse(Point2 p) const;

  /// Common image of the horizontal-line family (h11/h31, h21/h31) and of the
  /// vertical-line family (h12/h32, h22/h32); nullopt when the family stays
  /// parallel (h3x ~ 0, image at infinity).
  std::pair<std::optional<Point2>, std::optional<Point2>> vanishing_points() const;

  /// Closed-form Jacobian determinant det(H) / w^3 at p.
  double jacobian_det(Point2 p) const;

private:
  explicit Homography(const std::array<double, 9>& h) : h_(h) {}
  std::array<double, 9> h_;
};

/// Adjugate of H: H * adj(H) = det(H) * I. Row-major. These are the
/// coefficients of the inverse map up to scale.
struct InverseCoefficients {
  std::array<double, 9> hhat;
  double at(int row, int col) const { return hhat[static_cast<std::size_t>(3 * row + col)]; }
};

InverseCoefficients inverse_coefficients(const Homography& h);

/// Standard DLT rows for the four correspondences src[i] -> dst[i]:
///   (-x, -y, -1,  0,  0,  0, x'x, x'y, x')
///   ( 0,  0,  0, -x, -y, -1, y'x, y'y, y')
std::array<std::array<double, 9>, 8> build_dlt_matrix(const Quadrilateral& src,
                                                      const Quadrilateral& dst);

/// Null vector of the DLT system via the eigendecomposition of B^T B
/// (eigenvector of the smallest eigenvalue). Throws
/// DegenerateConfigurationError when rank(B) < 8 (second-smallest singular
/// value ratio below 1e-12).
Homography solve_homography(const Quadrilateral& src, const Quadrilateral& dst);

}  // namespace quadcover
