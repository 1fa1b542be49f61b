#include "quadcover/homography.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace quadcover {

namespace {
constexpr double kInfinityGuard = 1e-14;
constexpr double kSingularGuard = 1e-12;
constexpr double kRankRatioGuard = 1e-12;
}  // namespace

Homography Homography::from_row_major(const std::array<double, 9>& h) {
  double norm2 = 0.0;
  for (double v : h) norm2 += v * v;
  if (!(norm2 > 0.0) || !std::isfinite(norm2)) {
    throw DegenerateConfigurationError("homography coefficients are zero or non-finite");
  }
  const double inv = 1.0 / std::sqrt(norm2);
  std::array<double, 9> n{};
  for (std::size_t i = 0; i < 9; ++i) n[i] = h[i] * inv;

  double flip = 0.0;
  if (n[8] != 0.0) {
    flip = n[8];
  } else {
    for (double v : n) {
      if (v != 0.0) {
        flip = v;
        break;
      }
    }
  }
  if (flip < 0.0) {
    for (double& v : n) v = -v;
  }
  Homography out(n);
  if (std::abs(out.det()) <= kSingularGuard) {
    throw DegenerateConfigurationError("homography matrix is singular");
  }
  return out;
}

Homography Homography::identity() {
  return from_row_major({1, 0, 0, 0, 1, 0, 0, 0, 1});
}

double Homography::det() const {
  const auto& h = h_;
  return h[0] * (h[4] * h[8] - h[5] * h[7]) - h[1] * (h[3] * h[8] - h[5] * h[6]) +
         h[2] * (h[3] * h[7] - h[4] * h[6]);
}

Point2 Homography::apply(Point2 p) const {
  const double w = h_[6] * p.x + h_[7] * p.y + h_[8];
  if (std::abs(w) < kInfinityGuard) {
    throw LineAtInfinityError("point maps to the line at infinity");
  }
  return {(h_[0] * p.x + h_[1] * p.y + h_[2]) / w,
          (h_[3] * p.x + h_[4] * p.y + h_[5]) / w};
}

Point2 Homography::apply_inverse(Point2 p) const {
  const auto a = inverse_coefficients(*this).hhat;
  const double w = a[6] * p.x + a[7] * p.y + a[8];
  if (std::abs(w) < kInfinityGuard) {
    throw LineAtInfinityError("point lies on the image of the line at infinity");
  }
  return {(a[0] * p.x + a[1] * p.y + a[2]) / w,
          (a[3] * p.x + a[4] * p.y + a[5]) / w};
}

std::pair<std::optional<Point2>, std::optional<Point2>> Homography::vanishing_points() const {
  std::optional<Point2> horizontal, vertical;
  if (std::abs(h_[6]) >= kSingularGuard) {
    horizontal = Point2{h_[0] / h_[6], h_[3] / h_[6]};
  }
  if (std::abs(h_[7]) >= kSingularGuard) {
    vertical = Point2{h_[1] / h_[7], h_[4] / h_[7]};
  }
  return {horizontal, vertical};
}

double Homography::jacobian_det(Point2 p) const {
  const double w = h_[6] * p.x + h_[7] * p.y + h_[8];
  if (std::abs(w) < kInfinityGuard) {
    throw LineAtInfinityError("Jacobian undefined on the line at infinity");
  }
  return det() / (w * w * w);
}

InverseCoefficients inverse_coefficients(const Homography& h) {
  const auto& m = h.coeffs();
  // adjugate: transpose of the cofactor matrix
  return InverseCoefficients{{
      m[4] * m[8] - m[5] * m[7], m[2] * m[7] - m[1] * m[8], m[1] * m[5] - m[2] * m[4],
      m[5] * m[6] - m[3] * m[8], m[0] * m[8] - m[2] * m[6], m[2] * m[3] - m[0] * m[5],
      m[3] * m[7] - m[4] * m[6], m[1] * m[6] - m[0] * m[7], m[0] * m[4] - m[1] * m[3],
  }};
}

std::array<std::array<double, 9>, 8> build_dlt_matrix(const Quadrilateral& src,
                                                      const Quadrilateral& dst) {
  std::array<std::array<double, 9>, 8> rows{};
  for (std::size_t i = 0; i < 4; ++i) {
    const Point2 p = src.vertices()[i];
    const Point2 q = dst.vertices()[i];
    rows[2 * i] = {-p.x, -p.y, -1, 0, 0, 0, q.x * p.x, q.x * p.y, q.x};
    rows[2 * i + 1] = {0, 0, 0, -p.x, -p.y, -1, q.y * p.x, q.y * p.y, q.y};
  }
  return rows;
}

Homography solve_homography(const Quadrilateral& src, const Quadrilateral& dst) {
  const auto rows = build_dlt_matrix(src, dst);
  Eigen::Matrix<double, 8, 9> B;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 9; ++j) {
      B(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  const Eigen::Matrix<double, 9, 9> BtB = B.transpose() * B;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 9, 9>> eig(BtB);
  if (eig.info() != Eigen::Success) {
    throw DegenerateConfigurationError("eigendecomposition of B^T B failed");
  }
  // eigenvalues ascending: [0] is the null direction, [1] = sigma_8^2
  const auto& ev = eig.eigenvalues();
  const double sigma8 = std::sqrt(std::max(ev(1), 0.0));
  const double sigma1 = std::sqrt(std::max(ev(8), 0.0));
  if (!(sigma1 > 0.0) || sigma8 / sigma1 < kRankRatioGuard) {
    throw DegenerateConfigurationError("DLT system rank deficient: degenerate correspondences");
  }
  std::array<double, 9> h{};
  for (int i = 0; i < 9; ++i) h[static_cast<std::size_t>(i)] = eig.eigenvectors()(i, 0);
  return Homography::from_row_major(h);
}

}  // namespace quadcover
