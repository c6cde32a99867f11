#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "darp/errors.hpp"

namespace darp {

using LocationId = std::uint32_t;

// Absolute tolerance for all distance comparisons. Euclidean instances
// produce irrational distances, so exact equality is never meaningful.
inline constexpr double kDistanceTol = 1e-9;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

// A location of the underlying space. Coordinates are present for Euclidean
// instances and absent for explicit-matrix ones.
struct Point {
  LocationId id = 0;
  std::optional<Vec2> coords;
};

struct TriangleCheck {
  bool ok = true;
  // Worst observed violation d(a,c) - d(a,b) - d(b,c); <= tolerance when ok.
  double worst_violation = 0.0;
  LocationId a = 0, b = 0, c = 0;
};

// Finite metric over locations 0..size()-1. Two backends: Euclidean over
// 2-d coordinates, or a dense symmetric matrix.
class Metric {
 public:
  enum class Backend { Euclidean, Matrix };

  static Metric euclidean(std::vector<Vec2> coords);
  // row-major dense n*n block; rejects asymmetric input, negative entries
  // and a non-zero diagonal.
  static Metric from_matrix(std::vector<double> dense, std::size_t n);

  Backend backend() const { return backend_; }
  std::size_t size() const { return size_; }

  double operator()(LocationId a, LocationId b) const {
    check_id(a);
    check_id(b);
    if (backend_ == Backend::Euclidean) {
      const Vec2& pa = coords_[a];
      const Vec2& pb = coords_[b];
      const double dx = pa.x - pb.x;
      const double dy = pa.y - pb.y;
      return std::sqrt(dx * dx + dy * dy);
    }
    return matrix_[static_cast<std::size_t>(a) * size_ + b];
  }

  bool has_coords() const { return backend_ == Backend::Euclidean; }
  const Vec2& coord(LocationId id) const {
    check_id(id);
    return coords_[id];
  }
  const std::vector<Vec2>& coords() const { return coords_; }
  const std::vector<double>& matrix() const { return matrix_; }

  // Triangle-inequality validator: exhaustive for size() <= 200, random
  // sampling (samples triples) otherwise.
  TriangleCheck validate_triangle(double tolerance = kDistanceTol,
                                  std::size_t samples = 200000,
                                  std::uint64_t seed = 1) const;

 private:
  Metric() = default;
  void check_id(LocationId id) const {
    if (id >= size_) {
      throw ValidationError("unknown location id " + std::to_string(id));
    }
  }

  Backend backend_ = Backend::Euclidean;
  std::size_t size_ = 0;
  std::vector<Vec2> coords_;
  std::vector<double> matrix_;
};

}  // namespace darp
