#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace polya {

enum class BoundaryCondition { Dirichlet, Neumann };

std::string to_string(BoundaryCondition bc);
/// Accepts "dirichlet" / "neumann" (case-insensitive).
BoundaryCondition parse_boundary_condition(std::string_view text);

class Domain;

struct Interval {
  double length;
};

struct Box {
  std::vector<double> sides;
};

struct Disk {
  double radius;
};

/// Planar sector {r e^{i theta} : 0 <= r <= radius, 0 <= theta <= angle}.
struct Sector {
  double radius;
  double angle;
};

/// Cartesian product left x right. Factors are shared immutable values.
struct Product {
  std::shared_ptr<const Domain> left;
  std::shared_ptr<const Domain> right;
};

/// A bounded Euclidean domain with separable, computable spectrum.
///
/// Construct through the named factories; they reject non-finite or non-positive
/// sizes and sector angles outside (0, 2 pi].
class Domain {
 public:
  using Shape = std::variant<Interval, Box, Disk, Sector, Product>;

  static Domain interval(double length);
  static Domain box(std::vector<double> sides);
  static Domain disk(double radius);
  static Domain sector(double radius, double angle);
  static Domain product(Domain left, Domain right);

  const Shape& shape() const { return shape_; }

  template <class T>
  bool is() const {
    return std::holds_alternative<T>(shape_);
  }
  template <class T>
  const T& as() const {
    return std::get<T>(shape_);
  }

  const Domain& left() const { return *as<Product>().left; }
  const Domain& right() const { return *as<Product>().right; }

  /// Round-trips through parse_domain.
  std::string to_string() const;

  friend bool operator==(const Domain& a, const Domain& b);

 private:
  explicit Domain(Shape shape) : shape_(std::move(shape)) {}
  Shape shape_;
};

int dimension(const Domain& d);
double measure(const Domain& d);
double boundary_measure(const Domain& d);

/// Parses the textual domain grammar:
///   interval:l=<f>
///   box:a=<f>,b=<f>[,c=<f>...]
///   disk:r=<f>
///   sector:r=<f>,alpha=<f>
///   prod:(<domain>)x(<domain>)
/// where <f> is a decimal literal (digits with optional fraction and exponent).
Domain parse_domain(std::string_view text);

/// A base domain together with its p-tilings by isometric copies of one subdomain.
struct TilingFamily {
  Domain base;
  std::function<Domain(int)> subdomain_at;
  std::string description;
};

/// Disk of radius R tiled by p sectors of opening 2 pi / p.
TilingFamily disk_sector_family(double radius);

/// Box tiled by p slabs cut perpendicular to `axis` (0-based).
TilingFamily box_slab_family(const Domain& base, int axis);

}  // namespace polya
