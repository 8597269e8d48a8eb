#include "polya/domains.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include "polya/errors.hpp"

namespace polya {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_size(double value, const char* what) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw DomainError(std::string(what) + " must be finite and > 0, got " + std::to_string(value));
  }
}

std::string format_number(double value) {
  char buf[512];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed);
  return std::string(buf, res.ptr);
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

std::string to_string(BoundaryCondition bc) {
  return bc == BoundaryCondition::Dirichlet ? "dirichlet" : "neumann";
}

BoundaryCondition parse_boundary_condition(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "dirichlet") return BoundaryCondition::Dirichlet;
  if (lower == "neumann") return BoundaryCondition::Neumann;
  throw ParseError("unknown boundary condition '" + std::string(text) + "'");
}

Domain Domain::interval(double length) {
  require_size(length, "interval length");
  return Domain(Interval{length});
}

Domain Domain::box(std::vector<double> sides) {
  if (sides.empty()) throw DomainError("box needs at least one side");
  for (double s : sides) require_size(s, "box side");
  return Domain(Box{std::move(sides)});
}

Domain Domain::disk(double radius) {
  require_size(radius, "disk radius");
  return Domain(Disk{radius});
}

Domain Domain::sector(double radius, double angle) {
  require_size(radius, "sector radius");
  if (!std::isfinite(angle) || angle <= 0.0 || angle > kTwoPi) {
    throw DomainError("sector angle must lie in (0, 2 pi], got " + std::to_string(angle));
  }
  return Domain(Sector{radius, angle});
}

Domain Domain::product(Domain left, Domain right) {
  return Domain(Product{std::make_shared<const Domain>(std::move(left)),
                        std::make_shared<const Domain>(std::move(right))});
}

std::string Domain::to_string() const {
  return std::visit(
      Overloaded{
          [](const Interval& i) { return "interval:l=" + format_number(i.length); },
          [](const Box& b) {
            std::string out = "box:";
            for (std::size_t i = 0; i < b.sides.size(); ++i) {
              if (i > 0) out += ',';
              out += static_cast<char>('a' + i);
              out += '=';
              out += format_number(b.sides[i]);
            }
            return out;
          },
          [](const Disk& d) { return "disk:r=" + format_number(d.radius); },
          [](const Sector& s) {
            return "sector:r=" + format_number(s.radius) + ",alpha=" + format_number(s.angle);
          },
          [](const Product& p) {
            return "prod:(" + p.left->to_string() + ")x(" + p.right->to_string() + ")";
          },
      },
      shape_);
}

bool operator==(const Domain& a, const Domain& b) {
  if (a.shape_.index() != b.shape_.index()) return false;
  return std::visit(
      Overloaded{
          [&](const Interval& i) { return i.length == b.as<Interval>().length; },
          [&](const Box& x) { return x.sides == b.as<Box>().sides; },
          [&](const Disk& d) { return d.radius == b.as<Disk>().radius; },
          [&](const Sector& s) {
            return s.radius == b.as<Sector>().radius && s.angle == b.as<Sector>().angle;
          },
          [&](const Product& p) {
            const auto& q = b.as<Product>();
            return *p.left == *q.left && *p.right == *q.right;
          },
      },
      a.shape_);
}

int dimension(const Domain& d) {
  return std::visit(Overloaded{
                        [](const Interval&) { return 1; },
                        [](const Box& b) { return static_cast<int>(b.sides.size()); },
                        [](const Disk&) { return 2; },
                        [](const Sector&) { return 2; },
                        [](const Product& p) { return dimension(*p.left) + dimension(*p.right); },
                    },
                    d.shape());
}

double measure(const Domain& d) {
  return std::visit(Overloaded{
                        [](const Interval& i) { return i.length; },
                        [](const Box& b) {
                          double v = 1.0;
                          for (double s : b.sides) v *= s;
                          return v;
                        },
                        [](const Disk& k) { return std::numbers::pi * k.radius * k.radius; },
                        [](const Sector& s) { return 0.5 * s.angle * s.radius * s.radius; },
                        [](const Product& p) { return measure(*p.left) * measure(*p.right); },
                    },
                    d.shape());
}

// The boundary of an interval is its two endpoints, measured by counting.
double boundary_measure(const Domain& d) {
  return std::visit(Overloaded{
                        [](const Interval&) { return 2.0; },
                        [](const Box& b) {
                          double total = 0.0;
                          for (std::size_t i = 0; i < b.sides.size(); ++i) {
                            double face = 1.0;
                            for (std::size_t j = 0; j < b.sides.size(); ++j) {
                              if (j != i) face *= b.sides[j];
                            }
                            total += face;
                          }
                          return 2.0 * total;
                        },
                        [](const Disk& k) { return 2.0 * std::numbers::pi * k.radius; },
                        [](const Sector& s) { return 2.0 * s.radius + s.angle * s.radius; },
                        [](const Product& p) {
                          return boundary_measure(*p.left) * measure(*p.right) +
                                 measure(*p.left) * boundary_measure(*p.right);
                        },
                    },
                    d.shape());
}

namespace {

class DomainParser {
 public:
  explicit DomainParser(std::string_view text) : text_(text) {}

  Domain parse_all() {
    Domain d = parse_domain();
    if (pos_ != text_.size()) fail("trailing characters");
    return d;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse domain '" + std::string(text_) + "' at offset " +
                     std::to_string(pos_) + ": " + why);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (!at_end() && std::islower(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  // Decimal literal: digits [. digits] [e[+-]digits], or . digits [...].
  double number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      const std::size_t s = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      return pos_ - s;
    };
    std::size_t mantissa = digits();
    if (peek() == '.') {
      ++pos_;
      mantissa += digits();
    }
    if (mantissa == 0) fail("expected a decimal number");
    if (peek() == 'e' || peek() == 'E') {
      ++pos_;
      if (peek() == '+' || peek() == '-') ++pos_;
      if (digits() == 0) fail("malformed exponent");
    }
    double value = 0.0;
    const char* first = text_.data() + start;
    const char* last = text_.data() + pos_;
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc() || res.ptr != last) fail("number out of range");
    return value;
  }

  double keyed_number(const std::string& key) {
    const std::string got = identifier();
    if (got != key) fail("expected key '" + key + "', got '" + got + "'");
    expect('=');
    return number();
  }

  Domain parse_domain() {
    const std::string kind = identifier();
    expect(':');
    try {
      if (kind == "interval") return Domain::interval(keyed_number("l"));
      if (kind == "disk") return Domain::disk(keyed_number("r"));
      if (kind == "sector") {
        const double r = keyed_number("r");
        expect(',');
        const double alpha = keyed_number("alpha");
        return Domain::sector(r, alpha);
      }
      if (kind == "box") {
        std::vector<double> sides;
        do {
          if (!sides.empty()) ++pos_;
          if (sides.size() >= 26) fail("too many box sides");
          sides.push_back(keyed_number(std::string(1, static_cast<char>('a' + sides.size()))));
        } while (peek() == ',');
        return Domain::box(std::move(sides));
      }
      if (kind == "prod") {
        expect('(');
        Domain left = parse_domain();
        expect(')');
        expect('x');
        expect('(');
        Domain right = parse_domain();
        expect(')');
        return Domain::product(std::move(left), std::move(right));
      }
    } catch (const ParseError&) {
      throw;
    } catch (const DomainError& e) {
      fail(e.what());
    }
    fail("unknown domain kind '" + kind + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Domain parse_domain(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  return DomainParser(text).parse_all();
}

TilingFamily disk_sector_family(double radius) {
  Domain base = Domain::disk(radius);
  return TilingFamily{
      base,
      [radius](int p) {
        if (p < 1) throw DomainError("tiling order p must be >= 1, got " + std::to_string(p));
        return Domain::sector(radius, kTwoPi / p);
      },
      "disk r=" + format_number(radius) + " tiled by sectors of opening 2pi/p"};
}

TilingFamily box_slab_family(const Domain& base, int axis) {
  if (!base.is<Box>()) throw DomainError("box_slab_family needs a box base");
  const std::vector<double> sides = base.as<Box>().sides;
  if (axis < 0 || axis >= static_cast<int>(sides.size())) {
    throw DomainError("box_slab_family: axis " + std::to_string(axis) + " outside dimension " +
                      std::to_string(sides.size()));
  }
  return TilingFamily{
      base,
      [sides, axis](int p) {
        if (p < 1) throw DomainError("tiling order p must be >= 1, got " + std::to_string(p));
        std::vector<double> cut = sides;
        cut[axis] /= p;
        return Domain::box(std::move(cut));
      },
      base.to_string() + " cut into p slabs along axis " + std::to_string(axis)};
}

}  // namespace polya
