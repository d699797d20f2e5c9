#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace fgv::gf2 {

/// Coordinates x_1..x_len of a vector over F2, stored as bits 0..len-1.
using Mask = std::uint32_t;

struct GF2Vector {
  Mask bits = 0;
  int len = 0;

  GF2Vector() = default;
  GF2Vector(Mask b, int l);

  int get(int i) const { return (bits >> i) & 1; }  // 0-based coordinate
  GF2Vector operator^(const GF2Vector& o) const;
  bool operator==(const GF2Vector& o) const = default;
};

/// A point of P^n(F2).  Over F2 the only unit is 1, so a projective point
/// is just its nonzero coordinate vector; equality is coordinate equality.
struct ProjectivePoint {
  GF2Vector rep;

  ProjectivePoint() = default;
  explicit ProjectivePoint(GF2Vector v);
  ProjectivePoint(Mask bits, int len) : ProjectivePoint(GF2Vector(bits, len)) {}

  int dim() const { return rep.len - 1; }
  bool operator==(const ProjectivePoint& o) const = default;
};

/// Quadratic form sum c_ij x_i x_j (i <= j), stored upper-triangular.
/// In characteristic 2 the Gram matrix does not determine the form, so the
/// polar bilinear form b(x,y) = q(x+y)+q(x)+q(y) is computed on demand.
class QuadraticForm {
public:
  /// dim = ambient projective dimension, so dim+1 variables.
  explicit QuadraticForm(int dim);

  int dim() const { return dim_; }
  int vars() const { return dim_ + 1; }

  /// Set/get coefficient of x_{i+1} x_{j+1} with 0 <= i <= j <= dim.
  void set_coeff(int i, int j, int value);
  int coeff(int i, int j) const;

  int evaluate(const ProjectivePoint& p) const;

  /// Gram matrix of the polar bilinear form (alternating in char 2).
  std::vector<Mask> polar_gram() const;
  int radical_dim() const;

  std::string to_string() const;

  bool operator==(const QuadraticForm& o) const = default;

private:
  int dim_;
  std::vector<Mask> rows_;  // rows_[i] holds bits j >= i
};

struct PointSet {
  int dim = 0;
  std::vector<ProjectivePoint> points;
};

using Line = std::array<int, 3>;  // indices into a PointSet, sorted

/// All 2^{n+1}-1 points of P^n(F2), masks ascending (little-endian
/// coordinate vectors), so the order is deterministic.
std::vector<ProjectivePoint> enumerate_projective_points(int n);

/// The elliptic quadric Q_{2n}^-:
/// x1^2 + x2^2 + x1 x2 + x3 x4 + ... + x_{2n-1} x_{2n} on P^{2n-1}.
QuadraticForm minus_quadric(int n);

/// Zero locus of the form, in enumeration order.
PointSet variety_points(const QuadraticForm& form);

/// All projective lines {p, q, p+q} contained in S, as sorted index
/// triples, sorted lexicographically.
std::vector<Line> lines_in_point_set(const PointSet& s);
std::vector<Line> lines_in_point_set_serial(const PointSet& s);
std::vector<Line> lines_in_point_set_parallel(const PointSet& s);

/// |Q_{2n}^-| = 2^{n-1}(2^n - 1) - 1.
long long point_count_formula(int n);

enum class QuadricKind { Elliptic, Hyperbolic, Degenerate };

struct QuadricClass {
  QuadricKind kind;
  long long point_count = 0;
  int radical_dim = 0;
  int half_rank = -1;  // n with ambient P^{2n-1}, for the nondegenerate cases
};

/// Classify by radical check, then point count against 2^{n-1}(2^n +- 1) - 1.
QuadricClass classify_quadric(const QuadraticForm& form);

const char* to_string(QuadricKind k);

}  // namespace fgv::gf2
