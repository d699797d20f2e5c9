#include "fgv/gf2.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fgv::gf2 {

GF2Vector::GF2Vector(Mask b, int l) : bits(b), len(l) {
  if (l < 1 || l > 31) throw std::invalid_argument("GF2Vector: bad length");
  if (b >> l) throw std::invalid_argument("GF2Vector: bits exceed length");
}

GF2Vector GF2Vector::operator^(const GF2Vector& o) const {
  if (len != o.len) throw std::invalid_argument("GF2Vector: length mismatch");
  GF2Vector r;
  r.bits = bits ^ o.bits;
  r.len = len;
  return r;
}

ProjectivePoint::ProjectivePoint(GF2Vector v) : rep(v) {
  if (v.bits == 0) throw std::invalid_argument("ProjectivePoint: zero vector");
}

QuadraticForm::QuadraticForm(int dim) : dim_(dim), rows_(dim + 1, 0) {
  if (dim < 0 || dim > 30) throw std::invalid_argument("QuadraticForm: bad dimension");
}

void QuadraticForm::set_coeff(int i, int j, int value) {
  if (i < 0 || j < i || j > dim_) throw std::out_of_range("QuadraticForm: bad index");
  if (value & 1)
    rows_[i] |= Mask{1} << j;
  else
    rows_[i] &= ~(Mask{1} << j);
}

int QuadraticForm::coeff(int i, int j) const {
  if (i < 0 || j < i || j > dim_) throw std::out_of_range("QuadraticForm: bad index");
  return (rows_[i] >> j) & 1;
}

int QuadraticForm::evaluate(const ProjectivePoint& p) const {
  if (p.rep.len != vars())
    throw std::invalid_argument("QuadraticForm::evaluate: dimension mismatch");
  int acc = 0;
  Mask x = p.rep.bits;
  for (int i = 0; i <= dim_; ++i)
    if ((x >> i) & 1) acc ^= std::popcount(rows_[i] & x) & 1;
  return acc;
}

std::vector<Mask> QuadraticForm::polar_gram() const {
  // b(e_i, e_j) = c_ij for i != j; the diagonal vanishes in char 2.
  std::vector<Mask> b(dim_ + 1, 0);
  for (int i = 0; i <= dim_; ++i)
    for (int j = i + 1; j <= dim_; ++j)
      if ((rows_[i] >> j) & 1) {
        b[i] |= Mask{1} << j;
        b[j] |= Mask{1} << i;
      }
  return b;
}

int QuadraticForm::radical_dim() const {
  std::vector<Mask> m = polar_gram();
  int rank = 0;
  for (int col = 0; col <= dim_ && rank < static_cast<int>(m.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(m.size()); ++r)
      if ((m[r] >> col) & 1) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = 0; r < static_cast<int>(m.size()); ++r)
      if (r != rank && ((m[r] >> col) & 1)) m[r] ^= m[rank];
    ++rank;
  }
  return vars() - rank;
}

std::string QuadraticForm::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= dim_; ++i)
    for (int j = i; j <= dim_; ++j)
      if ((rows_[i] >> j) & 1) {
        if (!first) os << "+";
        first = false;
        if (i == j)
          os << "x" << i + 1 << "^2";
        else
          os << "x" << i + 1 << "x" << j + 1;
      }
  if (first) os << "0";
  return os.str();
}

std::vector<ProjectivePoint> enumerate_projective_points(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_projective_points: n < 0");
  std::vector<ProjectivePoint> pts;
  Mask top = (Mask{1} << (n + 1));
  pts.reserve(top - 1);
  for (Mask b = 1; b < top; ++b) pts.emplace_back(b, n + 1);
  return pts;
}

QuadraticForm minus_quadric(int n) {
  if (n < 1) throw std::invalid_argument("minus_quadric: n must be >= 1");
  QuadraticForm q(2 * n - 1);
  q.set_coeff(0, 0, 1);
  q.set_coeff(1, 1, 1);
  q.set_coeff(0, 1, 1);
  for (int k = 1; k < n; ++k) q.set_coeff(2 * k, 2 * k + 1, 1);
  return q;
}

PointSet variety_points(const QuadraticForm& form) {
  PointSet s;
  s.dim = form.dim();
  for (const auto& p : enumerate_projective_points(form.dim()))
    if (form.evaluate(p) == 0) s.points.push_back(p);
  return s;
}

namespace {

std::vector<int> index_table(const PointSet& s) {
  std::vector<int> idx(std::size_t{1} << (s.dim + 1), -1);
  for (int i = 0; i < static_cast<int>(s.points.size()); ++i)
    idx[s.points[i].rep.bits] = i;
  return idx;
}

}  // namespace

std::vector<Line> lines_in_point_set_serial(const PointSet& s) {
  const std::vector<int> idx = index_table(s);
  const int n = static_cast<int>(s.points.size());
  std::vector<Line> lines;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int k = idx[s.points[i].rep.bits ^ s.points[j].rep.bits];
      if (k > j) lines.push_back({i, j, k});
    }
  return lines;
}

std::vector<Line> lines_in_point_set_parallel(const PointSet& s) {
  const std::vector<int> idx = index_table(s);
  const int n = static_cast<int>(s.points.size());
  std::vector<Line> lines;
#ifdef _OPENMP
#pragma omp parallel
  {
    std::vector<Line> local;
#pragma omp for schedule(static) nowait
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        int k = idx[s.points[i].rep.bits ^ s.points[j].rep.bits];
        if (k > j) local.push_back({i, j, k});
      }
#pragma omp critical
    lines.insert(lines.end(), local.begin(), local.end());
  }
  std::sort(lines.begin(), lines.end());
#else
  lines = lines_in_point_set_serial(s);
#endif
  return lines;
}

std::vector<Line> lines_in_point_set(const PointSet& s) {
  return lines_in_point_set_parallel(s);
}

long long point_count_formula(int n) {
  if (n < 1) throw std::invalid_argument("point_count_formula: n must be >= 1");
  return (1LL << (n - 1)) * ((1LL << n) - 1) - 1;
}

QuadricClass classify_quadric(const QuadraticForm& form) {
  QuadricClass c{};
  c.radical_dim = form.radical_dim();
  c.point_count = static_cast<long long>(variety_points(form).points.size());
  if (c.radical_dim > 0) {
    c.kind = QuadricKind::Degenerate;
    return c;
  }
  // Trivial radical forces an even number of variables (an alternating
  // matrix of odd size is singular), so the ambient dimension is odd here.
  if (form.dim() % 2 == 0)
    throw std::invalid_argument(
        "classify_quadric: even ambient dimension cannot be nondegenerate");
  int n = (form.dim() + 1) / 2;
  c.half_rank = n;
  if (c.point_count == point_count_formula(n)) {
    c.kind = QuadricKind::Elliptic;
  } else if (c.point_count == (1LL << (n - 1)) * ((1LL << n) + 1) - 1) {
    c.kind = QuadricKind::Hyperbolic;
  } else {
    throw std::logic_error("classify_quadric: nondegenerate count matches neither type");
  }
  return c;
}

const char* to_string(QuadricKind k) {
  switch (k) {
    case QuadricKind::Elliptic: return "elliptic";
    case QuadricKind::Hyperbolic: return "hyperbolic";
    case QuadricKind::Degenerate: return "degenerate";
  }
  return "?";
}

}  // namespace fgv::gf2
