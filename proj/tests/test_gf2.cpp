#include "doctest.h"

#include <stdexcept>

#include <set>

#include "fgv/gf2.hpp"

using namespace fgv::gf2;

TEST_CASE("projective point enumeration counts and determinism") {
  CHECK(enumerate_projective_points(2).size() == 7);  // Fano vertices
  CHECK(enumerate_projective_points(0).size() == 1);
  CHECK(enumerate_projective_points(7).size() == 255);

  auto a = enumerate_projective_points(4);
  auto b = enumerate_projective_points(4);
  CHECK(a == b);
  for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1].rep.bits < a[i].rep.bits);
}

TEST_CASE("minus quadric forms") {
  CHECK(minus_quadric(1).to_string() == "x1^2+x1x2+x2^2");
  CHECK(minus_quadric(2).to_string() == "x1^2+x1x2+x2^2+x3x4");
  CHECK(minus_quadric(2).dim() == 3);
  CHECK(minus_quadric(3).dim() == 5);
  CHECK(minus_quadric(3).vars() == 6);
  CHECK_THROWS_AS(minus_quadric(0), std::invalid_argument);
}

TEST_CASE("evaluate") {
  auto q2 = minus_quadric(1);
  CHECK(q2.evaluate(ProjectivePoint(0b01, 2)) == 1);  // x1^2 = 1
  auto q4 = minus_quadric(2);
  CHECK(q4.evaluate(ProjectivePoint(0b1100, 4)) == 1);  // x3 x4 = 1
  CHECK(q4.evaluate(ProjectivePoint(0b0011, 4)) == 1);  // 1+1+1
  CHECK_THROWS_AS(q4.evaluate(ProjectivePoint(1, 2)), std::invalid_argument);
}

TEST_CASE("variety point counts match the closed formula") {
  CHECK(variety_points(minus_quadric(1)).points.size() == 0);
  CHECK(variety_points(minus_quadric(2)).points.size() == 5);
  CHECK(variety_points(minus_quadric(3)).points.size() == 27);
  CHECK(variety_points(minus_quadric(4)).points.size() == 119);
  for (int n = 1; n <= 4; ++n)
    CHECK(static_cast<long long>(variety_points(minus_quadric(n)).points.size()) ==
          point_count_formula(n));
}

TEST_CASE("point count formula values") {
  CHECK(point_count_formula(1) == 0);
  CHECK(point_count_formula(3) == 27);
  CHECK(point_count_formula(4) == 119);
}

namespace {

// independent line oracle: triples of set members closed under xor
long long brute_force_line_count(const PointSet& s) {
  std::set<Mask> members;
  for (const auto& p : s.points) members.insert(p.rep.bits);
  long long triples = 0;
  for (Mask a : members)
    for (Mask b : members)
      if (a < b && members.count(a ^ b) && (a ^ b) > b) ++triples;
  return triples;
}

}  // namespace

TEST_CASE("lines in point sets") {
  PointSet p2;
  p2.dim = 2;
  p2.points = enumerate_projective_points(2);
  CHECK(lines_in_point_set(p2).size() == 7);  // the Fano plane

  auto q4 = variety_points(minus_quadric(2));
  CHECK(lines_in_point_set(q4).empty());  // five points and no lines

  auto q6 = variety_points(minus_quadric(3));
  auto lines = lines_in_point_set(q6);
  CHECK(lines.size() == 45);
  CHECK(static_cast<long long>(lines.size()) == brute_force_line_count(q6));
  CHECK(lines.size() == 27 * 5 / 3);  // 5 lines through each of 27 points

  // every line is closed under the F2 span
  for (const auto& l : lines)
    CHECK((q6.points[l[0]].rep.bits ^ q6.points[l[1]].rep.bits) ==
          q6.points[l[2]].rep.bits);

  // double count: sum of point degrees = 3 |lines|
  std::vector<int> deg(q6.points.size(), 0);
  for (const auto& l : lines)
    for (int x : l) ++deg[x];
  long long sum = 0;
  for (int d : deg) sum += d;
  CHECK(sum == 3 * static_cast<long long>(lines.size()));
}

TEST_CASE("serial and parallel line kernels agree") {
  for (int n = 2; n <= 4; ++n) {
    auto s = variety_points(minus_quadric(n));
    CHECK(lines_in_point_set_serial(s) == lines_in_point_set_parallel(s));
  }
  PointSet p4;
  p4.dim = 4;
  p4.points = enumerate_projective_points(4);
  CHECK(lines_in_point_set_serial(p4) == lines_in_point_set_parallel(p4));
}

TEST_CASE("quadric classification") {
  for (int n = 2; n <= 4; ++n) {
    auto c = classify_quadric(minus_quadric(n));
    CHECK(c.kind == QuadricKind::Elliptic);
    CHECK(c.point_count == point_count_formula(n));
  }

  // x1 x2 + x3 x4 on P^3 is hyperbolic with 9 points
  QuadraticForm h(3);
  h.set_coeff(0, 1, 1);
  h.set_coeff(2, 3, 1);
  // brute force over the 15 points of P^3(F2)
  long long zeros = 0;
  for (const auto& p : enumerate_projective_points(3))
    if (h.evaluate(p) == 0) ++zeros;
  CHECK(zeros == 9);
  auto hc = classify_quadric(h);
  CHECK(hc.kind == QuadricKind::Hyperbolic);
  CHECK(hc.point_count == 9);

  // x1 x2 on P^3: radical contains e3, e4
  QuadraticForm d(3);
  d.set_coeff(0, 1, 1);
  auto dc = classify_quadric(d);
  CHECK(dc.kind == QuadricKind::Degenerate);
  CHECK(dc.radical_dim == 2);
}
