#include "fgv/catalog.hpp"

#include <stdexcept>

#include "fgv/isomorphism.hpp"

namespace fgv::catalog {

LineConfiguration projective_configuration(int n) {
  if (n < 1) throw std::invalid_argument("projective_configuration: n must be >= 1");
  gf2::PointSet s;
  s.dim = n;
  s.points = gf2::enumerate_projective_points(n);
  return configuration_from_point_set(s, gf2::lines_in_point_set(s));
}

LineConfiguration fano() { return projective_configuration(2); }

LineConfiguration quadric_configuration(int n) {
  gf2::PointSet s = gf2::variety_points(gf2::minus_quadric(n));
  return configuration_from_point_set(s, gf2::lines_in_point_set(s));
}

LineConfiguration schlaefli_configuration() {
  LineConfiguration c;
  c.n = 27;
  c.labels.resize(27);
  // 0..5 = a1..a6, 6..11 = b1..b6, 12.. = cij in lex order
  auto a = [](int i) { return i; };
  auto b = [](int i) { return 6 + i; };
  int cidx[6][6];
  int next = 12;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      cidx[i][j] = cidx[j][i] = next;
      c.labels[next] = "c" + std::to_string(i + 1) + std::to_string(j + 1);
      ++next;
    }
  for (int i = 0; i < 6; ++i) {
    c.labels[a(i)] = "a" + std::to_string(i + 1);
    c.labels[b(i)] = "b" + std::to_string(i + 1);
  }
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (i != j) c.lines.push_back({a(i), b(j), cidx[i][j]});
  // {cij, ckl, cmn} over the 15 partitions of {1..6} into three pairs
  for (int j = 1; j < 6; ++j)
    for (int k = 1; k < 6; ++k)
      for (int l = k + 1; l < 6; ++l) {
        if (k == j || l == j) continue;
        int rest[2], r = 0;
        for (int x = 1; x < 6; ++x)
          if (x != j && x != k && x != l) rest[r++] = x;
        if (k < rest[0])  // emit each partition once
          c.lines.push_back({cidx[0][j], cidx[k][l], cidx[rest[0]][rest[1]]});
      }
  c.normalize();
  return c;
}

LineConfiguration isolated_points(int n) {
  if (n < 0) throw std::invalid_argument("isolated_points: n must be >= 0");
  LineConfiguration c;
  c.n = n;
  return c;
}

LineConfiguration p1_power(int n) {
  if (n < 1) throw std::invalid_argument("p1_power: n must be >= 1");
  std::vector<LineConfiguration> factors(n, projective_configuration(1));
  return product_configuration(factors);
}

bool homogeneity_check(const LineConfiguration& c) { return is_point_transitive(c); }

std::optional<LineConfiguration> by_name(const std::string& name) {
  auto suffix_int = [&](const std::string& prefix) -> std::optional<int> {
    if (name.rfind(prefix, 0) != 0) return std::nullopt;
    std::string rest = name.substr(prefix.size());
    if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
      return std::nullopt;
    return std::stoi(rest);
  };
  if (name == "fano") return fano();
  if (name == "schlaefli") return schlaefli_configuration();
  if (auto n = suffix_int("q-minus")) return quadric_configuration(*n);
  if (auto n = suffix_int("p1x")) return p1_power(*n);
  if (auto n = suffix_int("points")) return isolated_points(*n);
  if (auto n = suffix_int("p")) return projective_configuration(*n);
  return std::nullopt;
}

}  // namespace fgv::catalog
