#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "fgv/catalog.hpp"
#include "fgv/isomorphism.hpp"

using namespace fgv;

namespace {

LineConfiguration relabel(const LineConfiguration& c, const std::vector<int>& perm) {
  LineConfiguration r;
  r.n = c.n;
  for (const Triple& l : c.lines)
    r.lines.push_back({perm[l[0]], perm[l[1]], perm[l[2]]});
  r.normalize();
  return r;
}

std::vector<int> random_permutation(int n, unsigned seed) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::mt19937 rng(seed);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

bool check_witness(const LineConfiguration& a, const LineConfiguration& b,
                   const std::vector<int>& w) {
  ConfigurationMorphism m;
  m.source = &a;
  m.target = &b;
  m.point_map = w;
  return is_morphism(m) && a.lines.size() == b.lines.size();
}

}  // namespace

TEST_CASE("isomorphism finds witnesses and certifies absence") {
  auto fano = catalog::fano();
  auto shuffled = relabel(fano, random_permutation(7, 1));
  auto w = are_isomorphic(fano, shuffled);
  REQUIRE(w.has_value());
  CHECK(check_witness(fano, shuffled, *w));

  LineConfiguration empty7;
  empty7.n = 7;
  CHECK_FALSE(are_isomorphic(fano, empty7).has_value());
}

TEST_CASE("isomorphism is an equivalence on witnesses") {
  auto q6 = catalog::quadric_configuration(3);
  auto r1 = relabel(q6, random_permutation(27, 2));
  auto r2 = relabel(q6, random_permutation(27, 3));

  auto self = are_isomorphic(q6, q6);
  REQUIRE(self.has_value());  // reflexive

  auto w12 = are_isomorphic(q6, r1);
  auto w23 = are_isomorphic(r1, r2);
  REQUIRE(w12.has_value());
  REQUIRE(w23.has_value());

  // symmetric: the inverse of a witness is a witness
  std::vector<int> inv(27);
  for (int i = 0; i < 27; ++i) inv[(*w12)[i]] = i;
  CHECK(check_witness(r1, q6, inv));

  // transitive: composition of witnesses is a witness
  std::vector<int> comp(27);
  for (int i = 0; i < 27; ++i) comp[i] = (*w23)[(*w12)[i]];
  CHECK(check_witness(q6, r2, comp));
}

TEST_CASE("automorphism group orders") {
  LineConfiguration line;
  line.n = 3;
  line.lines = {{0, 1, 2}};
  CHECK(automorphism_group_order(line) == 6);  // S3

  // |PGL3(F2)| = (8-1)(8-2)(8-4) = 168 as an independent identity
  long long pgl3 = (8 - 1) * (8 - 2) * (8 - 4);
  CHECK(automorphism_group_order(catalog::fano()) == static_cast<std::uint64_t>(pgl3));
}

TEST_CASE("automorphism order is a relabeling invariant") {
  auto fano = catalog::fano();
  auto shuffled = relabel(fano, random_permutation(7, 4));
  CHECK(automorphism_group_order(fano) == automorphism_group_order(shuffled));
}

TEST_CASE("point transitivity") {
  CHECK(is_point_transitive(catalog::quadric_configuration(3)));
  CHECK(is_point_transitive(catalog::fano()));

  LineConfiguration mixed;  // a line plus an isolated point
  mixed.n = 4;
  mixed.lines = {{0, 1, 2}};
  CHECK_FALSE(is_point_transitive(mixed));
}

TEST_CASE("graph isomorphism helper") {
  // C5 vs C5 relabeled, and C5 vs P5 (path) as the negative
  auto cycle = [](const std::vector<int>& order) {
    std::vector<Bitset> adj(5, Bitset(5));
    for (int i = 0; i < 5; ++i) {
      int a = order[i], b = order[(i + 1) % 5];
      adj[a].set(b);
      adj[b].set(a);
    }
    return adj;
  };
  CHECK(graph_isomorphism(cycle({0, 1, 2, 3, 4}), cycle({2, 4, 1, 0, 3})).has_value());

  std::vector<Bitset> path(5, Bitset(5));
  for (int i = 0; i + 1 < 5; ++i) {
    path[i].set(i + 1);
    path[i + 1].set(i);
  }
  CHECK_FALSE(graph_isomorphism(cycle({0, 1, 2, 3, 4}), path).has_value());
}
