#include "doctest.h"

#include <stdexcept>

#include "fgv/catalog.hpp"
#include "fgv/classify.hpp"
#include "fgv/isomorphism.hpp"

using namespace fgv;

TEST_CASE("classification over five isolated quadric points") {
  auto q4 = catalog::quadric_configuration(2);
  ClassifyOptions opts;
  auto res = classify_v_configurations(q4, opts);
  CHECK(res.verdict == ClassifyVerdict::Complete);
  REQUIRE(res.classes.size() == 1);
  CHECK(res.table.w_total == 27);

  const auto& w = res.classes.front();
  CHECK(w.n == 27);
  CHECK(w.lines.size() == 45);
  CHECK(are_isomorphic(w, catalog::quadric_configuration(3)).has_value());
}

TEST_CASE("classification over a single line recovers the plane") {
  auto p1 = catalog::projective_configuration(1);
  ClassifyOptions opts;
  auto res = classify_v_configurations(p1, opts);
  CHECK(res.verdict == ClassifyVerdict::Complete);
  CHECK_FALSE(res.table.has_w2_row);
  CHECK(res.table.w_total == 7);
  REQUIRE(res.classes.size() == 1);
  CHECK(are_isomorphic(res.classes.front(), catalog::fano()).has_value());
}

TEST_CASE("budget exhaustion is reported, not silently truncated") {
  auto q4 = catalog::quadric_configuration(2);
  ClassifyOptions opts;
  opts.max_nodes = 5;
  auto res = classify_v_configurations(q4, opts);
  CHECK(res.verdict == ClassifyVerdict::BudgetExhausted);
  CHECK_FALSE(res.note.empty());
  CHECK(res.nodes >= 5);
}

TEST_CASE("classification rejects invalid V") {
  LineConfiguration bad;
  bad.n = 4;
  bad.lines = {{0, 1, 2}, {0, 1, 3}};
  CHECK_THROWS_AS(classify_v_configurations(bad, ClassifyOptions{}),
                  std::invalid_argument);
}

TEST_CASE("classification result carries search accounting") {
  auto q4 = catalog::quadric_configuration(2);
  auto res = classify_v_configurations(q4, ClassifyOptions{});
  CHECK(res.nodes > 0);
  CHECK(res.candidates_checked >= res.classes.size());
  CHECK(res.seconds >= 0);
}
