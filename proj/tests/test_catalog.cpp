#include "doctest.h"

#include <stdexcept>

#include "fgv/catalog.hpp"
#include "fgv/isomorphism.hpp"

using namespace fgv;

TEST_CASE("projective configurations") {
  auto fano = catalog::fano();
  CHECK(fano.n == 7);
  CHECK(fano.lines.size() == 7);

  auto p3 = catalog::projective_configuration(3);
  CHECK(p3.n == 15);
  // line count oracle: (2^4 - 1)(2^4 - 2) ordered pairs, 6 per line
  CHECK(p3.lines.size() == (15 * 14) / 6);

  CHECK_THROWS_AS(catalog::projective_configuration(0), std::invalid_argument);
}

TEST_CASE("quadric configurations") {
  auto q4 = catalog::quadric_configuration(2);
  CHECK(q4.n == 5);
  CHECK(q4.lines.empty());
  CHECK(q4.ambient_dim == 3);

  auto q6 = catalog::quadric_configuration(3);
  CHECK(q6.n == 27);
  CHECK(q6.lines.size() == 45);

  auto q8 = catalog::quadric_configuration(4);
  CHECK(q8.n == 119);
  CHECK(q8.lines.size() == 1071);
  CHECK(q8.lines.size() == 119 * 27 / 3);  // 27 lines through each point
}

TEST_CASE("schlaefli configuration") {
  auto s = catalog::schlaefli_configuration();
  CHECK(s.n == 27);
  CHECK(s.lines.size() == 45);
  CHECK(s.labels.size() == 27);
  CHECK(s.labels[0] == "a1");

  ConfigView v(s);
  for (int p = 0; p < 27; ++p) CHECK(v.lines_through[p].size() == 5);
  // no two coplanar triples through a common label
  for (int p = 0; p < 27; ++p) {
    const auto& lp = v.lines_through[p];
    for (std::size_t i = 0; i < lp.size(); ++i)
      for (std::size_t j = i + 1; j < lp.size(); ++j)
        CHECK_FALSE(coplanar(v, lp[i], lp[j]));
  }
  CHECK(validate(s).valid);
}

TEST_CASE("schlaefli and the 27-point quadric are the same configuration") {
  auto iso =
      are_isomorphic(catalog::schlaefli_configuration(), catalog::quadric_configuration(3));
  CHECK(iso.has_value());
}

TEST_CASE("homogeneity") {
  CHECK(catalog::homogeneity_check(catalog::quadric_configuration(3)));
  CHECK(catalog::homogeneity_check(catalog::schlaefli_configuration()));

  LineConfiguration mixed;
  mixed.n = 4;
  mixed.lines = {{0, 1, 2}};
  CHECK_FALSE(catalog::homogeneity_check(mixed));
}

TEST_CASE("catalog name resolution") {
  CHECK(catalog::by_name("fano")->lines.size() == 7);
  CHECK(catalog::by_name("p2")->lines.size() == 7);
  CHECK(catalog::by_name("schlaefli")->n == 27);
  CHECK(catalog::by_name("q-minus3")->n == 27);
  CHECK(catalog::by_name("p1x2")->n == 9);
  CHECK(catalog::by_name("points4")->n == 4);
  CHECK_FALSE(catalog::by_name("nonesuch").has_value());
  CHECK_FALSE(catalog::by_name("p").has_value());
  CHECK_FALSE(catalog::by_name("q-minusX").has_value());
}
