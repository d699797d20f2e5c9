#include "doctest.h"

#include <stdexcept>

#include <cstdio>

#include <nlohmann/json.hpp>

#include "fgv/catalog.hpp"
#include "fgv/io.hpp"

using namespace fgv;
using nlohmann::json;

TEST_CASE("json round trip for coordinate configurations") {
  for (const char* name : {"q-minus2", "q-minus3", "p2", "p3"}) {
    auto c = *catalog::by_name(name);
    auto back = io::configuration_from_json(io::to_json(c));
    CHECK(back.n == c.n);
    CHECK(back.lines == c.lines);
    CHECK(back.ambient_dim == c.ambient_dim);
    CHECK(back.coords == c.coords);
  }
}

TEST_CASE("json round trip for abstract configurations") {
  auto s = catalog::schlaefli_configuration();
  auto j = io::to_json(s);
  CHECK(j["points"].is_number_integer());
  auto back = io::configuration_from_json(j);
  CHECK(back.n == 27);
  CHECK(back.lines == s.lines);
  CHECK(back.labels == s.labels);
}

TEST_CASE("file round trip") {
  auto c = catalog::quadric_configuration(3);
  std::string path = "roundtrip_tmp.json";
  io::save_configuration(c, path);
  auto back = io::load_configuration(path);
  std::remove(path.c_str());
  CHECK(back.n == c.n);
  CHECK(back.lines == c.lines);

  CHECK_THROWS_AS(io::load_configuration("no/such/file.json"), std::runtime_error);
}

TEST_CASE("schema violations are rejected") {
  CHECK_THROWS_AS(io::configuration_from_json(json{{"lines", json::array()}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(io::configuration_from_json(
                      json{{"points", json::array({json::array({1, 0})})}}),
                  std::invalid_argument);  // coordinates without dim
  CHECK_THROWS_AS(
      io::configuration_from_json(
          json{{"dim", 2}, {"points", json::array({json::array({1, 0})})}}),
      std::invalid_argument);  // wrong point length
  CHECK_THROWS_AS(
      io::configuration_from_json(
          json{{"dim", 1}, {"points", json::array({json::array({0, 0})})}}),
      std::invalid_argument);  // zero vector
  CHECK_THROWS_AS(io::configuration_from_json(
                      json{{"points", 3}, {"lines", json::array({json::array({0, 1})})}}),
                  std::invalid_argument);  // line is not a triple
  CHECK_THROWS_AS(io::configuration_from_json(
                      json{{"points", 3}, {"lines", json::array({json::array({0, 1, 7})})}}),
                  std::invalid_argument);  // index out of range
}

TEST_CASE("dot export") {
  LineConfiguration l;
  l.n = 3;
  l.lines = {{0, 1, 2}};
  auto dot = io::to_dot(l, "g");
  CHECK(dot.find("graph g {") == 0);
  CHECK(dot.find("0 -- 1;") != std::string::npos);
  CHECK(dot.find("0 -- 2;") != std::string::npos);
  CHECK(dot.find("1 -- 2;") != std::string::npos);

  // deterministic
  CHECK(io::to_dot(catalog::fano()) == io::to_dot(catalog::fano()));
}

TEST_CASE("report serialization shapes") {
  auto p = profile(catalog::quadric_configuration(3));
  auto jp = io::to_json(p);
  CHECK(jp["diameter"] == 2);
  CHECK(jp["v"][1] == 10);
  CHECK(jp["vij"]["1,2"] == 8);

  auto t = derive_parameters(5, 0, 0, false);
  auto jt = io::to_json(t);
  CHECK(jt["w_total"] == 27);
  CHECK(jt["w2"] == 16);

  auto jl = io::to_json(ledger::schottky_degree_ledger());
  CHECK(jl["total"] == 119);
  CHECK(jl["cross_checks_ok"] == true);
}
