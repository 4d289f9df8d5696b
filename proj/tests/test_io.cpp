/*
   Copyright 2026 The weyldim Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "doctest.h"
#include "support.hpp"
#include "weyldim/error.hpp"
#include "weyldim/io.hpp"

using namespace wdtest;

namespace {

const char* kExample = R"({
  "n": 2, "partition": [1, 1], "m": 1,
  "relations": [[
    {"coeff": "1", "alpha": [1, 0], "beta": [0, 1], "gen": 1},
    {"coeff": 1, "alpha": [0, 2], "beta": [1, 0], "gen": 1}
  ]]
})";

std::string with_relations(const std::string& rel, const std::string& header = R"("n": 2, "partition": [1, 1], "m": 2)") {
  return "{" + header + R"(, "relations": [)" + rel + "]}";
}

void expect_rejected(const std::string& doc, const std::string& fragment) {
  try {
    io::parse_presentation(doc);
    FAIL("accepted: " << doc);
  } catch (const InputError& e) {
    CHECK_MESSAGE(std::string(e.what()).find(fragment) != std::string::npos, e.what());
  }
}

}  // namespace

TEST_CASE("parse a presentation") {
  auto pres = io::parse_presentation(kExample);
  CHECK(pres.partition == Partition({1, 1}));
  CHECK(pres.rank == 1);
  REQUIRE(pres.relations.size() == 1);
  ModuleElement f(2, 1);
  f.add_term(term(1, {1, 0}, {0, 1}), 1);
  f.add_term(term(1, {0, 2}, {1, 0}), 1);
  CHECK(pres.relations[0] == f);
}

TEST_CASE("duplicate terms are summed") {
  auto pres = io::parse_presentation(with_relations(
      R"([{"coeff": "1/2", "alpha": [1, 0], "beta": [0, 0], "gen": 1},
          {"coeff": "1/3", "alpha": [1, 0], "beta": [0, 0], "gen": 1},
          {"coeff": "2", "alpha": [0, 0], "beta": [0, 0], "gen": 2}])"));
  CHECK(pres.relations[0].coeff(term(1, {1, 0}, {0, 0})) == Rational(5, 6));
}

TEST_CASE("render and parse round trip") {
  auto pres = io::parse_presentation(kExample);
  auto text = io::render_presentation(pres);
  auto again = io::parse_presentation(text);
  CHECK(again.relations == pres.relations);
  CHECK(io::render_presentation(again) == text);

  Rng g(12);
  for (int k = 0; k < 30; ++k) {
    auto r = random_presentation(g, 3, 3, 2, 2, 2, 3);
    auto t = io::render_presentation(r);
    auto back = io::parse_presentation(t);
    CHECK(back.relations == r.relations);
    CHECK(back.partition == r.partition);
    CHECK(io::render_presentation(back) == t);
  }
}

TEST_CASE("schema violations carry a location") {
  expect_rejected(with_relations(R"([{"coeff": "1", "alpha": [0, 0], "beta": [0, 0], "gen": 3}])"),
                  "relation 1, term 1, gen");
  expect_rejected(with_relations(R"([{"coeff": "1", "alpha": [0, -1], "beta": [0, 0], "gen": 1}])"),
                  "negative");
  expect_rejected(with_relations(R"([{"coeff": "1", "alpha": [0], "beta": [0, 0], "gen": 1}])"),
                  "alpha");
  expect_rejected(with_relations(R"([{"coeff": "0", "alpha": [0, 0], "beta": [0, 0], "gen": 1}])"),
                  "nonzero");
  expect_rejected(with_relations(R"([{"coeff": "1", "alpha": [1, 0], "beta": [0, 0], "gen": 1},
                                     {"coeff": "-1", "alpha": [1, 0], "beta": [0, 0], "gen": 1}])"),
                  "relation 1");
  expect_rejected(with_relations("[]", R"("n": 3, "partition": [1, 1], "m": 1)"), "partition");
  expect_rejected(with_relations("[]", R"("n": 2, "partition": [2, 0], "m": 1)"), "positive");
  expect_rejected(with_relations("[]", R"("n": 2, "partition": [2], "m": 1, "extra": 1)"), "unknown");
  expect_rejected(with_relations("[]", R"("n": 2, "partition": [2])"), "\"m\"");
  expect_rejected(with_relations(R"([{"coeff": "1/x", "alpha": [0, 0], "beta": [0, 0], "gen": 1}])"),
                  "coeff");
  expect_rejected("{not json", "malformed");
  expect_rejected("[]", "object");
}

TEST_CASE("report serialization is canonical") {
  auto pres = io::parse_presentation(kExample);
  auto rep = dimension_polynomial(pres);
  auto a = io::report_json(rep);
  auto b = io::report_json(dimension_polynomial(io::parse_presentation(kExample)));
  CHECK(a == b);
  CHECK(a.find("\"holonomic\": false") != std::string::npos);
  CHECK(a.find("\"psi_path\"") != std::string::npos);
  auto inv = io::invariants_json(rep);
  CHECK(inv.find("\"d\": 3") != std::string::npos);
  CHECK(inv.find("\"1/2\"") != std::string::npos);
  auto gb = io::basis_json(rep.basis);
  CHECK(gb.find("\"certified_stages\"") != std::string::npos);
  auto bern = io::bernstein_json(bernstein_polynomial(pres));
  CHECK(bern.find("\"e\": 3") != std::string::npos);
}
