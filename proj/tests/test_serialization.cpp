/*
 * Copyright 2026 The mirrorchain authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <sstream>

#include <doctest.h>

#include "mirrorchain/chain.hpp"
#include "mirrorchain/series.hpp"
#include "test_helpers.hpp"

using namespace mirrorchain;

TEST_SUITE("serialization") {

TEST_CASE("chain JSON round trip preserves every bit") {
  const auto chain = testutil::random_mirror_chain(9, 1234);
  const SymmetricChainSpec back = chain_from_json(chain_to_json(chain));
  CHECK(back.n_sites == chain.n_sites);
  CHECK(back.couplings == chain.couplings);
  CHECK(back.fields == chain.fields);
}

TEST_CASE("chain JSON parsing validates structure") {
  nlohmann::json j{{"n_sites", 3},
                   {"couplings", {1.0}},
                   {"fields", {0.0, 0.0, 0.0}}};
  CHECK_THROWS_AS(chain_from_json(j), std::invalid_argument);
}

TEST_CASE("chain hashes separate distinct chains and are stable") {
  const auto a = testutil::random_mirror_chain(6, 1);
  const auto b = testutil::random_mirror_chain(6, 2);
  CHECK(chain_hash(a) == chain_hash(a));
  CHECK(chain_hash(a) != chain_hash(b));
  CHECK(chain_hash(a).size() == 16);
}

TEST_CASE("series CSV carries metadata, header, and round-trip doubles") {
  CorrelationSeries series;
  series.observable = "zz";
  series.sites = {4, 0};
  series.temperature = 1000.0;
  series.chain_hash = "deadbeefdeadbeef";
  series.times = {0.0, 1.0 / 3.0};
  series.values = {{0.25, 0.0}, {-0.125, 1e-17}};
  const std::string csv = to_csv(series);

  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  const nlohmann::json meta = nlohmann::json::parse(line);
  CHECK(meta.at("observable") == "zz");
  CHECK(meta.at("sites") == std::vector<int>{4, 0});
  CHECK(meta.at("temperature") == 1000.0);
  CHECK(meta.at("chain_hash") == "deadbeefdeadbeef");
  std::getline(in, line);
  CHECK(line == "t,re,im");
  std::getline(in, line);
  CHECK(line == "0,0.25,0");
  std::getline(in, line);
  double t, re, im;
  REQUIRE(std::sscanf(line.c_str(), "%lg,%lg,%lg", &t, &re, &im) == 3);
  CHECK(t == 1.0 / 3.0);
  CHECK(re == -0.125);
  CHECK(im == 1e-17);
}

TEST_CASE("infinite temperature serializes as a string marker") {
  CorrelationSeries series;
  series.observable = "xx";
  series.sites = {2};
  series.temperature = std::numeric_limits<double>::infinity();
  series.times = {};
  series.values = {};
  const nlohmann::json j = series_to_json(series);
  CHECK(j.at("temperature") == "inf");
  const std::string csv = to_csv(series);
  CHECK(csv.find("\"inf\"") != std::string::npos);
}

TEST_CASE("series JSON mirrors the CSV content") {
  CorrelationSeries series;
  series.observable = "xx";
  series.sites = {3};
  series.temperature = 0.0;
  series.times = {0.5};
  series.values = {{0.1, -0.2}};
  const nlohmann::json j = series_to_json(series);
  CHECK(j.at("times") == std::vector<double>{0.5});
  CHECK(j.at("re") == std::vector<double>{0.1});
  CHECK(j.at("im") == std::vector<double>{-0.2});
}

}  // TEST_SUITE
