#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>

#include "degflag/report.hpp"
#include "degflag/serialize.hpp"

using namespace degflag;
using nlohmann::json;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("degflag-test-" + std::to_string(std::rand()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("serialization shapes") {
  const Permutation sigma = sigma_n(2);
  CHECK(to_json(sigma) == json::array({3, 1, 4, 2}));
  CHECK(permutation_from_json(to_json(sigma)) == sigma);

  const PoincarePolynomial poly{{1, 2, 3, 1}};
  CHECK(to_json(poly) == json{{"coeffs", {1, 2, 3, 1}}});

  const Subspace u = Subspace::coordinate(3, 4, {1, 3});
  const json ju = to_json(u);
  CHECK(ju.at("p") == 3);
  CHECK(ju.at("ambient_dim") == 4);
  CHECK(ju.at("matrix") == json::array({{1, 0, 0, 0}, {0, 0, 1, 0}}));

  const DegFlagPoint pt{{u, Subspace::full(3, 4)}};
  const json jpt = to_json(pt);
  CHECK(jpt.at("subspaces").size() == 2);

  const Quiver q(2);
  RnPoint rn;
  for (int k = 1; k <= 3; ++k) rn.z.push_back(Subspace::zero(2, 3));
  const json jq = to_json(q, rn);
  CHECK(jq.contains("a_1_2"));
  CHECK(jq.contains("a_1_1"));
  CHECK(jq.contains("a_2_2"));
}

TEST_CASE("report keys are stable and parameter sensitive") {
  const json params{{"n", 2}, {"p", 2}};
  CHECK(report_key("count", params) == report_key("count", params));
  CHECK(report_key("count", params) != report_key("verify", params));
  CHECK(report_key("count", params) != report_key("count", json{{"n", 3}, {"p", 2}}));
}

TEST_CASE("cache replays stored bytes") {
  TempDir tmp;
  const ReportCache cache(tmp.path, true);
  const json params{{"n", 1}};
  int computed = 0;
  auto compute = [&]() {
    ++computed;
    RunReport rep;
    rep.command = "count";
    rep.parameters = params;
    rep.results["count"] = 3;
    rep.wall_ms = 17;
    return rep;
  };
  const std::string first = run_cached(cache, "count", params, compute);
  const std::string second = run_cached(cache, "count", params, compute);
  const std::string third = run_cached(cache, "count", params, compute);
  CHECK(computed == 1);
  CHECK(first == second);
  CHECK(second == third);
  CHECK(json::parse(first).at("results").at("count") == 3);

  // disabled cache recomputes every time
  const ReportCache off(tmp.path / "other", false);
  run_cached(off, "count", params, compute);
  run_cached(off, "count", params, compute);
  CHECK(computed == 3);
}

TEST_CASE("csv flattening") {
  RunReport rep;
  rep.command = "count";
  rep.parameters = json{{"n", 2}};
  rep.results["count"] = 25;
  const std::string csv = rep.to_csv();
  CHECK(csv.find("key,value") == 0);
  CHECK(csv.find("results.count,25") != std::string::npos);
  CHECK(csv.find("parameters.n,2") != std::string::npos);
}
