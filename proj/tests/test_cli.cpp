// Copyright 2026 the k3strata authors
//
// Licensed under the Apache License, Version 2.0
// (https://www.apache.org/licenses/LICENSE-2.0).
//
// End-to-end checks of the installed command surface: real process, real
// argv, real exit codes.

#include <catch2/catch_amalgamated.hpp>
#include <filesystem>
#include <fstream>

#include "k3strata/k3strata.hpp"
#include "support/subprocess.hpp"

using namespace k3strata;
using testsupport::run_cli;

namespace {
const std::string kCli = K3STRATA_CLI_PATH;

json parse(const std::string& text) { return json::parse(text); }

std::vector<std::int64_t> as_int_vector(const json& arr) {
  std::vector<std::int64_t> out;
  for (const json& v : arr) out.push_back(v.get<std::int64_t>());
  return out;
}
}  // namespace

TEST_CASE("usage errors exit 2, help exits 0") {
  CHECK(run_cli(kCli, "").exit_code == 2);
  CHECK(run_cli(kCli, "--help").exit_code == 0);
  CHECK(run_cli(kCli, "polygon").exit_code == 2);
  CHECK(run_cli(kCli, "--no-such-flag").exit_code == 2);
  CHECK(run_cli(kCli, "polygon from-height --height 3 --bogus").exit_code == 2);
  CHECK(run_cli(kCli, "kummer degree --n 9 --dprime 26 --parts 1,1").exit_code == 2);
  CHECK(run_cli(kCli, "nonexistent-command").exit_code == 2);
  // exclusive flags
  CHECK(run_cli(kCli,
                "kummer check-ampleness --n 9 --dprime 26 --parts "
                "1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1 --variant general "
                "--min-intersection 3")
            .exit_code == 2);
}

TEST_CASE("polygon commands") {
  const auto from_height = run_cli(kCli, "polygon from-height --height 3");
  REQUIRE(from_height.exit_code == 0);
  CHECK(parse(from_height.out) ==
        to_json(newton_from_height(HeightValue::finite(3))));

  const auto infinite = run_cli(kCli, "polygon from-height --height infinite");
  REQUIRE(infinite.exit_code == 0);
  CHECK(parse(infinite.out)["segments"] == json::array({json::array({1, 1, 22})}));

  const std::string line_polygon =
      to_json(newton_from_height(HeightValue::infinite())).dump();
  const auto classified = run_cli(kCli, "polygon classify", line_polygon);
  REQUIRE(classified.exit_code == 0);
  CHECK(parse(classified.out)["class"] == "supersingular");
  CHECK(parse(classified.out)["height"] == "infinite");

  // file input
  const auto dir = testsupport::fresh_temp_dir("polygon-input");
  const auto path = dir / "polygon.json";
  std::ofstream(path) << to_json(newton_from_height(HeightValue::finite(4))).dump();
  const auto from_file =
      run_cli(kCli, "polygon classify --input " + path.string());
  REQUIRE(from_file.exit_code == 0);
  CHECK(parse(from_file.out)["height"] == 4);
  CHECK(parse(from_file.out)["class"] == "finite-height");
  std::filesystem::remove_all(dir);

  // domain errors surface their names on stderr
  const auto fake = run_cli(
      kCli, "polygon classify",
      R"({"weight":2,"rank":22,"segments":[[0,1,2],[1,1,18],[2,1,2]]})");
  CHECK(fake.exit_code == 1);
  CHECK(fake.err.find("NonIntegralHeight") == 0);

  const auto asym = run_cli(
      kCli, "polygon classify",
      R"({"weight":2,"rank":22,"segments":[[0,1,2],[1,1,20]]})");
  CHECK(asym.exit_code == 1);
  CHECK(asym.err.find("SymmetryViolation") == 0);

  const auto garbage = run_cli(kCli, "polygon classify", "not json at all");
  CHECK(garbage.exit_code == 1);
  CHECK(garbage.err.find("MalformedInput") == 0);
}

TEST_CASE("kummer commands") {
  const auto slopes = run_cli(kCli, "kummer slopes --profile 0,1/2,1/2,1");
  REQUIRE(slopes.exit_code == 0);
  const json sj = parse(slopes.out);
  CHECK(sj["class"] == "finite-height");
  CHECK(sj["height"] == 2);
  CHECK(sj["polygon"]["segments"] ==
        json::array({json::array({1, 2, 2}), json::array({1, 1, 18}),
                     json::array({3, 2, 2})}));

  const auto bad_profile = run_cli(kCli, "kummer slopes --profile 0,1/4,3/4,1");
  CHECK(bad_profile.exit_code == 1);
  CHECK(bad_profile.err.find("BreakIntegralityViolation") == 0);

  const auto degree = run_cli(
      kCli, "kummer degree --n 9 --dprime 26 --parts 1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1");
  REQUIRE(degree.exit_code == 0);
  CHECK(parse(degree.out)["degree"] == 4196);
  CHECK(parse(degree.out)["self_intersection"] == 16784);

  const auto invalid = run_cli(
      kCli, "kummer degree --n 0 --dprime 26 --parts 1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1");
  CHECK(invalid.exit_code == 1);
  CHECK(invalid.err.find("InvalidParams") == 0);

  const auto ample = run_cli(
      kCli,
      "kummer check-ampleness --n 9 --dprime 26 --parts "
      "4,4,4,4,4,4,4,4,4,4,4,4,4,4,4,4 --variant non-product");
  REQUIRE(ample.exit_code == 0);
  CHECK(parse(ample.out)["report"]["ample"] == true);
  CHECK(parse(ample.out)["variant"] == "non-product");

  const auto not_ample = run_cli(
      kCli,
      "kummer check-ampleness --n 1 --dprime 32 --parts "
      "1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1 --min-intersection 3");
  REQUIRE(not_ample.exit_code == 0);
  CHECK(parse(not_ample.out)["report"]["ample"] == false);
  CHECK(parse(not_ample.out)["report"]["generic_branch_ok"] == false);
}

TEST_CASE("coverage commands") {
  const auto residues =
      run_cli(kCli, "coverage residues --modulus 7 --parts 2 --max-part 2");
  REQUIRE(residues.exit_code == 0);
  CHECK(parse(residues.out)["members"] == json::array({1, 2, 5}));
  CHECK(parse(residues.out)["full"] == false);

  const auto full_coverage = run_cli(kCli, "coverage verify-lemma-res");
  REQUIRE(full_coverage.exit_code == 0);
  CHECK(parse(full_coverage.out)["ok"] == true);

  const auto remark_false = run_cli(kCli, "coverage verify-remark --n 4");
  REQUIRE(remark_false.exit_code == 0);
  CHECK(parse(remark_false.out)["ok"] == false);
  CHECK(parse(remark_false.out)["part_bound"] == 1);

  const auto remark_empty = run_cli(kCli, "coverage verify-remark --n 2");
  CHECK(remark_empty.exit_code == 1);
  CHECK(remark_empty.err.find("PartBoundEmpty") == 0);

  const auto threshold = run_cli(
      kCli, "coverage threshold --n 9 --dprime-min 26 --max-part 4");
  REQUIRE(threshold.exit_code == 0);
  CHECK(parse(threshold.out)["threshold"] == 4196);
  CHECK(parse(threshold.out)["witnesses"].size() == 162);

  const auto incomplete = run_cli(
      kCli, "coverage threshold --n 9 --dprime-min 26 --max-part 1");
  CHECK(incomplete.exit_code == 1);
  CHECK(incomplete.err.find("IncompleteResidueCoverage") == 0);

  const auto report = run_cli(kCli, "coverage report-paper-bounds");
  REQUIRE(report.exit_code == 0);
  const json rj = parse(report.out);
  CHECK(rj["families"][1]["threshold"] == 48);
  CHECK(rj["families"][2]["threshold"] == 963);
  CHECK(rj["families"][1]["ampleness_discrepancy"] == true);
}

TEST_CASE("csv and output-file modes") {
  const auto csv = run_cli(kCli, "coverage report-paper-bounds --format csv");
  REQUIRE(csv.exit_code == 0);
  CHECK(csv.out ==
        "family,n,dprime_min,part_bound,threshold,witness_count\n"
        "general,9,26,4,4196,162\n"
        "even,1,32,1,48,1\n"
        "odd,1,512,2,963,1\n");

  // flag placement before the subcommand works too
  const auto csv_front =
      run_cli(kCli, "--format csv coverage report-paper-bounds");
  REQUIRE(csv_front.exit_code == 0);
  CHECK(csv_front.out == csv.out);

  const auto dir = testsupport::fresh_temp_dir("cli-output");
  const auto path = dir / "report.json";
  const auto to_file = run_cli(
      kCli, "coverage verify-lemma-res --output " + path.string());
  REQUIRE(to_file.exit_code == 0);
  CHECK(to_file.out.empty());
  CHECK(parse(testsupport::slurp(path))["ok"] == true);
  std::filesystem::remove_all(dir);
}

TEST_CASE("byte-identical reruns") {
  const auto first = run_cli(kCli, "coverage report-paper-bounds");
  const auto second = run_cli(kCli, "coverage report-paper-bounds");
  CHECK(first.out == second.out);

  const auto t1 = run_cli(kCli, "coverage threshold --n 9 --dprime-min 26 --max-part 4");
  const auto t2 = run_cli(kCli, "coverage threshold --n 9 --dprime-min 26 --max-part 4");
  CHECK(t1.out == t2.out);
}

TEST_CASE("curve commands, single and batch") {
  const auto single = run_cli(kCli, "curve count --p 7 --a 1 --b 0");
  REQUIRE(single.exit_code == 0);
  CHECK(parse(single.out)["point_count"] == 8);
  CHECK(parse(single.out)["supersingular"] == true);

  const auto singular = run_cli(kCli, "curve count --p 7 --a 0 --b 0");
  CHECK(singular.exit_code == 1);
  CHECK(singular.err.find("SingularCurve") == 0);

  const auto bad_field = run_cli(kCli, "curve count --p 6 --a 1 --b 1");
  CHECK(bad_field.exit_code == 1);
  CHECK(bad_field.err.find("InvalidPrimeField") == 0);

  const std::string batch =
      R"({"p":7,"a":1,"b":0})" "\n"
      R"({"p":5,"a":1,"b":1})" "\n"
      R"({"p":5,"a":0,"b":1})" "\n";
  const auto rows = run_cli(kCli, "curve count --input -", batch);
  REQUIRE(rows.exit_code == 0);
  const json rj = parse(rows.out);
  REQUIRE(rj.size() == 3);
  CHECK(rj[0]["point_count"] == 8);
  CHECK(rj[1]["point_count"] == 9);
  CHECK(rj[2]["point_count"] == 6);

  // a capped pool returns the same rows in the same order
  const auto pinned =
      run_cli("K3STRATA_THREADS=2 " + kCli, "curve count --input -", batch);
  REQUIRE(pinned.exit_code == 0);
  CHECK(pinned.out == rows.out);

  const auto csv_rows = run_cli(kCli, "curve count --input - --format csv", batch);
  REQUIRE(csv_rows.exit_code == 0);
  CHECK(csv_rows.out ==
        "p,a,b,point_count,trace,supersingular\n"
        "7,1,0,8,0,true\n"
        "5,1,1,9,-3,false\n"
        "5,0,1,6,0,true\n");

  // one bad line poisons the whole batch
  const auto poisoned = run_cli(kCli, "curve count --input -",
                                R"({"p":7,"a":1,"b":0})" "\n"
                                R"({"p":7,"a":0,"b":0})" "\n");
  CHECK(poisoned.exit_code == 1);
  CHECK(poisoned.err.find("SingularCurve") == 0);
}

TEST_CASE("surface commands, single and batch") {
  const auto special = run_cli(kCli, "surface classify --p 7 --first 1,0 --second 1,0");
  REQUIRE(special.exit_code == 0);
  const json sj = parse(special.out);
  CHECK(sj["class"] == "supersingular");
  CHECK(sj["height"] == "infinite");
  CHECK(sj["stratum"]["label"] == "Sigma(10)");
  CHECK(sj["stratum"]["strict"] == false);

  const auto ordinary = run_cli(kCli, "surface classify --p 5 --first 1,1 --second 1,1");
  REQUIRE(ordinary.exit_code == 0);
  CHECK(parse(ordinary.out)["stratum"]["label"] == "M(1)");

  const std::string batch =
      R"({"p":5,"first":{"a":1,"b":1},"second":{"a":0,"b":1}})" "\n"
      R"({"p":7,"first":{"a":1,"b":0},"second":{"a":1,"b":0}})" "\n";
  const auto rows = run_cli(kCli, "surface classify --input -", batch);
  REQUIRE(rows.exit_code == 0);
  const json rj = parse(rows.out);
  REQUIRE(rj.size() == 2);
  CHECK(rj[0]["stratum"]["label"] == "M(2)");
  CHECK(rj[0]["class"] == "finite-height");
  CHECK(rj[1]["stratum"]["label"] == "Sigma(10)");

  const auto csv_out = run_cli(kCli, "surface classify --input - --format csv", batch);
  REQUIRE(csv_out.exit_code == 0);
  CHECK(csv_out.out ==
        "p,a1,b1,a2,b2,class,height,stratum,strict\n"
        "5,1,1,0,1,finite-height,2,M(2),true\n"
        "7,1,0,1,0,supersingular,infinite,Sigma(10),false\n");
}

TEST_CASE("fixture seeding regenerates the recorded values") {
  const auto dir = testsupport::fresh_temp_dir("fixtures");
  const auto seeded =
      run_cli(kCli, "--seed-fixtures --fixtures-dir " + dir.string());
  REQUIRE(seeded.exit_code == 0);
  CHECK(parse(seeded.out)["written"].size() == 7);

  const json sums = parse(testsupport::slurp(dir / "sums_2_2.json"));
  CHECK(sums["values"] == json::array({2, 5, 8}));
  // and the library path agrees with the enumerated fixture
  CHECK(as_int_vector(sums["values"]) == reachable_sums(2, 2).values());

  const json residues = parse(testsupport::slurp(dir / "residues_7_2_2.json"));
  CHECK(residues["members"] == json::array({1, 2, 5}));
  CHECK(as_int_vector(residues["members"]) ==
        reachable_residues(7, 2, 2).members());

  const json capped = parse(testsupport::slurp(dir / "residues_162_16_3.json"));
  CHECK(capped["full"] == false);
  CHECK(capped["count"] == 108);
  CHECK(capped["count"].get<std::int64_t>() ==
        reachable_residues(162, 16, 3).count());

  const json unique = parse(testsupport::slurp(dir / "newton_height_10.json"));
  CHECK(unique["candidates"] == 1);
  CHECK(polygon_from_json(unique["polygon"]) ==
        newton_from_height(HeightValue::finite(10)));

  const json degrees = parse(testsupport::slurp(dir / "degrees_n9_d26_coprime5.json"));
  CHECK(degrees["count"] == 171);
  CHECK(as_int_vector(degrees["values"]) ==
        achievable_degrees(9, 26, 26, 4, {Parity::Any, 5}));

  const json counts = parse(testsupport::slurp(dir / "curve_counts.json"));
  REQUIRE(counts.size() == 3);
  for (const json& row : counts) {
    const EllipticCurve e = curve_from_json(row);
    CHECK(count_points(e).point_count == row["point_count"]);
  }

  const json pairwise = parse(testsupport::slurp(dir / "pairwise_mixed.json"));
  CHECK(pairwise["sums"] ==
        json::array({"1/2", "1/2", "1", "1", "3/2", "3/2"}));

  std::filesystem::remove_all(dir);
}
