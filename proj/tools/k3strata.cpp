// Copyright 2026 the k3strata authors
//
// Licensed under the Apache License, Version 2.0
// (https://www.apache.org/licenses/LICENSE-2.0).
//
// Command-line front end. Exit codes: 0 success, 1 domain error (named,
// echoed on stderr as "Name: detail"), 2 usage error. Output is JSON by
// default, CSV with --format csv, written to stdout or --output. Batch
// inputs fan out over threads; K3STRATA_THREADS caps the pool (0 = auto).

#include <array>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "k3strata/k3strata.hpp"
#include "support/oracles.hpp"

namespace {

using k3strata::json;

struct Output {
  json body;
  std::string csv;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string piece;
  std::istringstream in(text);
  while (std::getline(in, piece, sep)) out.push_back(piece);
  return out;
}

std::array<std::int64_t, 16> parse_parts(const std::string& text) {
  const std::vector<std::string> tokens = split(text, ',');
  if (tokens.size() != 16)
    throw CLI::ValidationError(
        "--parts: expected 16 comma-separated integers, got " +
        std::to_string(tokens.size()));
  std::array<std::int64_t, 16> out{};
  for (std::size_t i = 0; i < 16; ++i) {
    try {
      std::size_t used = 0;
      out[i] = std::stoll(tokens[i], &used);
      if (used != tokens[i].size()) throw std::invalid_argument(tokens[i]);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--parts: \"" + tokens[i] +
                                 "\" is not an integer");
    }
  }
  return out;
}

std::array<k3strata::Rational, 4> parse_profile(const std::string& text) {
  const std::vector<std::string> tokens = split(text, ',');
  if (tokens.size() != 4)
    throw CLI::ValidationError("--profile: expected 4 comma-separated slopes");
  std::array<k3strata::Rational, 4> out;
  for (std::size_t i = 0; i < 4; ++i) {
    try {
      out[i] = k3strata::Rational::parse(tokens[i]);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--profile: \"" + tokens[i] +
                                 "\" is not a rational");
    }
  }
  return out;
}

std::pair<std::int64_t, std::int64_t> parse_coeff_pair(const std::string& flag,
                                                       const std::string& text) {
  const std::vector<std::string> tokens = split(text, ',');
  if (tokens.size() != 2)
    throw CLI::ValidationError(flag + ": expected \"a,b\"");
  try {
    std::size_t ua = 0;
    std::size_t ub = 0;
    const std::int64_t a = std::stoll(tokens[0], &ua);
    const std::int64_t b = std::stoll(tokens[1], &ub);
    if (ua != tokens[0].size() || ub != tokens[1].size())
      throw std::invalid_argument(text);
    return {a, b};
  } catch (const std::exception&) {
    throw CLI::ValidationError(flag + ": \"" + text + "\" is not \"a,b\"");
  }
}

std::string read_stream_or_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw k3strata::DomainError("MalformedInput", "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw k3strata::DomainError("MalformedInput", "input is not valid JSON");
  return j;
}

unsigned worker_count(std::size_t jobs) {
  unsigned n = 0;
  if (const char* env = std::getenv("K3STRATA_THREADS")) {
    try {
      const long parsed = std::stol(env);
      if (parsed > 0) n = static_cast<unsigned>(parsed);
    } catch (const std::exception&) {
      n = 0;  // unparsable: fall back to auto
    }
  }
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(n, jobs));
}

// Order-preserving parallel map; first worker exception wins and rethrows.
template <typename F>
std::vector<json> parallel_rows(const std::vector<json>& items, F map_one) {
  std::vector<json> rows(items.size());
  const unsigned workers = worker_count(items.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < items.size(); ++i) rows[i] = map_one(items[i]);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_lock;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= items.size()) return;
        try {
          rows[i] = map_one(items[i]);
        } catch (...) {
          const std::lock_guard<std::mutex> guard(error_lock);
          if (!first_error) first_error = std::current_exception();
          next.store(items.size());
          return;
        }
      }
    });
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
  return rows;
}

std::vector<json> parse_jsonl(const std::string& text) {
  std::vector<json> rows;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded())
      throw k3strata::DomainError(
          "MalformedInput", "line " + std::to_string(lineno) + " is not JSON");
    rows.push_back(std::move(j));
  }
  return rows;
}

// ---- fixture seeding ----
//
// Regenerates the recorded example values from the reference oracles in
// tests/support/oracles.hpp, so the checked-in expectations can always be
// rebuilt from first principles.

json seed_fixtures(const std::filesystem::path& dir) {
  namespace oracles = k3strata::oracles;
  std::filesystem::create_directories(dir);
  std::vector<std::string> written;
  const auto emit = [&](const std::string& name, const json& body) {
    std::ofstream out(dir / name, std::ios::binary);
    out << body.dump(2) << "\n";
    written.push_back(name);
  };

  {
    const auto sums = oracles::sums_by_tuples(2, 2);
    emit("sums_2_2.json",
         json{{"parts", 2},
              {"max_part", 2},
              {"values", std::vector<std::int64_t>(sums.begin(), sums.end())}});
  }
  {
    const auto reduced = oracles::reduce_mod(oracles::sums_by_tuples(2, 2), 7);
    emit("residues_7_2_2.json",
         json{{"modulus", 7},
              {"parts", 2},
              {"max_part", 2},
              {"members",
               std::vector<std::int64_t>(reduced.begin(), reduced.end())}});
  }
  {
    const auto reduced =
        oracles::reduce_mod(oracles::sums_by_multisets(16, 3), 162);
    std::vector<std::int64_t> missing;
    for (std::int64_t r = 0; r < 162; ++r)
      if (!reduced.contains(r)) missing.push_back(r);
    emit("residues_162_16_3.json",
         json{{"modulus", 162},
              {"parts", 16},
              {"max_part", 3},
              {"count", reduced.size()},
              {"full", missing.empty()},
              {"missing", missing}});
  }
  {
    const auto candidates = oracles::two_pair_polygons_with_min_slope(
        k3strata::Rational(9, 10), 12);
    json body{{"min_slope", "9/10"}, {"candidates", candidates.size()}};
    if (candidates.size() == 1) body["polygon"] = to_json(candidates.front());
    emit("newton_height_10.json", body);
  }
  {
    std::vector<std::int64_t> degrees;
    for (const std::int64_t s : oracles::sums_by_multisets(16, 4)) {
      const std::int64_t d = 2 * 9 * 9 * 26 - s;
      if (d % 5 != 0) degrees.push_back(d);
    }
    std::sort(degrees.begin(), degrees.end());
    emit("degrees_n9_d26_coprime5.json", json{{"n", 9},
                                              {"dprime", 26},
                                              {"max_part", 4},
                                              {"coprime_to", 5},
                                              {"count", degrees.size()},
                                              {"values", degrees}});
  }
  {
    json rows = json::array();
    const std::int64_t triples[3][3] = {{7, 1, 0}, {5, 0, 1}, {5, 1, 1}};
    for (const auto& t : triples)
      rows.push_back(json{{"p", t[0]},
                          {"a", t[1]},
                          {"b", t[2]},
                          {"point_count",
                           oracles::curve_count_by_grid(t[0], t[1], t[2])}});
    emit("curve_counts.json", rows);
  }
  {
    const std::array<k3strata::Rational, 4> mixed{
        k3strata::Rational(0), k3strata::Rational(1, 2),
        k3strata::Rational(1, 2), k3strata::Rational(1)};
    json sums = json::array();
    for (const k3strata::Rational& s : oracles::pairwise_sums(mixed))
      sums.push_back(s.str());
    emit("pairwise_mixed.json",
         json{{"profile", {"0", "1/2", "1/2", "1"}}, {"sums", sums}});
  }

  return json{{"fixtures_dir", dir.string()}, {"written", written}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of K3 height strata: Newton polygons, "
               "quotient-surface slopes, degree coverage, point counts"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  std::string format = "json";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  std::string output_path;
  app.add_option("--output", output_path, "write output to this file");
  bool seed = false;
  app.add_flag("--seed-fixtures", seed,
               "regenerate recorded example values from the reference oracles");
  std::string fixtures_dir = "fixtures";
  app.add_option("--fixtures-dir", fixtures_dir,
                 "directory for --seed-fixtures");

  std::optional<Output> produced;

  // ---- polygon ----
  CLI::App* polygon = app.add_subcommand("polygon", "Newton polygon tools");
  polygon->require_subcommand(1);
  polygon->fallthrough();

  {
    CLI::App* cmd = polygon->add_subcommand(
        "classify", "read polygon JSON, print class and height");
    cmd->fallthrough();
    auto input = std::make_shared<std::string>("-");
    cmd->add_option("--input", *input, "polygon JSON file, - for stdin");
    cmd->callback([&produced, input] {
      const k3strata::NewtonPolygon np =
          k3strata::polygon_from_json(parse_json_text(read_stream_or_file(*input)));
      const k3strata::Classification c = k3strata::classify(np);
      Output out;
      out.body = to_json(c);
      out.csv = k3strata::csv_table(
          {"class", "height"},
          {{k3strata::to_string(c.kind), c.height.str()}});
      produced = std::move(out);
    });
  }

  {
    CLI::App* cmd = polygon->add_subcommand(
        "from-height", "canonical polygon for a height");
    cmd->fallthrough();
    auto height = std::make_shared<std::string>();
    cmd->add_option("--height", *height, "1..10 or \"infinite\"")->required();
    cmd->callback([&produced, height] {
      const k3strata::NewtonPolygon np =
          k3strata::newton_from_height(k3strata::height_from_string(*height));
      produced = Output{to_json(np), k3strata::csv_polygon(np)};
    });
  }

  // ---- kummer ----
  CLI::App* kummer = app.add_subcommand("kummer", "quotient-surface tools");
  kummer->require_subcommand(1);
  kummer->fallthrough();

  {
    CLI::App* cmd = kummer->add_subcommand(
        "slopes", "slopes of the quotient surface of a slope profile");
    cmd->fallthrough();
    auto profile_text = std::make_shared<std::string>();
    cmd->add_option("--profile", *profile_text,
                    "four slopes, e.g. 0,1/2,1/2,1")
        ->required();
    cmd->callback([&produced, profile_text] {
      const k3strata::AbelianSlopeProfile profile(parse_profile(*profile_text));
      const k3strata::NewtonPolygon np = k3strata::kummer_slopes(profile);
      const k3strata::Classification c = k3strata::classify(np);
      json body{{"profile", to_json(profile)},
                {"polygon", to_json(np)},
                {"class", k3strata::to_string(c.kind)},
                {"height", to_json(c.height)}};
      produced = Output{std::move(body), k3strata::csv_polygon(np)};
    });
  }

  {
    CLI::App* cmd = kummer->add_subcommand(
        "degree", "polarization degree 2 n^2 d' - sum of squared parts");
    cmd->fallthrough();
    auto n = std::make_shared<std::int64_t>(0);
    auto dprime = std::make_shared<std::int64_t>(0);
    auto parts_text = std::make_shared<std::string>();
    cmd->add_option("--n", *n, "multiplier n")->required();
    cmd->add_option("--dprime", *dprime, "degree d' upstairs")->required();
    cmd->add_option("--parts", *parts_text, "16 comma-separated parts")
        ->required();
    cmd->callback([&produced, n, dprime, parts_text] {
      k3strata::KummerParams p;
      p.n = *n;
      p.dprime = *dprime;
      p.parts = parse_parts(*parts_text);
      const std::int64_t d = k3strata::polarization_degree(p);
      const std::int64_t self = k3strata::self_intersection_on_blowup(p);
      json body = to_json(p);
      body["degree"] = d;
      body["self_intersection"] = self;
      produced = Output{std::move(body),
                        k3strata::csv_table({"n", "dprime", "degree",
                                             "self_intersection"},
                                            {{std::to_string(p.n),
                                              std::to_string(p.dprime),
                                              std::to_string(d),
                                              std::to_string(self)}})};
    });
  }

  {
    CLI::App* cmd = kummer->add_subcommand(
        "check-ampleness", "audit both strict bounds at all 16 parts");
    cmd->fallthrough();
    auto n = std::make_shared<std::int64_t>(0);
    auto dprime = std::make_shared<std::int64_t>(0);
    auto parts_text = std::make_shared<std::string>();
    auto variant_name = std::make_shared<std::string>("general");
    auto min_intersection = std::make_shared<std::int64_t>(0);
    cmd->add_option("--n", *n, "multiplier n")->required();
    cmd->add_option("--dprime", *dprime, "degree d' upstairs")->required();
    cmd->add_option("--parts", *parts_text, "16 comma-separated parts")
        ->required();
    CLI::Option* variant_opt =
        cmd->add_option("--variant", *variant_name, "general or non-product")
            ->check(CLI::IsMember({"general", "non-product"}));
    CLI::Option* m_opt = cmd->add_option(
        "--min-intersection", *min_intersection,
        "assume every elliptic curve meets the class at least this often");
    variant_opt->excludes(m_opt);
    m_opt->excludes(variant_opt);
    cmd->callback([&produced, n, dprime, parts_text, variant_name,
                   min_intersection, m_opt] {
      k3strata::KummerParams p;
      p.n = *n;
      p.dprime = *dprime;
      p.parts = parse_parts(*parts_text);
      const k3strata::AmplenessVariant v =
          m_opt->count() > 0
              ? k3strata::AmplenessVariant::min_elliptic_intersection(
                    *min_intersection)
              : (*variant_name == "non-product"
                     ? k3strata::AmplenessVariant::non_product()
                     : k3strata::AmplenessVariant::general_surface());
      const k3strata::AmplenessReport report = k3strata::check_ampleness(p, v);
      json body{{"params", to_json(p)},
                {"variant", v.str()},
                {"report", to_json(report)}};
      produced = Output{std::move(body), k3strata::csv_ampleness(report)};
    });
  }

  // ---- coverage ----
  CLI::App* coverage = app.add_subcommand("coverage", "degree coverage tools");
  coverage->require_subcommand(1);
  coverage->fallthrough();

  {
    CLI::App* cmd = coverage->add_subcommand(
        "residues", "residues reachable by sums of squared parts");
    cmd->fallthrough();
    auto modulus = std::make_shared<std::int64_t>(0);
    auto parts = std::make_shared<int>(16);
    auto max_part = std::make_shared<int>(0);
    cmd->add_option("--modulus", *modulus, "modulus")->required();
    cmd->add_option("--parts", *parts, "number of parts (default 16)");
    cmd->add_option("--max-part", *max_part, "largest part value")->required();
    cmd->callback([&produced, modulus, parts, max_part] {
      const k3strata::ResidueSet set =
          k3strata::reachable_residues(*modulus, *parts, *max_part);
      json body = to_json(set);
      body["parts"] = *parts;
      body["max_part"] = *max_part;
      std::vector<std::vector<std::string>> rows;
      for (std::int64_t r : set.members()) rows.push_back({std::to_string(r)});
      produced = Output{std::move(body), k3strata::csv_table({"residue"}, rows)};
    });
  }

  {
    CLI::App* cmd = coverage->add_subcommand(
        "verify-lemma-res",
        "sixteen parts in [1,4] cover every residue mod 162");
    cmd->fallthrough();
    cmd->callback([&produced] {
      const bool ok = k3strata::verify_lemma_res();
      json body{{"modulus", 162}, {"parts", 16}, {"max_part", 4}, {"ok", ok}};
      produced = Output{std::move(body),
                        k3strata::csv_table({"modulus", "parts", "max_part", "ok"},
                                            {{"162", "16", "4",
                                              k3strata::csv_bool(ok)}})};
    });
  }

  {
    CLI::App* cmd = coverage->add_subcommand(
        "verify-remark", "coverage mod 2n^2 with the n-dependent part bound");
    cmd->fallthrough();
    auto n = std::make_shared<std::int64_t>(0);
    cmd->add_option("--n", *n, "multiplier n")->required();
    cmd->callback([&produced, n] {
      const int bound = k3strata::remark_part_bound(*n);
      const k3strata::ResidueSet set =
          k3strata::reachable_residues(2 * *n * *n, 16, bound);
      json body{{"n", *n},
                {"modulus", 2 * *n * *n},
                {"part_bound", bound},
                {"ok", set.full()},
                {"missing", set.missing()}};
      produced = Output{
          std::move(body),
          k3strata::csv_table({"n", "modulus", "part_bound", "ok"},
                              {{std::to_string(*n), std::to_string(2 * *n * *n),
                                std::to_string(bound),
                                k3strata::csv_bool(set.full())}})};
    });
  }

  {
    CLI::App* cmd = coverage->add_subcommand(
        "threshold", "degree threshold with witnesses for full coverage");
    cmd->fallthrough();
    auto n = std::make_shared<std::int64_t>(0);
    auto dprime_min = std::make_shared<std::int64_t>(0);
    auto max_part = std::make_shared<int>(0);
    cmd->add_option("--n", *n, "multiplier n")->required();
    cmd->add_option("--dprime-min", *dprime_min, "least admissible d'")
        ->required();
    cmd->add_option("--max-part", *max_part, "largest part value")->required();
    cmd->callback([&produced, n, dprime_min, max_part] {
      const k3strata::CoverageResult result =
          k3strata::coverage_threshold(*n, *dprime_min, *max_part);
      produced = Output{
          to_json(result),
          k3strata::csv_table(
              {"n", "dprime_min", "max_part", "modulus", "threshold",
               "computed_dprime_min"},
              {{std::to_string(result.n), std::to_string(result.dprime_min),
                std::to_string(result.max_part), std::to_string(result.modulus),
                std::to_string(result.threshold),
                std::to_string(result.computed_dprime_min)}})};
    });
  }

  {
    CLI::App* cmd = coverage->add_subcommand(
        "report-paper-bounds", "headline thresholds for the three families");
    cmd->fallthrough();
    cmd->callback([&produced] {
      const k3strata::PaperBoundsReport report = k3strata::paper_bounds_report();
      produced = Output{to_json(report), k3strata::csv_paper_bounds(report)};
    });
  }

  // ---- curve ----
  CLI::App* curve = app.add_subcommand("curve", "elliptic curve tools");
  curve->require_subcommand(1);
  curve->fallthrough();

  {
    CLI::App* cmd = curve->add_subcommand(
        "count", "point count and trace over F_p");
    cmd->fallthrough();
    auto p = std::make_shared<std::int64_t>(0);
    auto a = std::make_shared<std::int64_t>(0);
    auto b = std::make_shared<std::int64_t>(0);
    auto input = std::make_shared<std::string>();
    CLI::Option* p_opt = cmd->add_option("--p", *p, "field characteristic");
    CLI::Option* a_opt = cmd->add_option("--a", *a, "coefficient a");
    CLI::Option* b_opt = cmd->add_option("--b", *b, "coefficient b");
    CLI::Option* input_opt = cmd->add_option(
        "--input", *input, "JSONL batch of {\"p\",\"a\",\"b\"}, - for stdin");
    input_opt->excludes(p_opt)->excludes(a_opt)->excludes(b_opt);
    p_opt->needs(a_opt)->needs(b_opt);
    cmd->callback([&produced, p, a, b, input, input_opt, p_opt] {
      const auto one_row = [](const json& spec) {
        const k3strata::EllipticCurve e = k3strata::curve_from_json(spec);
        return k3strata::curve_row(e, k3strata::count_points(e));
      };
      const auto csv_rows = [](const std::vector<json>& rows) {
        std::vector<std::vector<std::string>> cells;
        for (const json& r : rows)
          cells.push_back({r["p"].dump(), r["a"].dump(), r["b"].dump(),
                           r["point_count"].dump(), r["trace"].dump(),
                           r["supersingular"].get<bool>() ? "true" : "false"});
        return k3strata::csv_table(
            {"p", "a", "b", "point_count", "trace", "supersingular"}, cells);
      };
      if (input_opt->count() > 0) {
        const std::vector<json> specs = parse_jsonl(read_stream_or_file(*input));
        const std::vector<json> rows = parallel_rows(specs, one_row);
        produced = Output{json(rows), csv_rows(rows)};
        return;
      }
      if (p_opt->count() == 0)
        throw CLI::ValidationError("curve count: need --p/--a/--b or --input");
      const json spec{{"p", *p}, {"a", *a}, {"b", *b}};
      const json row = one_row(spec);
      produced = Output{row, csv_rows({row})};
    });
  }

  // ---- surface ----
  CLI::App* surface =
      app.add_subcommand("surface", "quotient surfaces of curve products");
  surface->require_subcommand(1);
  surface->fallthrough();

  {
    CLI::App* cmd = surface->add_subcommand(
        "classify", "classify the quotient surface of E1 x E2");
    cmd->fallthrough();
    auto p = std::make_shared<std::int64_t>(0);
    auto first_text = std::make_shared<std::string>();
    auto second_text = std::make_shared<std::string>();
    auto input = std::make_shared<std::string>();
    CLI::Option* p_opt = cmd->add_option("--p", *p, "field characteristic");
    CLI::Option* first_opt =
        cmd->add_option("--first", *first_text, "first curve as \"a,b\"");
    CLI::Option* second_opt =
        cmd->add_option("--second", *second_text, "second curve as \"a,b\"");
    CLI::Option* input_opt = cmd->add_option(
        "--input", *input,
        "JSONL batch of {\"p\",\"first\":{\"a\",\"b\"},\"second\":{...}}");
    input_opt->excludes(p_opt)->excludes(first_opt)->excludes(second_opt);
    p_opt->needs(first_opt)->needs(second_opt);
    cmd->callback([&produced, p, first_text, second_text, input, input_opt,
                   p_opt] {
      const auto one_row = [](const json& spec) {
        const std::int64_t pp = k3strata::detail::require_int(spec, "p");
        const json& first = k3strata::detail::require_field(spec, "first");
        const json& second = k3strata::detail::require_field(spec, "second");
        const k3strata::PrimeField field(pp);
        const k3strata::EllipticCurve e1(
            field, k3strata::detail::require_int(first, "a"),
            k3strata::detail::require_int(first, "b"));
        const k3strata::EllipticCurve e2(
            field, k3strata::detail::require_int(second, "a"),
            k3strata::detail::require_int(second, "b"));
        return to_json(k3strata::classify_kummer_of_product(e1, e2), e1, e2);
      };
      const auto csv_rows = [](const std::vector<json>& rows) {
        std::vector<std::vector<std::string>> cells;
        for (const json& r : rows)
          cells.push_back(
              {r["p"].dump(), r["first"]["a"].dump(), r["first"]["b"].dump(),
               r["second"]["a"].dump(), r["second"]["b"].dump(),
               r["class"].get<std::string>(),
               r["height"].is_string() ? r["height"].get<std::string>()
                                       : r["height"].dump(),
               r["stratum"]["label"].get<std::string>(),
               r["stratum"]["strict"].get<bool>() ? "true" : "false"});
        return k3strata::csv_table({"p", "a1", "b1", "a2", "b2", "class",
                                    "height", "stratum", "strict"},
                                   cells);
      };
      if (input_opt->count() > 0) {
        const std::vector<json> specs = parse_jsonl(read_stream_or_file(*input));
        const std::vector<json> rows = parallel_rows(specs, one_row);
        produced = Output{json(rows), csv_rows(rows)};
        return;
      }
      if (p_opt->count() == 0)
        throw CLI::ValidationError(
            "surface classify: need --p/--first/--second or --input");
      const auto [a1, b1] = parse_coeff_pair("--first", *first_text);
      const auto [a2, b2] = parse_coeff_pair("--second", *second_text);
      const json spec{{"p", *p},
                      {"first", {{"a", a1}, {"b", b1}}},
                      {"second", {{"a", a2}, {"b", b2}}}};
      const json row = one_row(spec);
      produced = Output{row, csv_rows({row})};
    });
  }

  try {
    app.parse(argc, argv);

    if (seed) {
      if (!app.get_subcommands().empty()) {
        std::cerr << "--seed-fixtures takes no subcommand\n";
        return 2;
      }
      produced = Output{seed_fixtures(fixtures_dir), ""};
    } else if (!produced) {
      std::cerr << app.help();
      return 2;
    }

    const std::string rendered = format == "csv" && !produced->csv.empty()
                                     ? produced->csv
                                     : produced->body.dump(2) + "\n";
    if (output_path.empty()) {
      std::cout << rendered;
    } else {
      std::ofstream out(output_path, std::ios::binary);
      if (!out) {
        std::cerr << "cannot write " << output_path << "\n";
        return 1;
      }
      out << rendered;
    }
    return 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const k3strata::DomainError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}
