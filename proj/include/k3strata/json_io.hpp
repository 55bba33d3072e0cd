// Copyright 2026 the k3strata authors
//
// Licensed under the Apache License, Version 2.0
// (https://www.apache.org/licenses/LICENSE-2.0).
//
// JSON and CSV bindings. JSON is the interchange format; every parser
// re-validates through the same constructors the library uses, so a file
// cannot smuggle in a polygon the type system would refuse. Serialization is
// deterministic (nlohmann::json orders keys).

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "k3strata/coverage.hpp"
#include "k3strata/errors.hpp"
#include "k3strata/fieldarith.hpp"
#include "k3strata/kummer.hpp"
#include "k3strata/polygon.hpp"
#include "k3strata/rational.hpp"

namespace k3strata {

using nlohmann::json;

namespace detail {

inline const json& require_field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw DomainError("MalformedInput",
                      std::string("missing field \"") + name + "\"");
  return j.at(name);
}

inline std::int64_t require_int(const json& j, const char* name) {
  const json& field = require_field(j, name);
  if (!field.is_number_integer())
    throw DomainError("MalformedInput",
                      std::string("field \"") + name + "\" must be an integer");
  return field.get<std::int64_t>();
}

}  // namespace detail

// ---- polygons ----

inline json to_json(const NewtonPolygon& np) {
  json segments = json::array();
  for (const Segment& s : np.segments())
    segments.push_back({s.slope.num(), s.slope.den(), s.multiplicity});
  return json{{"weight", np.weight()}, {"rank", np.rank()}, {"segments", segments}};
}

inline NewtonPolygon polygon_from_json(const json& j) {
  const std::int64_t weight = detail::require_int(j, "weight");
  const std::int64_t rank = detail::require_int(j, "rank");
  const json& segments = detail::require_field(j, "segments");
  if (!segments.is_array())
    throw DomainError("MalformedInput", "field \"segments\" must be an array");
  std::vector<Segment> segs;
  for (const json& entry : segments) {
    if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_integer() ||
        !entry[1].is_number_integer() || !entry[2].is_number_integer())
      throw DomainError("MalformedInput",
                        "each segment must be [num, den, multiplicity]");
    const std::int64_t den = entry[1].get<std::int64_t>();
    if (den == 0)
      throw DomainError("MalformedInput", "segment denominator is zero");
    segs.push_back({Rational(entry[0].get<std::int64_t>(), den),
                    entry[2].get<std::int64_t>()});
  }
  if (weight < 1 || rank < 1)
    throw DomainError("MalformedInput", "weight and rank must be positive");
  for (const Segment& s : segs)
    if (s.multiplicity < 1)
      throw DomainError("MalformedInput", "multiplicities must be positive");
  return make_newton(weight, rank, std::move(segs));
}

inline json to_json(const HeightValue& h) {
  if (h.is_infinite()) return json("infinite");
  return json(h.value());
}

inline HeightValue height_from_string(const std::string& text) {
  if (text == "infinite" || text == "inf") return HeightValue::infinite();
  try {
    return HeightValue::finite(std::stoi(text));
  } catch (const std::invalid_argument&) {
    throw DomainError("MalformedInput", "height must be 1..10 or \"infinite\"");
  } catch (const std::out_of_range&) {
    throw DomainError("MalformedInput", "height must be 1..10 or \"infinite\"");
  }
}

inline json to_json(const StratumLabel& label) {
  return json{{"label", label.str()},
              {"position", label.position()},
              {"strict", label.strict}};
}

inline json to_json(const Classification& c) {
  return json{{"class", to_string(c.kind)}, {"height", to_json(c.height)}};
}

// ---- kummer ----

inline json to_json(const AbelianSlopeProfile& profile) {
  json out = json::array();
  for (const Rational& s : profile.slopes()) out.push_back(s.str());
  return out;
}

inline json to_json(const KummerParams& p) {
  return json{{"n", p.n}, {"dprime", p.dprime}, {"parts", p.parts}};
}

inline KummerParams kummer_params_from_json(const json& j) {
  KummerParams p;
  p.n = detail::require_int(j, "n");
  p.dprime = detail::require_int(j, "dprime");
  const json& parts = detail::require_field(j, "parts");
  if (!parts.is_array() || parts.size() != 16)
    throw DomainError("MalformedInput", "field \"parts\" must hold 16 integers");
  for (std::size_t i = 0; i < 16; ++i) {
    if (!parts[i].is_number_integer())
      throw DomainError("MalformedInput", "field \"parts\" must hold 16 integers");
    p.parts[i] = parts[i].get<std::int64_t>();
  }
  validate(p);
  return p;
}

inline json to_json(const AmplenessReport& r) {
  json parts = json::array();
  for (const PartAudit& a : r.parts)
    parts.push_back({{"part", a.part},
                     {"elliptic_lhs", a.elliptic_lhs},
                     {"elliptic_rhs", a.elliptic_rhs},
                     {"elliptic_ok", a.elliptic_ok},
                     {"generic_lhs", a.generic_lhs},
                     {"generic_rhs", a.generic_rhs},
                     {"generic_ok", a.generic_ok}});
  return json{{"degree", r.degree},
              {"positivity_ok", r.positivity_ok},
              {"min_intersection", r.min_intersection},
              {"parts", parts},
              {"elliptic_branch_ok", r.elliptic_branch_ok},
              {"generic_branch_ok", r.generic_branch_ok},
              {"ample", r.ample}};
}

// ---- coverage ----

inline json to_json(const ResidueSet& set) {
  return json{{"modulus", set.modulus()},
              {"count", set.count()},
              {"full", set.full()},
              {"members", set.members()},
              {"missing", set.missing()}};
}

inline json to_json(const CoverageResult& c) {
  json witnesses = json::array();
  for (const CoverageWitness& w : c.witnesses)
    witnesses.push_back({{"residue", w.residue}, {"parts", w.parts}});
  return json{{"n", c.n},
              {"dprime_min", c.dprime_min},
              {"max_part", c.max_part},
              {"modulus", c.modulus},
              {"min_sum", c.min_sum},
              {"threshold", c.threshold},
              {"witnesses", witnesses},
              {"computed_dprime_min", c.computed_dprime_min}};
}

inline json to_json(const FamilyRow& row) {
  json out{{"family", row.family},
           {"n", row.n},
           {"dprime_min", row.dprime_min},
           {"part_bound", row.part_bound},
           {"modulus", row.modulus},
           {"min_sum", row.min_sum},
           {"threshold", row.threshold},
           {"step", row.step},
           {"witness_count", row.witness_count},
           {"computed_dprime_min", row.computed_dprime_min},
           {"variant", row.variant},
           {"audited_parts", row.audited_parts},
           {"ampleness", to_json(row.ampleness)},
           {"ampleness_discrepancy", row.ampleness_discrepancy}};
  if (row.fixed_parts) out["fixed_parts"] = *row.fixed_parts;
  return out;
}

inline json to_json(const PaperBoundsReport& report) {
  json families = json::array();
  for (const FamilyRow& row : report.families) families.push_back(to_json(row));
  return json{{"families", families}};
}

// ---- fieldarith ----

inline json to_json(const FrobeniusData& f) {
  return json{{"p", f.p},
              {"point_count", f.point_count},
              {"trace", f.trace},
              {"supersingular", f.supersingular}};
}

inline json curve_row(const EllipticCurve& e, const FrobeniusData& f) {
  json out = to_json(f);
  out["a"] = e.a();
  out["b"] = e.b();
  return out;
}

inline EllipticCurve curve_from_json(const json& j) {
  const std::int64_t p = detail::require_int(j, "p");
  const std::int64_t a = detail::require_int(j, "a");
  const std::int64_t b = detail::require_int(j, "b");
  return EllipticCurve(PrimeField(p), a, b);
}

inline json to_json(const KummerClassification& k, const EllipticCurve& e1,
                    const EllipticCurve& e2) {
  json first = to_json(k.first);
  first["a"] = e1.a();
  first["b"] = e1.b();
  first.erase("p");
  json second = to_json(k.second);
  second["a"] = e2.a();
  second["b"] = e2.b();
  second.erase("p");
  return json{{"p", k.first.p},
              {"first", first},
              {"second", second},
              {"profile", to_json(k.profile)},
              {"polygon", to_json(k.polygon)},
              {"class", to_string(k.surface.kind)},
              {"height", to_json(k.surface.height)},
              {"stratum", to_json(k.stratum)}};
}

// ---- csv ----

inline std::string csv_cell(const std::string& value) {
  if (value.find(',') == std::string::npos &&
      value.find('"') == std::string::npos &&
      value.find('\n') == std::string::npos)
    return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

inline std::string csv_table(const std::vector<std::string>& header,
                             const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out += ',';
    out += csv_cell(header[i]);
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_cell(row[i]);
    }
    out += '\n';
  }
  return out;
}

inline std::string csv_bool(bool b) { return b ? "true" : "false"; }

inline std::string csv_polygon(const NewtonPolygon& np) {
  std::vector<std::vector<std::string>> rows;
  for (const Segment& s : np.segments())
    rows.push_back({std::to_string(s.slope.num()), std::to_string(s.slope.den()),
                    std::to_string(s.multiplicity)});
  return csv_table({"slope_num", "slope_den", "multiplicity"}, rows);
}

inline std::string csv_ampleness(const AmplenessReport& r) {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t j = 0; j < r.parts.size(); ++j) {
    const PartAudit& a = r.parts[j];
    rows.push_back({std::to_string(j), std::to_string(a.part),
                    std::to_string(a.elliptic_lhs), std::to_string(a.elliptic_rhs),
                    csv_bool(a.elliptic_ok), std::to_string(a.generic_lhs),
                    std::to_string(a.generic_rhs), csv_bool(a.generic_ok),
                    std::to_string(r.degree), csv_bool(r.ample)});
  }
  return csv_table({"index", "part", "elliptic_lhs", "elliptic_rhs",
                    "elliptic_ok", "generic_lhs", "generic_rhs", "generic_ok",
                    "degree", "ample"},
                   rows);
}

inline std::string csv_paper_bounds(const PaperBoundsReport& report) {
  std::vector<std::vector<std::string>> rows;
  for (const FamilyRow& row : report.families)
    rows.push_back({row.family, std::to_string(row.n),
                    std::to_string(row.dprime_min), std::to_string(row.part_bound),
                    std::to_string(row.threshold),
                    std::to_string(row.witness_count)});
  return csv_table(
      {"family", "n", "dprime_min", "part_bound", "threshold", "witness_count"},
      rows);
}

}  // namespace k3strata
