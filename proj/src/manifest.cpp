// Copyright 2026 The fedosov-weyl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fedosov/manifest.hpp"

#include <fstream>
#include <sstream>

#include "fedosov/errors.hpp"
#include "fedosov/expression.hpp"

namespace fedosov {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

Rational parse_rational_entry(const json& v) {
  if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
  if (v.is_string()) {
    GaussianRational g = parse_gaussian(v.get<std::string>());
    if (!g.is_real()) throw ParseError("omega entries must be real");
    return g.re();
  }
  throw ParseError("omega entries must be integers or rational strings");
}

int require_int(const json& obj, const char* key) {
  if (!obj.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
  const json& v = obj.at(key);
  if (!v.is_number_integer()) throw ParseError(std::string("\"") + key + "\" must be an integer");
  return v.get<int>();
}

}  // namespace

RawManifest parse_manifest(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("manifest is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("manifest must be a JSON object");
  RawManifest raw;
  raw.dim = require_int(doc, "dim");
  if (raw.dim <= 0) throw ParseError("\"dim\" must be positive");
  const auto nvars = static_cast<std::size_t>(raw.dim);

  if (doc.contains("omega") && !doc.at("omega").is_null()) {
    const json& om = doc.at("omega");
    if (!om.is_array()) throw ParseError("\"omega\" must be a matrix");
    RationalMatrix m;
    for (const auto& row : om) {
      if (!row.is_array()) throw ParseError("\"omega\" rows must be arrays");
      std::vector<Rational> r;
      for (const auto& v : row) r.push_back(parse_rational_entry(v));
      m.push_back(std::move(r));
    }
    raw.omega_lower = std::move(m);
  }

  if (doc.contains("gamma")) {
    const json& g = doc.at("gamma");
    if (!g.is_array()) throw ParseError("\"gamma\" must be an array");
    for (const auto& entry : g) {
      if (!entry.is_object() || !entry.contains("indices") || !entry.contains("poly")) {
        throw ParseError("gamma entries need \"indices\" and \"poly\"");
      }
      const json& idx = entry.at("indices");
      if (!idx.is_array() || idx.size() != 3 ||
          !std::all_of(idx.begin(), idx.end(), [](const json& x) { return x.is_number_integer(); })) {
        throw ParseError("gamma \"indices\" must be three integers");
      }
      if (!entry.at("poly").is_string()) throw ParseError("gamma \"poly\" must be a string");
      GammaEntry e{{idx[0].get<int>(), idx[1].get<int>(), idx[2].get<int>()},
                   parse_polynomial(entry.at("poly").get<std::string>(), nvars)};
      raw.gamma.push_back(std::move(e));
    }
  }

  if (doc.contains("defaults")) {
    const json& d = doc.at("defaults");
    if (!d.is_object()) throw ParseError("\"defaults\" must be an object");
    if (d.contains("max_degree")) raw.max_degree = require_int(d, "max_degree");
    if (d.contains("hbar_order")) raw.hbar_order = require_int(d, "hbar_order");
  }
  return raw;
}

RawManifest read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read manifest " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_manifest(ss.str());
}

ValidationReport validate_manifest(const RawManifest& raw) {
  std::optional<ManifoldSpec> m;
  ValidationReport report;
  try {
    m = raw.omega_lower ? ManifoldSpec::from_lower(*raw.omega_lower) : ManifoldSpec::standard(raw.dim);
    if (m->dim() != raw.dim) {
      report.ok = false;
      report.problems.push_back("omega size " + std::to_string(m->dim()) + " != dim " + std::to_string(raw.dim));
      return report;
    }
  } catch (const ValidationError& e) {
    report.ok = false;
    report.problems.emplace_back(e.what());
    return report;
  }
  return validate(*m, raw.gamma);
}

Manifest build_manifest(const RawManifest& raw) {
  ValidationReport report = validate_manifest(raw);
  if (!report.ok) {
    std::string msg = "invalid manifest:";
    for (const auto& p : report.problems) msg += "\n  " + p;
    throw ValidationError(msg);
  }
  ManifoldSpec m = raw.omega_lower ? ManifoldSpec::from_lower(*raw.omega_lower) : ManifoldSpec::standard(raw.dim);
  return Manifest{m, ConnectionSpec::from_entries(raw.dim, raw.gamma), raw.max_degree, raw.hbar_order};
}

Manifest load_manifest(const std::filesystem::path& path) { return build_manifest(read_manifest(path)); }

ordered_json series_to_json(const WeylSeries& s) {
  ordered_json out;
  out["dim"] = s.dim();
  out["known_through"] = s.is_exact() ? ordered_json(nullptr) : ordered_json(s.known_through());
  ordered_json terms = ordered_json::array();
  for (const auto& [key, c] : s.terms()) {
    ordered_json t;
    t["hbar_power"] = key.hbar;
    t["fiber_exponents"] = key.fiber;
    t["wedge_indices"] = key.form;
    t["coeff_poly"] = c.to_string();
    terms.push_back(std::move(t));
  }
  out["terms"] = std::move(terms);
  return out;
}

WeylSeries series_from_json(const json& j) {
  try {
    const int dim = j.at("dim").get<int>();
    const json& known = j.at("known_through");
    WeylSeries out(dim, known.is_null() ? kUnbounded : known.get<int>());
    for (const auto& t : j.at("terms")) {
      TermKey key{t.at("hbar_power").get<int>(), t.at("fiber_exponents").get<Exponents>(),
                  t.at("wedge_indices").get<WedgeWord>()};
      if (static_cast<int>(key.fiber.size()) != dim) throw ParseError("fiber_exponents length != dim");
      NormalizedWedge w = wedge_normalize(key.form, dim);
      if (w.sign != 1 || w.word != key.form) throw ParseError("wedge_indices must be strictly increasing");
      out.add(key, parse_polynomial(t.at("coeff_poly").get<std::string>(), static_cast<std::size_t>(dim)));
    }
    return out;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed series dump: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("malformed series dump: ") + e.what());
  }
}

ordered_json correction_to_json(const AbelianCorrection& r) {
  ordered_json out;
  out["dim"] = r.dim();
  out["known_through"] = r.known_through();
  ordered_json grades = ordered_json::array();
  for (int z = 3; z <= r.known_through(); ++z) {
    ordered_json g;
    g["grade"] = z;
    g["series"] = series_to_json(r[z]);
    grades.push_back(std::move(g));
  }
  out["grades"] = std::move(grades);
  return out;
}

ordered_json hbar_polynomial_to_json(const HbarPolynomial& p) {
  ordered_json out = ordered_json::array();
  for (const auto& [k, c] : p) out.push_back({{"hbar_power", k}, {"poly", c.to_string()}});
  return out;
}

}  // namespace fedosov
