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

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fedosov/abelian.hpp"
#include "fedosov/geometry.hpp"
#include "fedosov/weyl.hpp"

namespace fedosov {

/// Manifest as read from disk, before validation.
///
///   {
///     "dim": 2,
///     "omega": [["0", "-1"], ["1", "0"]],        // optional, omega_{ij}
///     "gamma": [{"indices": [1, 1, 1], "poly": "1"}, ...],
///     "defaults": {"max_degree": 9, "hbar_order": 3}   // optional
///   }
///
/// omega entries are integers or rational strings; "poly" is an expression
/// over q1..q<dim> (see parse_polynomial).
struct RawManifest {
  int dim = 0;
  std::optional<RationalMatrix> omega_lower;
  std::vector<GammaEntry> gamma;
  int max_degree = 6;
  int hbar_order = 2;
};

struct Manifest {
  ManifoldSpec manifold;
  ConnectionSpec connection;
  int max_degree = 6;
  int hbar_order = 2;
};

/// Throws ParseError on malformed JSON, missing keys or bad expressions.
RawManifest parse_manifest(std::string_view text);
RawManifest read_manifest(const std::filesystem::path& path);

/// Validation report for a parsed manifest; never throws for content problems.
ValidationReport validate_manifest(const RawManifest& raw);

/// Throws ValidationError (with every problem listed) if the manifest is invalid.
Manifest build_manifest(const RawManifest& raw);
Manifest load_manifest(const std::filesystem::path& path);

/// Record form of a series:
///   {"dim": 2, "known_through": 9 | null,
///    "terms": [{"hbar_power": k, "fiber_exponents": [...],
///               "wedge_indices": [...], "coeff_poly": "..."}, ...]}
/// Terms are in canonical order; known_through is null for exact series.
nlohmann::ordered_json series_to_json(const WeylSeries& s);
/// Throws ParseError.
WeylSeries series_from_json(const nlohmann::json& j);

nlohmann::ordered_json correction_to_json(const AbelianCorrection& r);
nlohmann::ordered_json hbar_polynomial_to_json(const HbarPolynomial& p);

}  // namespace fedosov
