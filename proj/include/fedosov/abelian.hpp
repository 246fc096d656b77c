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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fedosov/geometry.hpp"
#include "fedosov/weyl.hpp"

namespace fedosov {

/// The normalized correction r of the Abelian connection, by grade:
/// components()[z] is the homogeneous 1-form r[z], z >= 3, for z up to
/// known_through(). Grades with r[z] = 0 are stored as zero series.
class AbelianCorrection {
 public:
  AbelianCorrection(int dim, int known_through) : dim_(dim), known_through_(known_through) {}

  int dim() const { return dim_; }
  int known_through() const { return known_through_; }
  /// r[z]; zero for z < 3. Throws TruncationError for z > known_through().
  WeylSeries operator[](int z) const;
  void set(int z, WeylSeries component);
  const std::map<int, WeylSeries>& components() const { return components_; }

  /// Sum of r[3..known_through()], known through known_through().
  WeylSeries total() const;
  /// Grades z <= known_through() with r[z] != 0.
  std::vector<int> nonzero_grades() const;

 private:
  int dim_;
  int known_through_;
  std::map<int, WeylSeries> components_;
};

/// r[3] = delta^{-1} R_Gamma and, for 4 <= z <= max_degree,
/// r[z] = delta^{-1}( d_Gamma r[z-1] + (1/(i hbar)) sum_{j=3}^{z-2} r[j] o r[z+1-j] ).
AbelianCorrection abelian_r(const ManifoldSpec& m, const ConnectionSpec& c, int max_degree);

/// Fixed-point iteration r_0 = 0,
/// r_s = delta^{-1}( R_Gamma + d_Gamma r_{s-1} + (1/(i hbar)) r_{s-1} o r_{s-1} ),
/// truncated at max_degree. Stops early at a fixed point; max_degree steps
/// are enough for the graded solution on every tested connection.
AbelianCorrection abelian_r_iterative(const ManifoldSpec& m, const ConnectionSpec& c, int steps, int max_degree);

/// Builds an AbelianCorrection from a series, splitting it by grade.
AbelianCorrection split_by_grade(const WeylSeries& r, int known_through);

struct AbelianCheckReport {
  bool ok = true;
  /// First grade at which delta r - R - d_Gamma r - (1/(i hbar)) r o r is nonzero.
  std::optional<int> first_failing_grade;
  WeylSeries residual{2};
  /// The curvature of omega_{ij} X^i dq^j + Gamma + r equals
  /// -1/2 omega_{ij} dq^i ^ dq^j through the checked grades.
  bool central_curvature = true;
  bool normalized = true;       ///< delta^{-1} r = 0
  bool min_degree_ok = true;    ///< deg r[z] >= 3 for every stored component
  bool even_hbar = true;        ///< only even powers of hbar
  bool fiber_nonempty = true;   ///< every term has at least one X
  std::vector<std::string> messages;
};

/// Verifies a correction known through N in every grade <= N - 1.
AbelianCheckReport check_abelian(const ManifoldSpec& m, const ConnectionSpec& c, const AbelianCorrection& r);

struct FinitenessVerdict {
  int m_param = 4;
  /// Equation s (0-based) is
  ///   s = 0:  d_Gamma r[m-1] + (1/(i hbar)) sum_{j=3}^{m-2} r[j] o r[m+1-j] = 0,
  ///   s >= 1: sum_{j} r[j] o r[m+1+s-j] = 0 over 3 <= j, m+1+s-j <= m-1,
  /// the last one (s = m-3) being r[m-1] o r[m-1] = 0.
  int equation_count = 0;
  std::vector<int> violated;
  bool finite_consistent() const { return violated.empty(); }
  std::optional<int> first_violated() const {
    return violated.empty() ? std::nullopt : std::optional<int>(violated.front());
  }
  bool square_violated() const { return !violated.empty() && violated.back() == equation_count - 1; }
  static std::string equation_label(int s, int m_param);
};

/// Evaluates the finiteness system for a given m >= 4. Refuses (throws
/// TruncationError) unless r is known through m - 1.
FinitenessVerdict finiteness_test(const ManifoldSpec& m, const ConnectionSpec& c, const AbelianCorrection& r,
                                  int m_param);

struct CommutingCaseResult {
  enum class Status { kFlat, kFinite, kNotFiniteWithin };
  Status status = Status::kFlat;
  /// Minimal z >= 4 with (d_Gamma delta^{-1})^{z-3} R_Gamma = 0.
  std::optional<int> minimal_z;
  int z_max = 0;
  std::string to_string() const;
};

/// For connections whose corrections multiply to zero, scans z = 4..z_max
/// for the first vanishing (d_Gamma delta^{-1})^{z-3} R_Gamma. Throws
/// HypothesisError when some product r[j] o r[k] of computed grades is
/// nonzero.
CommutingCaseResult commuting_case_degree(const ManifoldSpec& m, const ConnectionSpec& c, int z_max);

}  // namespace fedosov
