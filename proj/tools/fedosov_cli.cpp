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

#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "fedosov/abelian.hpp"
#include "fedosov/errors.hpp"
#include "fedosov/expression.hpp"
#include "fedosov/flat_section.hpp"
#include "fedosov/manifest.hpp"
#include "fedosov/two_dim.hpp"

namespace {

using namespace fedosov;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInvalidSpec = 2;
constexpr int kExitParse = 3;

int cmd_validate(const std::string& path) {
  const RawManifest raw = read_manifest(path);
  const ValidationReport report = validate_manifest(raw);
  if (!report.ok) {
    std::cout << "INVALID\n";
    for (const auto& p : report.problems) std::cout << "  " << p << "\n";
    return kExitInvalidSpec;
  }
  std::cout << "OK\n";
  std::cout << "dim: " << raw.dim << "\n";
  std::cout << "independent gamma entries: " << report.independent_entries << " of " << report.max_independent_entries
            << "\n";
  return kExitOk;
}

int cmd_abelian(const std::string& path, std::optional<int> degree, bool check, const std::string& format) {
  const Manifest man = load_manifest(path);
  const int n = degree.value_or(man.max_degree);
  if (n < 3) throw CLI::ValidationError("--degree", "must be >= 3 (r starts at grade 3)");
  const AbelianCorrection r = abelian_r(man.manifold, man.connection, n);

  if (format == "json") {
    std::cout << correction_to_json(r).dump(2) << "\n";
  } else {
    for (int z = 3; z <= n; ++z) {
      const WeylSeries rz = r[z];
      std::cout << "r[" << z << "]:" << (rz.is_zero() ? " 0" : "") << "\n";
      if (!rz.is_zero()) std::cout << rz.to_string();
    }
  }
  if (!check) return kExitOk;

  const AbelianCheckReport report = check_abelian(man.manifold, man.connection, r);
  std::ostream& out = format == "json" ? std::cerr : std::cout;
  out << "check through grade " << n - 1 << ": " << (report.ok ? "PASS" : "FAIL") << "\n";
  for (const auto& msg : report.messages) out << "  " << msg << "\n";
  return report.ok ? kExitOk : kExitCheckFailed;
}

int cmd_star(const std::string& path, const std::string& a_text, const std::string& b_text, std::optional<int> order) {
  const Manifest man = load_manifest(path);
  const int k = order.value_or(man.hbar_order);
  if (k < 0) throw CLI::ValidationError("--order", "must be >= 0");
  const auto nvars = static_cast<std::size_t>(man.manifold.dim());
  const HbarPolynomial a = parse_hbar_polynomial(a_text, nvars);
  const HbarPolynomial b = parse_hbar_polynomial(b_text, nvars);
  const HbarPolynomial p = star(man.manifold, man.connection, a, b, k);
  for (int j = 0; j <= k; ++j) {
    auto it = p.find(j);
    std::cout << "hbar^" << j << ": " << (it == p.end() ? "0" : it->second.to_string()) << "\n";
  }
  return kExitOk;
}

int cmd_finite(const std::string& path, std::optional<int> zmax_opt) {
  const Manifest man = load_manifest(path);
  const int zmax = zmax_opt.value_or(man.max_degree);
  if (zmax < 4) throw CLI::ValidationError("--zmax", "must be >= 4");
  const AbelianCorrection r = abelian_r(man.manifold, man.connection, zmax - 1);
  if (r.nonzero_grades().empty()) {
    std::cout << "flat, r = 0\n";
    return kExitOk;
  }
  for (int m = 4; m <= zmax; ++m) {
    const FinitenessVerdict v = finiteness_test(man.manifold, man.connection, r, m);
    if (v.finite_consistent()) {
      int deg = 0;
      for (int z : r.nonzero_grades()) {
        if (z <= m - 1) deg = z;
      }
      std::cout << "m=" << m << ": all " << v.equation_count << " equations hold\n";
      std::cout << "finite, deg(r)=" << deg << "\n";
      return kExitOk;
    }
    std::cout << "m=" << m << ": violated at "
              << FinitenessVerdict::equation_label(v.square_violated() ? v.violated.back() : *v.first_violated(), m);
    std::cout << " (" << v.violated.size() << " of " << v.equation_count << " equations violated)\n";
  }
  std::cout << "not finite within zmax=" << zmax << "\n";
  return kExitOk;
}

twodim::CoefficientTable random_table(int z, std::mt19937_64& rng) {
  twodim::CoefficientTable b(z);
  const auto idx = b.indices();
  for (;;) {
    for (const auto& [k, l] : idx) {
      // Small Gaussian integers, zero about a third of the time.
      const long re = static_cast<long>(rng() % 7) - 3;
      const long im = static_cast<long>(rng() % 3) - 1;
      b.set(k, l, GaussianRational(Rational(re), Rational(im)));
    }
    if (!b.is_zero()) return b;
  }
}

int cmd_prop41(int z, int trials, std::uint64_t seed) {
  if (z < 1) throw CLI::ValidationError("--z", "must be >= 1");
  if (trials < 0) throw CLI::ValidationError("--trials", "must be >= 0");
  std::mt19937_64 rng(seed);
  int nonzero = 0;
  for (int t = 0; t < trials; ++t) {
    const twodim::CoefficientTable b = random_table(z, rng);
    if (!twodim::square_check(b.to_form()).zero) ++nonzero;
  }
  std::cout << "z=" << z << " seed=" << seed << ": " << nonzero << " of " << trials
            << " random nonzero F give a nonzero square\n";
  const twodim::CascadeTranscript transcript = twodim::cascade_solve(z);
  std::cout << transcript.to_string();
  return nonzero == trials && transcript.complete ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fedosov deformation quantization in exact arithmetic"};
  app.require_subcommand(1);

  std::string manifest;
  std::optional<int> degree;
  bool check = false;
  std::string format = "text";
  std::string a0;
  std::string b0;
  std::optional<int> order;
  std::optional<int> zmax;
  int z = 5;
  int trials = 20;
  std::uint64_t seed = 1;

  auto* validate_cmd = app.add_subcommand("validate", "Validate a manifest");
  validate_cmd->add_option("manifest", manifest, "Manifest file")->required();

  auto* abelian_cmd = app.add_subcommand("abelian", "Compute the Abelian connection correction r[3..N]");
  abelian_cmd->add_option("manifest", manifest, "Manifest file")->required();
  abelian_cmd->add_option("--degree,-N", degree, "Highest grade N (default: manifest max_degree)");
  abelian_cmd->add_flag("--check", check, "Verify the Abelian equation and invariants");
  abelian_cmd->add_option("--out", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* star_cmd = app.add_subcommand("star", "Star product of two functions");
  star_cmd->add_option("manifest", manifest, "Manifest file")->required();
  star_cmd->add_option("a0", a0, "First function")->required();
  star_cmd->add_option("b0", b0, "Second function")->required();
  star_cmd->add_option("--order,-K", order, "Highest hbar power (default: manifest hbar_order)");

  auto* finite_cmd = app.add_subcommand("finite", "Test whether r is a finite series");
  finite_cmd->add_option("manifest", manifest, "Manifest file")->required();
  finite_cmd->add_option("--zmax", zmax, "Largest m tested (default: manifest max_degree)");

  auto* prop_cmd = app.add_subcommand("prop41", "Random square checks and the cascade in 2D");
  prop_cmd->add_option("--z", z, "Homogeneity degree z");
  prop_cmd->add_option("--trials", trials, "Number of random F");
  prop_cmd->add_option("--seed", seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*validate_cmd) return cmd_validate(manifest);
    if (*abelian_cmd) return cmd_abelian(manifest, degree, check, format);
    if (*star_cmd) return cmd_star(manifest, a0, b0, order);
    if (*finite_cmd) return cmd_finite(manifest, zmax);
    if (*prop_cmd) return cmd_prop41(z, trials, seed);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalidSpec;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}
