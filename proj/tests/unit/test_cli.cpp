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

#include <doctest.h>

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(FEDOSOV_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string manifest(const std::string& name) { return std::string(FEDOSOV_DATA_DIR) + "/" + name + ".json"; }

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("validate") {
  const Run flat = run("validate " + manifest("flat2d"));
  CHECK(flat.status == 0);
  CHECK(flat.out.starts_with("OK\n"));
  CHECK(run("validate " + manifest("curved2d")).status == 0);
  CHECK(run("validate " + manifest("commuting4d")).status == 0);
  const Run asym = run("validate " + manifest("asymmetric"));
  CHECK(asym.status == 2);
  CHECK(contains(asym.out, "(1,1,2)"));
  CHECK(run("validate " + manifest("malformed")).status == 3);
  CHECK(run("validate /nonexistent/manifest.json").status == 3);
}

TEST_CASE("usage errors") {
  CHECK(run("").status == 3);
  CHECK(run("frobnicate").status == 3);
  CHECK(run("abelian " + manifest("flat2d") + " --degree 2").status == 3);
  CHECK(run("abelian " + manifest("flat2d") + " --out xml").status == 3);
  CHECK(run("star " + manifest("flat2d") + " q1 'q1 +* 2'").status == 3);
  CHECK(run("--help").status == 0);
}

TEST_CASE("abelian") {
  const Run curved = run("abelian " + manifest("curved2d") + " --degree 6 --check");
  CHECK(curved.status == 0);
  for (int z = 3; z <= 6; ++z) {
    const std::string header = "r[" + std::to_string(z) + "]:\n";
    CHECK(contains(curved.out, header));
  }
  CHECK_FALSE(contains(curved.out, ": 0\n"));
  CHECK(contains(curved.out, "check through grade 5: PASS"));

  const Run flat = run("abelian " + manifest("flat2d") + " --degree 6 --check");
  CHECK(flat.status == 0);
  CHECK(contains(flat.out, "r[6]: 0\n"));

  const Run json = run("abelian " + manifest("curved2d") + " --degree 4 --out json");
  CHECK(json.status == 0);
  CHECK(contains(json.out, "\"grades\""));
  CHECK(contains(json.out, "\"coeff_poly\""));

  CHECK(run("abelian " + manifest("asymmetric") + " --degree 4").status == 2);
}

TEST_CASE("star") {
  const Run flat = run("star " + manifest("flat2d") + " q1 q2 --order 1");
  CHECK(flat.status == 0);
  CHECK(flat.out == "hbar^0: q1*q2\nhbar^1: 1/2*i\n");
  const Run unit = run("star " + manifest("curved2d") + " 1 'q1^2*q2 - 3' --order 2");
  CHECK(unit.out == "hbar^0: q1^2*q2 - 3\nhbar^1: 0\nhbar^2: 0\n");
  const Run curved = run("star " + manifest("curved2d") + " q1 q2 --order 2");
  CHECK(curved.out.starts_with("hbar^0: q1*q2\nhbar^1: 1/2*i\n"));
}

TEST_CASE("finite and prop41") {
  const Run four = run("finite " + manifest("commuting4d") + " --zmax 6");
  CHECK(four.status == 0);
  CHECK(contains(four.out, "finite, deg(r)=3"));

  const Run curved = run("finite " + manifest("curved2d") + " --zmax 7");
  CHECK(curved.status == 0);
  for (int m = 4; m <= 7; ++m) {
    const std::string last = std::to_string(m - 1);
    CHECK(contains(curved.out, "m=" + std::to_string(m) + ": violated at r[" + last + "] o r[" + last + "]"));
  }
  CHECK(contains(curved.out, "not finite within zmax=7"));

  CHECK(contains(run("finite " + manifest("flat2d")).out, "flat, r = 0"));

  const Run prop = run("prop41 --z 5 --trials 10 --seed 3");
  CHECK(prop.status == 0);
  CHECK(prop.out.ends_with("all b = 0\n"));
  CHECK(contains(prop.out, "10 of 10"));
  CHECK(run("prop41 --z 5 --trials 10 --seed 3").out == prop.out);
}

TEST_CASE("output is reproducible") {
  const std::string args = "abelian " + manifest("curved2d") + " --degree 7 --out json";
  CHECK(run(args).out == run(args).out);
}
