/*
   Copyright 2026 The weyldim Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "weyldim/weyldim.h"

namespace {

struct PresentationDeleter {
  void operator()(wd_presentation* p) const { wd_presentation_free(p); }
};
struct ReportDeleter {
  void operator()(wd_report* r) const { wd_report_free(r); }
};
using PresentationPtr = std::unique_ptr<wd_presentation, PresentationDeleter>;
using ReportPtr = std::unique_ptr<wd_report, ReportDeleter>;

int report_failure(wd_status st) {
  std::cerr << "weyldim: " << wd_last_error() << "\n";
  return static_cast<int>(st);
}

// Prints and releases an owned string.
void emit(char* s) {
  std::cout << s;
  std::string_view v(s);
  if (v.empty() || v.back() != '\n') std::cout << "\n";
  wd_string_free(s);
}

int load(const std::string& path, PresentationPtr& out) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "weyldim: cannot open " << path << "\n";
    return WD_INPUT_ERROR;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  wd_presentation* raw = nullptr;
  wd_status st = wd_presentation_parse(buf.str().c_str(), &raw);
  if (st != WD_OK) {
    std::cerr << "weyldim: " << path << ": " << wd_last_error() << "\n";
    return st;
  }
  out.reset(raw);
  return WD_OK;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multivariate dimension polynomials of finitely generated D-modules"};
  app.set_version_flag("--version", std::string(wd_version()));
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "Report timing on stderr");

  std::string file;
  bool interpolate = false;
  long rmax = 3;
  std::vector<long> at;

  auto* gb = app.add_subcommand("gb", "Print the Groebner basis for the relations");
  auto* dimpoly = app.add_subcommand("dimpoly", "Print the dimension polynomial report");
  auto* bernstein = app.add_subcommand("bernstein", "Print the univariate Bernstein polynomial");
  auto* invariants = app.add_subcommand("invariants", "Print the generator-independent invariants");
  auto* check = app.add_subcommand("check", "Compare the engine with the brute-force oracles");
  auto* eval = app.add_subcommand("eval", "Print dim M_r for one radius");
  for (auto* sub : {gb, dimpoly, bernstein, invariants, check, eval})
    sub->add_option("file", file, "Presentation document (JSON)")->required();
  dimpoly->add_flag("--interpolate", interpolate, "Always interpolate the V' count");
  check->add_option("--rmax", rmax, "Largest radius coordinate on the grid")
      ->check(CLI::Range(0L, 8L));
  eval->add_option("--at", at, "Radius r1,...,rp")->delimiter(',')->required();

  CLI11_PARSE(app, argc, argv);

  const auto start = std::chrono::steady_clock::now();
  PresentationPtr pres;
  if (int rc = load(file, pres)) return rc;

  char* text = nullptr;
  wd_status st = WD_OK;
  if (*gb) {
    st = wd_groebner_json(pres.get(), &text);
  } else if (*bernstein) {
    st = wd_bernstein_json(pres.get(), &text);
  } else if (*check) {
    st = wd_check_json(pres.get(), rmax, &text);
  } else if (*eval) {
    st = wd_eval_dimension(pres.get(), at.data(), at.size(), &text);
  } else {
    wd_report* raw = nullptr;
    st = wd_report_compute(pres.get(), interpolate ? 1 : 0, &raw);
    ReportPtr report(raw);
    if (st == WD_OK) {
      st = *dimpoly ? wd_report_json(report.get(), &text)
                    : wd_report_invariants_json(report.get(), &text);
    }
  }
  if (text) emit(text);
  if (verbose) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    std::cerr << "weyldim: finished in " << ms.count() << " ms\n";
  }
  if (st != WD_OK) return report_failure(st);
  return 0;
}
