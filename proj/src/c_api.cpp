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

#include "weyldim/weyldim.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "weyldim/error.hpp"
#include "weyldim/io.hpp"

struct wd_presentation {
  weyldim::Presentation pres;
};

struct wd_report {
  weyldim::DimensionReport report;
};

namespace {

thread_local std::string last_error;

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <typename Fn>
wd_status guarded(Fn&& fn) {
  last_error.clear();
  try {
    return fn();
  } catch (const weyldim::Error& e) {
    last_error = e.what();
    return static_cast<wd_status>(e.status());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  }
  return WD_INTERNAL_ERROR;
}

wd_status missing(const char* what) {
  last_error = std::string("null argument: ") + what;
  return WD_INPUT_ERROR;
}

std::vector<long> radius(const long* r, size_t p, const weyldim::Partition& P) {
  if (p != P.nblocks())
    throw weyldim::InputError("expected " + std::to_string(P.nblocks()) +
                              " radius components, got " + std::to_string(p));
  return {r, r + p};
}

}  // namespace

extern "C" {

wd_status wd_presentation_parse(const char* json_text, wd_presentation** out) {
  if (!json_text || !out) return missing("json_text/out");
  *out = nullptr;
  return guarded([&] {
    *out = new wd_presentation{weyldim::io::parse_presentation(json_text)};
    return WD_OK;
  });
}

void wd_presentation_free(wd_presentation* pres) { delete pres; }

size_t wd_presentation_blocks(const wd_presentation* pres) {
  return pres ? pres->pres.partition.nblocks() : 0;
}

wd_status wd_presentation_render(const wd_presentation* pres, char** out) {
  if (!pres || !out) return missing("pres/out");
  *out = nullptr;
  return guarded([&] {
    *out = copy_out(weyldim::io::render_presentation(pres->pres));
    return WD_OK;
  });
}

wd_status wd_groebner_json(const wd_presentation* pres, char** out) {
  if (!pres || !out) return missing("pres/out");
  *out = nullptr;
  return guarded([&] {
    const auto& p = pres->pres;
    p.validate();
    auto G = weyldim::complete_basis(p.partition, p.rank, p.relations);
    *out = copy_out(weyldim::io::basis_json(G));
    return WD_OK;
  });
}

wd_status wd_bernstein_json(const wd_presentation* pres, char** out) {
  if (!pres || !out) return missing("pres/out");
  *out = nullptr;
  return guarded([&] {
    *out = copy_out(weyldim::io::bernstein_json(weyldim::bernstein_polynomial(pres->pres)));
    return WD_OK;
  });
}

wd_status wd_eval_dimension(const wd_presentation* pres, const long* r, size_t p, char** out) {
  if (!pres || !out || (!r && p)) return missing("pres/r/out");
  *out = nullptr;
  return guarded([&] {
    const auto& pr = pres->pres;
    pr.validate();
    auto rv = radius(r, p, pr.partition);
    auto G = weyldim::complete_basis(pr.partition, pr.rank, pr.relations);
    *out = copy_out(weyldim::count_uvw(G, rv).u.get_str());
    return WD_OK;
  });
}

wd_status wd_check_json(const wd_presentation* pres, long rmax, char** out) {
  if (!pres || !out) return missing("pres/out");
  *out = nullptr;
  return guarded([&] {
    auto check = weyldim::oracle::differential_check(pres->pres, rmax);
    *out = copy_out(weyldim::io::check_json(check));
    if (!check.ok) {
      last_error = "engine and oracle disagree";
      return WD_VERIFICATION_FAILURE;
    }
    return WD_OK;
  });
}

wd_status wd_report_compute(const wd_presentation* pres, int force_interpolation,
                            wd_report** out) {
  if (!pres || !out) return missing("pres/out");
  *out = nullptr;
  return guarded([&] {
    weyldim::DimensionOptions opts;
    if (force_interpolation) opts.path = weyldim::PsiPath::interpolation;
    *out = new wd_report{weyldim::dimension_polynomial(pres->pres, opts)};
    return WD_OK;
  });
}

void wd_report_free(wd_report* report) { delete report; }

int wd_report_holonomic(const wd_report* report) {
  return report && report->report.holonomic ? 1 : 0;
}

long wd_report_degree(const wd_report* report) {
  return report ? report->report.degrees.total : -1;
}

wd_status wd_report_eval(const wd_report* report, const long* r, size_t p, char** out) {
  if (!report || !out || (!r && p)) return missing("report/r/out");
  *out = nullptr;
  return guarded([&] {
    auto rv = radius(r, p, report->report.partition);
    *out = copy_out(report->report.phi.eval(rv).get_str());
    return WD_OK;
  });
}

wd_status wd_report_json(const wd_report* report, char** out) {
  if (!report || !out) return missing("report/out");
  *out = nullptr;
  return guarded([&] {
    *out = copy_out(weyldim::io::report_json(report->report));
    return WD_OK;
  });
}

wd_status wd_report_invariants_json(const wd_report* report, char** out) {
  if (!report || !out) return missing("report/out");
  *out = nullptr;
  return guarded([&] {
    *out = copy_out(weyldim::io::invariants_json(report->report));
    return WD_OK;
  });
}

void wd_string_free(char* s) { std::free(s); }

const char* wd_last_error(void) { return last_error.c_str(); }

const char* wd_version(void) { return "0.1.0"; }

}  // extern "C"
