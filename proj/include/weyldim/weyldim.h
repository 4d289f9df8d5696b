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

#ifndef WEYLDIM_WEYLDIM_H
#define WEYLDIM_WEYLDIM_H

#include <stddef.h>

#if defined(WEYLDIM_BUILDING_LIBRARY)
#define WD_API __attribute__((visibility("default")))
#else
#define WD_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wd_status {
  WD_OK = 0,
  WD_INPUT_ERROR = 1,
  WD_VERIFICATION_FAILURE = 2,
  WD_NOT_CONVERGED = 3,
  WD_INTERNAL_ERROR = 4
} wd_status;

typedef struct wd_presentation wd_presentation;
typedef struct wd_report wd_report;

/* Strings returned through char** are owned by the caller; release them with
   wd_string_free. On failure *out is left NULL and wd_last_error() describes
   the problem (thread-local, valid until the next call on that thread). */

WD_API wd_status wd_presentation_parse(const char* json_text, wd_presentation** out);
WD_API void wd_presentation_free(wd_presentation* pres);
WD_API size_t wd_presentation_blocks(const wd_presentation* pres);
WD_API wd_status wd_presentation_render(const wd_presentation* pres, char** out);

WD_API wd_status wd_groebner_json(const wd_presentation* pres, char** out);
WD_API wd_status wd_bernstein_json(const wd_presentation* pres, char** out);

/* dim_K M_r by term enumeration, as a decimal string. */
WD_API wd_status wd_eval_dimension(const wd_presentation* pres, const long* r, size_t p,
                                   char** out);

/* Differential check on [0, rmax]^p. Returns WD_VERIFICATION_FAILURE on a
   mismatch, with the report still written to *out. */
WD_API wd_status wd_check_json(const wd_presentation* pres, long rmax, char** out);

/* force_interpolation != 0 disables the closed-form path for the V' count. */
WD_API wd_status wd_report_compute(const wd_presentation* pres, int force_interpolation,
                                   wd_report** out);
WD_API void wd_report_free(wd_report* report);
WD_API int wd_report_holonomic(const wd_report* report);
WD_API long wd_report_degree(const wd_report* report);
WD_API wd_status wd_report_eval(const wd_report* report, const long* r, size_t p, char** out);
WD_API wd_status wd_report_json(const wd_report* report, char** out);
WD_API wd_status wd_report_invariants_json(const wd_report* report, char** out);

WD_API void wd_string_free(char* s);
WD_API const char* wd_last_error(void);
WD_API const char* wd_version(void);

#ifdef __cplusplus
}
#endif

#endif /* WEYLDIM_WEYLDIM_H */
