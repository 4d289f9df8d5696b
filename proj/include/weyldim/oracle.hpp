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

#ifndef WEYLDIM_ORACLE_HPP
#define WEYLDIM_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "weyldim/dimension.hpp"

// Brute-force reference implementations. They share no code paths with the
// engine beyond the basic containers, and are meant for desk-scale inputs.
namespace weyldim::oracle {

// Weyl product by repeated single-swap rewriting of letter words. Throws
// InputError when an operand term has total order above 8 and
// ConvergenceError when the rewrite budget is exhausted.
WeylElement naive_weyl_mul(const WeylElement& a, const WeylElement& b,
                           std::size_t budget = 2'000'000);

// Number of v in N^q with block sums bounded by r that dominate no point of A.
Integer enum_v_a(const IndexSet& A, std::span<const long> r);

// Every term theta*e_k with ord_j(theta) <= r_j for all blocks, in lexicographic
// order. Empty when some r_j < 0.
std::vector<Term> theta_terms(const Partition& P, std::size_t rank, std::span<const long> r);

struct RankQuery {
  Presentation pres;
  std::vector<long> r;
  unsigned slack = 0;  // starting slack
};

struct RankResult {
  Integer dimension;
  unsigned slack = 0;  // smallest slack at which the value was reached
};

// dim_K M_r as Card Theta(r)e minus the dimension of the part of
// span{theta*g : ord_j theta <= r_j + slack} lying inside span Theta(r)e. The
// slack grows until the value is unchanged for three consecutive increments.
// Throws ConvergenceError past max_slack and InputError when Card Theta(r)e
// exceeds 10^4.
RankResult rank_dimension(const RankQuery& q, unsigned max_slack = 12);
// The same quantity at the single slack q.slack.
Integer rank_dimension_at(const RankQuery& q);

// Every value above is an upper bound for dim_K M_r that only decreases with
// the slack, so a stable value can still be too large. This raises the slack
// until the value is at most `target` and returns it with the slack used.
// Only slacks >= q.slack count. ConvergenceError when max_slack or the work
// limit (row entries touched during elimination) is reached first.
RankResult rank_dimension_escalate(const RankQuery& q, const Integer& target,
                                   unsigned max_slack = 12,
                                   std::uint64_t max_work = 50'000'000);

// rank_dimension, escalated towards `target` when the stable value differs.
// The result equals target exactly when the oracle confirms it.
RankResult rank_against(const RankQuery& q, const Integer& target);

struct CheckEntry {
  std::vector<long> r;
  Integer count_u;
  Integer rank;
  std::optional<Integer> phi;  // only at r >= threshold
  bool ok = true;
};

struct CheckReport {
  DimensionReport report;
  std::vector<CheckEntry> entries;
  bool ok = true;
};

// Compares count_uvw, rank_dimension and eval(phi) on [0, rmax]^p.
CheckReport differential_check(const Presentation& pres, long rmax,
                               const DimensionOptions& options = {});

}  // namespace weyldim::oracle

#endif  // WEYLDIM_ORACLE_HPP
