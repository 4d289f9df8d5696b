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

#include "weyldim/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>

#include "weyldim/error.hpp"

namespace weyldim::oracle {

namespace {

using Word = std::vector<std::uint8_t>;

// Letters 0..n-1 are x_1..x_n, letters n..2n-1 are d_1..d_n. Runs of letters of
// one kind commute, so they are kept sorted to merge equal words.
void sort_runs(Word& w, std::size_t n) {
  std::size_t i = 0;
  while (i < w.size()) {
    bool is_d = w[i] >= n;
    std::size_t j = i;
    while (j < w.size() && (w[j] >= n) == is_d) ++j;
    std::sort(w.begin() + i, w.begin() + j);
    i = j;
  }
}

void append_monomial(Word& w, const Monomial& m) {
  const std::size_t n = m.nvars();
  for (std::size_t i = 0; i < n; ++i) w.insert(w.end(), m.alpha(i), static_cast<std::uint8_t>(i));
  for (std::size_t i = 0; i < n; ++i)
    w.insert(w.end(), m.beta(i), static_cast<std::uint8_t>(n + i));
}

}  // namespace

WeylElement naive_weyl_mul(const WeylElement& a, const WeylElement& b, std::size_t budget) {
  if (a.nvars() != b.nvars()) throw InputError("operands have different numbers of variables");
  const std::size_t n = a.nvars();
  WeylElement out(n);
  std::size_t steps = 0;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (ma.order() > 8 || mb.order() > 8)
        throw InputError("naive product limited to operands of total order 8");
      std::map<Word, Integer> pending;
      Word w;
      append_monomial(w, ma);
      append_monomial(w, mb);
      pending[w] = 1;
      while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        Word word = std::move(node.key());
        const Integer c = node.mapped();
        std::size_t k = 0;
        while (k + 1 < word.size() && !(word[k] >= n && word[k + 1] < n)) ++k;
        if (k + 1 >= word.size()) {
          Monomial m(n);
          for (auto letter : word) {
            if (letter < n) m.set_alpha(letter, m.alpha(letter) + 1);
            else m.set_beta(letter - n, m.beta(letter - n) + 1);
          }
          out.add_term(m, Rational(ca * cb) * Rational(c));
          continue;
        }
        if (++steps > budget) throw ConvergenceError("rewrite budget exhausted");
        const bool same = word[k] - n == word[k + 1];
        Word swapped = word;
        std::swap(swapped[k], swapped[k + 1]);
        sort_runs(swapped, n);
        pending[swapped] += c;
        if (same) {
          Word dropped = word;
          dropped.erase(dropped.begin() + k, dropped.begin() + k + 2);
          sort_runs(dropped, n);
          pending[dropped] += c;
        }
      }
    }
  }
  return out;
}

Integer enum_v_a(const IndexSet& A, std::span<const long> r) {
  A.validate();
  const auto& parts = A.partition;
  if (r.size() != parts.size()) throw InputError("radius length differs from block count");
  for (long ri : r)
    if (ri < 0) return 0;
  const std::size_t q = A.dimension();
  IndexTuple v(q, 0);
  unsigned long long count = 0;

  auto dominated = [&]() {
    for (const auto& a : A.points) {
      bool ge = true;
      for (std::size_t k = 0; k < q && ge; ++k) ge = v[k] >= a[k];
      if (ge) return true;
    }
    return false;
  };
  std::vector<std::size_t> block_of(q);
  std::vector<std::size_t> last_of_block(parts.size());
  for (std::size_t j = 0, pos = 0; j < parts.size(); ++j) {
    for (std::size_t k = 0; k < parts[j]; ++k) block_of[pos++] = j;
    last_of_block[j] = pos - 1;
  }
  std::vector<long> left(r.begin(), r.end());
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == q) {
      if (!dominated()) ++count;
      return;
    }
    const std::size_t j = block_of[pos];
    const long room = left[j];
    for (long x = 0; x <= room; ++x) {
      v[pos] = static_cast<unsigned>(x);
      left[j] = room - x;
      self(self, pos + 1);
    }
    left[j] = room;
    v[pos] = 0;
  };
  rec(rec, 0);
  return Integer(std::to_string(count));
}

namespace {

// Calls fn(theta) for every monomial with ord_j(theta) <= bound_j.
template <typename Fn>
void for_each_monomial(const Partition& P, std::span<const long> bound, Fn&& fn) {
  for (long b : bound)
    if (b < 0) return;
  const std::size_t n = P.nvars();
  Monomial theta(n);
  std::vector<long> left(bound.begin(), bound.end());
  auto rec = [&](auto&& self, std::size_t slot) -> void {
    if (slot == 2 * n) {
      fn(theta);
      return;
    }
    const std::size_t var = slot % n;
    const std::size_t j = P.block_of(var);
    const long room = left[j];
    for (long e = 0; e <= room; ++e) {
      if (slot < n) theta.set_alpha(var, static_cast<unsigned>(e));
      else theta.set_beta(var, static_cast<unsigned>(e));
      left[j] = room - e;
      self(self, slot + 1);
    }
    left[j] = room;
    if (slot < n) theta.set_alpha(var, 0);
    else theta.set_beta(var, 0);
  };
  rec(rec, 0);
}

bool within(const Monomial& m, const Partition& P, std::span<const long> bound) {
  for (std::size_t j = 0; j < P.nblocks(); ++j)
    if (static_cast<long>(m.block_order(P, j)) > bound[j]) return false;
  return true;
}

// Largest exponent in theta*g for ord_j(theta) <= r_j + slack.
unsigned exponent_bound(const Presentation& pres, std::span<const long> r, unsigned slack) {
  long top = 0;
  for (long ri : r) top = std::max(top, ri);
  unsigned deg = 0;
  for (const auto& g : pres.relations)
    for (const auto& [t, c] : g.terms()) deg = std::max(deg, t.mono.order());
  return static_cast<unsigned>(top) + slack + deg;
}

// Incremental fraction-free row echelon form. Column keys put every column outside
// the target box before every column inside it, so a row whose leading key is
// inside lies wholly inside. Within each side columns run from high to low
// total degree (graded lex when the exponents fit into the key), which keeps
// the rows theta*g close to triangular.
class Echelon {
 public:
  Echelon(const Partition& P, std::span<const long> r, std::size_t rank, unsigned max_exponent)
      : P_(P), r_(r.begin(), r.end()) {
    const std::size_t n = P.nvars();
    width_ = static_cast<unsigned>(std::bit_width(max_exponent));
    const auto gen_bits = static_cast<unsigned>(std::bit_width(rank > 0 ? rank - 1 : 0));
    packed_ = 1 + 16 + 2 * n * width_ + gen_bits <= 64 && 2 * n * max_exponent < 0xFFFFu;
  }

  // Adds the row theta*g, scaled to integer coefficients.
  void add(const Monomial& theta, const ModuleElement& g) {
    Integer scale = 1;
    for (const auto& [t, c] : g.terms()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
    Row row;
    for (const auto& [t, c] : g.terms()) {
      const Integer a = scale / c.get_den() * c.get_num();
      multiply_monomials(theta, t.mono, [&](const Monomial& m, const Integer& k) {
        row.emplace_back(key_of({t.gen, m}), a * k);
      });
    }
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < row.size();) {
      std::size_t j = i + 1;
      Integer sum = std::move(row[i].second);
      for (; j < row.size() && row[j].first == row[i].first; ++j) sum += row[j].second;
      if (sum != 0) {
        row[out].first = row[i].first;
        row[out].second = std::move(sum);
        ++out;
      }
      i = j;
    }
    row.resize(out);
    work_ += row.size();
    for (unsigned steps = 1; !row.empty(); ++steps) {
      auto it = pivot_of_.find(row.front().first);
      if (it == pivot_of_.end()) break;
      const Row& pivot = rows_[it->second];
      const Integer d = gcd(pivot.front().second, row.front().second);
      work_ += row.size() + pivot.size();
      row = combine(Integer(pivot.front().second / d), row, Integer(row.front().second / d), pivot);
      if (steps % 8 == 0) make_primitive(row);
    }
    if (row.empty()) return;
    make_primitive(row);
    if (row.front().first >> 63) ++inside_pivots_;
    pivot_of_.emplace(row.front().first, rows_.size());
    rows_.push_back(std::move(row));
  }

  std::size_t inside_pivots() const { return inside_pivots_; }
  // Entries touched so far; a machine-independent cost measure.
  std::uint64_t work() const { return work_; }

 private:
  using Row = std::vector<std::pair<std::uint64_t, Integer>>;

  std::uint64_t key_of(const Term& t) {
    const std::uint64_t inside = within(t.mono, P_, r_) ? 1 : 0;
    const std::uint64_t low = 0xFFFFu - std::min<std::uint64_t>(t.mono.order(), 0xFFFFu);
    if (packed_) {
      const std::size_t n = P_.nvars();
      const std::uint64_t mask = (std::uint64_t{1} << width_) - 1;
      std::uint64_t key = (inside << 63) | (low << 47);
      unsigned shift = 47;
      for (std::size_t i = 0; i < 2 * n; ++i) {
        shift -= width_;
        const unsigned e = i < n ? t.mono.alpha(i) : t.mono.beta(i - n);
        key |= (mask - e) << shift;
      }
      return key | t.gen;
    }
    auto [it, fresh] = ids_.try_emplace(t, static_cast<std::uint32_t>(ids_.size()));
    return (inside << 63) | (low << 32) | it->second;
  }

  // x*a - y*b for sorted rows.
  static Row combine(const Integer& x, const Row& a, const Integer& y, const Row& b) {
    Row out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.emplace_back(a[i].first, x * a[i].second);
        ++i;
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, -y * b[j].second);
        ++j;
      } else {
        Integer v = x * a[i].second - y * b[j].second;
        if (v != 0) out.emplace_back(a[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  static void make_primitive(Row& row) {
    Integer g = 0;
    for (const auto& e : row) {
      g = gcd(g, e.second);
      if (g == 1) break;
    }
    if (row.front().second < 0) g = -g;
    if (g != 1)
      for (auto& e : row) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
  }

  const Partition& P_;
  std::vector<long> r_;
  unsigned width_ = 0;
  bool packed_ = false;
  std::map<Term, std::uint32_t> ids_;
  std::vector<Row> rows_;
  std::unordered_map<std::uint64_t, std::size_t> pivot_of_;
  std::size_t inside_pivots_ = 0;
  std::uint64_t work_ = 0;
};

}  // namespace

std::vector<Term> theta_terms(const Partition& P, std::size_t rank, std::span<const long> r) {
  if (r.size() != P.nblocks()) throw InputError("radius length differs from block count");
  std::vector<Term> out;
  for_each_monomial(P, r, [&](const Monomial& m) {
    for (std::uint32_t g = 0; g < rank; ++g) out.push_back({g, m});
  });
  std::sort(out.begin(), out.end());
  return out;
}

Integer rank_dimension_at(const RankQuery& q) {
  q.pres.validate();
  const Partition& P = q.pres.partition;
  if (q.r.size() != P.nblocks()) throw InputError("radius length differs from block count");
  for (long ri : q.r)
    if (ri < 0) return 0;
  const std::size_t card = theta_terms(P, q.pres.rank, q.r).size();
  if (card > 10'000) throw InputError("rank oracle limited to 10^4 basis terms");
  Echelon ech(P, q.r, q.pres.rank, exponent_bound(q.pres, q.r, q.slack));
  std::vector<long> bound(q.r);
  for (auto& b : bound) b += q.slack;
  for_each_monomial(P, bound, [&](const Monomial& theta) {
    for (const auto& g : q.pres.relations) ech.add(theta, g);
  });
  return Integer(static_cast<unsigned long>(card)) -
         Integer(static_cast<unsigned long>(ech.inside_pivots()));
}

RankResult rank_dimension(const RankQuery& q, unsigned max_slack) {
  q.pres.validate();
  const Partition& P = q.pres.partition;
  if (q.r.size() != P.nblocks()) throw InputError("radius length differs from block count");
  for (long ri : q.r)
    if (ri < 0) return {0, q.slack};

  const std::size_t card = theta_terms(P, q.pres.rank, q.r).size();
  if (card > 10'000) throw InputError("rank oracle limited to 10^4 basis terms");

  Echelon ech(P, q.r, q.pres.rank, exponent_bound(q.pres, q.r, max_slack));
  std::vector<long> previous_bound;
  auto rows_up_to = [&](unsigned slack) {
    std::vector<long> bound(q.r);
    for (auto& b : bound) b += slack;
    for_each_monomial(P, bound, [&](const Monomial& theta) {
      if (!previous_bound.empty() && within(theta, P, previous_bound)) return;
      for (const auto& g : q.pres.relations) ech.add(theta, g);
    });
    previous_bound = bound;
  };

  Integer value;
  unsigned reached = q.slack;
  unsigned unchanged = 0;
  for (unsigned slack = q.slack; slack <= max_slack; ++slack) {
    rows_up_to(slack);
    Integer now = Integer(static_cast<unsigned long>(card)) -
                  Integer(static_cast<unsigned long>(ech.inside_pivots()));
    if (slack > q.slack && now == value) {
      ++unchanged;
    } else {
      value = now;
      reached = slack;
      unchanged = 0;
    }
    if (unchanged == 3) return {value, reached};
  }
  throw ConvergenceError("rank oracle not converged by slack " + std::to_string(max_slack));
}

RankResult rank_dimension_escalate(const RankQuery& q, const Integer& target,
                                  unsigned max_slack, std::uint64_t max_work) {
  q.pres.validate();
  const Partition& P = q.pres.partition;
  if (q.r.size() != P.nblocks()) throw InputError("radius length differs from block count");
  for (long ri : q.r)
    if (ri < 0) return {0, q.slack};
  const std::size_t card = theta_terms(P, q.pres.rank, q.r).size();
  if (card > 10'000) throw InputError("rank oracle limited to 10^4 basis terms");

  Echelon ech(P, q.r, q.pres.rank, exponent_bound(q.pres, q.r, max_slack));
  std::vector<long> previous_bound;
  Integer value;
  for (unsigned slack = 0; slack <= max_slack; ++slack) {
    std::vector<long> bound(q.r);
    for (auto& b : bound) b += slack;
    for_each_monomial(P, bound, [&](const Monomial& theta) {
      if (!previous_bound.empty() && within(theta, P, previous_bound)) return;
      for (const auto& g : q.pres.relations) ech.add(theta, g);
    });
    previous_bound = bound;
    value = Integer(static_cast<unsigned long>(card)) -
            Integer(static_cast<unsigned long>(ech.inside_pivots()));
    if (slack >= q.slack && value <= target) return {value, slack};
    if (ech.work() > max_work) break;
  }
  throw ConvergenceError("rank oracle stayed above " + target.get_str() + " up to slack " +
                         std::to_string(max_slack));
}

RankResult rank_against(const RankQuery& q, const Integer& target) {
  RankResult first = rank_dimension(q);
  if (first.dimension == target) return first;
  RankQuery next = q;
  next.slack = first.slack + 1;
  return rank_dimension_escalate(next, target);
}

CheckReport differential_check(const Presentation& pres, long rmax,
                               const DimensionOptions& options) {
  if (rmax < 0) throw InputError("rmax must be nonnegative");
  CheckReport out;
  out.report = dimension_polynomial(pres, options);
  const std::size_t p = pres.partition.nblocks();
  std::vector<long> r(p, 0);
  for (;;) {
    CheckEntry e;
    e.r = r;
    e.count_u = count_uvw(out.report.basis, r).u;
    try {
      e.rank = rank_against({pres, r, 0}, e.count_u).dimension;
    } catch (const ConvergenceError&) {
      e.rank = rank_dimension({pres, r, 0}).dimension;
    }
    e.ok = e.count_u == e.rank;
    bool large = true;
    for (std::size_t i = 0; i < p; ++i) large = large && r[i] >= out.report.threshold[i];
    if (large) {
      e.phi = out.report.phi.eval(r);
      e.ok = e.ok && *e.phi == e.count_u;
    }
    out.ok = out.ok && e.ok;
    out.entries.push_back(std::move(e));
    std::size_t j = p;
    for (;;) {
      if (j == 0) return out;
      --j;
      if (++r[j] <= rmax) break;
      r[j] = 0;
    }
  }
}

}  // namespace weyldim::oracle
