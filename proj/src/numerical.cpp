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

#include "weyldim/numerical.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "weyldim/error.hpp"

namespace weyldim {

namespace {

// Row-major box of extents `sizes`; visits every multi-index.
template <typename Fn>
void for_each_in_box(std::span<const std::size_t> sizes, Fn&& fn) {
  std::vector<std::size_t> idx(sizes.size(), 0);
  for (std::size_t s : sizes)
    if (s == 0) return;
  for (;;) {
    fn(std::span<const std::size_t>(idx));
    std::size_t j = sizes.size();
    while (j > 0) {
      --j;
      if (++idx[j] < sizes[j]) break;
      idx[j] = 0;
      if (j == 0) return;
    }
    if (sizes.empty()) return;
  }
}

std::vector<std::size_t> strides_of(std::span<const std::size_t> sizes) {
  std::vector<std::size_t> strides(sizes.size(), 1);
  for (std::size_t j = sizes.size(); j-- > 1;) strides[j - 1] = strides[j] * sizes[j];
  return strides;
}

// Applies v[k] <- sum_{s<=k} sign(k,s) C(k,s) v[s] along one axis of a
// flattened box. forward=false gives backward differences at the first grid
// point of a descending grid, forward=true forward differences.
void difference_axis(std::vector<Integer>& vals, std::span<const std::size_t> sizes,
                     std::size_t axis, bool forward) {
  auto strides = strides_of(sizes);
  std::vector<std::size_t> outer(sizes.begin(), sizes.end());
  outer[axis] = 1;
  const std::size_t len = sizes[axis];
  std::vector<Integer> line(len), out(len);
  for_each_in_box(outer, [&](std::span<const std::size_t> idx) {
    std::size_t base = 0;
    for (std::size_t j = 0; j < idx.size(); ++j) base += idx[j] * strides[j];
    for (std::size_t s = 0; s < len; ++s) line[s] = vals[base + s * strides[axis]];
    for (std::size_t k = 0; k < len; ++k) {
      Integer acc = 0;
      for (std::size_t s = 0; s <= k; ++s) {
        Integer term = binomial(static_cast<long>(k), static_cast<long>(s)) * line[s];
        bool negative = forward ? ((k - s) % 2 == 1) : (s % 2 == 1);
        if (negative) acc -= term; else acc += term;
      }
      out[k] = acc;
    }
    for (std::size_t s = 0; s < len; ++s) vals[base + s * strides[axis]] = out[s];
  });
}

// Coefficients (by power) of C(t + i, i) = (t+1)...(t+i)/i!.
const std::vector<Rational>& shifted_binomial_expansion(unsigned i) {
  static thread_local std::vector<std::vector<Rational>> cache;
  while (cache.size() <= i) {
    unsigned k = static_cast<unsigned>(cache.size());
    std::vector<Rational> poly{Rational(1)};
    for (unsigned m = 1; m <= k; ++m) {
      std::vector<Rational> next(poly.size() + 1, Rational(0));
      for (std::size_t d = 0; d < poly.size(); ++d) {
        next[d] += poly[d] * m;
        next[d + 1] += poly[d];
      }
      poly = std::move(next);
    }
    Rational f(factorial(k));
    for (auto& c : poly) c /= f;
    cache.push_back(std::move(poly));
  }
  return cache[i];
}

}  // namespace

Rational MonomialPolynomial::coeff(const IndexTuple& e) const {
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void MonomialPolynomial::add_term(const IndexTuple& e, const Rational& c) {
  if (e.size() != p_) throw InputError("monomial exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) coeffs_.erase(it);
}

Rational MonomialPolynomial::eval(std::span<const Rational> t) const {
  if (t.size() != p_) throw InputError("evaluation point length mismatch");
  Rational acc = 0;
  for (const auto& [e, c] : coeffs_) {
    Rational term = c;
    for (std::size_t j = 0; j < p_; ++j) {
      Rational pw = 1;
      for (unsigned k = 0; k < e[j]; ++k) pw *= t[j];
      term *= pw;
    }
    acc += term;
  }
  return acc;
}

NumericalPolynomial::NumericalPolynomial(std::size_t nvars, const Map& coeffs) : p_(nvars) {
  for (const auto& [i, a] : coeffs) {
    if (i.size() != p_) throw InputError("binomial index length mismatch");
    if (a != 0) coeffs_.emplace(i, a);
  }
}

NumericalPolynomial NumericalPolynomial::from_function(
    std::size_t nvars, std::span<const unsigned> degree_bounds,
    const std::function<Integer(std::span<const long>)>& f) {
  if (degree_bounds.size() != nvars) throw InputError("degree bound length mismatch");
  std::vector<std::size_t> sizes(nvars);
  for (std::size_t j = 0; j < nvars; ++j) sizes[j] = degree_bounds[j] + 1;
  const std::size_t total =
      std::accumulate(sizes.begin(), sizes.end(), std::size_t{1}, std::multiplies<>());
  std::vector<Integer> vals;
  vals.reserve(total);
  std::vector<long> t(nvars);
  for_each_in_box(sizes, [&](std::span<const std::size_t> idx) {
    for (std::size_t j = 0; j < nvars; ++j) t[j] = -1 - static_cast<long>(idx[j]);
    vals.push_back(f(t));
  });
  // a_k = (backward difference)^k f at t = -1, axis by axis.
  for (std::size_t axis = 0; axis < nvars; ++axis) difference_axis(vals, sizes, axis, false);

  NumericalPolynomial out(nvars);
  std::size_t flat = 0;
  for_each_in_box(sizes, [&](std::span<const std::size_t> idx) {
    if (vals[flat] != 0) out.coeffs_.emplace(IndexTuple(idx.begin(), idx.end()), vals[flat]);
    ++flat;
  });
  return out;
}

NumericalPolynomial NumericalPolynomial::interpolate(
    std::size_t nvars, std::span<const long> base, std::span<const unsigned> degrees,
    const std::function<Integer(std::span<const long>)>& samples) {
  if (base.size() != nvars || degrees.size() != nvars)
    throw InputError("interpolation grid length mismatch");
  std::vector<std::size_t> sizes(nvars);
  for (std::size_t j = 0; j < nvars; ++j) sizes[j] = degrees[j] + 1;
  std::vector<Integer> newton;
  std::vector<long> t(nvars);
  for_each_in_box(sizes, [&](std::span<const std::size_t> idx) {
    for (std::size_t j = 0; j < nvars; ++j) t[j] = base[j] + static_cast<long>(idx[j]);
    newton.push_back(samples(t));
  });
  for (std::size_t axis = 0; axis < nvars; ++axis) difference_axis(newton, sizes, axis, true);

  std::vector<std::pair<IndexTuple, Integer>> terms;
  std::size_t flat = 0;
  for_each_in_box(sizes, [&](std::span<const std::size_t> idx) {
    if (newton[flat] != 0) terms.emplace_back(IndexTuple(idx.begin(), idx.end()), newton[flat]);
    ++flat;
  });
  std::vector<long> shift(base.begin(), base.end());
  return from_function(nvars, degrees, [&](std::span<const long> x) {
    Integer acc = 0;
    for (const auto& [k, c] : terms) {
      Integer term = c;
      for (std::size_t j = 0; j < nvars && term != 0; ++j)
        term *= binomial(x[j] - shift[j], static_cast<long>(k[j]));
      acc += term;
    }
    return acc;
  });
}

NumericalPolynomial NumericalPolynomial::canonicalize(const MonomialPolynomial& f) {
  const std::size_t p = f.nvars();
  std::vector<unsigned> degs(p, 0);
  for (const auto& [e, c] : f.coeffs())
    for (std::size_t j = 0; j < p; ++j) degs[j] = std::max(degs[j], e[j]);
  std::vector<Rational> point(p);
  return from_function(p, degs, [&](std::span<const long> t) {
    for (std::size_t j = 0; j < p; ++j) point[j] = t[j];
    Rational v = f.eval(point);
    if (v.get_den() != 1) throw InputError("not a numerical polynomial");
    return Integer(v.get_num());
  });
}

Integer NumericalPolynomial::coeff(const IndexTuple& i) const {
  auto it = coeffs_.find(i);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

Integer NumericalPolynomial::eval(std::span<const long> t) const {
  if (t.size() != p_) throw InputError("evaluation point length mismatch");
  Integer acc = 0;
  for (const auto& [i, a] : coeffs_) {
    Integer term = a;
    for (std::size_t j = 0; j < p_ && term != 0; ++j)
      term *= binomial(t[j] + static_cast<long>(i[j]), static_cast<long>(i[j]));
    acc += term;
  }
  return acc;
}

MonomialPolynomial NumericalPolynomial::monomial_view() const {
  MonomialPolynomial out(p_);
  for (const auto& [i, a] : coeffs_) {
    // Tensor product of the univariate expansions.
    std::vector<std::pair<IndexTuple, Rational>> acc{{IndexTuple(p_, 0), Rational(a)}};
    for (std::size_t j = 0; j < p_; ++j) {
      const auto& uni = shifted_binomial_expansion(i[j]);
      std::vector<std::pair<IndexTuple, Rational>> next;
      for (const auto& [e, c] : acc)
        for (std::size_t d = 0; d < uni.size(); ++d) {
          if (uni[d] == 0) continue;
          IndexTuple e2 = e;
          e2[j] = static_cast<unsigned>(d);
          next.emplace_back(std::move(e2), c * uni[d]);
        }
      acc = std::move(next);
    }
    for (const auto& [e, c] : acc) out.add_term(e, c);
  }
  return out;
}

NumericalPolynomial operator+(const NumericalPolynomial& a, const NumericalPolynomial& b) {
  if (a.p_ != b.p_) throw InputError("numerical polynomial arity mismatch");
  NumericalPolynomial r = a;
  for (const auto& [i, c] : b.coeffs_) {
    auto [it, inserted] = r.coeffs_.try_emplace(i, c);
    if (inserted) continue;
    it->second += c;
    if (it->second == 0) r.coeffs_.erase(it);
  }
  return r;
}

NumericalPolynomial operator-(const NumericalPolynomial& a, const NumericalPolynomial& b) {
  NumericalPolynomial neg(b.p_);
  for (const auto& [i, c] : b.coeffs_) neg.coeffs_.emplace(i, -c);
  return a + neg;
}

NumericalPolynomial binomial_product(std::span<const unsigned> k, std::span<const long> shift) {
  if (k.size() != shift.size()) throw InputError("binomial product length mismatch");
  return NumericalPolynomial::from_function(k.size(), k, [&](std::span<const long> t) {
    Integer v = 1;
    for (std::size_t j = 0; j < k.size(); ++j)
      v *= binomial(t[j] + static_cast<long>(k[j]) - shift[j], static_cast<long>(k[j]));
    return v;
  });
}

DegreeData degree_data(const NumericalPolynomial& f) {
  DegreeData d;
  d.partial.assign(f.nvars(), -1);
  d.top = MonomialPolynomial(f.nvars());
  MonomialPolynomial view = f.monomial_view();
  for (const auto& [e, c] : view.coeffs()) {
    long s = 0;
    for (std::size_t j = 0; j < e.size(); ++j) {
      s += e[j];
      d.partial[j] = std::max(d.partial[j], static_cast<long>(e[j]));
    }
    d.total = std::max(d.total, s);
  }
  for (const auto& [e, c] : view.coeffs())
    if (std::accumulate(e.begin(), e.end(), 0L) == d.total) d.top.add_term(e, c);
  return d;
}

std::size_t IndexSet::dimension() const {
  return std::accumulate(partition.begin(), partition.end(), std::size_t{0});
}

void IndexSet::validate() const {
  if (partition.empty()) throw InputError("index set partition is empty");
  const std::size_t q = dimension();
  for (const auto& a : points)
    if (a.size() != q)
      throw InputError("index tuple of length " + std::to_string(a.size()) +
                       " in a set of dimension " + std::to_string(q));
}

IndexSet minimize(const IndexSet& A) {
  A.validate();
  std::vector<IndexTuple> pts = A.points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  auto leq = [](const IndexTuple& a, const IndexTuple& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > b[i]) return false;
    return true;
  };
  IndexSet out{{}, A.partition};
  for (const auto& a : pts) {
    bool dominated = false;
    for (const auto& b : pts)
      if (&a != &b && leq(b, a)) {
        dominated = true;
        break;
      }
    if (!dominated) out.points.push_back(a);
  }
  return out;
}

NumericalPolynomial omega(const IndexSet& A) {
  const IndexSet minimal = minimize(A);
  const std::size_t q = minimal.dimension();
  const std::size_t p = minimal.partition.size();

  // Inclusion-exclusion over subsets, grouped by their componentwise maximum.
  std::map<IndexTuple, Integer> by_lcm{{IndexTuple(q, 0), Integer(1)}};
  for (const auto& a : minimal.points) {
    std::map<IndexTuple, Integer> next = by_lcm;
    for (const auto& [l, c] : by_lcm) {
      IndexTuple m = l;
      for (std::size_t i = 0; i < q; ++i) m[i] = std::max(m[i], a[i]);
      auto [it, inserted] = next.try_emplace(m, -c);
      if (!inserted) {
        it->second -= c;
        if (it->second == 0) next.erase(it);
      }
    }
    by_lcm = std::move(next);
  }

  std::map<std::vector<long>, Integer> by_shift;
  for (const auto& [l, c] : by_lcm) {
    std::vector<long> b(p, 0);
    std::size_t off = 0;
    for (std::size_t j = 0; j < p; ++j)
      for (std::size_t h = 0; h < minimal.partition[j]; ++h) b[j] += l[off++];
    by_shift[b] += c;
  }

  std::vector<unsigned> degs(minimal.partition.begin(), minimal.partition.end());
  return NumericalPolynomial::from_function(p, degs, [&](std::span<const long> t) {
    Integer acc = 0;
    for (const auto& [b, c] : by_shift) {
      if (c == 0) continue;
      Integer term = c;
      for (std::size_t j = 0; j < p && term != 0; ++j) {
        long qj = static_cast<long>(minimal.partition[j]);
        term *= binomial(t[j] + qj - b[j], qj);
      }
      acc += term;
    }
    return acc;
  });
}

std::vector<IndexTuple> lex_maximal_elements(const std::vector<IndexTuple>& S) {
  if (S.empty()) return {};
  const std::size_t p = S.front().size();
  std::vector<std::size_t> perm(p);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::set<IndexTuple> out;
  do {
    const IndexTuple* best = &S.front();
    for (const auto& s : S) {
      for (std::size_t j : perm) {
        if (s[j] != (*best)[j]) {
          if (s[j] > (*best)[j]) best = &s;
          break;
        }
      }
    }
    out.insert(*best);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {out.begin(), out.end()};
}

InvariantSet invariant_set(const NumericalPolynomial& f, std::span<const std::size_t> caps) {
  if (caps.size() != f.nvars()) throw InputError("partition caps length mismatch");
  InvariantSet inv;
  DegreeData dd = degree_data(f);
  inv.degree = dd.total;
  inv.top = std::move(dd.top);
  inv.distinguished = f.coeff(IndexTuple(caps.begin(), caps.end()));
  for (const auto& [i, a] : f.coeffs()) inv.support.push_back(i);
  for (const auto& k : lex_maximal_elements(inv.support))
    inv.support_prime.emplace_back(k, f.coeff(k));
  return inv;
}

}  // namespace weyldim
