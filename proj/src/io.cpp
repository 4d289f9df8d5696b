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

#include "weyldim/io.hpp"

#include "json.hpp"

#include "weyldim/error.hpp"

namespace weyldim::io {

using nlohmann::json;

namespace {

constexpr unsigned kMaxExponent = 1000;

std::string fraction(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

json integer(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

long natural(const json& v, const std::string& where) {
  if (!v.is_number_integer()) fail(where, "expected an integer");
  long x = v.get<long>();
  if (x < 0) fail(where, "negative value " + std::to_string(x));
  return x;
}

void only_keys(const json& obj, std::initializer_list<const char*> keys,
               const std::string& where) {
  for (const auto& [k, _] : obj.items()) {
    bool known = false;
    for (const char* key : keys) known = known || k == key;
    if (!known) fail(where, "unknown field \"" + k + "\"");
  }
}

std::vector<unsigned> exponents(const json& v, std::size_t n, const std::string& where) {
  if (!v.is_array() || v.size() != n)
    fail(where, "expected a list of " + std::to_string(n) + " naturals");
  std::vector<unsigned> out;
  for (std::size_t i = 0; i < n; ++i) {
    long x = natural(v[i], where + "[" + std::to_string(i) + "]");
    if (x > kMaxExponent) fail(where, "exponent too large");
    out.push_back(static_cast<unsigned>(x));
  }
  return out;
}

json term_json(const Term& t) {
  return {{"gen", t.gen + 1}, {"alpha", t.mono.alphas()}, {"beta", t.mono.betas()}};
}

json element_json(const ModuleElement& f) {
  json terms = json::array();
  for (const auto& [t, c] : f.terms()) {
    json e = term_json(t);
    e["coeff"] = fraction(c);
    terms.push_back(std::move(e));
  }
  return terms;
}

json canonical_json(const NumericalPolynomial& f) {
  json out = json::array();
  for (const auto& [idx, c] : f.coeffs()) out.push_back({{"index", idx}, {"coeff", integer(c)}});
  return out;
}

json monomial_json(const MonomialPolynomial& f) {
  json out = json::array();
  for (const auto& [idx, c] : f.coeffs())
    out.push_back({{"monomial", idx}, {"coeff", fraction(c)}});
  return out;
}

json polynomial_json(const NumericalPolynomial& f) {
  return {{"nvars", f.nvars()},
          {"canonical", canonical_json(f)},
          {"monomial", monomial_json(f.monomial_view())}};
}

json invariants_object(const DimensionReport& report) {
  const InvariantSet& inv = report.invariants;
  IndexTuple caps;
  for (std::size_t s : report.partition.sizes()) caps.push_back(static_cast<unsigned>(s));
  json sprime = json::array();
  for (const auto& [idx, c] : inv.support_prime)
    sprime.push_back({{"index", idx}, {"coeff", integer(c)}});
  return {{"d", inv.degree},
          {"distinguished", {{"index", caps}, {"coeff", integer(inv.distinguished)}}},
          {"support", inv.support},
          {"support_prime", std::move(sprime)},
          {"top_degree", monomial_json(inv.top)}};
}

json report_object(const DimensionReport& report) {
  return {{"partition", report.partition.sizes()},
          {"phi", polynomial_json(report.phi)},
          {"omega_part", polynomial_json(report.omega_part)},
          {"psi_part", polynomial_json(report.psi_part)},
          {"degrees", {{"total", report.degrees.total}, {"partial", report.degrees.partial}}},
          {"holonomic", report.holonomic},
          {"psi_path", report.symbolic_path ? "symbolic" : "interpolation"},
          {"threshold", report.threshold},
          {"basis_size", report.basis.size()}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

Presentation parse_presentation(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("document", "expected an object");
  only_keys(doc, {"n", "partition", "m", "relations"}, "document");

  const long n = natural(field(doc, "n", "document"), "n");
  const json& pj = field(doc, "partition", "document");
  if (!pj.is_array() || pj.empty()) fail("partition", "expected a nonempty list");
  std::vector<std::size_t> sizes;
  long total = 0;
  for (std::size_t j = 0; j < pj.size(); ++j) {
    long s = natural(pj[j], "partition[" + std::to_string(j) + "]");
    if (s == 0) fail("partition[" + std::to_string(j) + "]", "block sizes must be positive");
    sizes.push_back(static_cast<std::size_t>(s));
    total += s;
  }
  if (total != n) fail("partition", "sizes sum to " + std::to_string(total) + ", not n = " +
                                        std::to_string(n));
  if (n > static_cast<long>(kMaxVariables))
    fail("n", "at most " + std::to_string(kMaxVariables) + " variables are supported");
  const long m = natural(field(doc, "m", "document"), "m");
  if (m == 0) fail("m", "need at least one generator");

  Presentation pres{Partition(sizes), static_cast<std::size_t>(m), {}};
  const json& rels = field(doc, "relations", "document");
  if (!rels.is_array()) fail("relations", "expected a list");
  for (std::size_t k = 0; k < rels.size(); ++k) {
    const std::string rwhere = "relation " + std::to_string(k + 1);
    if (!rels[k].is_array()) fail(rwhere, "expected a list of terms");
    ModuleElement f(static_cast<std::size_t>(n), static_cast<std::size_t>(m));
    for (std::size_t t = 0; t < rels[k].size(); ++t) {
      const std::string where = rwhere + ", term " + std::to_string(t + 1);
      const json& rec = rels[k][t];
      if (!rec.is_object()) fail(where, "expected an object");
      only_keys(rec, {"coeff", "alpha", "beta", "gen"}, where);
      const json& cj = field(rec, "coeff", where);
      Rational c;
      if (cj.is_number_integer()) {
        c = Rational(cj.get<long>());
      } else if (cj.is_string()) {
        try {
          c = parse_rational(cj.get<std::string>());
        } catch (const InputError& e) {
          fail(where + ", coeff", e.what());
        }
      } else {
        fail(where + ", coeff", "expected an integer or a \"num/den\" string");
      }
      if (c == 0) fail(where + ", coeff", "coefficient must be nonzero");
      const auto alpha = exponents(field(rec, "alpha", where), n, where + ", alpha");
      const auto beta = exponents(field(rec, "beta", where), n, where + ", beta");
      const long gen = natural(field(rec, "gen", where), where + ", gen");
      if (gen < 1 || gen > m)
        fail(where + ", gen", "generator index " + std::to_string(gen) + " outside 1.." +
                                  std::to_string(m));
      f.add_term({static_cast<std::uint32_t>(gen - 1), Monomial(alpha, beta)}, c);
    }
    if (f.is_zero()) fail(rwhere, "relation is zero");
    pres.relations.push_back(std::move(f));
  }
  return pres;
}

std::string render_presentation(const Presentation& pres) {
  json rels = json::array();
  for (const auto& f : pres.relations) rels.push_back(element_json(f));
  return dump({{"n", pres.partition.nvars()},
               {"partition", pres.partition.sizes()},
               {"m", pres.rank},
               {"relations", std::move(rels)}});
}

std::string basis_json(const GroebnerBasis& G) {
  json elems = json::array();
  for (const auto& e : G.entries()) {
    json leaders = json::array();
    for (std::size_t i = 0; i < e.leaders.size(); ++i) {
      leaders.push_back({{"order", i + 1},
                         {"term", term_json(e.leaders[i].term)},
                         {"coeff", fraction(e.leaders[i].coeff)},
                         {"block_order", e.leader_orders[i]}});
    }
    elems.push_back({{"terms", element_json(e.element)},
                     {"leaders", std::move(leaders)},
                     {"rho", {{"head", term_json(e.rho.head)}, {"d", e.rho.d}}}});
  }
  json stages = json::array();
  for (std::size_t r = 0; r < G.partition().nblocks(); ++r)
    if (G.stage_certified(r)) stages.push_back(r + 1);
  return dump({{"partition", G.partition().sizes()},
               {"m", G.rank()},
               {"elements", std::move(elems)},
               {"certified_stages", std::move(stages)}});
}

std::string report_json(const DimensionReport& report) {
  json j = report_object(report);
  j["invariants"] = invariants_object(report);
  return dump(j);
}

std::string bernstein_json(const BernsteinData& data) {
  return dump({{"psi", polynomial_json(data.psi)},
               {"d", data.dimension},
               {"e", integer(data.multiplicity)}});
}

std::string invariants_json(const DimensionReport& report) {
  return dump(invariants_object(report));
}

std::string check_json(const oracle::CheckReport& check) {
  json rows = json::array();
  for (const auto& e : check.entries) {
    json row = {{"r", e.r},
                {"count_u", integer(e.count_u)},
                {"rank", integer(e.rank)},
                {"ok", e.ok}};
    row["phi"] = e.phi ? integer(*e.phi) : json(nullptr);
    rows.push_back(std::move(row));
  }
  return dump({{"ok", check.ok},
               {"threshold", check.report.threshold},
               {"phi", canonical_json(check.report.phi)},
               {"grid", std::move(rows)}});
}

}  // namespace weyldim::io
