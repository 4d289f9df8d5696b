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

#include "weyldim/arith.hpp"

#include <cctype>

#include "weyldim/error.hpp"

namespace weyldim {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s.front() == '-' || s.front() == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num))
    throw InputError("malformed rational '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(parse_integer(num));
  std::string_view den = text.substr(slash + 1);
  if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw InputError("malformed rational '" + std::string(text) + "'");
  Integer d = parse_integer(den);
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Rational q(parse_integer(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Integer factorial(unsigned long k) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

Integer binomial(const Integer& t, long k) {
  if (k < 0) return 0;
  if (t >= 0) {
    if (!t.fits_ulong_p()) {
      Integer num = 1;
      for (long i = 0; i < k; ++i) num *= t - i;
      return num / factorial(static_cast<unsigned long>(k));
    }
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), t.get_ui(), static_cast<unsigned long>(k));
    return r;
  }
  // C(-s, k) = (-1)^k C(s + k - 1, k) for s > 0.
  Integer s = -t;
  Integer r = binomial(Integer(s + k - 1), k);
  return (k % 2 == 0) ? r : Integer(-r);
}

Integer binomial(long t, long k) { return binomial(Integer(t), k); }

}  // namespace weyldim
