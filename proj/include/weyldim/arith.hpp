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

#ifndef WEYLDIM_ARITH_HPP
#define WEYLDIM_ARITH_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace weyldim {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p", "-p" or "p/q" into a canonical rational. Throws InputError.
Rational parse_rational(std::string_view text);

// Canonical text: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Polynomial extension of the binomial coefficient: t(t-1)...(t-k+1)/k! for
// any integer t and k >= 0; zero when k < 0.
Integer binomial(const Integer& t, long k);
Integer binomial(long t, long k);

Integer factorial(unsigned long k);

}  // namespace weyldim

#endif  // WEYLDIM_ARITH_HPP
