/* Copyright 2026 The hypj Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// Exact rational scalars.

#ifndef HYPJ_RATIONAL_HPP
#define HYPJ_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace hypj {

// mpq_class keeps values canonical (lowest terms, positive denominator) as
// long as every constructed value goes through make_rational or arithmetic.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

// "p/q" with q always present, e.g. "6/1", "-1/2".
inline std::string to_fraction_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Shortest form: "6", "-1/2".
inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace hypj

#endif  // HYPJ_RATIONAL_HPP
