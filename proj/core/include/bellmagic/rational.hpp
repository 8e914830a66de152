// Copyright 2026 The bellmagic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BELLMAGIC_RATIONAL_HPP
#define BELLMAGIC_RATIONAL_HPP

#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace bellmagic {

/** Exact rational number (GMP-backed). All polytope geometry runs on these. */
using Rational = boost::multiprecision::mpq_rational;

/** Arbitrary-precision integer (GMP-backed). */
using Integer = boost::multiprecision::mpz_int;

/**
 * Exact conversion of an IEEE double to a rational. Every finite double is a
 * dyadic rational, so this loses nothing. Throws std::invalid_argument for
 * NaN or infinity.
 */
Rational exact_rational(double x);

/**
 * Best rational approximation of x within +-eps, found by truncating the
 * continued-fraction expansion of x. Used to turn floating-point correlation
 * tables into exact LP inputs without inflating denominators.
 */
Rational rationalize(double x, double eps = 1e-12);

/** Serializes as "p" or "p/q" (canonical GMP form, q > 0). */
std::string rational_to_string(const Rational& r);

/** Parses "p" or "p/q". Throws std::invalid_argument on malformed input. */
Rational rational_from_string(const std::string& s);

}  // namespace bellmagic

#endif  // BELLMAGIC_RATIONAL_HPP
