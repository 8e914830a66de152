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

#include "bellmagic/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace bellmagic {

Rational exact_rational(double x) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("exact_rational: input is not finite");
  }
  return Rational(x);  // mpq_set_d is exact for finite doubles
}

Rational rationalize(double x, double eps) {
  if (eps <= 0.0) {
    throw std::invalid_argument("rationalize: eps must be positive");
  }
  const Rational target = exact_rational(x);
  const Rational bound = exact_rational(eps);

  // Continued-fraction expansion of the exact value; stop at the first
  // convergent h/k with |target - h/k| <= eps.
  Integer h2 = 0, h1 = 1;  // h_{-2}, h_{-1}
  Integer k2 = 1, k1 = 0;  // k_{-2}, k_{-1}

  Rational rem = target;
  for (int iter = 0; iter < 256; ++iter) {
    Integer a = Integer(boost::multiprecision::numerator(rem) /
                        boost::multiprecision::denominator(rem));
    // mpz division truncates toward zero; correct to floor for negatives.
    if (rem < 0 && Rational(a) != rem) {
      a -= 1;
    }
    const Integer h = a * h1 + h2;
    const Integer k = a * k1 + k2;
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;

    const Rational conv(h, k);
    if (boost::multiprecision::abs(target - conv) <= bound) {
      return conv;
    }
    const Rational frac = rem - Rational(a);
    if (frac == 0) {
      return conv;  // exact expansion terminated
    }
    rem = Rational(1) / frac;
  }
  return target;  // pathological eps; fall back to the exact value
}

std::string rational_to_string(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) {
    return boost::multiprecision::numerator(r).str();
  }
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

Rational rational_from_string(const std::string& s) {
  if (s.empty()) {
    throw std::invalid_argument("rational_from_string: empty input");
  }
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
      return Rational(Integer(s));
    }
    const Integer num(s.substr(0, slash));
    const Integer den(s.substr(slash + 1));
    if (den == 0) {
      throw std::invalid_argument("zero denominator");
    }
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("rational_from_string: malformed input '" + s +
                                "'");
  }
}

}  // namespace bellmagic
