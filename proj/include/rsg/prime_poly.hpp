/*
   Copyright 2026 The RSG Authors

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

#pragma once

#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

namespace rsg::gfp {

/// Dense univariate polynomial over GF(p), little-endian coefficients in
/// [0, p). The zero polynomial is the empty vector; every routine returns
/// stripped output (no trailing zero coefficients), so equality of values
/// is equality of vectors.
using Poly = std::vector<std::uint32_t>;

bool is_prime(std::uint32_t n);

/* scalar arithmetic mod p */
std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t neg(std::uint32_t a, std::uint32_t p);
std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t inv(std::uint32_t a, std::uint32_t p);  // a != 0

/* polynomial arithmetic */
int degree(const Poly& a);  // -1 for the zero polynomial
bool is_zero(const Poly& a);
Poly& strip(Poly& a);

Poly add(const Poly& a, const Poly& b, std::uint32_t p);
Poly sub(const Poly& a, const Poly& b, std::uint32_t p);
Poly neg(const Poly& a, std::uint32_t p);
Poly mul(const Poly& a, const Poly& b, std::uint32_t p);
Poly scale(const Poly& a, std::uint32_t c, std::uint32_t p);

/// Euclidean division: a = q*b + r with deg r < deg b. b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, std::uint32_t p);

Poly monic(const Poly& a, std::uint32_t p);
Poly gcd(const Poly& a, const Poly& b, std::uint32_t p);  // monic (or zero)

/// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic (or zero).
std::tuple<Poly, Poly, Poly> ext_gcd(const Poly& a, const Poly& b, std::uint32_t p);

Poly derivative(const Poly& a, std::uint32_t p);

/// Enumeration helper: the polynomial whose coefficients are the base-p
/// digits of index (little-endian). Inverse of evaluating at p over Z.
Poly from_index(std::uint64_t index, std::uint32_t p);

/// Irreducibility over GF(p) by trial division against all monic factors of
/// degree <= deg(a)/2. Intended for desk-scale moduli; throws if the factor
/// enumeration would be unreasonably large.
bool is_irreducible(const Poly& a, std::uint32_t p);

/// First monic irreducible of the given degree in the enumeration order of
/// from_index on the non-leading coefficients.
Poly smallest_irreducible(std::uint32_t deg, std::uint32_t p);

}  // namespace rsg::gfp
