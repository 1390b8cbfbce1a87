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
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "rsg/prime_poly.hpp"

namespace rsg {

/// The two supported coefficient fields K with their twist (theta, partial):
///  - frobenius:  K = GF(q^r) with theta = x -> x^q and partial = 0; the
///    fixed subfield F is GF(q), q = p^e.
///  - derivation: K = GF(p)(t) with theta = id and partial = d/dt; the fixed
///    subfield F is GF(p)(t^p) and [K:F] = p.
enum class Setting { frobenius, derivation };

/// Element of GF(q^r): exactly r coordinates over GF(q) in the power basis
/// of the extension modulus, each coordinate a stripped polynomial over
/// GF(p) of degree < e.
struct Tower {
    std::vector<gfp::Poly> coeff;

    friend bool operator==(const Tower&, const Tower&) = default;
};

/// Element of GF(p)(t), stored reduced (gcd(num, den) = 1) with monic
/// denominator. Zero is {num = {}, den = {1}}. Canonical storage makes
/// operator== exact equality in the field.
struct Fraction {
    gfp::Poly num{};
    gfp::Poly den{1u};

    friend bool operator==(const Fraction&, const Fraction&) = default;
};

using FieldElement = std::variant<Tower, Fraction>;

bool is_zero(const FieldElement& a);

/// Immutable description of the ambient skew field data (K, theta, partial,
/// F, r) with all element-level arithmetic. Construction validates the
/// moduli (irreducibility, degrees) and the order of theta; afterwards the
/// context is freely shareable across threads, all operations being pure.
class SkewContext {
   public:
    /// Frobenius backend. Omitted moduli are filled with the first monic
    /// irreducible of the right degree in enumeration order.
    static SkewContext frobenius(std::uint32_t p, std::uint32_t e, std::uint32_t r,
                                 std::optional<gfp::Poly> modulus_base = std::nullopt,
                                 std::optional<std::vector<gfp::Poly>> modulus_ext = std::nullopt);

    /// Derivation backend over GF(p)(t); [K:F] = p. max_fraction_degree
    /// bounds numerator/denominator degrees, guarding against runaway
    /// intermediate growth in exact computations.
    static SkewContext derivation(std::uint32_t p, std::uint32_t max_fraction_degree = 10000);

    Setting setting() const { return setting_; }
    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint32_t r() const { return r_; }
    std::uint64_t q() const { return q_; }
    const gfp::Poly& modulus_base() const { return modulus_base_; }
    const std::vector<gfp::Poly>& modulus_ext() const { return modulus_ext_; }
    std::uint32_t max_fraction_degree() const { return max_fraction_degree_; }

    /* element constructors */
    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_int(std::uint64_t v) const;  // image of an integer in K
    /// Frobenius: element with the given coordinates over GF(q) (size <= r,
    /// padded with zeros).
    FieldElement from_tower(std::vector<gfp::Poly> coords) const;
    /// Derivation: num/den as polynomials in t; reduced on construction.
    FieldElement fraction(gfp::Poly num, gfp::Poly den) const;
    FieldElement polynomial(gfp::Poly num) const;  // fraction with den = 1

    /* field arithmetic */
    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement inv(const FieldElement& a) const;
    FieldElement div(const FieldElement& a, const FieldElement& b) const;
    FieldElement pow(const FieldElement& a, std::uint64_t n) const;

    /* twist maps and the structure of K over F */

    /// theta: the Frobenius x -> x^q, or the identity in the derivation
    /// setting. A field automorphism of K fixing F pointwise.
    FieldElement theta(const FieldElement& a) const;
    /// Inverse of theta (theta has order r, so this is theta^(r-1)).
    FieldElement theta_inverse(const FieldElement& a) const;
    /// partial: the theta-derivation (zero map, or d/dt).
    FieldElement partial(const FieldElement& a) const;

    /// Coordinates of a over F in the canonical basis of K/F: the power
    /// basis of modulus_ext (frobenius) or (1, t, ..., t^(p-1)) (derivation).
    /// Entries are returned as elements of K lying in F, and satisfy
    /// a = sum_j coords[j] * basis[j].
    std::vector<FieldElement> coords_over_F(const FieldElement& a) const;

    /// The j-th canonical basis element of K over F.
    FieldElement basis_element(std::uint32_t j) const;

    /// True when partial + c*theta is an admissible evaluation map (not a
    /// scalar multiple of the identity): c != 0 in the frobenius setting,
    /// always in the derivation setting.
    bool is_good(const FieldElement& c) const;

    /// The element N(c) of F indexing the kernel of the evaluation map at c:
    /// the norm c * theta(c) * ... * theta^(r-1)(c) in the frobenius
    /// setting, and c^p + partial^(p-1)(c) in the derivation setting.
    /// Requires is_good(c).
    FieldElement norm(const FieldElement& c) const;

    /// Equivalence of evaluation points: N(c1) == N(c2). Requires both good.
    bool equivalent(const FieldElement& c1, const FieldElement& c2) const;

    /* sampling and enumeration */

    /// Deterministic in the rng stream. Frobenius: uniform over K.
    /// Derivation: random num/den of degree <= degree_bound, den nonzero.
    FieldElement random_element(std::mt19937_64& rng, std::uint32_t degree_bound = 3) const;
    /// Random element of the fixed subfield F.
    FieldElement random_subfield_element(std::mt19937_64& rng, std::uint32_t degree_bound = 3) const;

    /// Number of elements of K (frobenius only; throws for derivation).
    std::uint64_t field_size() const;
    /// Element with the given index in the p-ary enumeration of GF(q^r).
    FieldElement element_at(std::uint64_t index) const;

    /* rendering (for logs; never parsed) */
    std::string to_string(const FieldElement& a) const;

    friend bool operator==(const SkewContext&, const SkewContext&) = default;

   private:
    SkewContext() = default;

    void check(const FieldElement& a) const;  // backend/shape validation

    Setting setting_ = Setting::frobenius;
    std::uint32_t p_ = 0;
    std::uint32_t e_ = 1;
    std::uint32_t r_ = 1;
    std::uint64_t q_ = 0;                      // p^e
    gfp::Poly modulus_base_;                   // degree e over GF(p), monic (frobenius)
    std::vector<gfp::Poly> modulus_ext_;       // degree r over GF(q), monic (frobenius)
    std::uint32_t max_fraction_degree_ = 10000;
};

}  // namespace rsg
