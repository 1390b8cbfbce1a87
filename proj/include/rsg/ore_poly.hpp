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

#include <string>
#include <utility>
#include <vector>

#include "rsg/skew_context.hpp"

namespace rsg {

/// Dense Ore polynomial over K under the rule X*a = theta(a)X + partial(a).
/// Coefficients are little-endian and stripped: the leading coefficient is
/// nonzero unless the polynomial is zero (empty list). The zero polynomial
/// has degree -1, ordered below every degree bound used here.
class OrePoly {
   public:
    OrePoly() = default;
    explicit OrePoly(std::vector<FieldElement> coeff) : coeff_(std::move(coeff)) { strip(); }

    int degree() const { return static_cast<int>(coeff_.size()) - 1; }
    bool is_zero() const { return coeff_.empty(); }
    const std::vector<FieldElement>& coeffs() const { return coeff_; }
    const FieldElement& leading() const { return coeff_.back(); }

    friend bool operator==(const OrePoly&, const OrePoly&) = default;

   private:
    void strip() {
        while (!coeff_.empty() && rsg::is_zero(coeff_.back())) coeff_.pop_back();
    }

    std::vector<FieldElement> coeff_;
};

/* construction helpers */
OrePoly ore_constant(const SkewContext& ctx, const FieldElement& a);
OrePoly ore_monomial(const SkewContext& ctx, const FieldElement& a, std::uint32_t degree);
/// X - a
OrePoly ore_linear(const SkewContext& ctx, const FieldElement& a);
/// The central generator Z = X^r (resp. X^p), constant term fixed to 0.
OrePoly ore_central_z(const SkewContext& ctx);
/// Coefficient of X^i, defaulting to zero beyond the degree.
FieldElement ore_coeff(const SkewContext& ctx, const OrePoly& p, std::size_t i);

/* ring operations */
OrePoly ore_add(const SkewContext& ctx, const OrePoly& a, const OrePoly& b);
OrePoly ore_sub(const SkewContext& ctx, const OrePoly& a, const OrePoly& b);
OrePoly ore_neg(const SkewContext& ctx, const OrePoly& a);
/// Left multiplication by a scalar: (a)*(sum b_i X^i) = sum (a*b_i) X^i.
OrePoly ore_scalar_mul(const SkewContext& ctx, const FieldElement& a, const OrePoly& b);
/// X * p, one application of the twist rule to every term.
OrePoly ore_mul_x(const SkewContext& ctx, const OrePoly& p);
OrePoly ore_mul(const SkewContext& ctx, const OrePoly& a, const OrePoly& b);
/// Left-scale by the inverse of the leading coefficient; zero stays zero.
OrePoly ore_monic(const SkewContext& ctx, const OrePoly& a);

/* Euclidean structure */

/// A = Q*B + R with deg R < deg B; Q, R unique.
std::pair<OrePoly, OrePoly> right_divmod(const SkewContext& ctx, const OrePoly& a,
                                         const OrePoly& b);
/// A = B*Q + S with deg S < deg B; needs theta invertible (always true here).
std::pair<OrePoly, OrePoly> left_divmod(const SkewContext& ctx, const OrePoly& a,
                                        const OrePoly& b);

/// One row of the extended Euclid state: r = u*A + v*B (cofactors on the
/// left).
struct EuclidRow {
    OrePoly r, u, v;

    friend bool operator==(const EuclidRow&, const EuclidRow&) = default;
};

/// Remainder sequence r_{-1} = B, r_0 = A, r_{i+1} = r_{i-1} - q_i*r_i with
/// left cofactors u_{i+1} = u_{i-1} - q_i*u_i (likewise v). Returns the
/// first remainder of degree < stop_degree together with its cofactors,
/// never the zero polynomial: if the sequence reaches zero first, the last
/// nonzero remainder (the right GCD, not normalized) is returned. With
/// stop_degree = 0 this computes the right GCD and full Bezout data.
/// When trace is non-null, every generated row is appended to it.
EuclidRow extended_right_euclid_partial(const SkewContext& ctx, const OrePoly& a,
                                        const OrePoly& b, int stop_degree,
                                        std::vector<EuclidRow>* trace = nullptr);

/// Monic generator of the left LCM of A and B (both nonzero):
/// deg lclm = deg A + deg B - deg rgcd(A, B).
OrePoly lclm(const SkewContext& ctx, const OrePoly& a, const OrePoly& b);

/* evaluation morphisms ev_c, u = partial + c*theta */

/// ev_c(P)(a) = a * (P mod (X - u(a)/a)) for a != 0, and 0 at a = 0
/// (pseudo-linear maps are additive). Requires is_good(c).
FieldElement evaluate(const SkewContext& ctx, const FieldElement& c, const OrePoly& p,
                      const FieldElement& a);
/// P(u)(a) = sum p_i u^i(a) by literal iteration of u; the independent
/// oracle for evaluate.
FieldElement operator_apply(const SkewContext& ctx, const FieldElement& c, const OrePoly& p,
                            const FieldElement& a);

std::string ore_to_string(const SkewContext& ctx, const OrePoly& p);

}  // namespace rsg
