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

#include "rsg/ore_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace rsg {

OrePoly ore_constant(const SkewContext& ctx, const FieldElement& a) {
    (void)ctx;
    return OrePoly{{a}};
}

OrePoly ore_monomial(const SkewContext& ctx, const FieldElement& a, std::uint32_t degree) {
    std::vector<FieldElement> c(degree + 1, ctx.zero());
    c[degree] = a;
    return OrePoly{std::move(c)};
}

OrePoly ore_linear(const SkewContext& ctx, const FieldElement& a) {
    return OrePoly{{ctx.neg(a), ctx.one()}};
}

OrePoly ore_central_z(const SkewContext& ctx) { return ore_monomial(ctx, ctx.one(), ctx.r()); }

FieldElement ore_coeff(const SkewContext& ctx, const OrePoly& p, std::size_t i) {
    if (i < p.coeffs().size()) return p.coeffs()[i];
    return ctx.zero();
}

OrePoly ore_add(const SkewContext& ctx, const OrePoly& a, const OrePoly& b) {
    std::vector<FieldElement> out;
    const std::size_t len = std::max(a.coeffs().size(), b.coeffs().size());
    out.reserve(len);
    for (std::size_t i = 0; i < len; ++i)
        out.push_back(ctx.add(ore_coeff(ctx, a, i), ore_coeff(ctx, b, i)));
    return OrePoly{std::move(out)};
}

OrePoly ore_neg(const SkewContext& ctx, const OrePoly& a) {
    std::vector<FieldElement> out;
    out.reserve(a.coeffs().size());
    for (const FieldElement& c : a.coeffs()) out.push_back(ctx.neg(c));
    return OrePoly{std::move(out)};
}

OrePoly ore_sub(const SkewContext& ctx, const OrePoly& a, const OrePoly& b) {
    return ore_add(ctx, a, ore_neg(ctx, b));
}

OrePoly ore_scalar_mul(const SkewContext& ctx, const FieldElement& a, const OrePoly& b) {
    std::vector<FieldElement> out;
    out.reserve(b.coeffs().size());
    for (const FieldElement& c : b.coeffs()) out.push_back(ctx.mul(a, c));
    return OrePoly{std::move(out)};
}

OrePoly ore_mul_x(const SkewContext& ctx, const OrePoly& p) {
    if (p.is_zero()) return p;
    // X * (sum a_i X^i) = sum theta(a_i) X^(i+1) + sum partial(a_i) X^i
    std::vector<FieldElement> out(p.coeffs().size() + 1, ctx.zero());
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        out[i + 1] = ctx.theta(p.coeffs()[i]);
        out[i] = ctx.add(out[i], ctx.partial(p.coeffs()[i]));
    }
    return OrePoly{std::move(out)};
}

OrePoly ore_mul(const SkewContext& ctx, const OrePoly& a, const OrePoly& b) {
    OrePoly acc;
    OrePoly xib = b;  // X^i * b
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (!rsg::is_zero(a.coeffs()[i])) acc = ore_add(ctx, acc, ore_scalar_mul(ctx, a.coeffs()[i], xib));
        if (i + 1 < a.coeffs().size()) xib = ore_mul_x(ctx, xib);
    }
    return acc;
}

OrePoly ore_monic(const SkewContext& ctx, const OrePoly& a) {
    if (a.is_zero()) return a;
    return ore_scalar_mul(ctx, ctx.inv(a.leading()), a);
}

std::pair<OrePoly, OrePoly> right_divmod(const SkewContext& ctx, const OrePoly& a,
                                         const OrePoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    OrePoly rem = a;
    const int db = b.degree();
    if (rem.degree() < db) return {OrePoly{}, rem};

    const int mmax = rem.degree() - db;
    // X^m * B and theta^m(lead B), the leading coefficient of X^m * B.
    std::vector<OrePoly> xib(mmax + 1);
    std::vector<FieldElement> lead_inv(mmax + 1, ctx.zero());
    xib[0] = b;
    FieldElement tl = b.leading();
    lead_inv[0] = ctx.inv(tl);
    for (int m = 1; m <= mmax; ++m) {
        xib[m] = ore_mul_x(ctx, xib[m - 1]);
        tl = ctx.theta(tl);
        lead_inv[m] = ctx.inv(tl);
    }

    std::vector<FieldElement> quot(mmax + 1, ctx.zero());
    for (int m = mmax; m >= 0; --m) {
        if (rem.degree() == db + m) {
            FieldElement c = ctx.mul(rem.leading(), lead_inv[m]);
            quot[m] = c;
            rem = ore_sub(ctx, rem, ore_scalar_mul(ctx, c, xib[m]));
        }
    }
    return {OrePoly{std::move(quot)}, std::move(rem)};
}

std::pair<OrePoly, OrePoly> left_divmod(const SkewContext& ctx, const OrePoly& a,
                                        const OrePoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    OrePoly rem = a;
    const int db = b.degree();
    if (rem.degree() < db) return {OrePoly{}, rem};

    const FieldElement lead_inv = ctx.inv(b.leading());
    std::vector<FieldElement> quot(rem.degree() - db + 1, ctx.zero());
    for (int m = rem.degree() - db; m >= 0; --m) {
        if (rem.degree() == db + m) {
            // leading coefficient of B*(c X^m) is lead(B)*theta^db(c)
            FieldElement c = ctx.mul(lead_inv, rem.leading());
            for (int i = 0; i < db; ++i) c = ctx.theta_inverse(c);
            quot[m] = c;
            rem = ore_sub(ctx, rem, ore_mul(ctx, b, ore_monomial(ctx, c, m)));
        }
    }
    return {OrePoly{std::move(quot)}, std::move(rem)};
}

EuclidRow extended_right_euclid_partial(const SkewContext& ctx, const OrePoly& a,
                                        const OrePoly& b, int stop_degree,
                                        std::vector<EuclidRow>* trace) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("extended Euclid of two zero polynomials");
    const OrePoly one = ore_constant(ctx, ctx.one());
    EuclidRow prev{b, OrePoly{}, one};  // r_{-1} = B
    EuclidRow cur{a, one, OrePoly{}};   // r_0 = A
    if (trace) {
        trace->push_back(prev);
        trace->push_back(cur);
    }
    if (a.is_zero()) return prev;
    if (b.is_zero()) return cur;
    if (prev.r.degree() < stop_degree) return prev;
    while (true) {
        if (cur.r.is_zero()) return prev;  // right GCD: last nonzero remainder
        if (cur.r.degree() < stop_degree) return cur;
        auto [q, rem] = right_divmod(ctx, prev.r, cur.r);
        EuclidRow next{std::move(rem), ore_sub(ctx, prev.u, ore_mul(ctx, q, cur.u)),
                       ore_sub(ctx, prev.v, ore_mul(ctx, q, cur.v))};
        prev = std::move(cur);
        cur = std::move(next);
        if (trace) trace->push_back(cur);
    }
}

OrePoly lclm(const SkewContext& ctx, const OrePoly& a, const OrePoly& b) {
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("lclm of a zero polynomial");
    const OrePoly one = ore_constant(ctx, ctx.one());
    EuclidRow prev{b, OrePoly{}, one};
    EuclidRow cur{a, one, OrePoly{}};
    while (!cur.r.is_zero()) {
        auto [q, rem] = right_divmod(ctx, prev.r, cur.r);
        EuclidRow next{std::move(rem), ore_sub(ctx, prev.u, ore_mul(ctx, q, cur.u)),
                       ore_sub(ctx, prev.v, ore_mul(ctx, q, cur.v))};
        prev = std::move(cur);
        cur = std::move(next);
    }
    // r_last = 0 = u*A + v*B, so u*A = -v*B is a common left multiple.
    return ore_monic(ctx, ore_mul(ctx, cur.u, a));
}

FieldElement evaluate(const SkewContext& ctx, const FieldElement& c, const OrePoly& p,
                      const FieldElement& a) {
    if (!ctx.is_good(c)) throw std::domain_error("evaluation point c is not admissible");
    if (rsg::is_zero(a) || p.is_zero()) return ctx.zero();
    // u(a)/a with u = partial + c*theta
    FieldElement ua = ctx.add(ctx.partial(a), ctx.mul(c, ctx.theta(a)));
    FieldElement rem_at = ctx.div(ua, a);
    OrePoly rem = right_divmod(ctx, p, ore_linear(ctx, rem_at)).second;
    if (rem.is_zero()) return ctx.zero();
    return ctx.mul(a, rem.coeffs()[0]);
}

FieldElement operator_apply(const SkewContext& ctx, const FieldElement& c, const OrePoly& p,
                            const FieldElement& a) {
    if (!ctx.is_good(c)) throw std::domain_error("evaluation point c is not admissible");
    FieldElement acc = ctx.zero();
    FieldElement v = a;  // u^i(a)
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        acc = ctx.add(acc, ctx.mul(p.coeffs()[i], v));
        if (i + 1 < p.coeffs().size()) v = ctx.add(ctx.partial(v), ctx.mul(c, ctx.theta(v)));
    }
    return acc;
}

std::string ore_to_string(const SkewContext& ctx, const OrePoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        if (rsg::is_zero(p.coeffs()[i])) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << ctx.to_string(p.coeffs()[i]) << ")";
        if (i == 1) os << "*X";
        if (i > 1) os << "*X^" << i;
    }
    return os.str();
}

}  // namespace rsg
