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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "test_support.hpp"

using namespace rsg_test;

TEST_CASE("construction strips trailing zeros") {
    SkewContext ctx = d3();
    OrePoly z = ore({ctx.zero(), ctx.zero()});
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK(z == OrePoly{});
    OrePoly a = ore({ctx.one(), tpoly(ctx, {0, 1}), ctx.zero()});
    CHECK(a.degree() == 1);
    CHECK(a.leading() == tpoly(ctx, {0, 1}));
    CHECK(ore_coeff(ctx, a, 0) == ctx.one());
    CHECK(ore_coeff(ctx, a, 5) == ctx.zero());
}

TEST_CASE("construction helpers") {
    SkewContext ctx = d3();
    FieldElement t = tpoly(ctx, {0, 1});
    CHECK(ore_constant(ctx, t) == ore({t}));
    CHECK(ore_constant(ctx, ctx.zero()).is_zero());
    CHECK(ore_monomial(ctx, t, 2) == ore({ctx.zero(), ctx.zero(), t}));
    CHECK(ore_monomial(ctx, ctx.zero(), 2).is_zero());
    CHECK(ore_linear(ctx, t) == ore({ctx.neg(t), ctx.one()}));
    CHECK(ore_central_z(ctx).degree() == 3);  // X^p, p = 3
    CHECK(ore_central_z(f9()).degree() == 2);  // X^r, r = 2
}

TEST_CASE("twist rule literals") {
    SkewContext ctx = d3();
    FieldElement t = tpoly(ctx, {0, 1});
    OrePoly x = ore({ctx.zero(), ctx.one()});
    // X * t = t X + 1
    CHECK(ore_mul(ctx, x, ore_constant(ctx, t)) == ore({ctx.one(), t}));
    // X * t^2 = t^2 X + 2t
    CHECK(ore_mul(ctx, x, ore_constant(ctx, tpoly(ctx, {0, 0, 1}))) ==
          ore({tpoly(ctx, {0, 2}), tpoly(ctx, {0, 0, 1})}));

    SkewContext k9 = f9();
    FieldElement y = tower(k9, {0, 1});
    OrePoly x9 = ore({k9.zero(), k9.one()});
    // X * y = y^3 X = 2y X (partial = 0)
    CHECK(ore_mul(k9, x9, ore_constant(k9, y)) == ore({k9.zero(), tower(k9, {0, 2})}));
}

TEST_CASE("ring axioms on random polynomials") {
    for (SkewContext ctx : {d3(), f9()}) {
        std::mt19937_64 rng(41);
        for (int trial = 0; trial < 30; ++trial) {
            OrePoly a = random_ore(ctx, rng, 4);
            OrePoly b = random_ore(ctx, rng, 4);
            OrePoly c = random_ore(ctx, rng, 4);
            CHECK(ore_add(ctx, a, b) == ore_add(ctx, b, a));
            CHECK(ore_add(ctx, ore_add(ctx, a, b), c) == ore_add(ctx, a, ore_add(ctx, b, c)));
            CHECK(ore_sub(ctx, a, a).is_zero());
            CHECK(ore_add(ctx, a, ore_neg(ctx, a)).is_zero());
            CHECK(ore_mul(ctx, ore_mul(ctx, a, b), c) == ore_mul(ctx, a, ore_mul(ctx, b, c)));
            CHECK(ore_mul(ctx, a, ore_add(ctx, b, c)) ==
                  ore_add(ctx, ore_mul(ctx, a, b), ore_mul(ctx, a, c)));
            CHECK(ore_mul(ctx, ore_add(ctx, a, b), c) ==
                  ore_add(ctx, ore_mul(ctx, a, c), ore_mul(ctx, b, c)));
            // no zero divisors: deg(ab) = deg a + deg b
            if (!a.is_zero() && !b.is_zero())
                CHECK(ore_mul(ctx, a, b).degree() == a.degree() + b.degree());
            CHECK(ore_mul_x(ctx, a) == ore_mul(ctx, ore({ctx.zero(), ctx.one()}), a));
        }
    }
}

TEST_CASE("the ring is noncommutative") {
    SkewContext ctx = d3();
    OrePoly x = ore({ctx.zero(), ctx.one()});
    OrePoly t = ore_constant(ctx, tpoly(ctx, {0, 1}));
    CHECK(ore_mul(ctx, x, t) != ore_mul(ctx, t, x));

    SkewContext k9 = f9();
    OrePoly x9 = ore({k9.zero(), k9.one()});
    OrePoly y = ore_constant(k9, tower(k9, {0, 1}));
    CHECK(ore_mul(k9, x9, y) != ore_mul(k9, y, x9));
}

TEST_CASE("monic and scalar multiplication") {
    SkewContext ctx = d3();
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        OrePoly a = random_ore(ctx, rng, 4);
        if (a.is_zero()) continue;
        OrePoly m = ore_monic(ctx, a);
        CHECK(m.leading() == ctx.one());
        CHECK(ore_scalar_mul(ctx, a.leading(), m) == a);
    }
    CHECK(ore_monic(ctx, OrePoly{}).is_zero());
}

TEST_CASE("right division is exact") {
    for (SkewContext ctx : {d3(), f9()}) {
        std::mt19937_64 rng(47);
        for (int trial = 0; trial < 40; ++trial) {
            OrePoly a = random_ore(ctx, rng, 6);
            OrePoly b = random_ore(ctx, rng, 3);
            if (b.is_zero()) continue;
            auto [q, r] = right_divmod(ctx, a, b);
            CHECK(ore_add(ctx, ore_mul(ctx, q, b), r) == a);
            CHECK(r.degree() < b.degree());
        }
        CHECK_THROWS(right_divmod(ctx, ore_constant(ctx, ctx.one()), OrePoly{}));
    }
}

TEST_CASE("left division is exact") {
    for (SkewContext ctx : {d3(), f9()}) {
        std::mt19937_64 rng(53);
        for (int trial = 0; trial < 40; ++trial) {
            OrePoly a = random_ore(ctx, rng, 6);
            OrePoly b = random_ore(ctx, rng, 3);
            if (b.is_zero()) continue;
            auto [q, s] = left_divmod(ctx, a, b);
            CHECK(ore_add(ctx, ore_mul(ctx, b, q), s) == a);
            CHECK(s.degree() < b.degree());
        }
        CHECK_THROWS(left_divmod(ctx, ore_constant(ctx, ctx.one()), OrePoly{}));
    }
}

TEST_CASE("divisions recover known products") {
    for (SkewContext ctx : {d3(), f9()}) {
        std::mt19937_64 rng(59);
        for (int trial = 0; trial < 30; ++trial) {
            OrePoly a = random_ore(ctx, rng, 3);
            OrePoly b = random_ore(ctx, rng, 3);
            if (a.is_zero() || b.is_zero()) continue;
            OrePoly prod = ore_mul(ctx, a, b);
            auto [qr, rr] = right_divmod(ctx, prod, b);
            CHECK(qr == a);
            CHECK(rr.is_zero());
            auto [ql, sl] = left_divmod(ctx, prod, a);
            CHECK(ql == b);
            CHECK(sl.is_zero());
        }
    }
}

TEST_CASE("extended euclid rows satisfy the bezout identity") {
    for (SkewContext ctx : {d3(), f9()}) {
        std::mt19937_64 rng(61);
        for (int trial = 0; trial < 25; ++trial) {
            OrePoly a = random_ore(ctx, rng, 5);
            OrePoly b = random_ore(ctx, rng, 5);
            if (a.is_zero() || b.is_zero()) continue;
            std::vector<EuclidRow> trace;
            int stop = static_cast<int>(rng() % 5);
            EuclidRow row = extended_right_euclid_partial(ctx, a, b, stop, &trace);
            for (const EuclidRow& t : trace)
                CHECK(ore_add(ctx, ore_mul(ctx, t.u, a), ore_mul(ctx, t.v, b)) == t.r);
            CHECK(ore_add(ctx, ore_mul(ctx, row.u, a), ore_mul(ctx, row.v, b)) == row.r);
            CHECK(!row.r.is_zero());
            // the result is the first remainder below the stop degree, in
            // sequence order r_{-1} = b, r_0 = a, ...
            bool found = false;
            for (const EuclidRow& t : trace) {
                if (t.r.is_zero()) break;
                if (t.r.degree() < stop) {
                    CHECK(t == row);
                    found = true;
                    break;
                }
            }
            if (!found) CHECK(row.r == trace[trace.size() - 2].r);  // gcd: last nonzero
        }
    }
}

TEST_CASE("extended euclid computes the right gcd at stop 0") {
    for (SkewContext ctx : {d3(), f9()}) {
        std::mt19937_64 rng(67);
        for (int trial = 0; trial < 25; ++trial) {
            OrePoly g = random_ore(ctx, rng, 2);
            OrePoly f1 = random_ore(ctx, rng, 2);
            OrePoly f2 = random_ore(ctx, rng, 2);
            if (g.is_zero() || f1.is_zero() || f2.is_zero()) continue;
            // common right factor g
            OrePoly a = ore_mul(ctx, f1, g);
            OrePoly b = ore_mul(ctx, f2, g);
            EuclidRow row = extended_right_euclid_partial(ctx, a, b, 0, nullptr);
            CHECK(ore_add(ctx, ore_mul(ctx, row.u, a), ore_mul(ctx, row.v, b)) == row.r);
            // gcd right-divides both inputs and is divisible by g
            CHECK(right_divmod(ctx, a, row.r).second.is_zero());
            CHECK(right_divmod(ctx, b, row.r).second.is_zero());
            CHECK(right_divmod(ctx, row.r, g).second.is_zero());
        }
    }
}

TEST_CASE("extended euclid edge cases") {
    SkewContext ctx = d3();
    OrePoly a = ore({tpoly(ctx, {1}), tpoly(ctx, {0, 1}), ctx.one()});
    CHECK_THROWS(extended_right_euclid_partial(ctx, OrePoly{}, OrePoly{}, 0, nullptr));
    // identical inputs: first division leaves zero, so the result is a itself
    EuclidRow same = extended_right_euclid_partial(ctx, a, a, 0, nullptr);
    CHECK(same.r == a);
    CHECK(same.u == ore_constant(ctx, ctx.one()));
    CHECK(same.v.is_zero());
    // one zero input
    EuclidRow za = extended_right_euclid_partial(ctx, OrePoly{}, a, 0, nullptr);
    CHECK(za.r == a);
    CHECK(za.u.is_zero());
    CHECK(za.v == ore_constant(ctx, ctx.one()));
    EuclidRow zb = extended_right_euclid_partial(ctx, a, OrePoly{}, 0, nullptr);
    CHECK(zb.r == a);
    CHECK(zb.u == ore_constant(ctx, ctx.one()));
    CHECK(zb.v.is_zero());
}

TEST_CASE("lclm is a common left multiple of minimal degree") {
    for (SkewContext ctx : {d3(), f9()}) {
        std::mt19937_64 rng(71);
        for (int trial = 0; trial < 20; ++trial) {
            OrePoly a = random_ore(ctx, rng, 3);
            OrePoly b = random_ore(ctx, rng, 3);
            if (a.is_zero() || b.is_zero()) continue;
            OrePoly m = lclm(ctx, a, b);
            CHECK(m.leading() == ctx.one());
            CHECK(right_divmod(ctx, m, a).second.is_zero());
            CHECK(right_divmod(ctx, m, b).second.is_zero());
            OrePoly g = extended_right_euclid_partial(ctx, a, b, 0, nullptr).r;
            CHECK(m.degree() == a.degree() + b.degree() - g.degree());
        }
    }
}

TEST_CASE("lclm of linear factors at distinct points") {
    SkewContext ctx = d3();
    // lclm(X - t, X - (t+1)) has degree 2 when the factors differ
    OrePoly m = lclm(ctx, ore_linear(ctx, tpoly(ctx, {0, 1})), ore_linear(ctx, tpoly(ctx, {1, 1})));
    CHECK(m.degree() == 2);
    CHECK(right_divmod(ctx, m, ore_linear(ctx, tpoly(ctx, {0, 1}))).second.is_zero());
    OrePoly same =
        lclm(ctx, ore_linear(ctx, tpoly(ctx, {0, 1})), ore_linear(ctx, tpoly(ctx, {0, 1})));
    CHECK(same.degree() == 1);
}

TEST_CASE("evaluate agrees with the operator oracle") {
    for (SkewContext ctx : {d3(), f9()}) {
        std::mt19937_64 rng(73);
        for (int trial = 0; trial < 60; ++trial) {
            FieldElement c = random_good(ctx, rng);
            OrePoly p = random_ore(ctx, rng, 4);
            FieldElement a = ctx.random_element(rng);
            CHECK(evaluate(ctx, c, p, a) == operator_apply(ctx, c, p, a));
        }
    }
}

TEST_CASE("evaluate literal values") {
    SkewContext ctx = d3();
    FieldElement t = tpoly(ctx, {0, 1});
    OrePoly x = ore({ctx.zero(), ctx.one()});
    // u = d/dt + c id; ev_c(X)(a) = a' + c a
    CHECK(evaluate(ctx, ctx.zero(), x, t) == ctx.one());
    CHECK(evaluate(ctx, ctx.one(), x, t) == tpoly(ctx, {1, 1}));
    // ev at zero is zero
    CHECK(evaluate(ctx, ctx.one(), x, ctx.zero()) == ctx.zero());
    CHECK(evaluate(ctx, ctx.one(), OrePoly{}, t) == ctx.zero());
    // constant polynomial acts by multiplication
    CHECK(evaluate(ctx, ctx.zero(), ore_constant(ctx, t), t) == ctx.mul(t, t));

    SkewContext k9 = f9();
    FieldElement y = tower(k9, {0, 1});
    OrePoly x9 = ore({k9.zero(), k9.one()});
    // u = c theta; ev_c(X)(a) = c a^3
    CHECK(evaluate(k9, k9.one(), x9, y) == k9.pow(y, 3));
    CHECK(evaluate(k9, y, x9, y) == k9.mul(y, k9.pow(y, 3)));
    CHECK_THROWS(evaluate(k9, k9.zero(), x9, y));  // c = 0 is not good
}

TEST_CASE("evaluation is a ring morphism to operators") {
    for (SkewContext ctx : {d3(), f9()}) {
        std::mt19937_64 rng(79);
        for (int trial = 0; trial < 30; ++trial) {
            FieldElement c = random_good(ctx, rng);
            OrePoly p = random_ore(ctx, rng, 3);
            OrePoly q = random_ore(ctx, rng, 3);
            FieldElement a = ctx.random_element(rng);
            // (pq)(u) = p(u) o q(u)
            CHECK(evaluate(ctx, c, ore_mul(ctx, p, q), a) ==
                  evaluate(ctx, c, p, evaluate(ctx, c, q, a)));
            CHECK(evaluate(ctx, c, ore_add(ctx, p, q), a) ==
                  ctx.add(evaluate(ctx, c, p, a), evaluate(ctx, c, q, a)));
        }
    }
}

TEST_CASE("evaluation maps are F-linear") {
    for (SkewContext ctx : {d3(), f9()}) {
        std::mt19937_64 rng(83);
        for (int trial = 0; trial < 30; ++trial) {
            FieldElement c = random_good(ctx, rng);
            OrePoly p = random_ore(ctx, rng, 3);
            FieldElement a = ctx.random_element(rng);
            FieldElement b = ctx.random_element(rng);
            FieldElement f = ctx.random_subfield_element(rng);
            CHECK(evaluate(ctx, c, p, ctx.add(a, b)) ==
                  ctx.add(evaluate(ctx, c, p, a), evaluate(ctx, c, p, b)));
            CHECK(evaluate(ctx, c, p, ctx.mul(f, a)) == ctx.mul(f, evaluate(ctx, c, p, a)));
        }
    }
}

TEST_CASE("linear kernel: X - u(a)/a kills a") {
    for (SkewContext ctx : {d3(), f9()}) {
        std::mt19937_64 rng(89);
        for (int trial = 0; trial < 30; ++trial) {
            FieldElement c = random_good(ctx, rng);
            FieldElement a = random_nonzero(ctx, rng);
            FieldElement ua = ctx.add(ctx.partial(a), ctx.mul(c, ctx.theta(a)));
            OrePoly lin = ore_linear(ctx, ctx.div(ua, a));
            CHECK(evaluate(ctx, c, lin, a) == ctx.zero());
        }
    }
}

TEST_CASE("Z = X^r is central") {
    for (SkewContext ctx : {d3(), f9(), SkewContext::frobenius(2, 2, 2)}) {
        std::mt19937_64 rng(97);
        OrePoly z = ore_central_z(ctx);
        for (int trial = 0; trial < 25; ++trial) {
            OrePoly p = random_ore(ctx, rng, 4);
            CHECK(ore_mul(ctx, z, p) == ore_mul(ctx, p, z));
        }
    }
}

TEST_CASE("Z - N(c) annihilates everything") {
    for (SkewContext ctx : {d3(), f9()}) {
        std::mt19937_64 rng(101);
        for (int trial = 0; trial < 30; ++trial) {
            FieldElement c = random_good(ctx, rng);
            OrePoly zn = ore_sub(ctx, ore_central_z(ctx), ore_constant(ctx, ctx.norm(c)));
            FieldElement a = ctx.random_element(rng);
            CHECK(evaluate(ctx, c, zn, a) == ctx.zero());
        }
    }
}

TEST_CASE("rendering smoke") {
    SkewContext ctx = d3();
    CHECK(ore_to_string(ctx, OrePoly{}) == "0");
    CHECK(!ore_to_string(ctx, thread_message(ctx)).empty());
}
