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
#include <random>

#include "doctest.h"
#include "rsg/prime_poly.hpp"

using namespace rsg::gfp;

namespace {

Poly random_poly(std::mt19937_64& rng, std::uint32_t p, std::size_t max_degree) {
    Poly out(rng() % (max_degree + 1) + 1, 0u);
    for (auto& c : out) c = static_cast<std::uint32_t>(rng() % p);
    strip(out);
    return out;
}

}  // namespace

TEST_CASE("scalar arithmetic mod p") {
    CHECK(add(2, 2, 3) == 1);
    CHECK(sub(0, 1, 3) == 2);
    CHECK(mul(2, 2, 5) == 4);
    for (std::uint32_t p : {2u, 3u, 5u, 7u})
        for (std::uint32_t a = 1; a < p; ++a) CHECK(mul(a, inv(a, p), p) == 1);
    CHECK_THROWS(inv(0, 3));
}

TEST_CASE("divmod re-verified by multiplication") {
    std::mt19937_64 rng(42);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 200; ++trial) {
            Poly a = random_poly(rng, p, 8);
            Poly b = random_poly(rng, p, 5);
            if (is_zero(b)) continue;
            auto [q, r] = divmod(a, b, p);
            CHECK(add(mul(q, b, p), r, p) == a);
            CHECK(degree(r) < degree(b));
        }
    }
    CHECK_THROWS(divmod(Poly{1}, Poly{}, 3));
}

TEST_CASE("gcd and extended gcd") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint32_t p = 3;
        Poly a = random_poly(rng, p, 6);
        Poly b = random_poly(rng, p, 6);
        if (is_zero(a) && is_zero(b)) continue;
        auto [g, s, t] = ext_gcd(a, b, p);
        CHECK(add(mul(s, a, p), mul(t, b, p), p) == g);
        CHECK(g == gcd(a, b, p));
        if (!is_zero(a)) CHECK(is_zero(divmod(a, g, p).second));
        if (!is_zero(b)) CHECK(is_zero(divmod(b, g, p).second));
        if (!is_zero(g)) CHECK(g.back() == 1);  // monic
    }
}

TEST_CASE("derivative") {
    // d/dt (t^3 + 2t^2 + t + 1) = 3t^2 + 4t + 1 = t + 1 mod 3
    CHECK(derivative(Poly{1, 1, 2, 1}, 3) == Poly{1, 1});
    CHECK(derivative(Poly{0, 0, 0, 1}, 3) == Poly{});  // (t^3)' = 0 in char 3
    CHECK(derivative(Poly{5}, 7) == Poly{});
}

TEST_CASE("index enumeration") {
    CHECK(from_index(0, 3) == Poly{});
    CHECK(from_index(5, 3) == Poly{2, 1});  // 5 = 2 + 1*3
    CHECK(from_index(9, 3) == Poly{0, 0, 1});
    // distinct indices give distinct polynomials
    std::vector<Poly> seen;
    for (std::uint64_t i = 0; i < 27; ++i) seen.push_back(from_index(i, 3));
    for (std::size_t i = 0; i < seen.size(); ++i)
        for (std::size_t j = i + 1; j < seen.size(); ++j) CHECK(seen[i] != seen[j]);
}

TEST_CASE("irreducibility by trial division") {
    CHECK(is_irreducible(Poly{1, 0, 1}, 3));   // y^2 + 1 has no roots mod 3
    CHECK(!is_irreducible(Poly{2, 0, 1}, 3));  // y^2 + 2 = (y+1)(y+2)
    CHECK(is_irreducible(Poly{0, 1}, 3));
    CHECK(!is_irreducible(Poly{2}, 3));
    CHECK(is_irreducible(Poly{1, 1, 1}, 2));   // y^2 + y + 1 over GF(2)
    CHECK(!is_irreducible(Poly{1, 0, 1}, 2));  // (y+1)^2 over GF(2)
}

TEST_CASE("smallest irreducible") {
    CHECK(smallest_irreducible(1, 3) == Poly{0, 1});     // y
    CHECK(smallest_irreducible(2, 3) == Poly{1, 0, 1});  // y^2 + 1
    CHECK(smallest_irreducible(2, 2) == Poly{1, 1, 1});  // y^2 + y + 1
    for (std::uint32_t d : {1u, 2u, 3u, 4u}) {
        Poly m = smallest_irreducible(d, 5);
        CHECK(degree(m) == static_cast<int>(d));
        CHECK(is_irreducible(m, 5));
    }
}

TEST_CASE("primality helper") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(7));
    CHECK(!is_prime(1));
    CHECK(!is_prime(9));
}
