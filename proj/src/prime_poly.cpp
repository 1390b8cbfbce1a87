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

#include "rsg/prime_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace rsg::gfp {

namespace {

constexpr std::uint64_t kMaxFactorEnumeration = 4'000'000;

}  // namespace

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
}

std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return a >= b ? a - b : a + p - b;
}

std::uint32_t neg(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }

std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
    if (a == 0) throw std::domain_error("gfp::inv: division by zero");
    // extended Euclid on integers
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw std::domain_error("gfp::inv: argument not invertible (p not prime?)");
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

bool is_zero(const Poly& a) { return a.empty(); }

Poly& strip(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly add(const Poly& a, const Poly& b, std::uint32_t p) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = add(out[i], b[i], p);
    return strip(out), out;
}

Poly sub(const Poly& a, const Poly& b, std::uint32_t p) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = sub(out[i], b[i], p);
    return strip(out), out;
}

Poly neg(const Poly& a, std::uint32_t p) {
    Poly out = a;
    for (auto& c : out) c = neg(c, p);
    return out;
}

Poly mul(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = add(out[i + j], mul(a[i], b[j], p), p);
        }
    }
    return strip(out), out;
}

Poly scale(const Poly& a, std::uint32_t c, std::uint32_t p) {
    if (c == 0) return {};
    Poly out = a;
    for (auto& x : out) x = mul(x, c, p);
    return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, std::uint32_t p) {
    if (b.empty()) throw std::domain_error("gfp::divmod: division by zero polynomial");
    Poly r = a;
    if (a.size() < b.size()) return {Poly{}, r};
    Poly q(a.size() - b.size() + 1, 0);
    const std::uint32_t lead_inv = inv(b.back(), p);
    for (int d = degree(r); d >= degree(b); d = degree(r)) {
        const std::size_t shift = static_cast<std::size_t>(d - degree(b));
        const std::uint32_t c = mul(r[d], lead_inv, p);
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) {
            r[shift + i] = sub(r[shift + i], mul(c, b[i], p), p);
        }
        strip(r);
    }
    return strip(q), std::pair<Poly, Poly>{q, r};
}

Poly monic(const Poly& a, std::uint32_t p) {
    if (a.empty()) return {};
    return scale(a, inv(a.back(), p), p);
}

Poly gcd(const Poly& a, const Poly& b, std::uint32_t p) {
    Poly x = a, y = b;
    while (!y.empty()) {
        Poly r = divmod(x, y, p).second;
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x, p);
}

std::tuple<Poly, Poly, Poly> ext_gcd(const Poly& a, const Poly& b, std::uint32_t p) {
    Poly r0 = a, r1 = b;
    Poly s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r2] = divmod(r0, r1, p);
        r0 = std::move(r1);
        r1 = std::move(r2);
        Poly s2 = sub(s0, mul(q, s1, p), p);
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly t2 = sub(t0, mul(q, t1, p), p);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.empty()) return {Poly{}, Poly{}, Poly{}};
    const std::uint32_t c = inv(r0.back(), p);
    return {scale(r0, c, p), scale(s0, c, p), scale(t0, c, p)};
}

Poly derivative(const Poly& a, std::uint32_t p) {
    if (a.size() < 2) return {};
    Poly out(a.size() - 1, 0);
    for (std::size_t i = 1; i < a.size(); ++i) {
        out[i - 1] = mul(a[i], static_cast<std::uint32_t>(i % p), p);
    }
    return strip(out), out;
}

Poly from_index(std::uint64_t index, std::uint32_t p) {
    Poly out;
    while (index != 0) {
        out.push_back(static_cast<std::uint32_t>(index % p));
        index /= p;
    }
    return out;
}

bool is_irreducible(const Poly& a, std::uint32_t p) {
    const int d = degree(a);
    if (d < 1) return false;
    if (d == 1) return true;
    for (int k = 1; 2 * k <= d; ++k) {
        std::uint64_t count = 1;
        for (int i = 0; i < k; ++i) {
            count *= p;
            if (count > kMaxFactorEnumeration) {
                throw std::invalid_argument("gfp::is_irreducible: modulus too large for desk-scale factor search");
            }
        }
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Poly cand = from_index(idx, p);
            cand.resize(static_cast<std::size_t>(k) + 1, 0);
            cand[static_cast<std::size_t>(k)] = 1;
            if (divmod(a, cand, p).second.empty()) return false;
        }
    }
    return true;
}

Poly smallest_irreducible(std::uint32_t deg, std::uint32_t p) {
    if (deg == 0) throw std::invalid_argument("gfp::smallest_irreducible: degree must be positive");
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < deg; ++i) {
        count *= p;
        if (count > kMaxFactorEnumeration) {
            throw std::invalid_argument("gfp::smallest_irreducible: degree too large for desk-scale search");
        }
    }
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Poly cand = from_index(idx, p);
        cand.resize(deg + 1, 0);
        cand[deg] = 1;
        if (is_irreducible(cand, p)) return cand;
    }
    throw std::logic_error("gfp::smallest_irreducible: no irreducible found");  // unreachable for prime p
}

}  // namespace rsg::gfp
