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

#include "rsg/skew_context.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rsg {

namespace {

using gfp::Poly;

/* ---- GF(q), q = p^e: elements are stripped GF(p)[x] polys of degree < e,
   reduced modulo the base modulus. ---- */

using QElem = Poly;

QElem q_reduce(const Poly& a, const Poly& mod, std::uint32_t p) {
    return gfp::divmod(a, mod, p).second;
}

QElem q_add(const QElem& a, const QElem& b, std::uint32_t p) { return gfp::add(a, b, p); }
QElem q_sub(const QElem& a, const QElem& b, std::uint32_t p) { return gfp::sub(a, b, p); }
QElem q_neg(const QElem& a, std::uint32_t p) { return gfp::neg(a, p); }

QElem q_mul(const QElem& a, const QElem& b, const Poly& mod, std::uint32_t p) {
    return q_reduce(gfp::mul(a, b, p), mod, p);
}

QElem q_inv(const QElem& a, const Poly& mod, std::uint32_t p) {
    if (gfp::is_zero(a)) throw std::domain_error("division by zero in GF(q)");
    auto [g, s, t] = gfp::ext_gcd(a, mod, p);
    if (gfp::degree(g) != 0) throw std::domain_error("non-invertible element in GF(q)");
    // g is monic, hence g = 1 and s*a = 1 mod m.
    return q_reduce(s, mod, p);
}

/* ---- GF(q)[y]: dense little-endian, stripped. ---- */

using QPoly = std::vector<QElem>;

void qp_strip(QPoly& a) {
    while (!a.empty() && gfp::is_zero(a.back())) a.pop_back();
}

int qp_degree(const QPoly& a) { return static_cast<int>(a.size()) - 1; }

QPoly qp_sub(const QPoly& a, const QPoly& b, std::uint32_t p) {
    QPoly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        const QElem& x = i < a.size() ? a[i] : QElem{};
        const QElem& y = i < b.size() ? b[i] : QElem{};
        out[i] = q_sub(x, y, p);
    }
    qp_strip(out);
    return out;
}

QPoly qp_mul(const QPoly& a, const QPoly& b, const Poly& mod, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    QPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = q_add(out[i + j], q_mul(a[i], b[j], mod, p), p);
    qp_strip(out);
    return out;
}

QPoly qp_scale(const QPoly& a, const QElem& s, const Poly& mod, std::uint32_t p) {
    QPoly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = q_mul(a[i], s, mod, p);
    qp_strip(out);
    return out;
}

std::pair<QPoly, QPoly> qp_divmod(const QPoly& a, const QPoly& b, const Poly& mod, std::uint32_t p) {
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    QPoly rem = a, quot;
    qp_strip(rem);
    const int db = qp_degree(b);
    const QElem lead_inv = q_inv(b.back(), mod, p);
    if (qp_degree(rem) >= db) quot.assign(rem.size() - b.size() + 1, QElem{});
    while (qp_degree(rem) >= db) {
        const int shift = qp_degree(rem) - db;
        QElem c = q_mul(rem.back(), lead_inv, mod, p);
        quot[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            rem[shift + i] = q_sub(rem[shift + i], q_mul(c, b[i], mod, p), p);
        qp_strip(rem);
    }
    qp_strip(quot);
    return {quot, rem};
}

std::tuple<QPoly, QPoly, QPoly> qp_ext_gcd(const QPoly& a, const QPoly& b, const Poly& mod,
                                           std::uint32_t p) {
    QPoly r0 = a, r1 = b;
    QPoly s0{QElem{1u}}, s1{}, t0{}, t1{QElem{1u}};
    qp_strip(r0);
    qp_strip(r1);
    while (!r1.empty()) {
        auto [q, r] = qp_divmod(r0, r1, mod, p);
        QPoly s2 = qp_sub(s0, qp_mul(q, s1, mod, p), p);
        QPoly t2 = qp_sub(t0, qp_mul(q, t1, mod, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!r0.empty()) {
        QElem lead_inv = q_inv(r0.back(), mod, p);
        r0 = qp_scale(r0, lead_inv, mod, p);
        s0 = qp_scale(s0, lead_inv, mod, p);
        t0 = qp_scale(t0, lead_inv, mod, p);
    }
    return {r0, s0, t0};
}

// Candidate with the given enumeration index among monic degree-d polys:
// coefficient i is the GF(q) element whose p-ary index is digit i of the
// base-q expansion.
QPoly qp_monic_at(std::uint64_t index, std::uint32_t d, std::uint64_t q, std::uint32_t p) {
    QPoly out(d + 1);
    for (std::uint32_t i = 0; i < d; ++i) {
        out[i] = gfp::from_index(index % q, p);
        index /= q;
    }
    out[d] = QElem{1u};
    return out;
}

constexpr std::uint64_t kMaxFactorEnumeration = 4'000'000;

bool qp_is_irreducible(const QPoly& a, const Poly& mod, std::uint64_t q, std::uint32_t p) {
    const int d = qp_degree(a);
    if (d < 1) return false;
    if (d == 1) return true;
    std::uint64_t total = 0;
    for (int deg = 1; deg <= d / 2; ++deg) {
        std::uint64_t count = 1;
        for (int i = 0; i < deg; ++i) {
            count *= q;
            if (count > kMaxFactorEnumeration) throw std::length_error("irreducibility check too large");
        }
        total += count;
        if (total > kMaxFactorEnumeration) throw std::length_error("irreducibility check too large");
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            QPoly cand = qp_monic_at(idx, deg, q, p);
            if (qp_divmod(a, cand, mod, p).second.empty()) return false;
        }
    }
    return true;
}

QPoly qp_smallest_irreducible(std::uint32_t d, const Poly& mod, std::uint64_t q, std::uint32_t p) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) {
        count *= q;
        if (count > kMaxFactorEnumeration) throw std::length_error("modulus search space too large");
    }
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        QPoly cand = qp_monic_at(idx, d, q, p);
        if (qp_is_irreducible(cand, mod, q, p)) return cand;
    }
    throw std::logic_error("no irreducible polynomial found");
}

/* ---- conversions between the fixed-width Tower layout and QPoly ---- */

QPoly tower_to_qpoly(const Tower& a) {
    QPoly out = a.coeff;
    qp_strip(out);
    return out;
}

Tower qpoly_to_tower(QPoly a, std::uint32_t r) {
    a.resize(r);
    return Tower{std::move(a)};
}

/* ---- GF(p)(t) fractions ---- */

Fraction make_fraction(Poly num, Poly den, std::uint32_t p, std::uint32_t max_degree) {
    if (gfp::is_zero(den)) throw std::domain_error("fraction with zero denominator");
    if (gfp::is_zero(num)) return Fraction{};
    Poly g = gfp::gcd(num, den, p);
    if (gfp::degree(g) > 0) {
        num = gfp::divmod(num, g, p).first;
        den = gfp::divmod(den, g, p).first;
    }
    std::uint32_t lead_inv = gfp::inv(den.back(), p);
    num = gfp::scale(num, lead_inv, p);
    den = gfp::scale(den, lead_inv, p);
    if (gfp::degree(num) > static_cast<int>(max_degree) ||
        gfp::degree(den) > static_cast<int>(max_degree))
        throw std::domain_error("fraction degree bound exceeded");
    return Fraction{std::move(num), std::move(den)};
}

// f(t) -> f(t^p); equals f^p over GF(p), so maps into the fixed subfield.
Poly stretch_exponents(const Poly& a, std::uint32_t p) {
    if (gfp::is_zero(a)) return {};
    Poly out((a.size() - 1) * p + 1, 0u);
    for (std::size_t i = 0; i < a.size(); ++i) out[i * p] = a[i];
    return out;
}

std::string poly_to_string(const Poly& a, const char* var) {
    if (gfp::is_zero(a)) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0 || a[i] != 1) os << a[i];
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace

bool is_zero(const FieldElement& a) {
    if (const Tower* t = std::get_if<Tower>(&a)) {
        return std::all_of(t->coeff.begin(), t->coeff.end(),
                           [](const Poly& c) { return gfp::is_zero(c); });
    }
    return gfp::is_zero(std::get<Fraction>(a).num);
}

SkewContext SkewContext::frobenius(std::uint32_t p, std::uint32_t e, std::uint32_t r,
                                   std::optional<Poly> modulus_base,
                                   std::optional<std::vector<Poly>> modulus_ext) {
    if (!gfp::is_prime(p)) throw std::invalid_argument("p must be prime");
    if (e < 1) throw std::invalid_argument("e must be at least 1");
    if (r < 1) throw std::invalid_argument("r must be at least 1");
    SkewContext ctx;
    ctx.setting_ = Setting::frobenius;
    ctx.p_ = p;
    ctx.e_ = e;
    ctx.r_ = r;
    ctx.q_ = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        if (ctx.q_ > kMaxFactorEnumeration) throw std::invalid_argument("field too large");
        ctx.q_ *= p;
    }

    Poly base;
    if (modulus_base) {
        for (std::uint32_t c : *modulus_base)
            if (c >= p) throw std::invalid_argument("modulus_base coefficient out of range");
        base = gfp::monic(*modulus_base, p);
    } else {
        base = gfp::smallest_irreducible(e, p);
    }
    if (gfp::degree(base) != static_cast<int>(e))
        throw std::invalid_argument("modulus_base must have degree e");
    if (!gfp::is_irreducible(base, p)) throw std::invalid_argument("modulus_base is reducible");
    ctx.modulus_base_ = base;

    QPoly ext;
    if (modulus_ext) {
        ext = *modulus_ext;
        qp_strip(ext);
        for (const Poly& c : ext) {
            if (gfp::degree(c) >= static_cast<int>(e))
                throw std::invalid_argument("modulus_ext coefficient out of range");
            for (std::uint32_t v : c)
                if (v >= p) throw std::invalid_argument("modulus_ext coefficient out of range");
        }
        if (qp_degree(ext) != static_cast<int>(r))
            throw std::invalid_argument("modulus_ext must have degree r");
        QElem lead_inv = q_inv(ext.back(), base, p);
        ext = qp_scale(ext, lead_inv, base, p);
        if (!qp_is_irreducible(ext, base, ctx.q_, p))
            throw std::invalid_argument("modulus_ext is reducible over GF(q)");
    } else {
        ext = qp_smallest_irreducible(r, base, ctx.q_, p);
    }
    ctx.modulus_ext_ = std::move(ext);
    return ctx;
}

SkewContext SkewContext::derivation(std::uint32_t p, std::uint32_t max_fraction_degree) {
    if (!gfp::is_prime(p)) throw std::invalid_argument("p must be prime");
    SkewContext ctx;
    ctx.setting_ = Setting::derivation;
    ctx.p_ = p;
    ctx.e_ = 1;
    ctx.r_ = p;  // [K : F] = [GF(p)(t) : GF(p)(t^p)] = p
    ctx.q_ = p;
    ctx.max_fraction_degree_ = max_fraction_degree;
    return ctx;
}

void SkewContext::check(const FieldElement& a) const {
    if (setting_ == Setting::frobenius) {
        const Tower* t = std::get_if<Tower>(&a);
        if (!t || t->coeff.size() != r_) throw std::invalid_argument("element does not belong to this context");
        for (const Poly& c : t->coeff) {
            if (gfp::degree(c) >= static_cast<int>(e_))
                throw std::invalid_argument("element does not belong to this context");
            for (std::uint32_t v : c)
                if (v >= p_) throw std::invalid_argument("element does not belong to this context");
        }
    } else {
        const Fraction* f = std::get_if<Fraction>(&a);
        if (!f || gfp::is_zero(f->den))
            throw std::invalid_argument("element does not belong to this context");
    }
}

FieldElement SkewContext::zero() const {
    if (setting_ == Setting::frobenius) return Tower{std::vector<Poly>(r_)};
    return Fraction{};
}

FieldElement SkewContext::one() const { return from_int(1); }

FieldElement SkewContext::from_int(std::uint64_t v) const {
    const std::uint32_t c = static_cast<std::uint32_t>(v % p_);
    if (setting_ == Setting::frobenius) {
        Tower t{std::vector<Poly>(r_)};
        if (c != 0) t.coeff[0] = Poly{c};
        return t;
    }
    if (c == 0) return Fraction{};
    return Fraction{Poly{c}, Poly{1u}};
}

FieldElement SkewContext::from_tower(std::vector<Poly> coords) const {
    if (setting_ != Setting::frobenius) throw std::invalid_argument("tower elements require the frobenius setting");
    if (coords.size() > r_) throw std::invalid_argument("too many coordinates");
    coords.resize(r_);
    for (Poly& c : coords) {
        gfp::strip(c);
        if (gfp::degree(c) >= static_cast<int>(e_))
            throw std::invalid_argument("coordinate degree out of range");
        for (std::uint32_t v : c)
            if (v >= p_) throw std::invalid_argument("coordinate value out of range");
    }
    return Tower{std::move(coords)};
}

FieldElement SkewContext::fraction(Poly num, Poly den) const {
    if (setting_ != Setting::derivation) throw std::invalid_argument("fractions require the derivation setting");
    for (std::uint32_t v : num)
        if (v >= p_) throw std::invalid_argument("coefficient value out of range");
    for (std::uint32_t v : den)
        if (v >= p_) throw std::invalid_argument("coefficient value out of range");
    gfp::strip(num);
    gfp::strip(den);
    return make_fraction(std::move(num), std::move(den), p_, max_fraction_degree_);
}

FieldElement SkewContext::polynomial(Poly num) const { return fraction(std::move(num), Poly{1u}); }

FieldElement SkewContext::add(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    if (setting_ == Setting::frobenius) {
        const Tower& x = std::get<Tower>(a);
        const Tower& y = std::get<Tower>(b);
        Tower out{std::vector<Poly>(r_)};
        for (std::uint32_t i = 0; i < r_; ++i) out.coeff[i] = q_add(x.coeff[i], y.coeff[i], p_);
        return out;
    }
    const Fraction& x = std::get<Fraction>(a);
    const Fraction& y = std::get<Fraction>(b);
    Poly num = gfp::add(gfp::mul(x.num, y.den, p_), gfp::mul(y.num, x.den, p_), p_);
    Poly den = gfp::mul(x.den, y.den, p_);
    return make_fraction(std::move(num), std::move(den), p_, max_fraction_degree_);
}

FieldElement SkewContext::neg(const FieldElement& a) const {
    check(a);
    if (setting_ == Setting::frobenius) {
        const Tower& x = std::get<Tower>(a);
        Tower out{std::vector<Poly>(r_)};
        for (std::uint32_t i = 0; i < r_; ++i) out.coeff[i] = q_neg(x.coeff[i], p_);
        return out;
    }
    const Fraction& x = std::get<Fraction>(a);
    return Fraction{gfp::neg(x.num, p_), x.den};
}

FieldElement SkewContext::sub(const FieldElement& a, const FieldElement& b) const {
    return add(a, neg(b));
}

FieldElement SkewContext::mul(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    if (setting_ == Setting::frobenius) {
        QPoly prod = qp_mul(tower_to_qpoly(std::get<Tower>(a)), tower_to_qpoly(std::get<Tower>(b)),
                            modulus_base_, p_);
        return qpoly_to_tower(qp_divmod(prod, modulus_ext_, modulus_base_, p_).second, r_);
    }
    const Fraction& x = std::get<Fraction>(a);
    const Fraction& y = std::get<Fraction>(b);
    return make_fraction(gfp::mul(x.num, y.num, p_), gfp::mul(x.den, y.den, p_), p_,
                         max_fraction_degree_);
}

FieldElement SkewContext::inv(const FieldElement& a) const {
    check(a);
    if (is_zero(a)) throw std::domain_error("division by zero");
    if (setting_ == Setting::frobenius) {
        auto [g, s, t] = qp_ext_gcd(tower_to_qpoly(std::get<Tower>(a)), modulus_ext_, modulus_base_, p_);
        if (qp_degree(g) != 0) throw std::domain_error("non-invertible element");
        return qpoly_to_tower(qp_divmod(s, modulus_ext_, modulus_base_, p_).second, r_);
    }
    const Fraction& x = std::get<Fraction>(a);
    return make_fraction(x.den, x.num, p_, max_fraction_degree_);
}

FieldElement SkewContext::div(const FieldElement& a, const FieldElement& b) const {
    return mul(a, inv(b));
}

FieldElement SkewContext::pow(const FieldElement& a, std::uint64_t n) const {
    check(a);
    FieldElement out = one();
    FieldElement base = a;
    while (n > 0) {
        if (n & 1) out = mul(out, base);
        base = mul(base, base);
        n >>= 1;
    }
    return out;
}

FieldElement SkewContext::theta(const FieldElement& a) const {
    check(a);
    if (setting_ == Setting::derivation) return a;
    return pow(a, q_);
}

FieldElement SkewContext::theta_inverse(const FieldElement& a) const {
    check(a);
    if (setting_ == Setting::derivation) return a;
    FieldElement out = a;
    for (std::uint32_t i = 0; i + 1 < r_; ++i) out = theta(out);
    return out;
}

FieldElement SkewContext::partial(const FieldElement& a) const {
    check(a);
    if (setting_ == Setting::frobenius) return zero();
    // (u/v)' = (u'v - uv') / v^2
    const Fraction& x = std::get<Fraction>(a);
    Poly num = gfp::sub(gfp::mul(gfp::derivative(x.num, p_), x.den, p_),
                        gfp::mul(x.num, gfp::derivative(x.den, p_), p_), p_);
    Poly den = gfp::mul(x.den, x.den, p_);
    return make_fraction(std::move(num), std::move(den), p_, max_fraction_degree_);
}

std::vector<FieldElement> SkewContext::coords_over_F(const FieldElement& a) const {
    check(a);
    std::vector<FieldElement> out;
    out.reserve(r_);
    if (setting_ == Setting::frobenius) {
        const Tower& x = std::get<Tower>(a);
        for (std::uint32_t j = 0; j < r_; ++j) {
            Tower c{std::vector<Poly>(r_)};
            c.coeff[0] = x.coeff[j];
            out.push_back(std::move(c));
        }
        return out;
    }
    // a = u/v = (u v^(p-1)) / v^p with v^p = v(t^p) in F; split the
    // numerator by exponent residue mod p.
    const Fraction& x = std::get<Fraction>(a);
    Poly w = x.num;
    for (std::uint32_t i = 0; i + 1 < p_; ++i) w = gfp::mul(w, x.den, p_);
    Poly vp = stretch_exponents(x.den, p_);
    for (std::uint32_t j = 0; j < p_; ++j) {
        Poly part;  // w_j(s) with s = t^p: coefficients of exponents = j mod p
        for (std::size_t i = j; i < w.size(); i += p_) part.push_back(w[i]);
        gfp::strip(part);
        out.push_back(make_fraction(stretch_exponents(part, p_), vp, p_, max_fraction_degree_));
    }
    return out;
}

FieldElement SkewContext::basis_element(std::uint32_t j) const {
    if (j >= r_) throw std::invalid_argument("basis index out of range");
    if (setting_ == Setting::frobenius) {
        Tower t{std::vector<Poly>(r_)};
        t.coeff[j] = Poly{1u};
        return t;
    }
    Poly num(j + 1, 0u);
    num[j] = 1;
    return Fraction{std::move(num), Poly{1u}};
}

bool SkewContext::is_good(const FieldElement& c) const {
    check(c);
    if (setting_ == Setting::derivation) return true;
    return !is_zero(c);
}

FieldElement SkewContext::norm(const FieldElement& c) const {
    check(c);
    if (!is_good(c)) throw std::domain_error("norm requires an admissible evaluation point");
    if (setting_ == Setting::frobenius) {
        FieldElement out = one();
        FieldElement cur = c;
        for (std::uint32_t i = 0; i < r_; ++i) {
            out = mul(out, cur);
            cur = theta(cur);
        }
        return out;
    }
    FieldElement out = pow(c, p_);
    FieldElement d = c;
    for (std::uint32_t i = 0; i + 1 < p_; ++i) d = partial(d);
    return add(out, d);
}

bool SkewContext::equivalent(const FieldElement& c1, const FieldElement& c2) const {
    return norm(c1) == norm(c2);
}

FieldElement SkewContext::random_element(std::mt19937_64& rng, std::uint32_t degree_bound) const {
    if (setting_ == Setting::frobenius) {
        std::vector<Poly> coords(r_);
        for (std::uint32_t j = 0; j < r_; ++j) coords[j] = gfp::from_index(rng() % q_, p_);
        return Tower{std::move(coords)};
    }
    auto draw = [&](bool nonzero) {
        Poly out;
        do {
            out.assign(degree_bound + 1, 0u);
            for (auto& c : out) c = static_cast<std::uint32_t>(rng() % p_);
            gfp::strip(out);
        } while (nonzero && gfp::is_zero(out));
        return out;
    };
    Poly num = draw(false);
    Poly den = draw(true);
    return make_fraction(std::move(num), std::move(den), p_, max_fraction_degree_);
}

FieldElement SkewContext::random_subfield_element(std::mt19937_64& rng,
                                                  std::uint32_t degree_bound) const {
    if (setting_ == Setting::frobenius) {
        std::vector<Poly> coords(r_);
        coords[0] = gfp::from_index(rng() % q_, p_);
        return Tower{std::move(coords)};
    }
    // Draw num/den in s, then substitute s = t^p to land in GF(p)(t^p).
    auto draw = [&](bool nonzero) {
        Poly out;
        do {
            out.assign(degree_bound + 1, 0u);
            for (auto& c : out) c = static_cast<std::uint32_t>(rng() % p_);
            gfp::strip(out);
        } while (nonzero && gfp::is_zero(out));
        return out;
    };
    Poly num = stretch_exponents(draw(false), p_);
    Poly den = stretch_exponents(draw(true), p_);
    return make_fraction(std::move(num), std::move(den), p_, max_fraction_degree_);
}

std::uint64_t SkewContext::field_size() const {
    if (setting_ != Setting::frobenius) throw std::domain_error("field_size is finite only in the frobenius setting");
    std::uint64_t size = 1;
    for (std::uint32_t i = 0; i < r_; ++i) size *= q_;
    return size;
}

FieldElement SkewContext::element_at(std::uint64_t index) const {
    if (setting_ != Setting::frobenius) throw std::domain_error("element_at requires the frobenius setting");
    if (index >= field_size()) throw std::out_of_range("element index out of range");
    std::vector<Poly> coords(r_);
    for (std::uint32_t j = 0; j < r_; ++j) {
        coords[j] = gfp::from_index(index % q_, p_);
        index /= q_;
    }
    return Tower{std::move(coords)};
}

std::string SkewContext::to_string(const FieldElement& a) const {
    check(a);
    if (setting_ == Setting::frobenius) {
        const Tower& t = std::get<Tower>(a);
        std::ostringstream os;
        os << "[";
        for (std::uint32_t j = 0; j < r_; ++j) {
            if (j) os << ", ";
            os << (e_ == 1 ? std::to_string(t.coeff[j].empty() ? 0u : t.coeff[j][0])
                           : poly_to_string(t.coeff[j], "x"));
        }
        os << "]";
        return os.str();
    }
    const Fraction& f = std::get<Fraction>(a);
    std::string num = poly_to_string(f.num, "t");
    if (gfp::degree(f.den) == 0) return num;
    return "(" + num + ")/(" + poly_to_string(f.den, "t") + ")";
}

}  // namespace rsg
