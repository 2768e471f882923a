#pragma once

// Dense univariate polynomial algorithms, generic over the coefficient field.
//
// A polynomial is a little-endian std::vector of coefficients with no trailing
// zeros (the zero polynomial is the empty vector). The coefficient field is
// supplied as an "ops" object exposing:
//
//   using value_type = ...;
//   value_type zero() const;  value_type one() const;
//   bool is_zero(const value_type&) const;
//   bool equal(const value_type&, const value_type&) const;
//   value_type add(const value_type&, const value_type&) const;
//   value_type mul(const value_type&, const value_type&) const;
//   value_type inv(const value_type&) const;
//
// Every field handled here has characteristic two, so subtraction is addition.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace witt2::poly {

template <class Ops>
using Poly = std::vector<typename Ops::value_type>;

template <class Ops>
void trim(const Ops& k, Poly<Ops>& p) {
    while (!p.empty() && k.is_zero(p.back())) p.pop_back();
}

template <class Ops>
int degree(const Poly<Ops>& p) {
    return static_cast<int>(p.size()) - 1;
}

template <class Ops>
bool equal(const Ops& k, const Poly<Ops>& p, const Poly<Ops>& q) {
    if (p.size() != q.size()) return false;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (!k.equal(p[i], q[i])) return false;
    return true;
}

template <class Ops>
Poly<Ops> constant(const Ops& k, const typename Ops::value_type& c) {
    if (k.is_zero(c)) return {};
    return {c};
}

template <class Ops>
Poly<Ops> monomial(const Ops& k, const typename Ops::value_type& c, std::size_t power) {
    if (k.is_zero(c)) return {};
    Poly<Ops> r(power + 1, k.zero());
    r[power] = c;
    return r;
}

template <class Ops>
bool is_one(const Ops& k, const Poly<Ops>& p) {
    return p.size() == 1 && k.equal(p[0], k.one());
}

template <class Ops>
Poly<Ops> add(const Ops& k, const Poly<Ops>& p, const Poly<Ops>& q) {
    const Poly<Ops>& big = p.size() >= q.size() ? p : q;
    const Poly<Ops>& small = p.size() >= q.size() ? q : p;
    Poly<Ops> r = big;
    for (std::size_t i = 0; i < small.size(); ++i) r[i] = k.add(r[i], small[i]);
    trim(k, r);
    return r;
}

template <class Ops>
Poly<Ops> scale(const Ops& k, const Poly<Ops>& p, const typename Ops::value_type& c) {
    if (k.is_zero(c)) return {};
    Poly<Ops> r;
    r.reserve(p.size());
    for (const auto& x : p) r.push_back(k.mul(x, c));
    trim(k, r);
    return r;
}

template <class Ops>
Poly<Ops> shift(const Ops& k, const Poly<Ops>& p, std::size_t n) {
    if (p.empty()) return {};
    Poly<Ops> r(n, k.zero());
    r.insert(r.end(), p.begin(), p.end());
    return r;
}

template <class Ops>
Poly<Ops> mul(const Ops& k, const Poly<Ops>& p, const Poly<Ops>& q) {
    if (p.empty() || q.empty()) return {};
    Poly<Ops> r(p.size() + q.size() - 1, k.zero());
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (k.is_zero(p[i])) continue;
        for (std::size_t j = 0; j < q.size(); ++j) r[i + j] = k.add(r[i + j], k.mul(p[i], q[j]));
    }
    trim(k, r);
    return r;
}

template <class Ops>
Poly<Ops> square(const Ops& k, const Poly<Ops>& p) {
    // Cross terms cancel in characteristic two.
    if (p.empty()) return {};
    Poly<Ops> r(2 * p.size() - 1, k.zero());
    for (std::size_t i = 0; i < p.size(); ++i) r[2 * i] = k.mul(p[i], p[i]);
    trim(k, r);
    return r;
}

// Quotient and remainder; the divisor must be nonzero.
template <class Ops>
std::pair<Poly<Ops>, Poly<Ops>> divmod(const Ops& k, const Poly<Ops>& p, const Poly<Ops>& d) {
    Poly<Ops> rem = p;
    if (rem.size() < d.size()) return {{}, rem};
    const auto lead_inv = k.inv(d.back());
    Poly<Ops> quo(rem.size() - d.size() + 1, k.zero());
    for (std::size_t i = rem.size(); i-- >= d.size();) {
        if (k.is_zero(rem[i])) continue;
        const auto c = k.mul(rem[i], lead_inv);
        const std::size_t off = i - (d.size() - 1);
        quo[off] = c;
        for (std::size_t j = 0; j < d.size(); ++j) rem[off + j] = k.add(rem[off + j], k.mul(c, d[j]));
    }
    trim(k, rem);
    trim(k, quo);
    return {std::move(quo), std::move(rem)};
}

template <class Ops>
Poly<Ops> mod(const Ops& k, const Poly<Ops>& p, const Poly<Ops>& d) {
    return divmod(k, p, d).second;
}

template <class Ops>
Poly<Ops> div_exact(const Ops& k, const Poly<Ops>& p, const Poly<Ops>& d) {
    return divmod(k, p, d).first;
}

template <class Ops>
Poly<Ops> make_monic(const Ops& k, const Poly<Ops>& p) {
    if (p.empty() || k.equal(p.back(), k.one())) return p;
    return scale(k, p, k.inv(p.back()));
}

// Monic gcd; gcd(0, 0) = 0.
template <class Ops>
Poly<Ops> gcd(const Ops& k, Poly<Ops> a, Poly<Ops> b) {
    while (!b.empty()) {
        auto r = mod(k, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(k, a);
}

template <class Ops>
struct Bezout {
    Poly<Ops> g, s, t;  // s*a + t*b = g, g monic
};

template <class Ops>
Bezout<Ops> xgcd(const Ops& k, const Poly<Ops>& a, const Poly<Ops>& b) {
    Poly<Ops> r0 = a, r1 = b;
    Poly<Ops> s0 = constant(k, k.one()), s1;
    Poly<Ops> t0, t1 = constant(k, k.one());
    while (!r1.empty()) {
        auto [q, r] = divmod(k, r0, r1);
        auto s2 = add(k, s0, mul(k, q, s1));
        auto t2 = add(k, t0, mul(k, q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.empty()) return {r0, s0, t0};
    const auto li = k.inv(r0.back());
    return {scale(k, r0, li), scale(k, s0, li), scale(k, t0, li)};
}

// Formal derivative: the coefficient of x^i picks up a factor i, which is 0 or 1.
template <class Ops>
Poly<Ops> derivative(const Ops& k, const Poly<Ops>& p) {
    if (p.size() <= 1) return {};
    Poly<Ops> r(p.size() - 1, k.zero());
    for (std::size_t i = 1; i < p.size(); i += 2) r[i - 1] = p[i];
    trim(k, r);
    return r;
}

template <class Ops>
typename Ops::value_type eval(const Ops& k, const Poly<Ops>& p, const typename Ops::value_type& x) {
    auto acc = k.zero();
    for (std::size_t i = p.size(); i-- > 0;) acc = k.add(k.mul(acc, x), p[i]);
    return acc;
}

template <class Ops>
Poly<Ops> mulmod(const Ops& k, const Poly<Ops>& a, const Poly<Ops>& b, const Poly<Ops>& m) {
    return mod(k, mul(k, a, b), m);
}

template <class Ops>
Poly<Ops> sqrmod(const Ops& k, const Poly<Ops>& a, const Poly<Ops>& m) {
    return mod(k, square(k, a), m);
}

template <class Ops>
Poly<Ops> powmod(const Ops& k, Poly<Ops> base, std::uint64_t e, const Poly<Ops>& m) {
    Poly<Ops> acc = mod(k, constant(k, k.one()), m);
    base = mod(k, base, m);
    while (e != 0) {
        if (e & 1U) acc = mulmod(k, acc, base, m);
        e >>= 1U;
        if (e != 0) base = sqrmod(k, base, m);
    }
    return acc;
}

// a^(2^n) mod m by repeated squaring.
template <class Ops>
Poly<Ops> frobenius_power(const Ops& k, Poly<Ops> a, std::uint64_t n, const Poly<Ops>& m) {
    a = mod(k, a, m);
    for (std::uint64_t i = 0; i < n; ++i) a = sqrmod(k, a, m);
    return a;
}

}  // namespace witt2::poly
