#include <witt2/fields.hpp>

namespace witt2 {

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        ps.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

}  // namespace

std::vector<Bits> Field::split(Bits a) const {
    const unsigned w = base_->bits();
    const Bits mask = w == 64 ? ~Bits{0} : (Bits{1} << w) - 1;
    std::vector<Bits> c(layer_degree_);
    for (unsigned i = 0; i < layer_degree_; ++i) c[i] = (a >> (i * w)) & mask;
    return c;
}

Bits Field::pack(const std::vector<Bits>& coeffs) const {
    const unsigned w = base_->bits();
    Bits a = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) a |= coeffs[i] << (i * w);
    return a;
}

Bits Field::slow_mul(Bits a, Bits b) const {
    const FiniteOps k{base_};
    KPoly pa = split(a), pb = split(b);
    poly::trim(k, pa);
    poly::trim(k, pb);
    KPoly r = poly::mod(k, poly::mul(k, pa, pb), modulus_bits_);
    return pack(r);
}

Bits Field::fmul(Bits a, Bits b) const {
    if (kind_ == FieldKind::Prime) return a & b;
    if (a == 0 || b == 0) return 0;
    if (!exp_.empty()) return exp_[log_[a] + log_[b]];
    return slow_mul(a, b);
}

Bits Field::fpow(Bits a, std::uint64_t e) const {
    Bits acc = 1;
    while (e != 0) {
        if (e & 1U) acc = fmul(acc, a);
        e >>= 1U;
        if (e != 0) a = fmul(a, a);
    }
    return acc;
}

Bits Field::finv(Bits a) const {
    if (a == 0) raise(ErrorKind::DivisionByZero, "inverse of zero in " + describe());
    if (kind_ == FieldKind::Prime) return 1;
    if (!exp_.empty()) {
        const std::uint32_t n = static_cast<std::uint32_t>((std::uint64_t{1} << bits_) - 1);
        return exp_[(n - log_[a]) % n];
    }
    // a^(2^D - 2) = prod_{i=1}^{D-1} a^(2^i)
    Bits acc = 1, s = a;
    for (unsigned i = 1; i < bits_; ++i) {
        s = fmul(s, s);
        acc = fmul(acc, s);
    }
    return acc;
}

Bits Field::fsqrt(Bits a) const {
    for (unsigned i = 1; i < bits_; ++i) a = fmul(a, a);
    return a;
}

unsigned Field::abs_trace(Bits a) const {
    Bits acc = 0, s = a;
    for (unsigned i = 0; i < bits_; ++i) {
        acc ^= s;
        s = fmul(s, s);
    }
    return static_cast<unsigned>(acc);
}

void Field::build_finite_tables() {
    if (bits_ > 16) return;
    const std::uint64_t n = (std::uint64_t{1} << bits_) - 1;
    const auto ps = prime_factors(n);
    Bits g = 0;
    for (Bits c = 2; c <= n; ++c) {
        bool primitive = true;
        for (auto p : ps)
            if (fpow(c, n / p) == 1) {
                primitive = false;
                break;
            }
        if (primitive) {
            g = c;
            break;
        }
    }
    if (g == 0) raise(ErrorKind::Reducible, "no primitive element in " + text_);
    std::vector<std::uint32_t> exp(2 * n), log(n + 1, 0);
    Bits x = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        exp[i] = static_cast<std::uint32_t>(x);
        log[x] = static_cast<std::uint32_t>(i);
        x = slow_mul(x, g);
    }
    for (std::uint64_t i = n; i < 2 * n; ++i) exp[i] = exp[i - n];
    exp_ = std::move(exp);
    log_ = std::move(log);
}

// --- rational function layer ------------------------------------------------

Frac Field::make_frac(KPoly num, KPoly den) const {
    const FiniteOps k{base_};
    poly::trim(k, num);
    poly::trim(k, den);
    if (den.empty()) raise(ErrorKind::DivisionByZero, "zero denominator in " + describe());
    if (num.empty()) return Frac{{}, {1}};
    KPoly g = poly::gcd(k, num, den);
    if (!poly::is_one(k, g)) {
        num = poly::div_exact(k, num, g);
        den = poly::div_exact(k, den, g);
    }
    if (den.back() != 1) {
        const Bits li = base_->finv(den.back());
        num = poly::scale(k, num, li);
        den = poly::scale(k, den, li);
    }
    return Frac{std::move(num), std::move(den)};
}

Frac Field::frac_add(const Frac& a, const Frac& b) const {
    const FiniteOps k{base_};
    if (a.num.empty()) return b;
    if (b.num.empty()) return a;
    if (a.den == b.den) {
        if (a.den == KPoly{1}) return Frac{poly::add(k, a.num, b.num), {1}};
        return make_frac(poly::add(k, a.num, b.num), a.den);
    }
    KPoly num = poly::add(k, poly::mul(k, a.num, b.den), poly::mul(k, b.num, a.den));
    return make_frac(std::move(num), poly::mul(k, a.den, b.den));
}

Frac Field::frac_mul(const Frac& a, const Frac& b) const {
    const FiniteOps k{base_};
    if (a.num.empty() || b.num.empty()) return Frac{{}, {1}};
    if (a.den == KPoly{1} && b.den == KPoly{1}) return Frac{poly::mul(k, a.num, b.num), {1}};
    KPoly an = a.num, ad = a.den, bn = b.num, bd = b.den;
    KPoly g1 = poly::gcd(k, an, bd);
    if (!poly::is_one(k, g1)) {
        an = poly::div_exact(k, an, g1);
        bd = poly::div_exact(k, bd, g1);
    }
    KPoly g2 = poly::gcd(k, bn, ad);
    if (!poly::is_one(k, g2)) {
        bn = poly::div_exact(k, bn, g2);
        ad = poly::div_exact(k, ad, g2);
    }
    // Denominators stay monic; cancelling monic gcds keeps them monic.
    return Frac{poly::mul(k, an, bn), poly::mul(k, ad, bd)};
}

Frac Field::frac_inv(const Frac& a) const { return make_frac(a.den, a.num); }

}  // namespace witt2
