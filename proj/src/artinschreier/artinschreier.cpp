#include <witt2/artinschreier.hpp>

#include "../common/bitlinalg.hpp"

namespace witt2 {

using detail::BitVec;

namespace {

// --- finite fields -----------------------------------------------------------

// Solutions of c^2 + c = b form a coset of {0, 1}; returns the smaller one.
std::optional<Bits> finite_solve(FieldRef f, Bits b) {
    const unsigned d = f->bits();
    std::vector<BitVec> cols;
    for (unsigned j = 0; j < d; ++j) {
        const Bits e = Bits{1} << j;
        const Bits img = f->fmul(e, e) ^ e;
        BitVec col(d);
        for (unsigned i = 0; i < d; ++i) col.set(i, (img >> i) & 1U);
        cols.push_back(std::move(col));
    }
    BitVec rhs(d);
    for (unsigned i = 0; i < d; ++i) rhs.set(i, (b >> i) & 1U);
    auto x = detail::solve(cols, rhs);
    if (!x) return std::nullopt;
    Bits c = 0;
    for (unsigned i = 0; i < d; ++i)
        if (x->get(i)) c |= Bits{1} << i;
    return std::min(c, c ^ Bits{1});
}

PMembership finite_pmember(const FieldValue& b) {
    FieldRef f = b.field();
    const Bits x = std::get<Bits>(b.payload().rep);
    PMembership out;
    if (auto c = finite_solve(f, x)) {
        out.member = true;
        out.certificate = FieldValue(f, Elem(*c));
        out.reduced_form = FieldValue::zero(f);
        out.shift = *out.certificate;
    } else {
        out.reduced_form = canonical_nontrivial(f);
        const Bits canon = std::get<Bits>(out.reduced_form.payload().rep);
        out.shift = FieldValue(f, Elem(*finite_solve(f, x ^ canon)));
    }
    return out;
}

// --- K(t) --------------------------------------------------------------------

KPoly kpoly_sqrt(FieldRef k, const KPoly& c) {
    KPoly r((c.size() + 1) / 2, 0);
    for (std::size_t i = 0; i < c.size(); i += 2) r[i / 2] = k->fsqrt(c[i]);
    for (std::size_t i = 1; i < c.size(); i += 2)
        if (c[i] != 0) raise(ErrorKind::Precondition, "polynomial is not a square");
    poly::trim(FiniteOps{k}, r);
    return r;
}

BitVec residue_bits(FieldRef k, const KPoly& r, std::size_t deg) {
    const unsigned d = k->bits();
    BitVec v(deg * d);
    for (std::size_t j = 0; j < r.size(); ++j)
        for (unsigned s = 0; s < d; ++s)
            if ((r[j] >> s) & 1U) v.set(j * d + s, true);
    return v;
}

// Square root in K[t]/(P) for squarefree P, where Frobenius is bijective.
KPoly residue_sqrt(FieldRef k, const KPoly& r, const KPoly& P) {
    const FiniteOps ops{k};
    const std::size_t deg = P.size() - 1;
    const unsigned d = k->bits();
    std::vector<BitVec> cols;
    for (std::size_t j = 0; j < deg; ++j)
        for (unsigned s = 0; s < d; ++s) {
            KPoly y = poly::monomial(ops, Bits{1} << s, j);
            cols.push_back(residue_bits(k, poly::sqrmod(ops, y, P), deg));
        }
    auto x = detail::solve(cols, residue_bits(k, r, deg));
    if (!x) raise(ErrorKind::Precondition, "place polynomial is not squarefree");
    KPoly out(deg, 0);
    for (std::size_t j = 0; j < deg; ++j)
        for (unsigned s = 0; s < d; ++s)
            if (x->get(j * d + s)) out[j] |= Bits{1} << s;
    poly::trim(ops, out);
    return out;
}

const Frac& frac_of(const FieldValue& b) { return std::get<Frac>(b.payload().rep); }

FieldValue make_value(FieldRef F, KPoly num, KPoly den) {
    return FieldValue(F, Elem(F->make_frac(std::move(num), std::move(den))));
}

bool is_constant(const FieldValue& b) {
    const auto& fr = frac_of(b);
    return fr.den == KPoly{1} && fr.num.size() <= 1;
}

PMembership function_field_pmember(const FieldValue& b) {
    FieldRef F = b.field();
    FieldRef K = F->base();
    const FiniteOps k{K};
    FieldValue cur = b;
    FieldValue shift = FieldValue::zero(F);  // cur = b + shift^2 + shift

    for (int guard = 0; guard < 100000; ++guard) {
        const PoleData pd = poles(cur);
        bool reduced = false;
        for (const auto& [P, mult] : pd.finite) {
            if (mult % 2 != 0) continue;
            auto r = reduce_pole(cur, Place::finite(P));
            cur = r.reduced;
            shift += r.h;
            reduced = true;
            break;
        }
        if (reduced) continue;
        if (pd.at_infinity > 0 && pd.at_infinity % 2 == 0) {
            auto r = reduce_pole(cur, Place::infinity());
            cur = r.reduced;
            shift += r.h;
            continue;
        }
        break;
    }

    PMembership out;
    const auto& fr = frac_of(cur);
    if (is_constant(cur)) {
        const Bits c0 = fr.num.empty() ? 0 : fr.num[0];
        if (auto c = finite_solve(K, c0)) {
            out.member = true;
            out.certificate = shift + FieldValue(K, Elem(*c));
            out.reduced_form = FieldValue::zero(F);
            out.shift = *out.certificate;
            return out;
        }
        const Bits canon = std::get<Bits>(canonical_nontrivial(K).payload().rep);
        out.reduced_form = FieldValue(K, Elem(canon)).embed_into(F);
        out.shift = shift + FieldValue(K, Elem(*finite_solve(K, c0 ^ canon)));
        return out;
    }
    // Canonicalise the constant term of the polynomial part modulo P(K).
    auto [q, rem] = poly::divmod(k, fr.num, fr.den);
    const Bits c0 = q.empty() ? 0 : q[0];
    Bits target = c0;
    if (c0 != 0) {
        target = finite_solve(K, c0) ? 0 : std::get<Bits>(canonical_nontrivial(K).payload().rep);
        if (target != c0) {
            // c0 + target is in P(K); fold its certificate into the shift.
            const Bits cert = *finite_solve(K, c0 ^ target);
            cur = cur + FieldValue(K, Elem(c0 ^ target));
            shift += FieldValue(K, Elem(cert));
        }
    }
    out.reduced_form = cur;
    out.shift = shift;
    return out;
}

PMembership quadratic_layer_pmember(const FieldValue& b) {
    FieldRef E = b.field();
    FieldRef B = E->base();
    const auto& v = std::get<std::vector<Elem>>(b.payload().rep);
    if (v.size() > 1)
        raise(ErrorKind::Unsupported, "P-membership over " + E->describe() + " is only decided for base-field elements");
    const FieldValue b0 = v.empty() ? FieldValue::zero(B) : FieldValue(B, v[0]);
    const FieldValue c(B, E->modulus()[0]);
    PMembership out;
    auto r1 = pmember(b0);
    if (r1.member) {
        out.member = true;
        out.certificate = r1.certificate->embed_into(E);
        out.reduced_form = FieldValue::zero(E);
        out.shift = *out.certificate;
        return out;
    }
    // alpha^2 + alpha = c, so b0 = y^2 + y + c has the solution y + alpha.
    auto r2 = pmember(b0 + c);
    if (r2.member) {
        out.member = true;
        out.certificate = r2.certificate->embed_into(E) + FieldValue::generator(E);
        out.reduced_form = FieldValue::zero(E);
        out.shift = *out.certificate;
        return out;
    }
    out.reduced_form = r1.reduced_form.embed_into(E);
    out.shift = r1.shift.embed_into(E);
    return out;
}

bool is_quadratic_as_layer(FieldRef f) {
    if (f->kind() != FieldKind::AlgebraicExt || f->layer_degree() != 2) return false;
    const auto& m = f->modulus();
    return m.size() == 3 && m[1] == f->base()->one() && pmember_supported(f->base());
}

}  // namespace

std::vector<std::pair<KPoly, unsigned>> squarefree_decomposition(FieldRef k, const KPoly& f_in) {
    const FiniteOps ops{k};
    std::vector<std::pair<KPoly, unsigned>> out;
    KPoly f = poly::make_monic(ops, f_in);
    if (f.size() <= 1) return out;
    KPoly c = poly::gcd(ops, f, poly::derivative(ops, f));
    KPoly w = poly::div_exact(ops, f, c);
    unsigned i = 1;
    while (!poly::is_one(ops, w)) {
        KPoly y = poly::gcd(ops, w, c);
        KPoly fac = poly::div_exact(ops, w, y);
        if (fac.size() > 1) out.emplace_back(std::move(fac), i);
        w = std::move(y);
        c = poly::div_exact(ops, c, w);
        ++i;
    }
    if (c.size() > 1) {
        for (auto& [g, m] : squarefree_decomposition(k, kpoly_sqrt(k, c))) out.emplace_back(std::move(g), 2 * m);
    }
    return out;
}

PoleData poles(const FieldValue& b) {
    FieldRef F = b.field();
    if (F->kind() != FieldKind::Rational) raise(ErrorKind::Unsupported, "poles are defined for K(t) only");
    const auto& fr = frac_of(b);
    PoleData pd;
    pd.finite = squarefree_decomposition(F->base(), fr.den);
    const int diff = static_cast<int>(fr.num.size()) - static_cast<int>(fr.den.size());
    pd.at_infinity = (!fr.num.empty() && diff > 0) ? static_cast<unsigned>(diff) : 0;
    return pd;
}

PoleReduction reduce_pole(const FieldValue& b, const Place& place) {
    FieldRef F = b.field();
    if (F->kind() != FieldKind::Rational)
        raise(ErrorKind::Unsupported, "pole reduction needs a rational function field, got " + F->describe());
    FieldRef K = F->base();
    const FiniteOps k{K};
    const auto& fr = frac_of(b);

    FieldValue h;
    if (place.at_infinity()) {
        auto q = poly::div_exact(k, fr.num, fr.den);
        const int order = fr.num.empty() ? 0 : static_cast<int>(fr.num.size()) - static_cast<int>(fr.den.size());
        if (order <= 0) raise(ErrorKind::Precondition, "no pole at infinity");
        if (order % 2 != 0) raise(ErrorKind::Precondition, "odd pole order " + std::to_string(order) + " at infinity");
        const Bits s = K->fsqrt(q.back());
        h = make_value(F, poly::monomial(k, s, static_cast<std::size_t>(order / 2)), {1});
    } else {
        const KPoly P = poly::make_monic(k, *place.pi);
        if (P.size() < 2) raise(ErrorKind::Precondition, "a place must be a nonconstant polynomial");
        KPoly R = fr.den;
        unsigned mult = 0;
        while (true) {
            auto [quo, rem] = poly::divmod(k, R, P);
            if (!rem.empty()) break;
            R = std::move(quo);
            ++mult;
        }
        if (mult == 0) raise(ErrorKind::Precondition, "no pole at the given place");
        if (!poly::is_one(k, poly::gcd(k, R, P)))
            raise(ErrorKind::Precondition, "place factors occur with different multiplicities");
        if (mult % 2 != 0) raise(ErrorKind::Precondition, "odd pole order " + std::to_string(mult) + " at the given place");
        // Leading principal-part coefficient: num / R mod P.
        const auto bz = poly::xgcd(k, R, P);
        const KPoly r = poly::mulmod(k, fr.num, bz.s, P);
        const KPoly s = residue_sqrt(K, r, P);
        KPoly Pm{1};
        for (unsigned i = 0; i < mult / 2; ++i) Pm = poly::mul(k, Pm, P);
        h = make_value(F, s, Pm);
    }
    return {b + h.square() + h, h};
}

bool pmember_supported(FieldRef f) {
    if (f->is_finite()) return true;
    if (f->kind() == FieldKind::Rational) return true;
    return is_quadratic_as_layer(f);
}

PMembership pmember(const FieldValue& b) {
    FieldRef f = b.field();
    PMembership out;
    if (f->is_finite()) out = finite_pmember(b);
    else if (f->kind() == FieldKind::Rational) out = function_field_pmember(b);
    else if (is_quadratic_as_layer(f)) out = quadratic_layer_pmember(b);
    else raise(ErrorKind::Unsupported, "P-membership is not decided over " + f->describe());
    if (out.member) {
        const auto& c = *out.certificate;
        if (!(c.square() + c == b)) raise(ErrorKind::Internal, "internal error: certificate check failed");
    }
    return out;
}

bool pclass_equal(const FieldValue& x, const FieldValue& y) { return pmember(x + y).member; }

FieldValue canonical_nontrivial(FieldRef f) {
    if (!f->is_finite()) raise(ErrorKind::Unsupported, "canonical representatives are defined for finite fields");
    for (Bits b = 1;; ++b)
        if (f->abs_trace(b) == 1) return FieldValue(f, Elem(b));
}

}  // namespace witt2
