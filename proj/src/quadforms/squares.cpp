#include "squares.hpp"

#include <witt2/artinschreier.hpp>

namespace witt2::detail {

namespace {

std::optional<KPoly> kpoly_sqrt(FieldRef k, const KPoly& c) {
    KPoly r((c.size() + 1) / 2, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i % 2 == 1 && c[i] != 0) return std::nullopt;
        if (i % 2 == 0) r[i / 2] = k->fsqrt(c[i]);
    }
    poly::trim(FiniteOps{k}, r);
    return r;
}

}  // namespace

std::optional<FieldValue> field_sqrt(const FieldValue& x) {
    FieldRef f = x.field();
    switch (f->kind()) {
        case FieldKind::Prime:
        case FieldKind::FiniteExt: return FieldValue(f, Elem(f->fsqrt(std::get<Bits>(x.payload().rep))));
        case FieldKind::Rational: {
            const auto& fr = std::get<Frac>(x.payload().rep);
            auto n = kpoly_sqrt(f->base(), fr.num), d = kpoly_sqrt(f->base(), fr.den);
            if (!n || !d) return std::nullopt;
            return FieldValue(f, Elem(f->make_frac(*n, *d)));
        }
        case FieldKind::AlgebraicExt: {
            // Only elements of the base are handled.
            const auto& v = std::get<std::vector<Elem>>(x.payload().rep);
            if (v.size() > 1) return std::nullopt;
            const FieldValue b = v.empty() ? FieldValue::zero(f->base()) : FieldValue(f->base(), v[0]);
            auto r = field_sqrt(b);
            if (!r) return std::nullopt;
            return r->embed_into(f);
        }
    }
    return std::nullopt;
}

std::optional<std::string> square_class_key(const FieldValue& x) {
    FieldRef f = x.field();
    if (f->kind() != FieldKind::Rational) return std::nullopt;
    if (x.is_zero()) return std::string("0");
    FieldRef k = f->base();
    const FiniteOps ops{k};
    const auto& fr = std::get<Frac>(x.payload().rep);
    KPoly part{1};
    for (const auto& [p, m] : squarefree_decomposition(k, poly::mul(ops, fr.num, fr.den)))
        if (m % 2 == 1) part = poly::mul(ops, part, p);
    return format::kpoly(k, part, "t");
}

}  // namespace witt2::detail
