#include <witt2/artinschreier.hpp>
#include <witt2/quadforms.hpp>

namespace witt2 {

namespace {

// A place of K(t) together with its residue field.
struct PlaceData {
    std::optional<KPoly> pi;  // empty: infinity
    FieldRef residue;
    std::string name;
};

const Frac& frac_of(const FieldValue& x) { return std::get<Frac>(x.payload().rep); }

int multiplicity(FieldRef k, KPoly f, const KPoly& pi) {
    const FiniteOps ops{k};
    int m = 0;
    while (true) {
        auto [q, r] = poly::divmod(ops, f, pi);
        if (!r.empty()) return m;
        f = std::move(q);
        ++m;
    }
}

int valuation(const FieldValue& x, const PlaceData& P) {
    const Frac& fr = frac_of(x);
    FieldRef k = x.field()->base();
    if (!P.pi) return static_cast<int>(fr.den.size()) - static_cast<int>(fr.num.size());
    return multiplicity(k, fr.num, *P.pi) - multiplicity(k, fr.den, *P.pi);
}

// Residue of an integral element, as a packed element of the residue field.
Bits residue(const FieldValue& x, const PlaceData& P) {
    const Frac& fr = frac_of(x);
    FieldRef k = x.field()->base();
    const FiniteOps ops{k};
    if (valuation(x, P) > 0) return 0;
    if (!P.pi) return k->fmul(fr.num.back(), k->finv(fr.den.back()));
    const KPoly n = poly::mod(ops, fr.num, *P.pi), d = poly::mod(ops, fr.den, *P.pi);
    const auto bz = poly::xgcd(ops, d, *P.pi);
    KPoly r = poly::mulmod(ops, n, bz.s, *P.pi);
    if (P.pi->size() == 2) return r.empty() ? 0 : r[0];
    r.resize(P.pi->size() - 1, 0);
    return P.residue->pack(r);
}

std::vector<PlaceData> small_places(FieldRef F) {
    FieldRef k = F->base();
    std::vector<PlaceData> out;
    out.push_back({std::nullopt, k, "infinity"});
    for (unsigned d = 1; d <= 2; ++d) {
        if (k->bits() * d > 16) break;
        for (const auto& pi : monic_irreducibles(k, d)) {
            FieldRef R = d == 1 ? k : adjoin_root(from_kpoly(k, pi, "_r"), "_r");
            out.push_back({pi, R, format::kpoly(k, pi, F->generator_name())});
        }
    }
    return out;
}

}  // namespace

std::optional<std::string> springer_certificate(const std::vector<BinaryForm>& planes) {
    if (planes.empty()) return std::nullopt;
    FieldRef F = planes[0].a.field();
    for (const auto& p : planes) F = (FieldValue::zero(F) + p.a + p.b).field();
    if (F->kind() != FieldKind::Rational) return std::nullopt;

    // Plane [a, b] = a [1, ab]; replace ab by its reduced representative.
    std::vector<std::pair<FieldValue, FieldValue>> scaled;  // (a, c)
    for (const auto& p : planes) {
        const FieldValue a = p.a.embed_into(F), b = p.b.embed_into(F);
        if (a.is_zero() || b.is_zero()) return std::nullopt;
        const auto pm = pmember(a * b);
        if (pm.member) return std::nullopt;
        scaled.emplace_back(a, pm.reduced_form);
    }
    for (const auto& P : small_places(F)) {
        // Residue forms of the unit part and of the pi part.
        int count[2] = {0, 0};
        bool ok = true;
        for (const auto& [a, c] : scaled) {
            if (valuation(c, P) < 0) {
                ok = false;
                break;
            }
            const int parity = ((valuation(a, P) % 2) + 2) % 2;
            if (++count[parity] > 1 || P.residue->abs_trace(residue(c, P)) != 1) {
                ok = false;
                break;
            }
        }
        if (ok) return "residue forms anisotropic at the place " + P.name;
    }
    return std::nullopt;
}

}  // namespace witt2
