#include <witt2/artinschreier.hpp>
#include <witt2/fields.hpp>

namespace witt2 {

namespace {

constexpr std::uint64_t kTrialBudget = 4096;  // monic candidates examined per degree

struct KFactor {
    KPoly p;
    unsigned mult;
    bool proven;  // false for an unfactored cofactor
};

// Factor a nonzero polynomial over a finite field by trial division with
// monic irreducibles of increasing degree. `complete` reports whether the
// factorisation was finished within budget.
std::vector<KFactor> trial_factor(FieldRef k, KPoly f, bool& complete) {
    const FiniteOps ops{k};
    std::vector<KFactor> out;
    f = poly::make_monic(ops, f);
    complete = true;
    const std::uint64_t q = k->order();
    for (unsigned d = 1; static_cast<int>(f.size()) - 1 >= 2 * static_cast<int>(d); ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d && count <= kTrialBudget; ++i) count *= q;
        if (count > kTrialBudget) {
            complete = false;
            break;
        }
        for (auto& pi : monic_irreducibles(k, d)) {
            unsigned m = 0;
            while (true) {
                auto [quo, rem] = poly::divmod(ops, f, pi);
                if (!rem.empty()) break;
                f = std::move(quo);
                ++m;
            }
            if (m > 0) out.push_back({pi, m, true});
        }
    }
    if (f.size() >= 2) out.push_back({f, 1, complete});
    return out;
}

// Monic divisors of a nonzero polynomial, from a complete factorisation.
std::vector<KPoly> monic_divisors(FieldRef k, const std::vector<KFactor>& fs) {
    const FiniteOps ops{k};
    std::vector<KPoly> divs{KPoly{1}};
    for (const auto& f : fs) {
        std::vector<KPoly> next;
        for (const auto& d : divs) {
            KPoly cur = d;
            next.push_back(cur);
            for (unsigned i = 0; i < f.mult; ++i) {
                cur = poly::mul(ops, cur, f.p);
                next.push_back(cur);
            }
        }
        divs = std::move(next);
        if (divs.size() > 4096) break;
    }
    return divs;
}

Irreducibility function_field_irreducible(const UniPoly& p) {
    FieldRef F = p.field();
    FieldRef K = F->base();
    const FiniteOps k{K};
    const auto n = static_cast<std::size_t>(p.degree());

    if (n == 2) {
        const FieldValue u = p.coeff(1), w = p.coeff(0);
        if (!u.is_zero()) return pmember(w / u.square()).member ? Irreducibility::Reducible : Irreducibility::Irreducible;
    }

    // Clear denominators: P_i = c_i * L in K[t].
    KPoly L{1};
    for (const auto& c : p.coeffs()) {
        const auto& fr = std::get<Frac>(c.payload().rep);
        KPoly g = poly::gcd(k, L, fr.den);
        L = poly::mul(k, L, poly::div_exact(k, fr.den, g));
    }
    std::vector<KPoly> P;
    for (const auto& c : p.coeffs()) {
        const auto& fr = std::get<Frac>(c.payload().rep);
        P.push_back(poly::mul(k, fr.num, poly::div_exact(k, L, fr.den)));
    }

    if (P[0].empty()) return Irreducibility::Reducible;  // x divides p

    // Eisenstein at an irreducible factor of the content of the lower coefficients.
    KPoly g = P[0];
    for (std::size_t i = 1; i < n; ++i) g = poly::gcd(k, g, P[i]);
    if (g.size() >= 2) {
        bool complete = false;
        for (const auto& f : trial_factor(K, g, complete)) {
            const KPoly& pi = f.p;
            if (!f.proven) continue;
            if (poly::mod(k, P[n], pi).empty()) continue;
            const KPoly pi2 = poly::mul(k, pi, pi);
            if (!poly::mod(k, P[0], pi2).empty()) return Irreducibility::Irreducible;
        }
    }

    // Specialise t at places of degree <= 3 not dividing the leading coefficient.
    for (unsigned d = 1; d <= 3; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= K->order();
        if (count > kTrialBudget) break;
        for (const auto& pi : monic_irreducibles(K, d)) {
            if (poly::mod(k, P[n], pi).empty()) continue;
            FieldRef R = K;
            std::vector<Bits> coeffs;
            if (d == 1) {
                for (const auto& c : P) coeffs.push_back(poly::eval(k, c, pi[0]));
            } else {
                R = adjoin_root(from_kpoly(K, pi, "_s"), "_s");
                for (const auto& c : P) coeffs.push_back(R->pack([&] {
                    KPoly r = poly::mod(k, c, pi);
                    r.resize(d, 0);
                    return r;
                }()));
            }
            if (finite_irreducible(R, coeffs)) return Irreducibility::Irreducible;
        }
    }

    // Roots u/v with u | P_0 and v | P_n.
    bool c0 = false, cn = false;
    const auto f0 = trial_factor(K, P[0], c0);
    const auto fn = trial_factor(K, P[n], cn);
    const auto us = monic_divisors(K, f0);
    const auto vs = monic_divisors(K, fn);
    for (const auto& u : us)
        for (const auto& v : vs)
            for (Bits unit = 1; unit < K->order(); ++unit) {
                const FieldValue r(F, Elem(F->make_frac(poly::scale(k, u, unit), v)));
                if (p(r).is_zero()) return Irreducibility::Reducible;
            }
    return Irreducibility::Unknown;
}

}  // namespace

Irreducibility is_irreducible(const UniPoly& p) {
    if (p.degree() < 1) raise(ErrorKind::Precondition, "irreducibility of a constant polynomial");
    if (!p.is_monic()) raise(ErrorKind::Precondition, "irreducibility test needs a monic polynomial");
    if (p.degree() == 1) return Irreducibility::Irreducible;
    FieldRef f = p.field();
    if (f->is_finite()) return finite_irreducible(f, to_kpoly(p)) ? Irreducibility::Irreducible : Irreducibility::Reducible;
    if (f->kind() == FieldKind::Rational) return function_field_irreducible(p);
    return Irreducibility::Unknown;
}

}  // namespace witt2
