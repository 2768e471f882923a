#include <witt2/artinschreier.hpp>
#include <witt2/quadforms.hpp>

#include "squares.hpp"

#include <map>

namespace witt2 {

std::string BinaryForm::str() const { return "[" + a.str() + "," + b.str() + "]"; }

std::string vec_str(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
    return s + ")";
}

FieldValue evaluate(const QuadSpace& q, const Vec& v) { return q.evaluate(v); }
FieldValue bilinear(const QuadSpace& q, const Vec& u, const Vec& v) { return q.bilinear(u, v); }

namespace {

// Pairs up a spanning list of a nonsingular subspace into a symplectic basis.
std::vector<SymplecticPair> pair_up(const QuadSpace& q, std::vector<Vec> vs) {
    std::vector<SymplecticPair> out;
    while (true) {
        std::erase_if(vs, [](const Vec& v) { return is_zero(v); });
        if (vs.empty()) return out;
        const Vec e = vs[0];
        std::size_t j = 1;
        FieldValue b;
        for (; j < vs.size(); ++j) {
            b = q.bilinear(e, vs[j]);
            if (!b.is_zero()) break;
        }
        if (j == vs.size()) raise(ErrorKind::Singular, "polar form is degenerate: " + vec_str(e) + " lies in its radical");
        const Vec f = b.inverse() * vs[j];
        vs.erase(vs.begin() + static_cast<std::ptrdiff_t>(j));
        vs.erase(vs.begin());
        for (auto& v : vs) v = v + q.bilinear(v, f) * e + q.bilinear(v, e) * f;
        out.push_back({e, f});
    }
}

std::optional<PMembership> try_pmember(const FieldValue& x) {
    if (!pmember_supported(x.field())) return std::nullopt;
    try {
        return pmember(x);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Unsupported) return std::nullopt;
        throw;
    }
}

FieldValue class_rep(const FieldValue& x) {
    auto pm = try_pmember(x);
    return pm ? pm->reduced_form : x;
}

enum class PlaneKind { Hyperbolic, Anisotropic, Undecided };

// A plane with B(e, f) = 1. Hyperbolic planes come back as a hyperbolic pair.
PlaneKind classify(const QuadSpace& q, SymplecticPair& p) {
    const FieldValue a = q.evaluate(p.e), b = q.evaluate(p.f);
    if (a.is_zero()) {
        p.f = p.f + b * p.e;
        return PlaneKind::Hyperbolic;
    }
    if (b.is_zero()) {
        p = {p.f, p.e + a * p.f};
        return PlaneKind::Hyperbolic;
    }
    const auto pm = try_pmember(a * b);
    if (!pm) return PlaneKind::Undecided;
    if (!pm->member) return PlaneKind::Anisotropic;
    // c^2 + c = ab makes u = (c/a) e + f isotropic.
    const Vec u = (*pm->certificate / a) * p.e + p.f;
    p = {u, p.e + a * u};
    return PlaneKind::Hyperbolic;
}

// Polynomials over the constant field with degree <= max_degree, small first.
std::vector<FieldValue> small_polys(FieldRef F, unsigned max_degree, std::size_t cap) {
    FieldRef K = F->base();
    const std::uint64_t q = K->order();
    std::vector<FieldValue> out;
    std::uint64_t count = 1;
    for (unsigned i = 0; i <= max_degree && count <= cap; ++i) count *= q;
    count = std::min<std::uint64_t>(count, cap);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        KPoly p;
        for (std::uint64_t r = idx; r != 0; r /= q) p.push_back(r % q);
        out.emplace_back(F, Elem(F->make_frac(p, {1})));
    }
    return out;
}

// Nonzero vectors x e + y f with x, y small polynomials, visited by increasing
// max(index x, index y), until visit returns true or the budget runs out.
template <class Visit>
bool search_plane(const SymplecticPair& p, FieldRef F, const SearchLimits& lim, Visit&& visit) {
    const auto polys = small_polys(F, lim.max_degree, lim.max_evaluations);
    std::size_t budget = lim.max_evaluations;
    for (std::size_t s = 0; s < polys.size(); ++s)
        for (std::size_t i = 0; i <= s; ++i) {
            const std::pair<std::size_t, std::size_t> cand[2] = {{i, s}, {s, i}};
            for (std::size_t c = 0; c < (i == s ? 1U : 2U); ++c) {
                const auto [xi, yi] = cand[c];
                if (xi == 0 && yi == 0) continue;
                if (budget-- == 0) return false;
                if (visit(polys[xi] * p.e + polys[yi] * p.f)) return true;
            }
        }
    return false;
}

// u1 in P1, u2 in P2 with q(u1) = q(u2) != 0.
std::optional<std::pair<Vec, Vec>> common_value(const QuadSpace& q, const SymplecticPair& p1, const SymplecticPair& p2,
                                                 const SearchLimits& lim) {
    for (const Vec* v1 : {&p1.e, &p1.f})
        for (const Vec* v2 : {&p2.e, &p2.f}) {
            const FieldValue a1 = q.evaluate(*v1), a2 = q.evaluate(*v2);
            if (auto s = detail::field_sqrt(a1 / a2)) return std::make_pair(*v1, *s * *v2);
        }
    if (q.field->kind() != FieldKind::Rational) return std::nullopt;

    std::map<std::string, Vec> seen;
    search_plane(p1, q.field, lim, [&](const Vec& v) {
        seen.emplace(*detail::square_class_key(q.evaluate(v)), v);
        return false;
    });
    std::optional<std::pair<Vec, Vec>> found;
    search_plane(p2, q.field, lim, [&](const Vec& v) {
        const FieldValue l2 = q.evaluate(v);
        auto it = seen.find(*detail::square_class_key(l2));
        if (it == seen.end()) return false;
        const FieldValue l1 = q.evaluate(it->second);
        found = std::make_pair(it->second, *detail::field_sqrt(l1 / l2) * v);
        return true;
    });
    return found;
}

// Splits a hyperbolic pair off P1 + P2 given a common value; returns the pair
// and the complementary plane.
std::pair<SymplecticPair, SymplecticPair> merge_planes(const QuadSpace& q, const SymplecticPair& p1,
                                                       const SymplecticPair& p2, const std::pair<Vec, Vec>& cv) {
    const Vec u = cv.first + cv.second;
    const std::vector<Vec> span{p1.e, p1.f, p2.e, p2.f};
    Vec w;
    for (const auto& z : span) {
        const FieldValue b = q.bilinear(u, z);
        if (!b.is_zero()) {
            w = b.inverse() * z;
            break;
        }
    }
    w = w + q.evaluate(w) * u;
    std::vector<Vec> rest;
    for (const auto& v : span) rest.push_back(v + q.bilinear(v, w) * u + q.bilinear(v, u) * w);
    auto planes = pair_up(q, rest);
    if (planes.size() != 1) raise(ErrorKind::Internal, "internal error: complement of a hyperbolic plane is not a plane");
    return {{u, w}, planes[0]};
}

// Rewrites an anisotropic plane as [1, c] if a vector of square value is found.
bool normalise_plane(const QuadSpace& q, SymplecticPair& p, const SearchLimits& lim) {
    auto with_unit = [&](const Vec& v) {
        const auto s = detail::field_sqrt(q.evaluate(v));
        if (!s) return false;
        const Vec e = s->inverse() * v;
        for (const Vec* z : {&p.e, &p.f}) {
            const FieldValue b = q.bilinear(e, *z);
            if (!b.is_zero()) {
                p = {e, b.inverse() * *z};
                return true;
            }
        }
        return false;
    };
    if (with_unit(p.e) || with_unit(p.f)) return true;
    if (q.field->kind() != FieldKind::Rational) return false;
    const SymplecticPair orig = p;
    return search_plane(orig, q.field, lim, [&](const Vec& v) { return *detail::square_class_key(q.evaluate(v)) == "1" && with_unit(v); });
}

Matrix columns_of(const std::vector<SymplecticPair>& pairs, std::size_t m, FieldRef f) {
    Matrix c = zero_matrix(f, m, 2 * pairs.size());
    for (std::size_t k = 0; k < pairs.size(); ++k)
        for (std::size_t i = 0; i < m; ++i) {
            c[i][2 * k] = pairs[k].e[i];
            c[i][2 * k + 1] = pairs[k].f[i];
        }
    return c;
}

}  // namespace

std::vector<SymplecticPair> symplectic_basis(const QuadSpace& q) {
    if (q.dim() % 2 != 0) raise(ErrorKind::Singular, "a nonsingular polar form needs even dimension, got " + std::to_string(q.dim()));
    std::vector<Vec> vs;
    for (std::size_t i = 0; i < q.dim(); ++i) vs.push_back(unit_vec(q.field, q.dim(), i));
    return pair_up(q, vs);
}

FieldValue arf(const QuadSpace& q) {
    FieldValue s = FieldValue::zero(q.field);
    for (const auto& p : symplectic_basis(q)) s += q.evaluate(p.e) * q.evaluate(p.f);
    return class_rep(s);
}

WittReport witt_decompose(const QuadSpace& q, const SearchLimits& lim) {
    WittReport r;
    r.dim = q.dim();
    const auto basis = symplectic_basis(q);
    FieldValue arf_sum = FieldValue::zero(q.field);
    std::vector<SymplecticPair> aniso;
    for (auto p : basis) {
        arf_sum += q.evaluate(p.e) * q.evaluate(p.f);
        switch (classify(q, p)) {
            case PlaneKind::Hyperbolic: r.hyperbolic_pairs.push_back(p); break;
            case PlaneKind::Anisotropic: aniso.push_back(p); break;
            case PlaneKind::Undecided:
                aniso.push_back(p);
                r.certified = false;
                r.note = "P-membership is not decided over " + q.field->describe();
                break;
        }
    }
    r.arf = class_rep(arf_sum);

    while (r.certified && aniso.size() >= 2) {
        bool merged = false;
        for (std::size_t i = 0; i < aniso.size() && !merged; ++i)
            for (std::size_t j = i + 1; j < aniso.size() && !merged; ++j) {
                auto cv = common_value(q, aniso[i], aniso[j], lim);
                if (!cv) continue;
                auto [hyp, rest] = merge_planes(q, aniso[i], aniso[j], *cv);
                r.hyperbolic_pairs.push_back(hyp);
                aniso.erase(aniso.begin() + static_cast<std::ptrdiff_t>(j));
                if (classify(q, rest) == PlaneKind::Hyperbolic) {
                    r.hyperbolic_pairs.push_back(rest);
                    aniso.erase(aniso.begin() + static_cast<std::ptrdiff_t>(i));
                } else {
                    aniso[i] = rest;
                }
                merged = true;
            }
        if (merged) continue;
        std::vector<BinaryForm> planes;
        for (const auto& p : aniso) planes.push_back({q.evaluate(p.e), q.evaluate(p.f)});
        if (auto cert = springer_certificate(planes)) {
            r.anisotropy = *cert;
        } else {
            r.certified = false;
            r.note = "no common value of the residue planes found within the search limits";
        }
        break;
    }

    if (aniso.size() == 1) {
        r.represents_one = normalise_plane(q, aniso[0], lim);
        const FieldValue a = q.evaluate(aniso[0].e), b = q.evaluate(aniso[0].f);
        if (r.represents_one)
            r.residue = BinaryForm{a, class_rep(b)};
        else
            r.residue = BinaryForm{a, b};
    }
    r.residue_basis = aniso;
    r.witt_index = r.hyperbolic_pairs.size();
    r.hyperbolic = aniso.empty();
    if (!aniso.empty()) r.residue_space = q.pullback(columns_of(aniso, q.dim(), q.field));
    return r;
}

bool witt_equivalent(const QuadSpace& q1, const QuadSpace& q2, const SearchLimits& lim) {
    if (q1.field != q2.field) raise(ErrorKind::DescriptorMismatch, "forms over different fields");
    const WittReport r1 = witt_decompose(q1, lim), r2 = witt_decompose(q2, lim);
    if (!r1.certified || !r2.certified)
        raise(ErrorKind::Uncertified, "Witt decomposition incomplete: " + (r1.certified ? r2.note : r1.note));
    const std::size_t d1 = r1.dim - 2 * r1.witt_index, d2 = r2.dim - 2 * r2.witt_index;
    if (d1 != d2) return false;
    if (d1 == 0) return true;
    if (d1 == 2 && r1.represents_one && r2.represents_one) return pclass_equal(r1.residue->b, r2.residue->b);
    const WittReport s = witt_decompose(orthogonal_sum(q1, q2), lim);
    if (!s.certified) raise(ErrorKind::Uncertified, "Witt decomposition incomplete: " + s.note);
    return s.hyperbolic;
}

QuadSpace extend_scalars(const QuadSpace& q, const ExtensionAlgebra& E) {
    if (E.base() != q.field)
        raise(ErrorKind::DescriptorMismatch, "extension is over " + E.base()->describe() + ", form is over " + q.field->describe());
    return q.read_into(as_field(E));
}

TraceNormalForm trace_normal_form(const ExtensionAlgebra& E) {
    const QuadSpace Q = second_trace_form(E);
    const auto elems = trace_form_basis(E);
    auto to_alg = [&](const Vec& v) {
        AlgebraElement s = E.zero();
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) s = E.add(s, E.scale(v[j], elems[j]));
        return s;
    };

    TraceNormalForm out;
    out.a_sum = FieldValue::zero(E.base());
    for (const auto& p : symplectic_basis(Q)) {
        const AlgebraElement e = to_alg(p.e), f = to_alg(p.f);
        AlgebraElement x = e, y = f;
        if (second_trace(E, e).is_zero()) {
            if (!second_trace(E, f).is_zero()) {
                x = f;
                y = e;
            } else {
                x = E.add(e, f);
                y = f;
            }
        }
        const FieldValue t2 = second_trace(E, x);
        AlgebraElement e1 = E.scale(t2.inverse(), frobenius(E, x));
        AlgebraElement f1 = E.scale(t2, frobenius(E, y));
        const FieldValue ai = second_trace(E, f1);
        out.a.push_back(ai);
        out.a_sum += ai;
        out.basis.emplace_back(std::move(e1), std::move(f1));
    }

    WittReport& r = out.report;
    r.dim = Q.dim();
    const std::size_t n = Q.dim() / 2;
    const auto pm = try_pmember(out.a_sum);
    if (!pm) {
        r.certified = false;
        r.note = "P-membership is not decided over " + E.base()->describe();
        r.witt_index = n - 1;
        r.residue = BinaryForm{FieldValue::one(E.base()), out.a_sum};
        r.represents_one = true;
        r.arf = out.a_sum;
        return out;
    }
    r.arf = pm->reduced_form;
    if (pm->member) {
        r.witt_index = n;
        r.hyperbolic = true;
    } else {
        r.witt_index = n - 1;
        r.residue = BinaryForm{FieldValue::one(E.base()), pm->reduced_form};
        r.represents_one = true;
        r.residue_space = r.residue->space();
    }
    return out;
}

}  // namespace witt2
