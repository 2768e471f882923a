#include <witt2/extensions.hpp>

#include <algorithm>

namespace witt2 {

UniPoly CharPolyCoeffs::poly(const std::string& var) const {
    FieldRef f = T.empty() ? gf2() : T[0].field();
    Vec c(T.rbegin(), T.rend());
    c.push_back(FieldValue::one(f));
    return UniPoly(f, c, var);
}

ExtensionAlgebra::ExtensionAlgebra(const UniPoly& modulus, bool require_field) : base_(modulus.field()), p_(modulus) {
    if (p_.degree() < 2) raise(ErrorKind::Precondition, "an extension modulus needs degree >= 2");
    if (!p_.is_monic()) raise(ErrorKind::Precondition, "extension modulus " + p_.str() + " is not monic");
    if (!is_separable(p_)) raise(ErrorKind::Inseparable, "extension modulus " + p_.str() + " is inseparable");
    irr_ = is_irreducible(p_);
    if (require_field && irr_ == Irreducibility::Reducible) raise(ErrorKind::Reducible, "extension modulus " + p_.str() + " is reducible");
    n_ = static_cast<std::size_t>(p_.degree());

    // alpha^n = sum_i p_i alpha^i.
    const FieldValue zero = FieldValue::zero(base_);
    for (std::size_t k = 0; k < n_; ++k) powers_.push_back(unit_vec(base_, n_, k));
    for (std::size_t k = n_; k + 1 < 2 * n_; ++k) {
        const Vec& prev = powers_.back();
        Vec next = zero_vec(base_, n_);
        for (std::size_t i = 1; i < n_; ++i) next[i] = prev[i - 1];
        const FieldValue top = prev[n_ - 1];
        if (!top.is_zero())
            for (std::size_t i = 0; i < n_; ++i) next[i] += top * p_.coeff(i);
        powers_.push_back(std::move(next));
    }
    for (std::size_t i = 0; i < n_; ++i) {
        FieldValue t = zero;
        for (std::size_t j = 0; j < n_; ++j) t += powers_[i + j][j];
        tau_.push_back(t);
    }
}

AlgebraElement ExtensionAlgebra::zero() const { return {zero_vec(base_, n_)}; }
AlgebraElement ExtensionAlgebra::one() const { return {unit_vec(base_, n_, 0)}; }

AlgebraElement ExtensionAlgebra::alpha_power(std::size_t k) const {
    if (k < powers_.size()) return {powers_[k]};
    AlgebraElement r = one(), b = {powers_[1]};
    for (; k != 0; k >>= 1U) {
        if (k & 1U) r = mul(r, b);
        if (k > 1) b = mul(b, b);
    }
    return r;
}

AlgebraElement ExtensionAlgebra::from_base(const FieldValue& x) const {
    AlgebraElement r = zero();
    r.c[0] = x.embed_into(base_);
    return r;
}

AlgebraElement ExtensionAlgebra::element(Vec coords) const {
    if (coords.size() != n_) raise(ErrorKind::Precondition, "element needs " + std::to_string(n_) + " coordinates");
    return {read_into(coords, base_)};
}

AlgebraElement ExtensionAlgebra::parse(const std::string& text) const {
    const UniPoly u = parse_poly(base_, text, p_.var());
    const UniPoly r = u.divmod(p_).second;
    AlgebraElement a = zero();
    for (std::size_t i = 0; i < r.coeffs().size(); ++i) a.c[i] = r.coeffs()[i];
    return a;
}

AlgebraElement ExtensionAlgebra::add(const AlgebraElement& a, const AlgebraElement& b) const { return {a.c + b.c}; }

AlgebraElement ExtensionAlgebra::scale(const FieldValue& c, const AlgebraElement& a) const { return {c * a.c}; }

AlgebraElement ExtensionAlgebra::mul(const AlgebraElement& a, const AlgebraElement& b) const {
    Vec prod = zero_vec(base_, 2 * n_ - 1);
    for (std::size_t i = 0; i < n_; ++i) {
        if (a.c[i].is_zero()) continue;
        for (std::size_t j = 0; j < n_; ++j)
            if (!b.c[j].is_zero()) prod[i + j] += a.c[i] * b.c[j];
    }
    Vec r(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(n_));
    for (std::size_t k = n_; k < prod.size(); ++k) {
        if (prod[k].is_zero()) continue;
        for (std::size_t i = 0; i < n_; ++i)
            if (!powers_[k][i].is_zero()) r[i] += prod[k] * powers_[k][i];
    }
    return {r};
}

std::string ExtensionAlgebra::str(const AlgebraElement& a) const {
    UniPoly u(base_, a.c, p_.var());
    return u.str();
}

Matrix mult_matrix(const ExtensionAlgebra& E, const AlgebraElement& a) {
    const std::size_t n = E.degree();
    Matrix m = zero_matrix(E.base(), n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const AlgebraElement col = E.mul(a, E.alpha_power(j));
        for (std::size_t i = 0; i < n; ++i) m[i][j] = col.c[i];
    }
    return m;
}

CharPolyCoeffs char_poly(const Matrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return {};
    FieldRef f = m[0][0].field();
    for (const auto& row : m)
        for (const auto& x : row) f = (FieldValue::zero(f) + x).field();
    const FieldValue one = FieldValue::one(f), zero = FieldValue::zero(f);

    // Berkowitz: the characteristic polynomial of the leading (k+1) x (k+1)
    // block is a Toeplitz matrix times that of the leading k x k block.
    Vec poly{one, m[0][0]};  // high-degree first; signs vanish in characteristic two
    for (std::size_t k = 1; k < n; ++k) {
        // Toeplitz column: 1, a_kk, R C, R A C, R A^2 C, ...
        Vec col{one, m[k][k]};
        Vec v(k);  // A^j C
        for (std::size_t i = 0; i < k; ++i) v[i] = m[i][k];
        for (std::size_t j = 0; j < k; ++j) {
            FieldValue s = zero;
            for (std::size_t i = 0; i < k; ++i) s += m[k][i] * v[i];
            col.push_back(s);
            Vec w(k, zero);
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t c = 0; c < k; ++c)
                    if (!m[r][c].is_zero()) w[r] += m[r][c] * v[c];
            v = std::move(w);
        }
        Vec next(k + 2, zero);
        for (std::size_t r = 0; r < k + 2; ++r)
            for (std::size_t c = 0; c <= std::min(r, k); ++c) next[r] += col[r - c] * poly[c];
        poly = std::move(next);
    }
    return {Vec(poly.begin() + 1, poly.end())};
}

CharPolyCoeffs char_poly(const ExtensionAlgebra& E, const AlgebraElement& a) {
    return char_poly(mult_matrix(E, a));
}

FieldValue trace(const ExtensionAlgebra& E, const AlgebraElement& a) {
    FieldValue s = FieldValue::zero(E.base());
    for (std::size_t i = 0; i < E.degree(); ++i) s += a.c[i] * E.trace_vector()[i];
    return s;
}

FieldValue norm(const ExtensionAlgebra& E, const AlgebraElement& a) { return char_poly(E, a)(E.degree()); }

FieldValue second_trace(const ExtensionAlgebra& E, const AlgebraElement& a) {
    const Matrix m = mult_matrix(E, a);
    FieldValue s = FieldValue::zero(E.base());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j) s += m[i][i] * m[j][j] + m[i][j] * m[j][i];
    return s;
}

FieldValue trace_polar(const ExtensionAlgebra& E, const AlgebraElement& x, const AlgebraElement& y) {
    return trace(E, E.mul(x, y)) + trace(E, x) * trace(E, y);
}

std::vector<AlgebraElement> kernel_of_trace(const ExtensionAlgebra& E) {
    const Vec& tau = E.trace_vector();
    std::size_t p = 0;
    while (p < tau.size() && tau[p].is_zero()) ++p;
    if (p == tau.size()) raise(ErrorKind::Inseparable, "the trace form vanishes identically");
    const FieldValue inv = tau[p].inverse();
    std::vector<AlgebraElement> out;
    for (std::size_t i = 0; i < E.degree(); ++i) {
        if (i == p) continue;
        AlgebraElement v = E.alpha_power(i);
        v.c[p] += tau[i] * inv;
        out.push_back(std::move(v));
    }
    return out;
}

namespace {

QuadSpace trace_form_on(const ExtensionAlgebra& E, const std::vector<AlgebraElement>& basis) {
    const std::size_t m = basis.size();
    Matrix q = zero_matrix(E.base(), m, m);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < m; ++i) {
        q[i][i] = second_trace(E, basis[i]);
        for (std::size_t j = i + 1; j < m; ++j) q[i][j] = trace_polar(E, basis[i], basis[j]);
        labels.push_back(E.str(basis[i]));
    }
    QuadSpace s(E.base(), std::move(q), std::move(labels));
    if (!s.nonsingular()) raise(ErrorKind::Singular, "second trace form of " + E.modulus().str() + " is singular");
    return s;
}

}  // namespace

QuadSpace second_trace_form(const ExtensionAlgebra& E) { return trace_form_on(E, trace_form_basis(E)); }

std::vector<AlgebraElement> trace_form_basis(const ExtensionAlgebra& E) {
    if (E.degree() % 2 != 0) return kernel_of_trace(E);
    std::vector<AlgebraElement> basis;
    for (std::size_t i = 0; i < E.degree(); ++i) basis.push_back(E.alpha_power(i));
    return basis;
}

QuadSpace bm_form(const ExtensionAlgebra& E) {
    const std::size_t n = E.degree();
    if (n % 2 == 0) return second_trace_form(E);
    std::vector<AlgebraElement> basis;
    for (std::size_t i = 0; i < n; ++i) basis.push_back(E.alpha_power(i));
    Matrix q = zero_matrix(E.base(), n + 1, n + 1);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        q[i][i] = second_trace(E, basis[i]);
        for (std::size_t j = i + 1; j < n; ++j) q[i][j] = trace_polar(E, basis[i], basis[j]);
        q[i][n] = E.trace_vector()[i];
        labels.push_back("(" + E.str(basis[i]) + ",0)");
    }
    labels.emplace_back("(0,1)");
    return QuadSpace(E.base(), std::move(q), std::move(labels));
}

AlgebraElement frobenius(const ExtensionAlgebra& E, const AlgebraElement& a) { return E.mul(a, a); }

FieldRef as_field(const ExtensionAlgebra& E) {
    if (!E.is_field()) raise(ErrorKind::Reducible, "modulus " + E.modulus().str() + " is reducible; the algebra is not a field");
    if (!E.certified()) raise(ErrorKind::Uncertified, "modulus " + E.modulus().str() + " is not proven irreducible");
    std::string gen = E.var();
    const auto names = E.base()->tower_names();
    auto used = [&](const std::string& s) { return std::find(names.begin(), names.end(), s) != names.end(); };
    for (int k = 1; used(gen); ++k) gen = E.var() + std::to_string(k);
    return adjoin_root(E.modulus().with_var(gen), gen);
}

FieldValue to_field(const ExtensionAlgebra& E, const AlgebraElement& a) {
    FieldRef L = as_field(E);
    const FieldValue g = FieldValue::generator(L);
    FieldValue s = FieldValue::zero(L);
    for (std::size_t i = E.degree(); i-- > 0;) s = s * g + a.c[i];
    return s;
}

}  // namespace witt2
