#include <witt2/fields.hpp>

namespace witt2 {

UniPoly::UniPoly(FieldRef f, std::vector<FieldValue> coeffs, std::string var)
    : field_(f), c_(std::move(coeffs)), var_(std::move(var)) {
    for (auto& c : c_)
        if (c.field() != f) c = c.embed_into(f);
    poly::trim(ValueOps{f}, c_);
}

UniPoly UniPoly::x(FieldRef f, std::string var) {
    return UniPoly(f, {FieldValue::zero(f), FieldValue::one(f)}, std::move(var));
}

UniPoly UniPoly::constant(const FieldValue& c, std::string var) {
    return UniPoly(c.field(), {c}, std::move(var));
}

FieldValue UniPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : FieldValue::zero(field_); }

FieldValue UniPoly::leading() const { return c_.empty() ? FieldValue::zero(field_) : c_.back(); }

bool UniPoly::is_monic() const { return !c_.empty() && c_.back().is_one(); }

UniPoly UniPoly::monic() const {
    if (c_.empty()) return *this;
    UniPoly r = *this;
    r.c_ = poly::make_monic(ValueOps{field_}, c_);
    return r;
}

UniPoly UniPoly::derivative() const {
    UniPoly r = *this;
    r.c_ = poly::derivative(ValueOps{field_}, c_);
    return r;
}

FieldValue UniPoly::operator()(const FieldValue& x) const {
    FieldValue acc = FieldValue::zero(x.field()->contains(field_) ? x.field() : field_);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

namespace {

void require_same(const UniPoly& a, const UniPoly& b) {
    if (a.field() != b.field())
        raise(ErrorKind::DescriptorMismatch,
              "polynomials over " + a.field()->describe() + " and " + b.field()->describe());
}

}  // namespace

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    require_same(a, b);
    return UniPoly(a.field_, poly::add(ValueOps{a.field_}, a.c_, b.c_), a.var_);
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    require_same(a, b);
    return UniPoly(a.field_, poly::mul(ValueOps{a.field_}, a.c_, b.c_), a.var_);
}

UniPoly operator*(const UniPoly& a, const FieldValue& c) {
    return UniPoly(a.field_, poly::scale(ValueOps{a.field_}, a.c_, c.embed_into(a.field_)), a.var_);
}

bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.field_ == b.field_ && poly::equal(ValueOps{a.field_}, a.c_, b.c_);
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    require_same(*this, d);
    if (d.is_zero()) raise(ErrorKind::DivisionByZero, "polynomial division by zero");
    auto [q, r] = poly::divmod(ValueOps{field_}, c_, d.c_);
    return {UniPoly(field_, std::move(q), var_), UniPoly(field_, std::move(r), var_)};
}

UniPoly poly_gcd(const UniPoly& f, const UniPoly& g) {
    require_same(f, g);
    if (f.is_zero() && g.is_zero()) raise(ErrorKind::Precondition, "gcd of two zero polynomials");
    return UniPoly(f.field(), poly::gcd(ValueOps{f.field()}, f.coeffs(), g.coeffs()), f.var());
}

bool is_separable(const UniPoly& p) {
    if (p.degree() < 1) raise(ErrorKind::Precondition, "separability of a constant polynomial");
    const UniPoly g = poly_gcd(p, p.derivative());
    return g.degree() == 0;
}

KPoly to_kpoly(const UniPoly& p) {
    if (!p.field()->is_finite()) raise(ErrorKind::Precondition, "to_kpoly needs a finite coefficient field");
    KPoly r;
    r.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) r.push_back(std::get<Bits>(c.payload().rep));
    return r;
}

UniPoly from_kpoly(FieldRef f, const KPoly& p, std::string var) {
    std::vector<FieldValue> c;
    c.reserve(p.size());
    for (Bits b : p) c.emplace_back(f, Elem(b));
    return UniPoly(f, std::move(c), std::move(var));
}

const char* to_string(Irreducibility r) noexcept {
    switch (r) {
        case Irreducibility::Irreducible: return "true";
        case Irreducibility::Reducible: return "false";
        case Irreducibility::Unknown: return "unknown";
    }
    return "unknown";
}

namespace {

std::vector<unsigned> prime_divisors(unsigned n) {
    std::vector<unsigned> ps;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        ps.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

}  // namespace

bool finite_irreducible(FieldRef f, const KPoly& p) {
    const FiniteOps k{f};
    if (p.size() < 2) raise(ErrorKind::Precondition, "irreducibility of a constant polynomial");
    const auto n = static_cast<unsigned>(p.size() - 1);
    if (n == 1) return true;
    const KPoly mp = poly::make_monic(k, p);
    const KPoly x{0, 1};
    const std::uint64_t d = f->bits();
    // x^(q^n) == x (mod p)
    if (!poly::equal(k, poly::frobenius_power(k, x, d * n, mp), poly::mod(k, x, mp))) return false;
    for (unsigned l : prime_divisors(n)) {
        KPoly h = poly::add(k, poly::frobenius_power(k, x, d * (n / l), mp), x);
        if (!poly::is_one(k, poly::gcd(k, h, mp))) return false;
    }
    return true;
}

std::vector<KPoly> monic_irreducibles(FieldRef f, unsigned degree) {
    if (!f->is_finite()) raise(ErrorKind::Unsupported, "enumeration needs a finite field");
    const std::uint64_t q = f->order();
    std::uint64_t count = 1;
    for (unsigned i = 0; i < degree; ++i) {
        if (count > (std::uint64_t{1} << 24) / q) raise(ErrorKind::Precondition, "enumeration too large");
        count *= q;
    }
    std::vector<KPoly> out;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        KPoly p(degree + 1, 0);
        std::uint64_t r = idx;
        for (unsigned i = 0; i < degree; ++i) {
            p[i] = r % q;
            r /= q;
        }
        p[degree] = 1;
        if (degree == 1 || finite_irreducible(f, p)) out.push_back(std::move(p));
    }
    return out;
}

}  // namespace witt2
