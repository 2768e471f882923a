#include <witt2/fields.hpp>

#include <map>
#include <memory>
#include <mutex>

namespace witt2 {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Parse: return "parse";
        case ErrorKind::Unsupported: return "unsupported";
        case ErrorKind::DescriptorMismatch: return "descriptor-mismatch";
        case ErrorKind::DivisionByZero: return "division-by-zero";
        case ErrorKind::Inseparable: return "inseparable";
        case ErrorKind::Reducible: return "reducible";
        case ErrorKind::Singular: return "singular";
        case ErrorKind::Precondition: return "precondition";
        case ErrorKind::Uncertified: return "uncertified";
        case ErrorKind::Internal: return "internal";
    }
    return "unknown";
}

struct FieldFactory {
    static std::mutex& mutex() {
        static std::mutex m;
        return m;
    }
    static std::map<std::string, std::unique_ptr<Field>>& registry() {
        static std::map<std::string, std::unique_ptr<Field>> r;
        return r;
    }

    template <class Init>
    static FieldRef intern(const std::string& text, Init&& init) {
        std::lock_guard lock(mutex());
        auto& reg = registry();
        if (auto it = reg.find(text); it != reg.end()) return it->second.get();
        std::unique_ptr<Field> f(new Field());
        f->text_ = text;
        init(*f);
        FieldRef out = f.get();
        reg.emplace(text, std::move(f));
        return out;
    }
};

bool valid_identifier(std::string_view s) {
    if (s.empty()) return false;
    auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
    if (!alpha(s[0])) return false;
    for (char c : s)
        if (!alpha(c) && !(c >= '0' && c <= '9')) return false;
    return s != "GF";
}

FieldRef gf2() {
    static const FieldRef f = FieldFactory::intern("GF(2)", [](Field& g) {
        g.kind_ = FieldKind::Prime;
        g.bits_ = 1;
        g.layer_degree_ = 1;
    });
    return f;
}

FieldRef rational_function_field(FieldRef base, const std::string& var) {
    if (!base->is_finite())
        raise(ErrorKind::Unsupported, "a transcendental layer must sit directly on a finite field");
    if (!valid_identifier(var)) raise(ErrorKind::Parse, "invalid variable name '" + var + "'");
    for (const auto& n : base->tower_names())
        if (n == var) raise(ErrorKind::Parse, "name '" + var + "' already used in the tower");
    const std::string text =
        base->is_prime() ? "GF(2)(" + var + ")" : "(" + base->describe() + ")(" + var + ")";
    return FieldFactory::intern(text, [&](Field& g) {
        g.kind_ = FieldKind::Rational;
        g.base_ = base;
        g.name_ = var;
    });
}

FieldRef adjoin_root(const UniPoly& modulus, const std::string& gen) {
    FieldRef base = modulus.field();
    if (!valid_identifier(gen)) raise(ErrorKind::Parse, "invalid generator name '" + gen + "'");
    for (const auto& n : base->tower_names())
        if (n == gen) raise(ErrorKind::Parse, "name '" + gen + "' already used in the tower");
    if (modulus.degree() < 2) raise(ErrorKind::Precondition, "layer modulus must have degree >= 2");
    if (!modulus.is_monic()) raise(ErrorKind::Precondition, "layer modulus must be monic");
    const auto n = static_cast<unsigned>(modulus.degree());

    if (base->is_finite()) {
        if (static_cast<unsigned long>(base->bits()) * n > 64)
            raise(ErrorKind::Unsupported, "finite fields are limited to GF(2^64)");
        const KPoly mk = to_kpoly(modulus);
        if (!finite_irreducible(base, mk))
            raise(ErrorKind::Reducible, "layer modulus " + modulus.with_var(gen).str() + " is reducible");
        const std::string text = base->describe() + "[" + gen + "]/(" + modulus.with_var(gen).str() + ")";
        return FieldFactory::intern(text, [&](Field& g) {
            g.kind_ = FieldKind::FiniteExt;
            g.base_ = base;
            g.name_ = gen;
            g.bits_ = base->bits() * n;
            g.layer_degree_ = n;
            g.modulus_bits_ = mk;
            for (Bits b : mk) g.modulus_.emplace_back(b);
            g.build_finite_tables();
        });
    }

    if (!is_separable(modulus))
        raise(ErrorKind::Inseparable, "layer modulus " + modulus.with_var(gen).str() + " is inseparable");
    if (is_irreducible(modulus) == Irreducibility::Reducible)
        raise(ErrorKind::Reducible, "layer modulus " + modulus.with_var(gen).str() + " is reducible");
    const std::string text = base->describe() + "[" + gen + "]/(" + modulus.with_var(gen).str() + ")";
    return FieldFactory::intern(text, [&](Field& g) {
        g.kind_ = FieldKind::AlgebraicExt;
        g.base_ = base;
        g.name_ = gen;
        g.layer_degree_ = n;
        for (const auto& c : modulus.coeffs()) g.modulus_.push_back(c.payload());
    });
}

FieldRef Field::constant_field() const noexcept {
    FieldRef f = this;
    while (!f->is_finite()) f = f->base_;
    return f;
}

FieldRef Field::rational_layer() const noexcept {
    for (FieldRef f = this; f != nullptr; f = f->base_)
        if (f->kind_ == FieldKind::Rational) return f;
    return nullptr;
}

std::uint64_t Field::order() const {
    if (!is_finite()) raise(ErrorKind::Unsupported, describe() + " is not finite");
    if (bits_ > 63) raise(ErrorKind::Unsupported, "field too large to count");
    return std::uint64_t{1} << bits_;
}

UniPoly Field::modulus_poly() const {
    std::vector<FieldValue> c;
    for (const auto& e : modulus_) c.emplace_back(base_, e);
    return UniPoly(base_, std::move(c), name_);
}

bool Field::contains(FieldRef sub) const noexcept {
    for (FieldRef f = this; f != nullptr; f = f->base_)
        if (f == sub) return true;
    return false;
}

std::vector<std::string> Field::tower_names() const {
    std::vector<std::string> names;
    for (FieldRef f = this; f != nullptr && !f->is_prime(); f = f->base_) names.insert(names.begin(), f->name_);
    return names;
}

Elem Field::zero() const {
    switch (kind_) {
        case FieldKind::Prime:
        case FieldKind::FiniteExt: return Elem(Bits{0});
        case FieldKind::Rational: return Elem(Frac{{}, {1}});
        case FieldKind::AlgebraicExt: return Elem(std::vector<Elem>{});
    }
    return {};
}

Elem Field::one() const {
    switch (kind_) {
        case FieldKind::Prime:
        case FieldKind::FiniteExt: return Elem(Bits{1});
        case FieldKind::Rational: return Elem(Frac{{1}, {1}});
        case FieldKind::AlgebraicExt: return Elem(std::vector<Elem>{base_->one()});
    }
    return {};
}

Elem Field::generator() const {
    switch (kind_) {
        case FieldKind::Prime: raise(ErrorKind::Precondition, "GF(2) has no generator");
        case FieldKind::FiniteExt: return Elem(Bits{1} << base_->bits());
        case FieldKind::Rational: return Elem(Frac{{0, 1}, {1}});
        case FieldKind::AlgebraicExt: return Elem(std::vector<Elem>{base_->zero(), base_->one()});
    }
    return {};
}

bool Field::is_zero(const Elem& a) const {
    if (const auto* b = std::get_if<Bits>(&a.rep)) return *b == 0;
    if (const auto* fr = std::get_if<Frac>(&a.rep)) return fr->num.empty();
    return std::get<std::vector<Elem>>(a.rep).empty();
}

Elem Field::add(const Elem& a, const Elem& b) const {
    switch (kind_) {
        case FieldKind::Prime:
        case FieldKind::FiniteExt: return Elem(std::get<Bits>(a.rep) ^ std::get<Bits>(b.rep));
        case FieldKind::Rational: return Elem(frac_add(std::get<Frac>(a.rep), std::get<Frac>(b.rep)));
        case FieldKind::AlgebraicExt:
            return Elem(poly::add(ElemOps{base_}, std::get<std::vector<Elem>>(a.rep), std::get<std::vector<Elem>>(b.rep)));
    }
    return {};
}

Elem Field::mul(const Elem& a, const Elem& b) const {
    switch (kind_) {
        case FieldKind::Prime:
        case FieldKind::FiniteExt: return Elem(fmul(std::get<Bits>(a.rep), std::get<Bits>(b.rep)));
        case FieldKind::Rational: return Elem(frac_mul(std::get<Frac>(a.rep), std::get<Frac>(b.rep)));
        case FieldKind::AlgebraicExt:
            return Elem(alg_reduce(
                poly::mul(ElemOps{base_}, std::get<std::vector<Elem>>(a.rep), std::get<std::vector<Elem>>(b.rep))));
    }
    return {};
}

Elem Field::sqr(const Elem& a) const {
    switch (kind_) {
        case FieldKind::Prime:
        case FieldKind::FiniteExt: {
            const Bits x = std::get<Bits>(a.rep);
            return Elem(fmul(x, x));
        }
        case FieldKind::Rational: {
            const auto& fr = std::get<Frac>(a.rep);
            const FiniteOps k{base_};
            return Elem(Frac{poly::square(k, fr.num), poly::square(k, fr.den)});
        }
        case FieldKind::AlgebraicExt:
            return Elem(alg_reduce(poly::square(ElemOps{base_}, std::get<std::vector<Elem>>(a.rep))));
    }
    return {};
}

Elem Field::inv(const Elem& a) const {
    if (is_zero(a)) raise(ErrorKind::DivisionByZero, "inverse of zero in " + describe());
    switch (kind_) {
        case FieldKind::Prime:
        case FieldKind::FiniteExt: return Elem(finv(std::get<Bits>(a.rep)));
        case FieldKind::Rational: return Elem(frac_inv(std::get<Frac>(a.rep)));
        case FieldKind::AlgebraicExt: {
            const ElemOps k{base_};
            auto bz = poly::xgcd(k, std::get<std::vector<Elem>>(a.rep), modulus_);
            if (!poly::is_one(k, bz.g))
                raise(ErrorKind::Reducible, "element is a zero divisor: modulus of " + describe() + " is reducible");
            return Elem(alg_reduce(std::move(bz.s)));
        }
    }
    return {};
}

Elem Field::embed(FieldRef from, const Elem& a) const {
    if (from == this) return a;
    if (base_ == nullptr || !base_->contains(from))
        raise(ErrorKind::DescriptorMismatch, from->describe() + " is not a subfield of " + describe());
    Elem x = base_->embed(from, a);
    switch (kind_) {
        case FieldKind::Prime:
        case FieldKind::FiniteExt: return x;
        case FieldKind::Rational: {
            const Bits b = std::get<Bits>(x.rep);
            return Elem(Frac{b == 0 ? KPoly{} : KPoly{b}, {1}});
        }
        case FieldKind::AlgebraicExt: {
            if (base_->is_zero(x)) return Elem(std::vector<Elem>{});
            return Elem(std::vector<Elem>{std::move(x)});
        }
    }
    return {};
}

bool Field::is_canonical(const Elem& a) const {
    switch (kind_) {
        case FieldKind::Prime:
        case FieldKind::FiniteExt: {
            const auto* b = std::get_if<Bits>(&a.rep);
            return b != nullptr && (bits_ == 64 || (*b >> bits_) == 0);
        }
        case FieldKind::Rational: {
            const auto* fr = std::get_if<Frac>(&a.rep);
            if (fr == nullptr || fr->den.empty() || fr->den.back() != 1) return false;
            const FiniteOps k{base_};
            for (Bits c : fr->num)
                if (!base_->is_canonical(Elem(c))) return false;
            for (Bits c : fr->den)
                if (!base_->is_canonical(Elem(c))) return false;
            if (!fr->num.empty() && fr->num.back() == 0) return false;
            if (fr->num.empty()) return fr->den == KPoly{1};
            return poly::is_one(k, poly::gcd(k, fr->num, fr->den));
        }
        case FieldKind::AlgebraicExt: {
            const auto* v = std::get_if<std::vector<Elem>>(&a.rep);
            if (v == nullptr || v->size() > layer_degree_) return false;
            if (!v->empty() && base_->is_zero(v->back())) return false;
            for (const auto& c : *v)
                if (!base_->is_canonical(c)) return false;
            return true;
        }
    }
    return false;
}

std::vector<Elem> Field::alg_reduce(std::vector<Elem> p) const {
    const ElemOps k{base_};
    if (p.size() < modulus_.size()) return p;
    return poly::mod(k, p, modulus_);
}

Elem ElemOps::zero() const { return f->zero(); }
Elem ElemOps::one() const { return f->one(); }
bool ElemOps::is_zero(const Elem& a) const { return f->is_zero(a); }
Elem ElemOps::add(const Elem& a, const Elem& b) const { return f->add(a, b); }
Elem ElemOps::mul(const Elem& a, const Elem& b) const { return f->mul(a, b); }
Elem ElemOps::inv(const Elem& a) const { return f->inv(a); }

Bits FiniteOps::mul(Bits a, Bits b) const { return f->fmul(a, b); }
Bits FiniteOps::inv(Bits a) const { return f->finv(a); }

// ---------------------------------------------------------------------------

namespace {

FieldRef common_field(FieldRef a, FieldRef b) {
    if (a == b) return a;
    if (a == nullptr || b == nullptr) raise(ErrorKind::Precondition, "operation on an uninitialised field value");
    if (a->contains(b)) return a;
    if (b->contains(a)) return b;
    raise(ErrorKind::DescriptorMismatch, "values from " + a->describe() + " and " + b->describe());
}

}  // namespace

FieldValue::FieldValue(FieldRef f, Elem e) : field_(f), elem_(std::move(e)) {}

FieldValue FieldValue::from_bits(FieldRef f, Bits b) {
    if (!f->is_finite()) raise(ErrorKind::Precondition, "from_bits needs a finite field");
    if (f->bits() < 64 && (b >> f->bits()) != 0) raise(ErrorKind::Precondition, "bit pattern out of range");
    return {f, Elem(b)};
}

bool FieldValue::is_zero() const { return field_->is_zero(elem_); }
bool FieldValue::is_one() const { return elem_ == field_->one(); }

FieldValue FieldValue::inverse() const { return {field_, field_->inv(elem_)}; }
FieldValue FieldValue::square() const { return {field_, field_->sqr(elem_)}; }

FieldValue FieldValue::embed_into(FieldRef target) const { return {target, target->embed(field_, elem_)}; }

FieldValue operator+(const FieldValue& a, const FieldValue& b) {
    FieldRef f = common_field(a.field_, b.field_);
    if (a.field_ == f && b.field_ == f) return {f, f->add(a.elem_, b.elem_)};
    return {f, f->add(f->embed(a.field_, a.elem_), f->embed(b.field_, b.elem_))};
}

FieldValue operator*(const FieldValue& a, const FieldValue& b) {
    FieldRef f = common_field(a.field_, b.field_);
    if (a.field_ == f && b.field_ == f) return {f, f->mul(a.elem_, b.elem_)};
    return {f, f->mul(f->embed(a.field_, a.elem_), f->embed(b.field_, b.elem_))};
}

FieldValue operator/(const FieldValue& a, const FieldValue& b) { return a * b.inverse(); }

bool operator==(const FieldValue& a, const FieldValue& b) {
    if (a.field_ == b.field_) return a.elem_ == b.elem_;
    FieldRef f = common_field(a.field_, b.field_);
    return f->embed(a.field_, a.elem_) == f->embed(b.field_, b.elem_);
}

}  // namespace witt2
