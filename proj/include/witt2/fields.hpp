#pragma once

// Exact arithmetic in characteristic-two field towers:
//
//   GF(2) [finite algebraic layers]* [ (t) [algebraic layers]* ]
//
// Finite layers are packed into a single 64-bit word in the tower's monomial
// basis, so a GF(2^D) element with D <= 64 is one machine word. The optional
// transcendental layer holds reduced fractions of polynomials over the finite
// part. Algebraic layers above the transcendental one exist so that forms can
// be extended to finite extensions of a function field.
//
// Field descriptors are interned and never destroyed: a FieldRef stays valid
// for the lifetime of the process and two descriptors are equal exactly when
// their pointers are.

#include <witt2/error.hpp>
#include <witt2/poly_arith.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace witt2 {

class Field;
using FieldRef = const Field*;

using Bits = std::uint64_t;
using KPoly = std::vector<Bits>;  // polynomial over a finite field, packed coefficients

struct Frac;
struct Elem;

struct Frac {
    KPoly num;  // reduced, trimmed
    KPoly den;  // monic, nonzero, coprime to num

    friend bool operator==(const Frac&, const Frac&) = default;
};

// Untyped payload of a field element; meaningful only together with its Field.
struct Elem {
    std::variant<Bits, Frac, std::vector<Elem>> rep;

    Elem() : rep(Bits{0}) {}
    Elem(Bits b) : rep(b) {}  // NOLINT(google-explicit-constructor)
    explicit Elem(Frac f) : rep(std::move(f)) {}
    explicit Elem(std::vector<Elem> v) : rep(std::move(v)) {}

    friend bool operator==(const Elem&, const Elem&) = default;
};

enum class FieldKind {
    Prime,         // GF(2)
    FiniteExt,     // finite layer over a finite field
    Rational,      // K(t), K finite
    AlgebraicExt,  // algebraic layer over a field containing the transcendental
};

// Arithmetic callbacks over packed finite-field words, for poly:: algorithms.
struct FiniteOps {
    using value_type = Bits;
    FieldRef f;
    Bits zero() const { return 0; }
    Bits one() const { return 1; }
    bool is_zero(Bits a) const { return a == 0; }
    bool equal(Bits a, Bits b) const { return a == b; }
    Bits add(Bits a, Bits b) const { return a ^ b; }
    Bits mul(Bits a, Bits b) const;
    Bits inv(Bits a) const;
};

// Arithmetic callbacks over untyped payloads.
struct ElemOps {
    using value_type = Elem;
    FieldRef f;
    Elem zero() const;
    Elem one() const;
    bool is_zero(const Elem& a) const;
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    Elem add(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inv(const Elem& a) const;
};

class UniPoly;

class Field {
public:
    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    FieldKind kind() const noexcept { return kind_; }
    FieldRef base() const noexcept { return base_; }
    const std::string& generator_name() const noexcept { return name_; }
    const std::string& describe() const noexcept { return text_; }

    bool is_finite() const noexcept { return kind_ == FieldKind::Prime || kind_ == FieldKind::FiniteExt; }
    bool is_prime() const noexcept { return kind_ == FieldKind::Prime; }

    // Number of bits of a finite field (its degree over GF(2)).
    unsigned bits() const noexcept { return bits_; }
    // Degree of this layer over base(); 0 for the transcendental layer.
    unsigned layer_degree() const noexcept { return layer_degree_; }
    // The finite field of constants: the largest finite layer in the tower.
    FieldRef constant_field() const noexcept;
    // The transcendental layer, if there is one at or below this layer.
    FieldRef rational_layer() const noexcept;
    // Number of elements of a finite field (bits() <= 63).
    std::uint64_t order() const;

    // Layer modulus as a polynomial over base(), monic, degree layer_degree().
    const std::vector<Elem>& modulus() const noexcept { return modulus_; }
    UniPoly modulus_poly() const;

    // True if `sub` is this field or one of the layers below it.
    bool contains(FieldRef sub) const noexcept;
    // Generator names of the whole tower, bottom first (excludes GF(2)).
    std::vector<std::string> tower_names() const;

    Elem zero() const;
    Elem one() const;
    Elem generator() const;  // class of the layer variable
    bool is_zero(const Elem& a) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem sqr(const Elem& a) const;
    Elem inv(const Elem& a) const;
    // Lift an element of a layer below (or of this layer) into this field.
    Elem embed(FieldRef from, const Elem& a) const;
    // Payload validity check used when constructing values from raw data.
    bool is_canonical(const Elem& a) const;

    // Finite fields only.
    Bits fmul(Bits a, Bits b) const;
    Bits finv(Bits a) const;
    Bits fsqrt(Bits a) const;  // inverse Frobenius
    unsigned abs_trace(Bits a) const;
    // Coefficients of a packed element over base(), length layer_degree().
    std::vector<Bits> split(Bits a) const;
    Bits pack(const std::vector<Bits>& coeffs) const;

    // Rational layer only.
    Frac make_frac(KPoly num, KPoly den) const;

private:
    friend struct FieldFactory;
    friend FieldRef gf2();
    friend FieldRef rational_function_field(FieldRef base, const std::string& var);
    friend FieldRef adjoin_root(const UniPoly& modulus, const std::string& gen);
    Field() = default;

    void build_finite_tables();
    Bits slow_mul(Bits a, Bits b) const;
    Bits fpow(Bits a, std::uint64_t e) const;

    Frac frac_add(const Frac& a, const Frac& b) const;
    Frac frac_mul(const Frac& a, const Frac& b) const;
    Frac frac_inv(const Frac& a) const;

    std::vector<Elem> alg_reduce(std::vector<Elem> p) const;

    FieldKind kind_ = FieldKind::Prime;
    FieldRef base_ = nullptr;
    std::string name_;
    std::string text_;
    unsigned bits_ = 0;
    unsigned layer_degree_ = 0;
    std::vector<Elem> modulus_;
    std::vector<Bits> modulus_bits_;  // finite layers: modulus over the finite base
    std::vector<std::uint32_t> log_, exp_;  // finite fields with bits() <= 16
};

// Interned constructors.
FieldRef gf2();
FieldRef rational_function_field(FieldRef base, const std::string& var);
// Adjoin a root of `modulus` (monic, degree >= 2, separable, not reducible).
FieldRef adjoin_root(const UniPoly& modulus, const std::string& gen);
// Parse the descriptor grammar; raises Parse / Unsupported / Reducible.
FieldRef parse_field(std::string_view text);

bool valid_identifier(std::string_view s);

class FieldValue {
public:
    FieldValue() = default;
    FieldValue(FieldRef f, Elem e);

    static FieldValue zero(FieldRef f) { return {f, f->zero()}; }
    static FieldValue one(FieldRef f) { return {f, f->one()}; }
    static FieldValue generator(FieldRef f) { return {f, f->generator()}; }
    static FieldValue from_int(FieldRef f, long long n) { return (n & 1) ? one(f) : zero(f); }
    static FieldValue from_bits(FieldRef f, Bits b);

    FieldRef field() const noexcept { return field_; }
    const Elem& payload() const noexcept { return elem_; }
    bool valid() const noexcept { return field_ != nullptr; }

    bool is_zero() const;
    bool is_one() const;

    FieldValue inverse() const;
    FieldValue square() const;
    // Move into a larger field of the same tower.
    FieldValue embed_into(FieldRef target) const;

    // Printing in the element grammar; parse_element(f, v.str()) == v.
    std::string str() const;

    friend FieldValue operator+(const FieldValue& a, const FieldValue& b);
    friend FieldValue operator-(const FieldValue& a, const FieldValue& b) { return a + b; }
    friend FieldValue operator*(const FieldValue& a, const FieldValue& b);
    friend FieldValue operator/(const FieldValue& a, const FieldValue& b);
    FieldValue operator-() const { return *this; }
    FieldValue& operator+=(const FieldValue& o) { return *this = *this + o; }
    FieldValue& operator*=(const FieldValue& o) { return *this = *this * o; }
    friend bool operator==(const FieldValue& a, const FieldValue& b);

private:
    FieldRef field_ = nullptr;
    Elem elem_;
};

struct ValueOps {
    using value_type = FieldValue;
    FieldRef f;
    FieldValue zero() const { return FieldValue::zero(f); }
    FieldValue one() const { return FieldValue::one(f); }
    bool is_zero(const FieldValue& a) const { return a.is_zero(); }
    bool equal(const FieldValue& a, const FieldValue& b) const { return a == b; }
    FieldValue add(const FieldValue& a, const FieldValue& b) const { return a + b; }
    FieldValue mul(const FieldValue& a, const FieldValue& b) const { return a * b; }
    FieldValue inv(const FieldValue& a) const { return a.inverse(); }
};

// Dense univariate polynomial over a described field.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(FieldRef f, std::string var = "x") : field_(f), var_(std::move(var)) {}
    UniPoly(FieldRef f, std::vector<FieldValue> coeffs, std::string var = "x");

    static UniPoly x(FieldRef f, std::string var = "x");
    static UniPoly constant(const FieldValue& c, std::string var = "x");

    FieldRef field() const noexcept { return field_; }
    const std::string& var() const noexcept { return var_; }
    UniPoly with_var(std::string v) const { UniPoly r = *this; r.var_ = std::move(v); return r; }

    const std::vector<FieldValue>& coeffs() const noexcept { return c_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    FieldValue coeff(std::size_t i) const;
    FieldValue leading() const;
    bool is_monic() const;

    UniPoly monic() const;
    UniPoly derivative() const;
    FieldValue operator()(const FieldValue& x) const;

    std::string str() const;

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const FieldValue& c);
    friend bool operator==(const UniPoly& a, const UniPoly& b);

    // Quotient and remainder; raises DivisionByZero for a zero divisor.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;

private:
    FieldRef field_ = nullptr;
    std::vector<FieldValue> c_;
    std::string var_ = "x";
};

UniPoly poly_gcd(const UniPoly& f, const UniPoly& g);
bool is_separable(const UniPoly& p);

enum class Irreducibility { Irreducible, Reducible, Unknown };
const char* to_string(Irreducibility r) noexcept;
Irreducibility is_irreducible(const UniPoly& p);

// Exact test for a monic polynomial over a finite field (Rabin's criterion).
bool finite_irreducible(FieldRef f, const KPoly& p);

// Monic irreducible polynomials over a finite field of the given degree, in
// lexicographic order of their coefficient vectors (highest coefficient first).
std::vector<KPoly> monic_irreducibles(FieldRef f, unsigned degree);

KPoly to_kpoly(const UniPoly& p);  // finite fields only
UniPoly from_kpoly(FieldRef f, const KPoly& p, std::string var = "x");

// Element / polynomial grammar.
FieldValue parse_element(FieldRef f, std::string_view text);
// Parses a polynomial over f in a single variable not used by the tower. When
// `var` is empty the variable is taken from the text (default "x").
UniPoly parse_poly(FieldRef f, std::string_view text, const std::string& var = "");

// Printing helpers shared by the field layers.
namespace format {
bool is_atomic(const std::string& s);
std::string term(const std::string& coeff, const std::string& var, std::size_t power);
std::string sum(const std::vector<std::string>& terms_high_first);
std::string kpoly(FieldRef k, const KPoly& p, const std::string& var);
}  // namespace format

}  // namespace witt2
