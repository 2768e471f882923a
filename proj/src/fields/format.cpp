#include <witt2/fields.hpp>

namespace witt2 {

namespace format {

bool is_atomic(const std::string& s) {
    return s.find('+') == std::string::npos && s.find('/') == std::string::npos;
}

std::string term(const std::string& coeff, const std::string& var, std::size_t power) {
    if (power == 0) return coeff;
    std::string mono = var;
    if (power > 1) mono += "^" + std::to_string(power);
    if (coeff == "1") return mono;
    if (is_atomic(coeff)) return coeff + "*" + mono;
    return "(" + coeff + ")*" + mono;
}

std::string sum(const std::vector<std::string>& terms_high_first) {
    if (terms_high_first.empty()) return "0";
    std::string s;
    for (const auto& t : terms_high_first) {
        if (!s.empty()) s += "+";
        s += t;
    }
    return s;
}

std::string kpoly(FieldRef k, const KPoly& p, const std::string& var) {
    std::vector<std::string> terms;
    for (std::size_t i = p.size(); i-- > 0;)
        if (p[i] != 0) terms.push_back(term(FieldValue(k, Elem(p[i])).str(), var, i));
    return sum(terms);
}

}  // namespace format

std::string FieldValue::str() const {
    if (field_ == nullptr) return "<invalid>";
    const Field& f = *field_;
    switch (f.kind()) {
        case FieldKind::Prime: return std::get<Bits>(elem_.rep) ? "1" : "0";
        case FieldKind::FiniteExt: {
            const auto c = f.split(std::get<Bits>(elem_.rep));
            std::vector<std::string> terms;
            for (std::size_t i = c.size(); i-- > 0;)
                if (c[i] != 0) terms.push_back(format::term(FieldValue(f.base(), Elem(c[i])).str(), f.generator_name(), i));
            return format::sum(terms);
        }
        case FieldKind::Rational: {
            const auto& fr = std::get<Frac>(elem_.rep);
            std::string num = format::kpoly(f.base(), fr.num, f.generator_name());
            if (fr.den == KPoly{1}) return num;
            std::string den = format::kpoly(f.base(), fr.den, f.generator_name());
            if (!format::is_atomic(num)) num = "(" + num + ")";
            if (!format::is_atomic(den) || den.find('*') != std::string::npos) den = "(" + den + ")";
            return num + "/" + den;
        }
        case FieldKind::AlgebraicExt: {
            const auto& v = std::get<std::vector<Elem>>(elem_.rep);
            std::vector<std::string> terms;
            for (std::size_t i = v.size(); i-- > 0;)
                if (!f.base()->is_zero(v[i]))
                    terms.push_back(format::term(FieldValue(f.base(), v[i]).str(), f.generator_name(), i));
            return format::sum(terms);
        }
    }
    return "?";
}

std::string UniPoly::str() const {
    std::vector<std::string> terms;
    for (std::size_t i = c_.size(); i-- > 0;)
        if (!c_[i].is_zero()) terms.push_back(format::term(c_[i].str(), var_, i));
    return format::sum(terms);
}

}  // namespace witt2
