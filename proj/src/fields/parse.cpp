#include <witt2/fields.hpp>

#include <cctype>

namespace witt2 {

namespace {

// Recursive-descent evaluator for the element / polynomial grammar:
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-'? power
//   power  := atom ('^' integer)?
//   atom   := integer | identifier | '(' expr ')'
//
// Identifiers name either a generator of the field tower (evaluated as that
// field element) or the single polynomial variable. Division is only by
// nonzero constants.
class ExprParser {
public:
    ExprParser(FieldRef f, std::string_view text, std::string var, bool allow_var)
        : f_(f), s_(text), var_(std::move(var)), allow_var_(allow_var), names_(f->tower_names()) {}

    UniPoly parse() {
        UniPoly r = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return r.with_var(var_.empty() ? "x" : var_);
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        raise(ErrorKind::Parse, "cannot parse '" + std::string(s_) + "' at offset " + std::to_string(pos_) + ": " + msg);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    UniPoly expr() {
        UniPoly acc = term();
        while (true) {
            if (accept('+') || accept('-')) {
                acc = acc + term();
                continue;
            }
            return acc;
        }
    }

    UniPoly term() {
        UniPoly acc = unary();
        while (true) {
            if (accept('*')) {
                acc = acc * unary();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                UniPoly d = unary();
                if (d.degree() != 0) {
                    pos_ = at;
                    fail(d.is_zero() ? "division by zero" : "division by a non-constant");
                }
                acc = acc * d.coeff(0).inverse();
            } else {
                return acc;
            }
        }
    }

    UniPoly unary() {
        accept('-');
        return power();
    }

    UniPoly power() {
        UniPoly base = atom();
        if (!accept('^')) return base;
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an exponent");
        if (pos_ - start > 6) fail("exponent too large");
        const unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
        UniPoly acc = one();
        UniPoly b = base;
        for (unsigned long k = e; k != 0; k >>= 1U) {
            if (k & 1U) acc = acc * b;
            if (k > 1) b = b * b;
        }
        return acc;
    }

    UniPoly atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            UniPoly r = expr();
            if (!accept(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            unsigned parity = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) parity = (s_[pos_++] - '0') & 1U;
            return parity ? one() : UniPoly(f_);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            const std::string id(s_.substr(start, pos_ - start));
            return identifier(id, start);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    UniPoly one() const { return UniPoly::constant(FieldValue::one(f_)); }

    UniPoly identifier(const std::string& id, std::size_t at) {
        for (FieldRef g = f_; g != nullptr && !g->is_prime(); g = g->base())
            if (g->generator_name() == id) return UniPoly::constant(FieldValue::generator(g).embed_into(f_));
        if (allow_var_) {
            if (var_.empty()) var_ = id;
            if (id == var_) return UniPoly::x(f_);
        }
        pos_ = at;
        fail("unknown identifier '" + id + "'");
    }

    FieldRef f_;
    std::string_view s_;
    std::size_t pos_ = 0;
    std::string var_;
    bool allow_var_;
    std::vector<std::string> names_;
};

std::size_t matching_paren(std::string_view s, std::size_t open) {
    int depth = 0;
    for (std::size_t i = open; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')' && --depth == 0) return i;
    }
    raise(ErrorKind::Parse, "unbalanced parentheses in '" + std::string(s) + "'");
}

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string read_ident(std::string_view s) {
    s = strip(s);
    if (!valid_identifier(s)) raise(ErrorKind::Parse, "invalid identifier '" + std::string(s) + "'");
    return std::string(s);
}

}  // namespace

FieldValue parse_element(FieldRef f, std::string_view text) {
    UniPoly p = ExprParser(f, text, "", false).parse();
    return p.coeff(0);
}

UniPoly parse_poly(FieldRef f, std::string_view text, const std::string& var) {
    return ExprParser(f, text, var, true).parse();
}

FieldRef parse_field(std::string_view text) {
    std::string_view s = strip(text);
    std::size_t pos = 0;
    FieldRef f = nullptr;
    if (s.substr(0, 5) == "GF(2)") {
        f = gf2();
        pos = 5;
    } else if (!s.empty() && s[0] == '(') {
        const std::size_t close = matching_paren(s, 0);
        f = parse_field(s.substr(1, close - 1));
        pos = close + 1;
    } else {
        raise(ErrorKind::Parse, "field descriptor must start with GF(2): '" + std::string(text) + "'");
    }
    while (true) {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == s.size()) return f;
        if (s[pos] == '[') {
            const std::size_t close = s.find(']', pos);
            if (close == std::string_view::npos) raise(ErrorKind::Parse, "missing ']' in '" + std::string(text) + "'");
            const std::string gen = read_ident(s.substr(pos + 1, close - pos - 1));
            pos = close + 1;
            while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos >= s.size() || s[pos] != '/') raise(ErrorKind::Parse, "expected '/' after [" + gen + "]");
            ++pos;
            while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos >= s.size() || s[pos] != '(') raise(ErrorKind::Parse, "expected '(' before the modulus of " + gen);
            const std::size_t pclose = matching_paren(s, pos);
            for (const auto& n : f->tower_names())
                if (n == gen) raise(ErrorKind::Parse, "name '" + gen + "' already used in the tower");
            const UniPoly m = parse_poly(f, s.substr(pos + 1, pclose - pos - 1), gen);
            f = adjoin_root(m, gen);
            pos = pclose + 1;
        } else if (s[pos] == '(') {
            const std::size_t close = matching_paren(s, pos);
            const std::string var = read_ident(s.substr(pos + 1, close - pos - 1));
            if (f->rational_layer() != nullptr) raise(ErrorKind::Unsupported, "at most one transcendental layer is supported");
            f = rational_function_field(f, var);
            pos = close + 1;
        } else {
            raise(ErrorKind::Parse, "unexpected '" + std::string(1, s[pos]) + "' in field descriptor");
        }
    }
}

}  // namespace witt2
