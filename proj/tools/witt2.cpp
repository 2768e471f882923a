// witt2: command-line front end for second trace forms and Witt classes in
// characteristic two.

#include <witt2/algebraicity.hpp>
#include <witt2/artinschreier.hpp>
#include <witt2/random.hpp>
#include <witt2/zerocount.hpp>

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>

using namespace witt2;
using json = nlohmann::ordered_json;

namespace {

enum class Mode { Machine, Json, Human };

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitReducible = 4;
constexpr int kExitUnknown = 5;

int exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::Parse:
        case ErrorKind::DescriptorMismatch:
        case ErrorKind::DivisionByZero:
        case ErrorKind::Singular:
        case ErrorKind::Precondition: return kExitParse;
        case ErrorKind::Unsupported: return kExitUnsupported;
        case ErrorKind::Inseparable:
        case ErrorKind::Reducible: return kExitReducible;
        case ErrorKind::Uncertified: return kExitUnknown;
        case ErrorKind::Internal: return kExitFail;
    }
    return kExitFail;
}

// Collects key/value output. Machine and human mode print as they go, so
// enumerate streams; JSON mode prints one object at the end.
class Out {
public:
    explicit Out(Mode m) : mode_(m) {}

    void kv(const std::string& k, const std::string& v) { put(k, v); }
    void kv(const std::string& k, const char* v) { put(k, std::string(v)); }
    void kv(const std::string& k, bool v) { put(k, v); }
    void kv(const std::string& k, std::size_t v) { put(k, v); }

    void form(const std::string& k, const QuadSpace& q) {
        put(k, q.str());
        if (mode_ != Mode::Human) return;
        std::cout << "  Q =\n" << matrix_text(q, false) << "  B = Q + Q^T =\n" << matrix_text(q, true);
    }

    void record(const json& r) {
        if (mode_ == Mode::Json) {
            root_["records"].push_back(r);
            return;
        }
        std::string line;
        for (const auto& [k, v] : r.items()) {
            if (!line.empty()) line += mode_ == Mode::Human ? "  " : " ";
            line += k + "=" + text(v);
        }
        std::cout << line << '\n' << std::flush;
    }

    void finish() {
        if (mode_ == Mode::Json) std::cout << root_.dump() << '\n';
    }

private:
    static std::string text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

    void put(const std::string& k, const json& v) {
        switch (mode_) {
            case Mode::Json: root_[k] = v; break;
            case Mode::Machine: std::cout << k << '=' << text(v) << '\n'; break;
            case Mode::Human: std::cout << k << ": " << text(v) << '\n'; break;
        }
    }

    static std::string matrix_text(const QuadSpace& q, bool polar) {
        const std::size_t n = q.dim();
        std::vector<std::vector<std::string>> cells(n, std::vector<std::string>(n));
        std::size_t w = 1;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                FieldValue v = i <= j ? q.Q[i][j] : FieldValue::zero(q.field);
                if (polar) v = i == j ? FieldValue::zero(q.field) : (i < j ? q.Q[i][j] : q.Q[j][i]);
                cells[i][j] = v.str();
                w = std::max(w, cells[i][j].size());
            }
        std::ostringstream os;
        for (const auto& row : cells) {
            os << "    ";
            for (const auto& c : row) os << std::string(w - c.size() + 1, ' ') << c;
            os << '\n';
        }
        return os.str();
    }

    Mode mode_;
    json root_ = json::object();
};

// Binary residues as [a,b]; larger anisotropic residues as their coefficient rows.
std::string residue_text(const WittReport& r) {
    if (r.residue) return r.residue->str();
    return r.residue_space ? r.residue_space->str() : "none";
}

void witt_keys(Out& out, const WittReport& r) {
    out.kv("dim", r.dim);
    out.kv("witt_index", r.witt_index);
    out.kv("hyperbolic", r.hyperbolic);
    out.kv("certified", r.certified);
    out.kv("residue", residue_text(r));
    if (r.arf) out.kv("arf", r.arf->str());
    if (!r.anisotropy.empty()) out.kv("anisotropy", r.anisotropy);
    if (!r.note.empty()) out.kv("note", r.note);
}

void audit_pairs(Out& out, const std::string& prefix, const std::vector<SymplecticPair>& ps) {
    for (std::size_t i = 0; i < ps.size(); ++i) {
        out.kv(prefix + std::to_string(i + 1) + ".e", vec_str(ps[i].e));
        out.kv(prefix + std::to_string(i + 1) + ".f", vec_str(ps[i].f));
    }
}

void audit_elements(Out& out, const std::string& prefix, const ExtensionAlgebra& E,
                    const std::vector<std::pair<AlgebraElement, AlgebraElement>>& ps) {
    for (std::size_t i = 0; i < ps.size(); ++i) {
        out.kv(prefix + std::to_string(i + 1) + ".e", E.str(ps[i].first));
        out.kv(prefix + std::to_string(i + 1) + ".f", E.str(ps[i].second));
    }
}

ExtensionAlgebra load_extension(FieldRef F, const std::string& text) {
    return ExtensionAlgebra(parse_poly(F, text), false);
}

struct Options {
    Mode mode = Mode::Machine;
    std::string field = "GF(2)";
    std::string ext, form, elem, a;
    unsigned n = 0;
    unsigned theorem = 0;
    unsigned max_degree = 5;
    unsigned threads = 0;
    bool bm = false;
    bool audit = false;
    std::uint64_t seed = 1;
    unsigned trials = 200;
};

int cmd_trace_form(const Options& o, Out& out) {
    FieldRef F = parse_field(o.field);
    const ExtensionAlgebra E = load_extension(F, o.ext);
    out.kv("command", "trace-form");
    out.kv("field", F->describe());
    out.kv("ext", E.modulus().str());
    out.kv("degree", E.degree());
    out.kv("irreducible", to_string(E.irreducibility()));
    out.kv("form", o.bm ? "bm" : "revoy");
    const QuadSpace q = o.bm ? bm_form(E) : second_trace_form(E);
    out.form("Q", q);
    const WittReport r = witt_decompose(q);
    witt_keys(out, r);
    const TraceNormalForm tnf = trace_normal_form(E);
    out.kv("tnf_a", tnf.a_sum.str());
    out.kv("tnf_witt_index", tnf.report.witt_index);
    out.kv("tnf_residue", residue_text(tnf.report));
    if (o.audit) {
        audit_pairs(out, "audit.hyperbolic", r.hyperbolic_pairs);
        audit_pairs(out, "audit.residue", r.residue_basis);
        audit_elements(out, "audit.tnf", E, tnf.basis);
        if (pmember_supported(F)) {
            const PMembership pm = pmember(tnf.a_sum);
            if (pm.certificate) out.kv("audit.certificate", pm.certificate->str());
        }
    }
    return kExitOk;
}

int cmd_is_2algebraic(const Options& o, Out& out) {
    FieldRef F = parse_field(o.field);
    const QuadSpace q = parse_form(F, o.form);
    out.kv("command", "is-2algebraic");
    out.kv("field", F->describe());
    out.form("form", q);
    const AlgebraicityAnswer ans = is_2algebraic(q);
    witt_keys(out, ans.report);
    out.kv("answer", to_string(ans.answer));
    out.kv("witness", ans.witness ? ans.witness->str() : "none");
    out.kv("reason", ans.reason);
    return ans.answer == Answer::Unknown ? kExitUnknown : kExitOk;
}

int cmd_pmember(const Options& o, Out& out) {
    FieldRef F = parse_field(o.field);
    const FieldValue b = parse_element(F, o.elem);
    if (!pmember_supported(F)) raise(ErrorKind::Unsupported, "P-membership is not decided over " + F->describe());
    const PMembership pm = pmember(b);
    out.kv("command", "pmember");
    out.kv("field", F->describe());
    out.kv("elem", b.str());
    out.kv("member", pm.member);
    if (pm.certificate) out.kv("certificate", pm.certificate->str());
    out.kv("reduced", pm.reduced_form.str());
    out.kv("shift", pm.shift.str());
    return kExitOk;
}

// Checks 1 (Revoy vs BM) and 2 (normal form) run on --ext or on the corpus up to --max-degree.
int verify_corpus_theorem(const Options& o, Out& out, FieldRef F) {
    const auto check = [&](const ExtensionAlgebra& E, std::string* why) {
        return o.theorem == 1 ? verify_revoy_bm(E, why) : verify_normal_form(E, why);
    };
    std::size_t count = 0, failures = 0;
    const auto run = [&](const ExtensionAlgebra& E) {
        std::string why;
        const bool ok = check(E, &why);
        json rec = {{"modulus", E.modulus().str()}, {"result", ok ? "PASS" : "FAIL"}};
        if (!ok) rec["detail"] = why;
        out.record(rec);
        ++count;
        if (!ok) ++failures;
    };
    if (!o.ext.empty()) {
        run(load_extension(F, o.ext));
    } else {
        enumerate_corpus(F, o.max_degree, o.threads, [&](const CorpusEntry& c) {
            if (o.theorem == 1 && c.modulus.degree() % 2 == 0) return;
            run(ExtensionAlgebra(c.modulus));
        });
    }
    out.kv("instances", count);
    out.kv("failures", failures);
    out.kv("result", failures == 0 ? "PASS" : "FAIL");
    return failures == 0 ? kExitOk : kExitFail;
}

int verify_witness(const Options& o, Out& out, const HyperbolicWitness& w) {
    const WittReport r = witt_decompose(second_trace_form(w.E));
    const bool ok = r.certified && r.hyperbolic && r.witt_index == w.witt_index;
    out.kv("ext", w.E.modulus().str());
    out.kv("dim", r.dim);
    out.kv("witt_index", r.witt_index);
    out.kv("hyperbolic", r.hyperbolic);
    out.kv("certified", r.certified);
    if (o.audit) audit_elements(out, "audit.pair", w.E, w.pairs);
    out.kv("result", ok ? "PASS" : "FAIL");
    return ok ? kExitOk : kExitFail;
}

int cmd_verify(const Options& o, Out& out) {
    FieldRef F = parse_field(o.field);
    out.kv("command", "verify");
    out.kv("theorem", std::size_t{o.theorem});
    out.kv("field", F->describe());
    switch (o.theorem) {
        case 1:
        case 2: return verify_corpus_theorem(o, out, F);
        case 3: return verify_witness(o, out, witness_hyperbolic_quartic(F));
        case 4: {
            if (o.a.empty() || o.n == 0) raise(ErrorKind::Parse, "--theorem 4 needs --a and --n");
            return verify_witness(o, out, witness_hyperbolic_radical(F, parse_element(F, o.a), o.n));
        }
        default: raise(ErrorKind::Parse, "--theorem must be 1, 2, 3 or 4");
    }
}

int cmd_enumerate(const Options& o, Out& out) {
    FieldRef F = parse_field(o.field);
    out.kv("command", "enumerate");
    out.kv("field", F->describe());
    out.kv("max_degree", std::size_t{o.max_degree});
    std::size_t count = 0, disagreements = 0;
    enumerate_corpus(F, o.max_degree, o.threads, [&](const CorpusEntry& c) {
        const WittReport& r = c.tnf.report;
        json rec = {{"modulus", c.modulus.str()},
                    {"degree", c.modulus.degree()},
                    {"dim", r.dim},
                    {"witt_index", r.witt_index},
                    {"residue", residue_text(r)},
                    {"tnf_a", c.tnf.a_sum.str()},
                    {"hyperbolic", r.hyperbolic}};
        const QuadSpace q = second_trace_form(ExtensionAlgebra(c.modulus));
        if (q.dim() * F->bits() <= 24) {
            const bool by_count = oracle::zero_count_hyperbolic(q);
            rec["oracle"] = by_count == r.hyperbolic ? "agree" : "disagree";
            if (by_count != r.hyperbolic) ++disagreements;
        }
        out.record(rec);
        ++count;
    });
    out.kv("count", count);
    out.kv("disagreements", disagreements);
    return disagreements == 0 ? kExitOk : kExitFail;
}

// Randomised identities over a few fixture fields; --seed makes runs repeatable.
int cmd_selfcheck(const Options& o, Out& out) {
    std::mt19937_64 rng(o.seed);
    std::size_t checks = 0, failures = 0;
    const auto expect = [&](bool ok) {
        ++checks;
        if (!ok) ++failures;
    };
    for (const char* desc : {"GF(2)", "GF(2)[a]/(a^2+a+1)", "GF(2)(t)"}) {
        FieldRef F = parse_field(desc);
        for (unsigned i = 0; i < o.trials; ++i) {
            const FieldValue x = random_element(F, rng), y = random_element(F, rng);
            expect(parse_element(F, x.str()) == x);
            expect((x + y) * y == x * y + y * y);
            const PMembership pm = pmember(x);
            expect(pclass_equal(x, pm.reduced_form));
            if (pm.certificate) expect(pm.certificate->square() + *pm.certificate == x);
        }
    }
    const ExtensionAlgebra E = load_extension(parse_field("GF(2)[a]/(a^2+a+1)"), "x^3+x+a");
    std::uniform_int_distribution<int> bit(0, 3);
    const auto rand_elem = [&] {
        Vec v;
        for (std::size_t i = 0; i < E.degree(); ++i) v.push_back(FieldValue::from_bits(E.base(), static_cast<Bits>(bit(rng))));
        return E.element(v);
    };
    for (unsigned i = 0; i < o.trials; ++i) {
        const AlgebraElement x = rand_elem(), y = rand_elem();
        expect(second_trace(E, E.add(x, y)) == second_trace(E, x) + second_trace(E, y) + trace_polar(E, x, y));
        expect(trace(E, E.mul(x, y)) == trace(E, E.mul(y, x)));
    }
    out.kv("command", "selfcheck");
    out.kv("seed", std::to_string(o.seed));
    out.kv("checks", checks);
    out.kv("failures", failures);
    out.kv("result", failures == 0 ? "PASS" : "FAIL");
    return failures == 0 ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    bool as_json = false, human = false;
    CLI::App app{"Second trace forms and Witt classes of quadratic forms in characteristic two"};
    app.require_subcommand(1);
    app.add_flag("--json", as_json, "print one JSON object");
    app.add_flag("--human", human, "readable output, with Q and B = Q + Q^T for forms");

    auto* tf = app.add_subcommand("trace-form", "second trace form of F[x]/(p)");
    tf->add_option("--field", o.field, "field descriptor")->required();
    tf->add_option("--ext", o.ext, "monic separable polynomial")->required();
    tf->add_flag("--bm", o.bm, "use the form on E x F for odd degree");
    tf->add_flag("--audit", o.audit, "dump symplectic bases and certificates");

    auto* alg = app.add_subcommand("is-2algebraic", "is the form Witt equivalent to a second trace form?");
    alg->add_option("--field", o.field, "field descriptor")->required();
    alg->add_option("--form", o.form, "upper-triangular coefficients, rows separated by ';'")->required();

    auto* pm = app.add_subcommand("pmember", "is c^2 + c = b solvable?");
    pm->add_option("--field", o.field, "field descriptor")->required();
    pm->add_option("--elem", o.elem, "element b")->required();

    auto* ver = app.add_subcommand("verify", "check trace form results on instances");
    ver->add_option("--theorem", o.theorem, "1: Revoy ~ BM, 2: normal form, 3: quartic witness, 4: radical witness")->required();
    ver->add_option("--field", o.field, "field descriptor");
    ver->add_option("--ext", o.ext, "single instance (checks 1, 2)");
    ver->add_option("--max-degree", o.max_degree, "corpus bound when --ext is absent");
    ver->add_option("--threads", o.threads, "corpus workers (0: all cores)");
    ver->add_option("--a", o.a, "radical constant (check 4)");
    ver->add_option("--n", o.n, "odd radical degree (check 4)");
    ver->add_flag("--audit", o.audit, "dump the witness basis");

    auto* en = app.add_subcommand("enumerate", "trace forms of all monic irreducibles up to a degree");
    en->add_option("--field", o.field, "finite field descriptor")->required();
    en->add_option("--max-degree", o.max_degree, "degree bound")->required();
    en->add_option("--threads", o.threads, "workers (0: all cores)");

    auto* sc = app.add_subcommand("selfcheck", "");
    sc->group("");
    sc->add_option("--seed", o.seed);
    sc->add_option("--trials", o.trials);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }
    o.mode = as_json ? Mode::Json : (human ? Mode::Human : Mode::Machine);

    Out out(o.mode);
    int code = kExitOk;
    try {
        if (tf->parsed()) code = cmd_trace_form(o, out);
        else if (alg->parsed()) code = cmd_is_2algebraic(o, out);
        else if (pm->parsed()) code = cmd_pmember(o, out);
        else if (ver->parsed()) code = cmd_verify(o, out);
        else if (en->parsed()) code = cmd_enumerate(o, out);
        else if (sc->parsed()) code = cmd_selfcheck(o, out);
    } catch (const Error& e) {
        std::cout << std::flush;
        std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cout << std::flush;
        std::cerr << "error: " << e.what() << '\n';
        return kExitFail;
    }
    out.finish();
    return code;
}
