#include <witt2/algebraicity.hpp>
#include <witt2/artinschreier.hpp>

#include <atomic>
#include <condition_variable>
#include <mutex>
#include <thread>

namespace witt2 {

const char* to_string(Answer a) noexcept {
    switch (a) {
        case Answer::Yes: return "yes";
        case Answer::No: return "no";
        case Answer::Unknown: return "unknown";
    }
    return "?";
}

namespace {

bool is_gf2_or_gf2t(FieldRef F) {
    return F == gf2() || (F->kind() == FieldKind::Rational && F->base() == gf2());
}

[[noreturn]] void internal(const std::string& what) { raise(ErrorKind::Internal, "internal check failed: " + what); }

// Candidate (a, n) for the radical construction: generators and small elements.
std::vector<FieldValue> radical_candidates(FieldRef F) {
    std::vector<FieldValue> out;
    for (FieldRef g = F; g != nullptr && !g->is_prime(); g = g->base()) {
        if (g->kind() == FieldKind::Rational) {
            const auto t = FieldValue::generator(g).embed_into(F);
            out.push_back(t);
            out.push_back(t + FieldValue::one(F));
        } else {
            const auto x = FieldValue::generator(g).embed_into(F);
            out.push_back(x);
            out.push_back(x + FieldValue::one(F));
        }
    }
    return out;
}

}  // namespace

HyperbolicWitness witness_hyperbolic_quartic(FieldRef F) {
    const UniPoly p = parse_poly(F, "x^4+x^3+1");
    if (!is_gf2_or_gf2t(F)) {
        if (F->is_finite() && is_irreducible(p) == Irreducibility::Reducible)
            raise(ErrorKind::Reducible, "x^4+x^3+1 is reducible over " + F->describe());
        raise(ErrorKind::Unsupported, "the quartic witness is only provided over GF(2) and GF(2)(t)");
    }
    HyperbolicWitness w{ExtensionAlgebra(p), {}, 2};
    const ExtensionAlgebra& E = w.E;
    w.pairs = {{E.parse("x"), E.parse("1+x^3")}, {E.parse("x^2"), E.parse("x+x^2+x^3")}};
    for (std::size_t i = 0; i < 2; ++i) {
        const auto& [e, f] = w.pairs[i];
        if (!second_trace(E, e).is_zero() || !second_trace(E, f).is_zero()) internal("quartic basis is not isotropic");
        if (!trace_polar(E, e, f).is_one()) internal("quartic basis is not symplectic");
        for (std::size_t j = i + 1; j < 2; ++j)
            for (const auto* u : {&e, &f})
                for (const auto* v : {&w.pairs[j].first, &w.pairs[j].second})
                    if (!trace_polar(E, *u, *v).is_zero()) internal("quartic planes are not orthogonal");
    }
    return w;
}

HyperbolicWitness witness_hyperbolic_radical(FieldRef F, const FieldValue& a_in, unsigned n) {
    if (n < 3 || n % 2 == 0) raise(ErrorKind::Precondition, "the radical construction needs an odd n >= 3");
    const FieldValue a = a_in.embed_into(F);
    if (a.is_zero()) raise(ErrorKind::Precondition, "the radical construction needs a != 0");
    const UniPoly p = UniPoly::x(F).with_var("x");
    UniPoly xn = UniPoly::constant(FieldValue::one(F));
    for (unsigned i = 0; i < n; ++i) xn = xn * p;
    const UniPoly m = xn + UniPoly::constant(a);
    switch (is_irreducible(m)) {
        case Irreducibility::Reducible: raise(ErrorKind::Reducible, m.str() + " is reducible over " + F->describe());
        case Irreducibility::Unknown: raise(ErrorKind::Uncertified, "irreducibility of " + m.str() + " is not decided");
        case Irreducibility::Irreducible: break;
    }
    HyperbolicWitness w{ExtensionAlgebra(m), {}, (n - 1) / 2};
    const ExtensionAlgebra& E = w.E;
    for (unsigned k = 1; k < n; ++k) {
        if (!trace(E, E.alpha_power(k)).is_zero()) internal("alpha^k is not in the trace kernel");
        if (!second_trace(E, E.alpha_power(k)).is_zero()) internal("T_2(alpha^k) is not zero");
    }
    // B(alpha^k, alpha^(n-k)) = T_1(a) = a.
    const FieldValue ainv = a.inverse();
    for (unsigned k = 1; k <= (n - 1) / 2; ++k)
        w.pairs.emplace_back(E.alpha_power(k), E.scale(ainv, E.alpha_power(n - k)));
    for (std::size_t i = 0; i < w.pairs.size(); ++i) {
        if (!trace_polar(E, w.pairs[i].first, w.pairs[i].second).is_one()) internal("radical planes are not symplectic");
        for (std::size_t j = i + 1; j < w.pairs.size(); ++j)
            for (const auto* u : {&w.pairs[i].first, &w.pairs[i].second})
                for (const auto* v : {&w.pairs[j].first, &w.pairs[j].second})
                    if (!trace_polar(E, *u, *v).is_zero()) internal("radical planes are not orthogonal");
    }
    return w;
}

AlgebraicityAnswer is_2algebraic(const QuadSpace& q, const SearchLimits& limits) {
    AlgebraicityAnswer out;
    out.report = witt_decompose(q, limits);
    const WittReport& r = out.report;
    if (!r.certified) {
        out.reason = "search-exhausted";
        return out;
    }
    FieldRef F = q.field;
    if (r.hyperbolic) {
        out.reason = "hyperbolic-witness";
        std::optional<ExtensionAlgebra> E;
        if (is_gf2_or_gf2t(F)) {
            E = witness_hyperbolic_quartic(F).E;
        } else {
            for (unsigned n : {3U, 5U, 7U}) {
                for (const auto& a : radical_candidates(F)) {
                    try {
                        E = witness_hyperbolic_radical(F, a, n).E;
                    } catch (const Error& e) {
                        if (e.kind() != ErrorKind::Reducible && e.kind() != ErrorKind::Uncertified) throw;
                        continue;
                    }
                    break;
                }
                if (E) break;
            }
        }
        if (!E) return out;
        out.answer = Answer::Yes;
        out.witness = E->modulus();
    } else if (r.dim - 2 * r.witt_index == 2) {
        out.reason = "binary-residue";
        if (!r.represents_one) return out;
        const FieldValue c = r.residue->b;
        UniPoly w = UniPoly::x(F) * UniPoly::x(F) + UniPoly::x(F) + UniPoly::constant(c);
        out.answer = Answer::Yes;
        out.witness = w;
    } else {
        out.reason = "residue-too-big";
        out.answer = Answer::No;
        return out;
    }
    // Independent re-check of the witness.
    const ExtensionAlgebra E(*out.witness);
    if (!witt_equivalent(second_trace_form(E), q, limits)) internal("witness " + out.witness->str() + " does not reproduce the form");
    return out;
}

bool verify_revoy_bm(const ExtensionAlgebra& E, std::string* detail) {
    auto fail = [&](const std::string& why) {
        if (detail) *detail = why;
        return false;
    };
    const QuadSpace R = second_trace_form(E), BM = bm_form(E);
    if (E.degree() % 2 == 1) {
        const std::size_t n = E.degree();
        if (BM.dim() != R.dim() + 2) return fail("dimension of the BM form is not dim(Revoy) + 2");
        const Vec u = unit_vec(E.base(), n + 1, 0), w = unit_vec(E.base(), n + 1, n);
        if (!BM.evaluate(w).is_zero() || !BM.bilinear(u, w).is_one()) return fail("F(1,0) + F(0,1) is not a hyperbolic plane");
        for (const auto& e : kernel_of_trace(E)) {
            Vec v = e.c;
            v.push_back(FieldValue::zero(E.base()));
            if (!BM.bilinear(v, u).is_zero() || !BM.bilinear(v, w).is_zero())
                return fail("E0 x {0} is not orthogonal to F(1,0) + F(0,1)");
            if (!(BM.evaluate(v) == second_trace(E, e))) return fail("BM form does not restrict to T_2 on E0");
        }
    }
    if (!witt_equivalent(R, BM)) return fail("Revoy and BM forms are not Witt equivalent");
    return true;
}

bool verify_normal_form(const ExtensionAlgebra& E, std::string* detail) {
    auto fail = [&](const std::string& why) {
        if (detail) *detail = why;
        return false;
    };
    const TraceNormalForm t = trace_normal_form(E);
    const std::size_t planes = t.basis.size();
    for (std::size_t i = 0; i < planes; ++i) {
        const auto& [e, f] = t.basis[i];
        if (!second_trace(E, e).is_one()) return fail("T_2(e'_i) != 1");
        if (E.degree() % 2 == 1 && (!trace(E, e).is_zero() || !trace(E, f).is_zero())) return fail("e'_i or f'_i not in E0");
        for (std::size_t j = 0; j < planes; ++j) {
            if (!(trace_polar(E, e, t.basis[j].second) == FieldValue::from_int(E.base(), i == j)))
                return fail("basis e', f' is not symplectic");
            if (i != j && !trace_polar(E, e, t.basis[j].first).is_zero()) return fail("basis e', f' is not symplectic");
            if (i != j && !trace_polar(E, f, t.basis[j].second).is_zero()) return fail("basis e', f' is not symplectic");
        }
    }
    if (t.report.dim - 2 * t.report.witt_index > 2) return fail("residue larger than a plane");
    const QuadSpace target = orthogonal_sum(QuadSpace::hyperbolic(E.base(), planes - 1),
                                            QuadSpace::binary(FieldValue::one(E.base()), t.a_sum));
    if (!witt_equivalent(second_trace_form(E), target)) return fail("trace form is not (n-1)H + [1, a]");
    return true;
}

std::vector<CorpusEntry> enumerate_corpus(FieldRef F, unsigned bound, unsigned threads,
                                          const std::function<void(const CorpusEntry&)>& sink) {
    if (!F->is_finite()) raise(ErrorKind::Unsupported, "corpus enumeration needs a finite field, got " + F->describe());
    if (bound > kMaxCorpusDegree) raise(ErrorKind::Precondition, "degree bound above " + std::to_string(kMaxCorpusDegree));
    std::vector<UniPoly> moduli;
    for (unsigned d = 2; d <= bound; ++d)
        for (const auto& p : monic_irreducibles(F, d)) moduli.push_back(from_kpoly(F, p));

    std::vector<std::optional<CorpusEntry>> slots(moduli.size());
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    auto work = [&] {
        while (true) {
            const std::size_t i = next++;
            if (i >= moduli.size()) return;
            try {
                CorpusEntry e{moduli[i], trace_normal_form(ExtensionAlgebra(moduli[i]))};
                std::lock_guard<std::mutex> lock(mu);
                slots[i] = std::move(e);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!error) error = std::current_exception();
                next = moduli.size();
            }
            cv.notify_all();
        }
    };
    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, moduli.size())));
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(work);

    // Stream in order while workers run.
    std::vector<CorpusEntry> out;
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        std::unique_lock<std::mutex> lock(mu);
        cv.wait(lock, [&] { return slots[i].has_value() || error; });
        if (error) break;
        out.push_back(*slots[i]);
        lock.unlock();
        if (sink) sink(out.back());
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return out;
}

}  // namespace witt2
