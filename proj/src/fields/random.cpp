#include <witt2/random.hpp>

namespace witt2 {

namespace {

Bits random_bits(FieldRef k, std::mt19937_64& rng) {
    const Bits x = rng();
    return k->bits() >= 64 ? x : (x & ((Bits{1} << k->bits()) - 1));
}

}  // namespace

KPoly random_kpoly(FieldRef k, std::mt19937_64& rng, unsigned max_degree) {
    const unsigned deg = std::uniform_int_distribution<unsigned>(0, max_degree)(rng);
    KPoly p(deg + 1);
    for (auto& c : p) c = random_bits(k, rng);
    poly::trim(FiniteOps{k}, p);
    return p;
}

FieldValue random_element(FieldRef f, std::mt19937_64& rng, unsigned max_degree) {
    switch (f->kind()) {
        case FieldKind::Prime:
        case FieldKind::FiniteExt: return FieldValue(f, Elem(random_bits(f, rng)));
        case FieldKind::Rational: {
            KPoly num = random_kpoly(f->base(), rng, max_degree);
            KPoly den;
            while (den.empty()) den = random_kpoly(f->base(), rng, max_degree);
            return FieldValue(f, Elem(f->make_frac(std::move(num), std::move(den))));
        }
        case FieldKind::AlgebraicExt: {
            FieldValue acc = FieldValue::zero(f);
            const FieldValue g = FieldValue::generator(f);
            for (unsigned i = f->layer_degree(); i-- > 0;) acc = acc * g + random_element(f->base(), rng, max_degree);
            return acc;
        }
    }
    return {};
}

}  // namespace witt2
