#include "kmroots/coset.hpp"

#include <algorithm>
#include <numeric>

#include "kmroots/errors.hpp"

namespace kmroots {

namespace {

BigRat big(const Rat& q) { return BigRat(BigInt(q.numerator()), BigInt(q.denominator())); }

}  // namespace

Charge Charge::make(const Poly& num, const Poly& den, std::set<BigRat> excluded) {
    if (den.is_zero()) throw InternalError("charge with zero denominator");
    for (const auto& r : rational_roots(den)) excluded.insert(r.value);
    Charge c;
    c.excluded_levels = std::move(excluded);
    if (num.is_zero()) return c;
    const Poly g = gcd(num, den);
    Poly n = divmod(num, g).first, d = divmod(den, g).first;
    // Common integer scaling: clear denominators, then remove joint content.
    BigInt l = 1, content = 0;
    for (const Poly* p : {&n, &d})
        for (int i = 0; i <= p->degree(); ++i) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(p->coeff(i)));
    for (const Poly* p : {&n, &d})
        for (int i = 0; i <= p->degree(); ++i) content = boost::multiprecision::gcd(content, boost::multiprecision::numerator(BigRat(p->coeff(i) * l)));
    BigRat f(l, content);
    if (d.lead() < 0) f = -f;
    c.numerator = n * Poly(f);
    c.denominator = d * Poly(f);
    return c;
}

BigRat Charge::at(const BigRat& k) const {
    if (excluded_levels.count(k)) throw ConditionViolated("level " + to_string(k) + " is critical");
    return numerator(k) / denominator(k);
}

std::string Charge::str() const {
    if (is_zero()) return "0";
    return "(" + numerator.str() + ")/(" + denominator.str() + ")";
}

Charge operator+(const Charge& a, const Charge& b) {
    std::set<BigRat> ex = a.excluded_levels;
    ex.insert(b.excluded_levels.begin(), b.excluded_levels.end());
    return Charge::make(a.numerator * b.denominator + b.numerator * a.denominator, a.denominator * b.denominator,
                        std::move(ex));
}

Charge operator-(const Charge& a, const Charge& b) { return a + BigRat(-1) * b; }

Charge operator*(const BigRat& r, const Charge& c) {
    return Charge::make(c.numerator * Poly(r), c.denominator, c.excluded_levels);
}

Poly charge_difference(const Charge& a, const Charge& b) {
    return a.numerator * b.denominator - b.numerator * a.denominator;
}

Charge sugawara_charge(const Components& g, const BigRat& level_factor) {
    if (level_factor <= 0) throw ConditionViolated("level factor must be positive");
    Charge total;
    for (const Label& raw : g) {
        if (raw.is_affine()) throw UnknownLabel(to_string(raw) + " is not finite");
        for (const Label& l : normalize(raw.bare())) {
            const BigRat dim = lie_algebra_dimension(l);
            const BigRat h = dual_coxeter(l);
            const Poly ck = Poly::k() * Poly(level_factor);
            total = total + Charge::make(ck * Poly(dim), ck + Poly(h), {-h / level_factor});
        }
    }
    return total;
}

DynkinIndex dynkin_index(const FiniteRootSystem& ambient, const std::vector<Vec>& component) {
    if (component.empty()) throw NotEmbedded("empty component");
    Rat j(0);
    for (const Vec& v : component) {
        if (!ambient.contains(v)) throw NotEmbedded("vector is not a root of " + to_string(ambient.label));
        j = std::max(j, ambient.norm(v));
    }
    return {j, Rat(2) / j};
}

namespace {

std::vector<RecognizedComponent> recognize_base(const std::vector<Vec>& base, const RatMatrix& form,
                                                const std::vector<Rat>& ambient_lengths) {
    IntMatrix c(base.size(), std::vector<Int>(base.size()));
    std::vector<Rat> norms;
    for (size_t i = 0; i < base.size(); ++i) {
        norms.push_back(dot(base[i], form, base[i]));
        for (size_t j = 0; j < base.size(); ++j) {
            const Rat x = Rat(2) * dot(base[i], form, base[j]) / dot(base[i], form, base[i]);
            if (x.denominator() != 1) throw NotEmbedded("base has a non-integral Cartan entry");
            c[i][j] = x.numerator();
        }
    }
    return recognize_type(c, norms, ambient_lengths);
}

}  // namespace

Embedding finite_embedding(const Label& ambient, const std::vector<Vec>& base) {
    const FiniteRootSystem sys = build_finite(ambient);
    for (const Vec& v : base)
        if (!sys.contains(v)) throw NotEmbedded("vector is not a root of " + to_string(sys.label));
    std::set<Rat> lengths;
    for (const Vec& v : sys.all_roots) lengths.insert(sys.norm(v));
    Embedding e{sys.label, {}};
    for (const auto& comp : recognize_base(base, sys.form, {lengths.begin(), lengths.end()})) {
        std::vector<Vec> roots;
        for (int n : comp.nodes) roots.push_back(base[n]);
        e.components.push_back({comp.label, dynkin_index(sys, roots).j});
    }
    return e;
}

Charge coset_charge(const Embedding& e) {
    Charge c = sugawara_charge({e.ambient});
    for (const auto& comp : e.components) c = c - sugawara_charge({comp.label}, big(Rat(2) / comp.j));
    return c;
}

std::string to_string(LevelKind k) {
    switch (k) {
        case LevelKind::integer: return "integer";
        case LevelKind::half_integer: return "half-integer";
        case LevelKind::other_rational: return "rational";
    }
    return "";
}

ConformalLevels conformal_levels(const Charge& c) {
    ConformalLevels out;
    if (c.is_zero()) throw ConditionViolated("charge vanishes identically");
    int rational = 0;
    for (const auto& r : rational_roots(c.numerator)) {
        rational += r.multiplicity;
        if (r.value == 0 || c.excluded_levels.count(r.value)) continue;
        const BigInt d = denominator(r.value);
        out.levels.push_back({r.value, d == 1 ? LevelKind::integer
                                       : d == 2 ? LevelKind::half_integer
                                                : LevelKind::other_rational});
    }
    out.non_rational_roots = c.numerator.degree() - rational;
    return out;
}

Int n_s(const AffineRootSystem& sys, const std::vector<Int>& s) {
    if (static_cast<int>(s.size()) != sys.size())
        throw DimensionMismatch("tuple has " + std::to_string(s.size()) + " entries, diagram has " +
                                std::to_string(sys.size()) + " nodes");
    Int total = 0;
    bool nonzero = false;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0) throw InvalidTuple("negative entry");
        nonzero = nonzero || s[i] != 0;
        total += sys.marks[i] * s[i];
    }
    if (!nonzero) throw InvalidTuple("all entries are zero");
    return total;
}

Embedding affine_embedding(const Subsystem& sub) {
    const AffineRootSystem& sys = *sub.ambient;
    const Rat longest = sys.lengths.back();
    Embedding e{sys.label.bare(), {}};
    for (const auto& comp : sub.components) {
        if (!comp.label.is_affine()) throw NotAffine(to_string(comp.label) + " is finite");
        Rat m(0);
        for (int n : comp.nodes) m = std::max(m, sys.norm(sub.simple_roots[n]));
        e.components.push_back({comp.label, Rat(2) * m / longest});
    }
    return e;
}

Charge twisted_coset_charge(const Embedding& e, const std::vector<Int>& s_g, const std::vector<Int>& s_h) {
    if (!e.ambient.is_affine()) throw NotAffine(to_string(e.ambient));
    const auto g = build_affine(e.ambient.bare());
    std::vector<Int> sg = s_g;
    if (sg.empty()) {
        sg.assign(g->size(), 0);
        sg[0] = 1;
    }
    const Int ng = n_s(*g, sg);
    Int nh = 0, q = 1;
    size_t offset = 0, total_nodes = 0;
    for (const auto& comp : e.components) total_nodes += comp.label.nodes();
    if (!s_h.empty() && s_h.size() != total_nodes)
        throw DimensionMismatch("tuple has " + std::to_string(s_h.size()) + " entries, subsystem has " +
                                std::to_string(total_nodes) + " nodes");
    bool any = false;
    for (size_t c = 0; c < e.components.size(); ++c) {
        const Label& l = e.components[c].label;
        if (!l.is_affine()) throw NotAffine(to_string(l) + " is finite");
        q = std::lcm(q, static_cast<Int>(l.twist));
        const auto h = build_affine(l.bare());
        for (int i = 0; i < h->size(); ++i) {
            const Int s = s_h.empty() ? (c == 0 && i == 0 ? 1 : 0) : s_h[offset + i];
            if (s < 0) throw InvalidTuple("negative entry");
            any = any || s != 0;
            nh += h->marks[i] * s;
        }
        offset += h->size();
    }
    if (!any) throw InvalidTuple("all entries are zero");
    const BigRat r = BigRat(q * nh) / BigRat(e.ambient.twist * ng);
    Charge c = r * sugawara_charge({loop_algebra(e.ambient)});
    for (const auto& comp : e.components)
        c = c - sugawara_charge({loop_algebra(comp.label.bare())}, big(Rat(2) / comp.j));
    return c;
}

}  // namespace kmroots
