#include "kmroots/subsystems.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "kmroots/errors.hpp"

namespace kmroots {

namespace {

Vec sub_vec(const Vec& a, const Vec& b) {
    Vec d = a;
    for (size_t i = 0; i < d.size(); ++i) d[i] -= b[i];
    return d;
}

Vec add_vec(const Vec& a, const Vec& b) {
    Vec d = a;
    for (size_t i = 0; i < d.size(); ++i) d[i] += b[i];
    return d;
}

Vec neg_vec(Vec a) {
    for (Int& x : a) x = -x;
    return a;
}

bool nonnegative(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](Int x) { return x >= 0; });
}

std::string show(const Vec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

}  // namespace

bool Subsystem::all_affine() const {
    return std::all_of(components.begin(), components.end(),
                       [](const RecognizedComponent& c) { return c.label.is_affine(); });
}

int Subsystem::rank() const {
    int r = 0;
    for (const auto& c : components) r += c.label.finite_rank();
    return r;
}

Vec map_component_vector(const Subsystem& sub, const RecognizedComponent& comp, const Vec& abstract) {
    Vec out(sub.ambient->size(), 0);
    for (size_t i = 0; i < comp.nodes.size(); ++i) {
        if (abstract[i] == 0) continue;
        const Vec& b = sub.simple_roots[comp.nodes[i]];
        for (size_t k = 0; k < out.size(); ++k) out[k] += abstract[i] * b[k];
    }
    return out;
}

Subsystem make_subsystem(AffinePtr ambient, std::vector<Vec> base, bool with_index) {
    const AffineRootSystem& sys = *ambient;
    Subsystem s;
    s.ambient = ambient;
    if (base.empty()) throw ConditionViolated("empty base");
    for (const Vec& v : base)
        if (!is_real(is_root(sys, v))) throw NotARealRoot(show(v));
    const size_t n = base.size();
    std::vector<Rat> norms(n);
    for (size_t i = 0; i < n; ++i) norms[i] = sys.norm(base[i]);
    s.cartan.assign(n, std::vector<Int>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Rat c = Rat(2) * sys.inner(base[i], base[j]) / norms[i];
            if (c.denominator() != 1) throw InternalError("non-integral Cartan entry");
            s.cartan[i][j] = c.numerator();
        }
    s.simple_roots = std::move(base);
    s.components = recognize_type(s.cartan, norms, sys.lengths);
    s.lattice = lattice_from_roots(s.simple_roots, sys.size());
    s.weyl_index = with_index && s.all_affine() ? weyl_index(s) : Index::inf();
    return s;
}

ConditionResult check_simple_root_condition(const AffineRootSystem& sys, const std::vector<Vec>& base, bool full) {
    if (base.empty()) throw ConditionViolated("empty base");
    std::vector<RootKind> kinds;
    for (const Vec& v : base) {
        RootKind k = is_root(sys, v);
        if (!is_real(k)) throw NotARealRoot(show(v));
        kinds.push_back(k);
    }
    const bool skip_long = !full && sys.lengths.size() == 2;
    for (size_t i = 0; i < base.size(); ++i)
        for (size_t j = i + 1; j < base.size(); ++j) {
            if (skip_long && kinds[i] == RootKind::real_long && kinds[j] == RootKind::real_long &&
                sys.inner(base[i], base[j]) <= Rat(0))
                continue;
            if (is_root(sys, sub_vec(base[i], base[j])) != RootKind::not_a_root)
                return ConditionResult{false, std::make_pair(base[i], base[j])};
        }
    return {};
}

namespace {

// Orbit closure of the seeds under their own reflections, keeping roots
// with |level| <= bound.
std::set<Vec> bounded_closure(const AffineRootSystem& sys, const std::vector<Vec>& seeds, Int bound) {
    std::set<Vec> out;
    std::vector<Vec> members, todo;
    auto add = [&](const Vec& v) {
        const Int lv = sys.level(v);
        if (lv > bound || lv < -bound) return;
        if (out.insert(v).second) {
            members.push_back(v);
            todo.push_back(v);
        }
    };
    for (const Vec& s : seeds) {
        add(s);
        add(neg_vec(s));
    }
    while (!todo.empty()) {
        Vec v = todo.back();
        todo.pop_back();
        const size_t count = members.size();
        for (size_t i = 0; i < count; ++i) {
            add(reflect(members[i], v, sys.form));
            add(reflect(v, members[i], sys.form));
        }
    }
    return out;
}

std::vector<Vec> extract_base(const AffineRootSystem& sys, const std::set<Vec>& roots, Int m_max) {
    std::vector<Vec> pos;
    std::set<Vec> positive;  // real and imaginary, levels 0..m_max
    for (const Vec& v : roots)
        if (nonnegative(v) && sys.level(v) <= m_max) {
            pos.push_back(v);
            positive.insert(v);
        }
    for (const Vec& a : roots)
        for (const Vec& b : roots) {
            Vec s = add_vec(a, b);
            if (nonnegative(s) && sys.level(s) <= m_max && sys.level(s) > 0 &&
                is_root(sys, s) == RootKind::imaginary)
                positive.insert(s);
        }
    std::vector<Vec> base;
    for (const Vec& v : pos) {
        bool decomposable = false;
        for (const Vec& a : positive) {
            Vec rest = sub_vec(v, a);
            if (positive.count(rest)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) base.push_back(v);
    }
    return base;
}

}  // namespace

Subsystem minimal_subsystem(AffinePtr ambient, const std::vector<Vec>& seeds, Int m_max) {
    const AffineRootSystem& sys = *ambient;
    if (seeds.empty()) throw ConditionViolated("no seeds");
    Int top = 0;
    for (const Vec& v : seeds) {
        if (!is_real(is_root(sys, v))) throw NotARealRoot(show(v));
        if (!nonnegative(v)) throw ConditionViolated("seed " + show(v) + " is not positive");
        top = std::max(top, sys.level(v));
    }
    auto cond = check_simple_root_condition(sys, seeds);
    if (!cond.ok)
        throw ConditionViolated("difference of " + show(cond.witness->first) + " and " +
                                show(cond.witness->second) + " is a root");
    const Int horizon = std::max(m_max, top);
    const Int bound = 2 * horizon + 2;
    auto base = extract_base(sys, bounded_closure(sys, seeds, bound), horizon);
    auto wider = extract_base(sys, bounded_closure(sys, seeds, 2 * bound), horizon);
    if (base != wider) throw BoundExceeded("base extraction is not stable at level " + std::to_string(bound));
    Lattice span = lattice_from_roots(base, sys.size());
    for (const Vec& v : seeds)
        if (!span.contains(v)) throw BoundExceeded("extracted base does not generate seed " + show(v));
    return make_subsystem(ambient, base);
}

std::vector<Vec> subsystem_roots(const Subsystem& sub, Int m_max) {
    const AffineRootSystem& sys = *sub.ambient;
    std::set<Vec> out;
    for (const auto& comp : sub.components) {
        if (!comp.label.is_affine()) {
            auto fin = build_finite(comp.label.bare());
            for (const Vec& u : fin.all_roots) {
                Vec v = map_component_vector(sub, comp, u);
                if (std::llabs(sys.level(v)) <= m_max) out.insert(v);
            }
            continue;
        }
        auto abs = build_affine(comp.label.bare());
        const Int step = sys.level(map_component_vector(sub, comp, abs->delta));
        if (step <= 0) throw InternalError("component null root has nonpositive level");
        Int reach = 0;
        for (const Vec& u : enumerate_real_roots(*abs, 0))
            reach = std::max<Int>(reach, std::llabs(sys.level(map_component_vector(sub, comp, u))));
        const Int levels = (m_max + 2 * reach) / step + 2;
        for (const Vec& u : enumerate_real_roots(*abs, levels)) {
            Vec v = map_component_vector(sub, comp, u);
            if (std::llabs(sys.level(v)) <= m_max) out.insert(v);
        }
        for (Int m = 1; m * step <= m_max; ++m) {
            Vec d = sys.delta;
            for (Int& x : d) x *= m * step;
            out.insert(d);
            out.insert(neg_vec(d));
        }
    }
    return std::vector<Vec>(out.begin(), out.end());
}

LatticeVerdict lattice_criterion_detail(const Subsystem& sub, Int m_max) {
    auto mine = subsystem_roots(sub, m_max);
    std::set<Vec> own(mine.begin(), mine.end());
    LatticeVerdict verdict;
    for (const Vec& v : intersect_with_roots(*sub.ambient, sub.lattice, m_max))
        if (!own.count(v)) verdict.extra.push_back(v);
    verdict.ok = verdict.extra.empty();
    return verdict;
}

bool verify_lattice_criterion(const Subsystem& sub, Int m_max) { return lattice_criterion_detail(sub, m_max).ok; }

namespace {

// Translation generators of the reflections in the given real roots. Roots
// are grouped by the line of their finite direction u (primitive, signed);
// alpha = c*u + m*delta reflects in the hyperplane (u|x) = -m/c, and the
// hyperplanes of one line generate translations by 2*g*u/(u|u), where g is
// the gcd of their position differences.
void add_translations(const AffineRootSystem& sys, const std::vector<Vec>& roots, std::vector<std::vector<Rat>>& gens) {
    std::map<Vec, std::vector<Rat>> by_line;
    for (const Vec& v : roots) {
        Vec p = sys.projection(v);
        Int g = 0;
        for (Int x : p) g = std::gcd(g, x);
        if (g == 0) continue;
        for (Int& x : p) x /= g;
        if (*std::find_if(p.begin(), p.end(), [](Int x) { return x != 0; }) < 0) {
            for (Int& x : p) x = -x;
            g = -g;
        }
        by_line[p].push_back(Rat(-sys.level(v), g));
    }
    for (auto& [u, positions] : by_line) {
        Int num = 0, den = 1;
        for (const Rat& t : positions) {
            const Rat d = t - positions.front();
            if (d == Rat(0)) continue;
            const Int l = std::lcm(den, d.denominator());
            num = std::gcd(num * (l / den), d.numerator() * (l / d.denominator()));
            den = l;
        }
        if (num == 0) continue;
        const Rat scale = Rat(2) * Rat(num, den) / sys.norm(u);
        std::vector<Rat> g;
        for (Int x : u) g.push_back(scale * Rat(x));
        gens.push_back(g);
    }
}

Lattice integral_lattice(const std::vector<std::vector<Rat>>& gens, Int den, int dim) {
    IntMatrix rows;
    for (const auto& g : gens) {
        Vec r;
        for (const Rat& x : g) {
            Rat y = x * Rat(den);
            if (y.denominator() != 1) throw InternalError("translation generator not integral");
            r.push_back(y.numerator());
        }
        rows.push_back(r);
    }
    return Lattice{dim, hermite_normal_form(rows)};
}

}  // namespace

Index weyl_index(const Subsystem& sub) {
    if (!sub.all_affine()) throw NotAffine("subsystem has a finite component");
    const AffineRootSystem& sys = *sub.ambient;
    if (sub.rank() < sys.rank()) return Index::inf();
    std::vector<std::vector<Rat>> whole, part;
    add_translations(sys, enumerate_real_roots(sys, 3), whole);
    std::vector<Vec> mapped;
    Int sub_order = 1;
    for (const auto& comp : sub.components) {
        auto abs = build_affine(comp.label.bare());
        for (const Vec& u : enumerate_real_roots(*abs, 3)) mapped.push_back(map_component_vector(sub, comp, u));
        sub_order *= weyl_group_order(underlying_finite(comp.label.bare()));
    }
    add_translations(sys, mapped, part);
    Int den = 1;
    for (const auto* set : {&whole, &part})
        for (const auto& g : *set)
            for (const Rat& x : g) den = std::lcm(den, x.denominator());
    Lattice t = integral_lattice(whole, den, sys.size());
    Lattice t1 = integral_lattice(part, den, sys.size());
    if (t1.rank() < t.rank()) return Index::inf();
    Index trans = sublattice_index(t, t1);
    const Rat total = Rat(*trans.value) * Rat(weyl_group_order(underlying_finite(sys.label))) / Rat(sub_order);
    if (total.denominator() != 1) throw InternalError("non-integral Weyl group index");
    return Index::of(total.numerator());
}

}  // namespace kmroots
