#include <algorithm>
#include <set>

#include "kmroots/classifier.hpp"
#include "kmroots/errors.hpp"

namespace kmroots {

namespace {

std::string show(const Vec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

}  // namespace

SameTypeResult same_type_subsystem(AffinePtr ambient, Int k) {
    const AffineRootSystem& sys = *ambient;
    if (k < 1) return {false, std::nullopt, "k must be positive"};
    std::vector<Vec> base = sys.simple_roots();
    for (size_t i = 0; i < base[0].size(); ++i) base[0][i] += (k - 1) * sys.delta[i];
    if (!is_real(is_root(sys, base[0])))
        return {false, std::nullopt, show(base[0]) + " is not a real root"};
    auto cond = check_simple_root_condition(sys, base);
    if (!cond.ok)
        return {false, std::nullopt,
                "difference of " + show(cond.witness->first) + " and " + show(cond.witness->second) + " is a root"};
    return {true, make_subsystem(ambient, base), ""};
}

Subsystem non_affine_from_affine(const Subsystem& sub, const std::vector<int>& components) {
    std::set<int> drop;
    for (int j : components) {
        if (j < 1 || j > static_cast<int>(sub.components.size()))
            throw NotUntwistedComponent("component " + std::to_string(j) + " does not exist");
        const auto& comp = sub.components[j - 1];
        if (comp.label.twist != 1)
            throw NotUntwistedComponent("component " + std::to_string(j) + " is " + to_string(comp.label));
        drop.insert(comp.nodes[0]);
    }
    if (drop.empty()) return sub;
    std::vector<Vec> base;
    for (size_t i = 0; i < sub.simple_roots.size(); ++i)
        if (!drop.count(static_cast<int>(i))) base.push_back(sub.simple_roots[i]);
    return make_subsystem(sub.ambient, base);
}

Subsystem affine_hull(const Subsystem& finite_sub) {
    const AffineRootSystem& sys = *finite_sub.ambient;
    std::vector<Vec> base = finite_sub.simple_roots;
    for (const auto& comp : finite_sub.components) {
        if (comp.label.is_affine()) throw ConditionViolated("component " + to_string(comp.label) + " is affine");
        const Vec lowest = map_component_vector(finite_sub, comp, build_finite(comp.label.bare()).lowest_root);
        bool found = false;
        // Twist order at most 3, doubled for the half-step family.
        for (Int k = 1; k <= 6 && !found; ++k) {
            Vec beta = lowest;
            for (size_t i = 0; i < beta.size(); ++i) beta[i] += k * sys.delta[i];
            if (is_real(is_root(sys, beta))) {
                base.push_back(beta);
                found = true;
            }
        }
        if (!found) throw NoAffineExtension(to_string(comp.label));
    }
    return make_subsystem(finite_sub.ambient, base);
}

std::vector<ClassificationEntry> all_regular_subsystems(const Label& ambient, int depth) {
    if (depth < 1) throw ConditionViolated("depth must be at least 1");
    std::vector<ClassificationEntry> all = table_maximal(ambient);
    auto known = [&](const Components& sub, const IndexFormula& idx) {
        return std::any_of(all.begin(), all.end(),
                           [&](const ClassificationEntry& e) { return e.sub == sub && e.index == idx; });
    };
    std::vector<ClassificationEntry> layer = all;
    for (int d = 2; d <= depth; ++d) {
        std::vector<ClassificationEntry> next;
        for (const auto& e : layer)
            for (size_t c = 0; c < e.sub.size(); ++c) {
                const Label outer = e.sub[c];
                if (!outer.is_affine()) continue;
                std::vector<ClassificationEntry> inner;
                try {
                    inner = table_maximal(outer.bare());
                } catch (const OutOfTableRange&) {
                    continue;
                }
                for (const auto& f : inner) {
                    Components sub;
                    for (size_t i = 0; i < e.sub.size(); ++i)
                        if (i != c) sub.push_back(e.sub[i]);
                    for (Label l : f.sub) {
                        if (outer.length != LengthClass::unmarked) l.length = outer.length;
                        sub.push_back(l);
                    }
                    sort_components(sub);
                    const IndexFormula idx = e.index * f.index;
                    if (known(sub, idx)) continue;
                    ClassificationEntry n{ambient.bare(), sub, idx, EntryKind::composite, e.inferred || f.inferred};
                    all.push_back(n);
                    next.push_back(n);
                }
            }
        layer = std::move(next);
    }
    return all;
}

}  // namespace kmroots
