#include <map>
#include <set>

#include "kmroots/classifier.hpp"
#include "kmroots/coset.hpp"
#include "kmroots/errors.hpp"

namespace kmroots {

namespace {

// Subsystem of a finite system given by a base, split into components in
// registry node order.
struct FiniteNode {
    std::vector<Vec> base;
    std::vector<RecognizedComponent> comps;
};

FiniteNode finite_node(const FiniteRootSystem& sys, std::vector<Vec> base) {
    const size_t n = base.size();
    IntMatrix c(n, std::vector<Int>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            const Rat x = Rat(2) * dot(base[i], sys.form, base[j]) / sys.norm(base[i]);
            if (x.denominator() != 1) throw InternalError("non-integral Cartan entry");
            c[i][j] = x.numerator();
        }
    return {std::move(base), recognize_type(c)};
}

// Component labels with decorations read against the ambient lengths.
Components decorated_type(const Label& g, const std::vector<Vec>& base) {
    Components t;
    for (const auto& c : finite_embedding(g, base).components) t.push_back(c.label);
    sort_components(t);
    return t;
}

std::vector<Vec> embed_finite(const Label& g, const Components& h) {
    const FiniteRootSystem sys = build_finite(g);
    std::vector<FiniteNode> frontier{finite_node(sys, sys.simple_roots)};
    std::set<std::string> seen;
    while (!frontier.empty()) {
        std::vector<FiniteNode> next;
        for (const FiniteNode& node : frontier) {
            const std::vector<Vec>& base = node.base;
            if (type_matches(h, decorated_type(g, base))) return base;
            for (size_t ci = 0; ci < node.comps.size(); ++ci) {
                std::vector<Vec> others, own;
                for (size_t o = 0; o < node.comps.size(); ++o)
                    for (int i : node.comps[o].nodes) (o == ci ? own : others).push_back(base[i]);
                for (const auto& fs : finite_maximal_subsystems(node.comps[ci].label)) {
                    std::vector<Vec> b = others;
                    for (const Vec& a : fs.simple_roots) {
                        Vec w(sys.rank(), 0);
                        for (size_t i = 0; i < a.size(); ++i)
                            for (int t = 0; t < sys.rank(); ++t) w[t] += a[i] * own[i][t];
                        b.push_back(w);
                    }
                    FiniteNode child = finite_node(sys, std::move(b));
                    if (seen.insert(to_string(labels_of(child.comps))).second) next.push_back(std::move(child));
                }
            }
        }
        frontier = std::move(next);
    }
    throw NotEmbedded(to_string(h) + " in " + to_string(g));
}

Subsystem embed_affine(const Label& g, const Components& h, Int m_max) {
    const AffinePtr sys = build_affine(g);
    const Subsystem whole = make_subsystem(sys, sys->simple_roots(), false);
    if (type_matches(h, whole.type())) return whole;
    for (Int m = 2; m <= m_max; ++m) {
        const SearchResult found = maximal_subsystems_search(sys, {m, 5});
        for (const auto& s : found.maximal)
            if (type_matches(h, s.type())) return s;
        for (const auto& c : found.candidates)
            if (c.simple_root_condition && c.lattice_condition && type_matches(h, c.type))
                return make_subsystem(sys, c.base, false);
    }
    throw NotEmbedded(to_string(h) + " in " + to_string(g) + " at m_max " + std::to_string(m_max));
}

}  // namespace

Embedding embed(const Label& g, const Components& h, Int m_max) {
    if (g.is_affine()) return affine_embedding(embed_affine(g.bare(), h, m_max));
    return finite_embedding(g, embed_finite(g.bare(), h));
}

std::vector<MaximalCharge> maximal_charges(const Label& g, Int m_max) {
    std::vector<MaximalCharge> out;
    std::set<std::string> seen;
    auto add = [&](Components type, Charge c) {
        if (seen.insert(to_string(type) + " " + c.str()).second) out.push_back({std::move(type), std::move(c)});
    };
    if (g.is_affine()) {
        for (const Subsystem& s : maximal_subsystems_search(build_affine(g.bare()), {m_max, 5}).maximal)
            add(s.type(), twisted_coset_charge(affine_embedding(s)));
    } else {
        for (const auto& s : finite_maximal_subsystems(g.bare()))
            add(s.type, coset_charge(finite_embedding(g.bare(), s.simple_roots)));
    }
    return out;
}

}  // namespace kmroots
