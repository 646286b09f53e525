#include "kmroots/hyperbolic.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "kmroots/errors.hpp"

namespace kmroots {

namespace {

std::vector<int> all_but(int n, int drop) {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (i != drop) out.push_back(i);
    return out;
}

std::vector<Rat> distinct(const std::vector<Rat>& xs) {
    std::set<Rat> s(xs.begin(), xs.end());
    return {s.begin(), s.end()};
}

}  // namespace

HyperbolicVerdict is_hyperbolic(const IntMatrix& m) {
    if (m.empty() || !is_gcm(m)) throw InvalidGCM("input is not a generalized Cartan matrix");
    const std::vector<Rat> lengths = symmetrizer(m);
    const std::vector<Rat> ambient = distinct(lengths);
    const int n = static_cast<int>(m.size());
    HyperbolicVerdict v;
    if (connected_blocks(m).size() != 1) {
        v.reason = "decomposable";
        return v;
    }
    if (classify_connected(m) != DefiniteType::indefinite) {
        v.reason = "of finite or affine type";
        return v;
    }
    // Subsets in lexicographic order: dropping the last node first.
    for (int drop = n - 1; drop >= 0; --drop) {
        const std::vector<int> nodes = all_but(n, drop);
        std::vector<Rat> sub_lengths;
        for (int i : nodes) sub_lengths.push_back(lengths[i]);
        try {
            v.certificate.push_back(
                {nodes, labels_of(recognize_type(principal_submatrix(m, nodes), sub_lengths, ambient))});
        } catch (const IndefiniteType&) {
            v.certificate.clear();
            v.reason = "subdiagram without node " + std::to_string(drop) + " is indefinite";
            return v;
        }
    }
    v.hyperbolic = true;
    return v;
}

std::vector<Subdiagram> maximal_non_indefinite_subsystems(const IntMatrix& m) {
    HyperbolicVerdict v = is_hyperbolic(m);
    if (!v.hyperbolic) throw NotHyperbolic(v.reason);
    return std::move(v.certificate);
}

HyperbolicRoots::HyperbolicRoots(IntMatrix m) : cartan_(std::move(m)) {
    const HyperbolicVerdict v = is_hyperbolic(cartan_);
    if (!v.hyperbolic) throw NotHyperbolic(v.reason);
    form_ = form_from_cartan(cartan_);
}

bool HyperbolicRoots::is_real_root(const Vec& v) const {
    if (static_cast<int>(v.size()) != size()) throw DimensionMismatch("vector length differs from the rank");
    bool pos = false, neg = false;
    for (Int x : v) {
        pos = pos || x > 0;
        neg = neg || x < 0;
    }
    if (pos == neg) return false;
    Vec w = v;
    if (neg)
        for (Int& x : w) x = -x;
    for (;;) {
        Int height = 0;
        for (Int x : w) height += x;
        if (height == 1) return true;
        int at = -1;
        Int c = 0;
        for (int i = 0; i < size() && at < 0; ++i) {
            c = 0;
            for (int j = 0; j < size(); ++j) c += cartan_[i][j] * w[j];
            if (c > 0) at = i;
        }
        // A positive vector pairing nonpositively with every simple coroot
        // lies in the fundamental chamber, which holds no real roots.
        if (at < 0) return false;
        w[at] -= c;
        if (w[at] < 0) return false;
    }
}

bool HyperbolicRoots::is_imaginary_root(const Vec& v) const {
    if (static_cast<int>(v.size()) != size()) throw DimensionMismatch("vector length differs from the rank");
    if (std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; })) return false;
    return norm(v) <= Rat(0);
}

std::optional<std::pair<Vec, Vec>> HyperbolicRoots::simple_root_witness(const std::vector<Vec>& base) const {
    for (size_t i = 0; i < base.size(); ++i)
        for (size_t j = i + 1; j < base.size(); ++j) {
            Vec d(size());
            for (int t = 0; t < size(); ++t) d[t] = base[i][t] - base[j][t];
            if (is_root(d)) return std::make_pair(base[i], base[j]);
        }
    return std::nullopt;
}

namespace {

struct Node {
    Components type;
    std::vector<Vec> base;
    std::vector<RecognizedComponent> comps;  // node indices into `base`
    std::vector<std::string> chain;
    bool realized = false;
};

class Expander {
public:
    Expander(const HyperbolicRoots& roots, Int m_max) : roots_(roots), m_max_(m_max) {
        for (int i = 0; i < roots.size(); ++i) lengths_.push_back(roots.form()[i][i]);
        lengths_ = distinct(lengths_);
    }

    Node realize(std::vector<Vec> base, std::vector<std::string> chain) const {
        const size_t n = base.size();
        IntMatrix c(n, std::vector<Int>(n));
        std::vector<Rat> norms;
        for (size_t i = 0; i < n; ++i) {
            norms.push_back(roots_.norm(base[i]));
            for (size_t j = 0; j < n; ++j) {
                const Rat x = Rat(2) * dot(base[i], roots_.form(), base[j]) / roots_.norm(base[i]);
                if (x.denominator() != 1) throw InternalError("lifted base has a non-integral Cartan entry");
                c[i][j] = x.numerator();
            }
        }
        Node node;
        node.comps = recognize_type(c, norms, lengths_);
        node.type = labels_of(node.comps);
        node.base = std::move(base);
        node.chain = std::move(chain);
        node.chain.push_back(to_string(node.type));
        node.realized = true;
        return node;
    }

    std::vector<Node> children(const Node& node) {
        std::vector<Node> out;
        for (size_t ci = 0; ci < node.comps.size(); ++ci) {
            const RecognizedComponent& comp = node.comps[ci];
            std::vector<Vec> others;
            Components other_types;
            for (size_t o = 0; o < node.comps.size(); ++o) {
                if (o == ci) continue;
                other_types.push_back(node.comps[o].label);
                for (int i : node.comps[o].nodes) others.push_back(node.base[i]);
            }
            std::vector<Vec> own;
            for (int i : comp.nodes) own.push_back(node.base[i]);
            auto lift = [&](const std::vector<Vec>& abstract) {
                std::vector<Vec> b = others;
                for (const Vec& a : abstract) {
                    Vec w(roots_.size(), 0);
                    for (size_t i = 0; i < a.size(); ++i)
                        for (int t = 0; t < roots_.size(); ++t) w[t] += a[i] * own[i][t];
                    b.push_back(w);
                }
                return realize(std::move(b), node.chain);
            };
            const Label bare = comp.label.bare();
            if (!bare.is_affine()) {
                for (const auto& fs : finite_maximal_subsystems(bare)) out.push_back(lift(fs.simple_roots));
                continue;
            }
            const std::vector<Subsystem>& found = search(bare);
            for (const auto& row : table_maximal(bare)) {
                bool any = false;
                for (const Subsystem& s : found)
                    if (type_matches(row.sub, s.type())) {
                        out.push_back(lift(s.simple_roots));
                        any = true;
                    }
                if (any) continue;
                Node missing;
                missing.type = other_types;
                missing.type.insert(missing.type.end(), row.sub.begin(), row.sub.end());
                sort_components(missing.type);
                missing.chain = node.chain;
                missing.chain.push_back(to_string(missing.type));
                out.push_back(std::move(missing));
            }
        }
        return out;
    }

private:
    const std::vector<Subsystem>& search(const Label& l) {
        const std::string key = to_string(l);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        std::vector<Subsystem> found;
        try {
            found = maximal_subsystems_search(build_affine(l), {m_max_, 5}).maximal;
        } catch (const SearchCapExceeded&) {
            // Rows of this component stay unrealized.
        }
        return cache_.emplace(key, std::move(found)).first->second;
    }

    const HyperbolicRoots& roots_;
    Int m_max_;
    std::vector<Rat> lengths_;
    std::map<std::string, std::vector<Subsystem>> cache_;
};

}  // namespace

std::vector<HyperbolicEntry> regular_non_indefinite_subalgebras(const IntMatrix& m, int depth, Int m_max) {
    if (depth < 1) throw ConditionViolated("depth must be at least 1");
    if (m_max < 2) throw ConditionViolated("m_max must be at least 2");
    const HyperbolicRoots roots(m);
    Expander ex(roots, m_max);

    std::map<std::string, HyperbolicEntry> entries;
    std::vector<Node> frontier;
    // Records a node; returns true when it is the first realization of its type.
    auto record = [&](const Node& n) {
        const std::string key = to_string(n.type);
        auto [it, fresh] = entries.try_emplace(key);
        HyperbolicEntry& e = it->second;
        if (fresh) e.type = n.type;
        if (std::find(e.chains.begin(), e.chains.end(), n.chain) == e.chains.end()) e.chains.push_back(n.chain);
        if (!n.realized || e.realized) return false;
        e.realized = true;
        e.base = n.base;
        return true;
    };

    for (const Subdiagram& sd : maximal_non_indefinite_subsystems(m)) {
        std::vector<Vec> base;
        for (int i : sd.nodes) {
            Vec v(roots.size(), 0);
            v[i] = 1;
            base.push_back(v);
        }
        Node n = ex.realize(std::move(base), {});
        if (record(n)) frontier.push_back(std::move(n));
    }
    for (int step = 0; step < depth; ++step) {
        std::vector<Node> next;
        for (const Node& n : frontier)
            for (Node& c : ex.children(n))
                if (record(c)) next.push_back(std::move(c));
        frontier = std::move(next);
    }

    std::vector<HyperbolicEntry> out;
    for (auto& [key, e] : entries) {
        if (e.realized) {
            const bool real = std::all_of(e.base.begin(), e.base.end(),
                                          [&](const Vec& v) { return roots.is_real_root(v); });
            e.witness = roots.simple_root_witness(e.base);
            e.verified = real && !e.witness;
        }
        std::sort(e.chains.begin(), e.chains.end());
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace kmroots
