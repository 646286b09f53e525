#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <tuple>
#include <unordered_map>

#include "kmroots/classifier.hpp"
#include "kmroots/errors.hpp"

namespace kmroots {

namespace {

using Bits = std::vector<uint64_t>;

bool subset(const Bits& a, const Bits& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

void set_bit(Bits& b, int i) { b[i / 64] |= uint64_t{1} << (i % 64); }

struct Pool {
    std::vector<Vec> roots;
    std::vector<Int> level;
    IntMatrix pairing;  // 2(r_i|r_j)/(r_i|r_i)
    std::vector<std::vector<int>> neighbours;
    std::vector<Bits> orthogonal;
    std::vector<std::vector<char>> difference_is_root;
};

Pool make_pool(const AffineRootSystem& sys, Int m_max) {
    Pool p;
    for (const Vec& v : enumerate_real_roots(sys, m_max))
        if (std::all_of(v.begin(), v.end(), [](Int x) { return x >= 0; })) p.roots.push_back(v);
    const size_t n = p.roots.size();
    const size_t words = (n + 63) / 64;
    p.pairing.assign(n, std::vector<Int>(n));
    p.neighbours.resize(n);
    p.orthogonal.assign(n, Bits(words, 0));
    p.difference_is_root.assign(n, std::vector<char>(n, 0));
    for (size_t i = 0; i < n; ++i) {
        p.level.push_back(sys.level(p.roots[i]));
        const Rat ni = sys.norm(p.roots[i]);
        for (size_t j = 0; j < n; ++j) {
            const Rat c = Rat(2) * sys.inner(p.roots[i], p.roots[j]) / ni;
            p.pairing[i][j] = c.numerator();
            if (c < Rat(0)) p.neighbours[i].push_back(static_cast<int>(j));
            if (c == Rat(0)) set_bit(p.orthogonal[i], static_cast<int>(j));
            Vec d = p.roots[i];
            for (size_t k = 0; k < d.size(); ++k) d[k] -= p.roots[j][k];
            p.difference_is_root[i][j] = i != j && is_root(sys, d) != RootKind::not_a_root;
        }
    }
    return p;
}

IntMatrix sub_cartan(const Pool& p, const std::vector<int>& set) {
    IntMatrix c(set.size(), std::vector<Int>(set.size()));
    for (size_t i = 0; i < set.size(); ++i)
        for (size_t j = 0; j < set.size(); ++j) c[i][j] = p.pairing[set[i]][set[j]];
    return c;
}

std::vector<Rat> norms_of(const AffineRootSystem& sys, const Pool& p, const std::vector<int>& set) {
    std::vector<Rat> out;
    for (int r : set) out.push_back(sys.norm(p.roots[r]));
    return out;
}

struct Component {
    std::vector<int> roots;
    Label label;
    int finite_rank = 0;
    Bits members, orthogonal;
};

// Connected obtuse sets of affine type whose null root has level <= m_max.
std::vector<Component> affine_components(const AffineRootSystem& sys, const Pool& p, Int m_max) {
    const size_t words = (p.roots.size() + 63) / 64;
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> frontier;
    std::vector<Component> out;
    for (size_t i = 0; i < p.roots.size(); ++i) {
        frontier.push_back({static_cast<int>(i)});
        seen.insert(frontier.back());
    }
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& set : frontier) {
            Int levels = 0;
            for (int r : set) levels += p.level[r];
            std::set<int> ext;
            for (int r : set)
                for (int j : p.neighbours[r]) ext.insert(j);
            for (int j : ext) {
                if (std::find(set.begin(), set.end(), j) != set.end()) continue;
                if (levels + p.level[j] > m_max) continue;
                bool obtuse = true;
                for (int r : set)
                    if (p.pairing[r][j] > 0) obtuse = false;
                if (!obtuse) continue;
                std::vector<int> grown = set;
                grown.insert(std::upper_bound(grown.begin(), grown.end(), j), j);
                if (!seen.insert(grown).second) continue;
                const IntMatrix c = sub_cartan(p, grown);
                const DefiniteType kind = classify_connected(c);
                if (kind == DefiniteType::finite) {
                    next.push_back(grown);
                } else if (kind == DefiniteType::affine) {
                    auto rc = recognize_type(c, norms_of(sys, p, grown), sys.lengths).front();
                    const auto& marks = build_affine(rc.label.bare())->marks;
                    Int k = 0;
                    for (size_t i = 0; i < marks.size(); ++i) k += marks[i] * p.level[grown[rc.nodes[i]]];
                    if (k > m_max) continue;
                    Component comp{grown, rc.label, static_cast<int>(grown.size()) - 1, Bits(words, 0), Bits(words, ~uint64_t{0})};
                    for (int r : grown) {
                        set_bit(comp.members, r);
                        for (size_t w = 0; w < words; ++w) comp.orthogonal[w] &= p.orthogonal[r][w];
                    }
                    out.push_back(std::move(comp));
                }
            }
        }
        frontier = std::move(next);
    }
    return out;
}

// Membership in a full-rank lattice given by a square row HNF.
bool in_full_lattice(const IntMatrix& hnf, const Vec& v) {
    Vec rest = v;
    for (size_t k = 0; k < hnf.size(); ++k) {
        if (rest[k] % hnf[k][k] != 0) return false;
        const Int c = rest[k] / hnf[k][k];
        if (c != 0)
            for (size_t j = k; j < rest.size(); ++j) rest[j] -= c * hnf[k][j];
    }
    return true;
}

bool lattice_is_everything(const Lattice& l) {
    if (l.rank() != l.ambient_dim) return false;
    for (int i = 0; i < l.rank(); ++i)
        if (l.basis[i][i] != 1) return false;
    return true;
}

// Maximal among all subsystems: adjoining any further root spans the whole
// root lattice (a subsystem is the intersection of the roots with its span).
bool maximal_at_bound(const AffineRootSystem& sys, const Subsystem& sub, const Pool& p) {
    for (const Vec& g : p.roots) {
        if (sub.lattice.contains(g)) continue;
        if (!lattice_is_everything(lattice_sum(sub.lattice, lattice_from_roots({g}, sys.size())))) return false;
    }
    return true;
}

}  // namespace

SearchResult maximal_subsystems_search(AffinePtr ambient, const SearchOptions& opts) {
    const AffineRootSystem& sys = *ambient;
    if (sys.size() > opts.rank_cap)
        throw SearchCapExceeded(to_string(sys.label) + " has " + std::to_string(sys.size()) + " nodes");
    if (opts.m_max < 2) throw SearchCapExceeded("m_max must be at least 2");
    const Pool pool = make_pool(sys, opts.m_max);
    const auto comps = affine_components(sys, pool, opts.m_max);
    const int target = sys.rank();

    // Ambient roots within the horizon and, per component, the subset it owns.
    const std::vector<Vec> ambient_roots = enumerate_roots(sys, opts.m_max);
    std::unordered_map<Vec, int, VecHash> where;
    for (size_t i = 0; i < ambient_roots.size(); ++i) where.emplace(ambient_roots[i], static_cast<int>(i));
    const size_t words = (ambient_roots.size() + 63) / 64;
    std::vector<Bits> owned;
    for (const auto& comp : comps) {
        std::vector<Vec> base;
        for (int r : comp.roots) base.push_back(pool.roots[r]);
        Bits b(words, 0);
        for (const Vec& v : subsystem_roots(make_subsystem(ambient, base, false), opts.m_max)) {
            auto it = where.find(v);
            if (it == where.end()) throw InternalError("subsystem root outside the ambient enumeration");
            set_bit(b, it->second);
        }
        owned.push_back(std::move(b));
    }

    SearchResult result;
    std::map<std::tuple<std::string, std::string, IntMatrix>, Subsystem> unique;
    std::vector<int> chosen;
    auto visit = [&](const std::vector<int>& pick) {
        std::vector<int> ids;
        for (int c : pick) ids.insert(ids.end(), comps[c].roots.begin(), comps[c].roots.end());
        std::vector<Vec> base;
        for (int r : ids) base.push_back(pool.roots[r]);
        bool condition = true;
        for (size_t i = 0; i < ids.size() && condition; ++i)
            for (size_t j = i + 1; j < ids.size() && condition; ++j)
                if (pool.difference_is_root[ids[i]][ids[j]]) condition = false;
        Bits mine(words, 0);
        for (int c : pick)
            for (size_t w = 0; w < words; ++w) mine[w] |= owned[c][w];
        const Lattice span = lattice_from_roots(base, sys.size());
        if (span.rank() != sys.size()) throw InternalError("maximal-rank candidate with deficient span");
        bool lattice = true;
        for (size_t i = 0; i < ambient_roots.size() && lattice; ++i)
            if (!(mine[i / 64] >> (i % 64) & 1) && in_full_lattice(span.basis, ambient_roots[i])) lattice = false;
        CandidateRecord rec{base, {}, condition, lattice};
        if (!condition || !lattice) {
            for (int c : pick) rec.type.push_back(comps[c].label);
            sort_components(rec.type);
            result.candidates.push_back(std::move(rec));
            return;
        }
        Subsystem sub = make_subsystem(ambient, base);
        rec.type = sub.type();
        result.candidates.push_back(std::move(rec));
        // A closed subsystem strictly inside its lattice meet is not maximal.
        if (lattice_is_everything(sub.lattice) || !maximal_at_bound(sys, sub, pool)) return;
        unique.emplace(std::make_tuple(to_string(sub.type()), sub.weyl_index.str(), sub.lattice.basis), std::move(sub));
    };
    auto rec = [&](auto&& self, size_t from, int rank) -> void {
        if (rank == target) {
            visit(chosen);
            return;
        }
        for (size_t c = from; c < comps.size(); ++c) {
            if (rank + comps[c].finite_rank > target) continue;
            bool ok = true;
            for (int d : chosen)
                if (!subset(comps[c].members, comps[d].orthogonal)) ok = false;
            if (!ok) continue;
            chosen.push_back(static_cast<int>(c));
            self(self, c + 1, rank + comps[c].finite_rank);
            chosen.pop_back();
        }
    };
    rec(rec, 0, 0);
    for (auto& [key, sub] : unique) result.maximal.push_back(std::move(sub));
    return result;
}

TableComparison compare_with_table(const Label& ambient, const std::vector<Subsystem>& found, Int index_bound,
                                   Int m_max) {
    TableComparison cmp;
    struct Expected {
        Components type;
        Int index;
    };
    std::vector<Expected> expected;
    for (const auto& e : table_maximal(ambient)) {
        if (e.index.infinite) continue;
        for (Int v : e.index.values(index_bound, m_max)) expected.push_back({e.sub, v});
    }
    std::set<std::pair<std::string, Int>> seen;
    std::vector<char> hit(expected.size(), 0);
    for (const auto& s : found) {
        if (s.weyl_index.infinite() || *s.weyl_index.value > index_bound) continue;
        const Int v = *s.weyl_index.value;
        if (!seen.insert({to_string(s.type()), v}).second) continue;
        bool matched = false;
        for (size_t i = 0; i < expected.size(); ++i)
            if (expected[i].index == v && type_matches(expected[i].type, s.type())) {
                hit[i] = 1;
                matched = true;
            }
        if (!matched) cmp.unexpected.push_back(to_string(s.type()) + " index " + std::to_string(v));
    }
    for (size_t i = 0; i < expected.size(); ++i)
        if (!hit[i]) cmp.missing.push_back(to_string(expected[i].type) + " index " + std::to_string(expected[i].index));
    cmp.ok = cmp.missing.empty() && cmp.unexpected.empty();
    return cmp;
}

}  // namespace kmroots

namespace kmroots {

const std::vector<Label>& regression_labels() {
    static const std::vector<Label> labels = [] {
        std::vector<Label> out;
        for (const char* s : {"A1^(1)", "A2^(1)", "A3^(1)", "A4^(1)", "B3^(1)", "C2^(1)", "C3^(1)", "D4^(1)", "G2^(1)",
                              "F4^(1)", "A2^(2)", "A4^(2)", "A5^(2)", "D3^(2)", "D4^(2)", "D4^(3)"})
            out.push_back(parse_label(s));
        return out;
    }();
    return labels;
}

}  // namespace kmroots
