#include <algorithm>
#include <map>
#include <set>

#include "kmroots/errors.hpp"
#include "kmroots/finite_roots.hpp"
#include "kmroots/subsystems.hpp"

namespace kmroots {

Components finite_subsystem_type(const FiniteRootSystem& ambient, const std::vector<Vec>& base) {
    const size_t n = base.size();
    if (n == 0) return {};
    IntMatrix c(n, std::vector<Int>(n));
    std::vector<Rat> norms;
    for (const Vec& b : base) norms.push_back(ambient.norm(b));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Rat v = Rat(2) * dot(base[i], ambient.form, base[j]) / norms[i];
            if (v.denominator() != 1) throw InternalError("non-integral Cartan entry");
            c[i][j] = v.numerator();
        }
    std::set<Rat> amb;
    for (const Vec& v : ambient.all_roots) amb.insert(ambient.norm(v));
    return labels_of(recognize_type(c, norms, std::vector<Rat>(amb.begin(), amb.end())));
}

namespace {

// Roots indexed by position in all_roots; sums precomputed.
struct RootTable {
    const FiniteRootSystem& sys;
    std::vector<std::vector<int>> sum;

    explicit RootTable(const FiniteRootSystem& s) : sys(s) {
        const size_t n = s.all_roots.size();
        sum.assign(n, std::vector<int>(n, -1));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                Vec v = s.all_roots[i];
                for (size_t k = 0; k < v.size(); ++k) v[k] += s.all_roots[j][k];
                auto it = std::lower_bound(s.all_roots.begin(), s.all_roots.end(), v);
                if (it != s.all_roots.end() && *it == v) sum[i][j] = static_cast<int>(it - s.all_roots.begin());
            }
    }
    int index(const Vec& v) const {
        auto it = std::lower_bound(sys.all_roots.begin(), sys.all_roots.end(), v);
        if (it == sys.all_roots.end() || *it != v) throw InternalError("vector is not a root");
        return static_cast<int>(it - sys.all_roots.begin());
    }
    int negative(int i) const {
        Vec v = sys.all_roots[i];
        for (Int& x : v) x = -x;
        return index(v);
    }
    // Smallest symmetric closed set containing the members flagged in `in`.
    std::vector<char> closed_hull(std::vector<char> in) const {
        std::vector<int> members;
        for (size_t i = 0; i < in.size(); ++i)
            if (in[i]) members.push_back(static_cast<int>(i));
        for (size_t t = 0; t < members.size(); ++t) {
            const int x = members[t];
            const int nx = negative(x);
            if (!in[nx]) {
                in[nx] = 1;
                members.push_back(nx);
            }
            const size_t count = members.size();
            for (size_t u = 0; u < count; ++u) {
                const int s = sum[x][members[u]];
                if (s >= 0 && !in[s]) {
                    in[s] = 1;
                    members.push_back(s);
                }
            }
        }
        return in;
    }
};

}  // namespace

std::vector<FiniteSubsystem> finite_maximal_subsystems(const Label& label) {
    const FiniteRootSystem f = build_finite(label);
    const RootTable table(f);
    const size_t total = f.all_roots.size();
    const int n = f.rank();

    std::vector<std::vector<Vec>> bases;
    for (int i = 0; i < n; ++i) {
        std::vector<Vec> levi, extended{f.lowest_root};
        for (int j = 0; j < n; ++j)
            if (j != i) {
                levi.push_back(f.simple_roots[j]);
                extended.push_back(f.simple_roots[j]);
            }
        if (!levi.empty()) bases.push_back(levi);
        bases.push_back(extended);
    }

    std::map<std::vector<char>, std::vector<Vec>> distinct;
    for (const auto& base : bases) {
        std::vector<char> in(total, 0);
        for (const Vec& b : base) in[table.index(b)] = 1;
        auto hull = table.closed_hull(in);
        if (static_cast<size_t>(std::count(hull.begin(), hull.end(), 1)) == total) continue;
        distinct.emplace(hull, base);
    }

    std::vector<FiniteSubsystem> out;
    for (const auto& [hull, base] : distinct) {
        bool maximal = true;
        for (size_t g = 0; g < total && maximal; ++g) {
            if (hull[g]) continue;
            auto grown = hull;
            grown[g] = 1;
            grown = table.closed_hull(grown);
            if (static_cast<size_t>(std::count(grown.begin(), grown.end(), 1)) != total) maximal = false;
        }
        if (maximal) out.push_back({finite_subsystem_type(f, base), base});
    }
    std::sort(out.begin(), out.end(), [](const FiniteSubsystem& a, const FiniteSubsystem& b) {
        const std::string sa = to_string(a.type), sb = to_string(b.type);
        return sa != sb ? sa < sb : a.simple_roots < b.simple_roots;
    });
    return out;
}

}  // namespace kmroots
