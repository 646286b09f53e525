#include "kmroots/finite_roots.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "kmroots/affine_roots.hpp"
#include "kmroots/errors.hpp"

namespace kmroots {

namespace {

Int height(const Vec& v) {
    Int h = 0;
    for (Int x : v) h += x;
    return h;
}

// Positive roots by increasing height using root strings: for a root b and
// simple root a_i, b + a_i is a root iff p - <b, a_i^vee> > 0 where p is the
// length of the downward a_i-string through b.
std::vector<Vec> positive_roots(const IntMatrix& a) {
    const int n = static_cast<int>(a.size());
    std::set<Vec> known;
    std::vector<Vec> layer;
    for (int i = 0; i < n; ++i) {
        Vec e(n, 0);
        e[i] = 1;
        layer.push_back(e);
        known.insert(e);
    }
    std::vector<Vec> all = layer;
    while (!layer.empty()) {
        std::set<Vec> next;
        for (const Vec& b : layer) {
            for (int i = 0; i < n; ++i) {
                Int pairing = 0;
                for (int j = 0; j < n; ++j) pairing += a[i][j] * b[j];
                int p = 0;
                Vec down = b;
                while (true) {
                    down[i] -= 1;
                    if (!known.count(down)) break;
                    ++p;
                }
                if (p - pairing > 0) {
                    Vec up = b;
                    up[i] += 1;
                    if (!known.count(up)) next.insert(up);
                }
            }
        }
        layer.assign(next.begin(), next.end());
        for (const Vec& v : layer) {
            known.insert(v);
            all.push_back(v);
        }
    }
    return all;
}

}  // namespace

bool FiniteRootSystem::contains(const Vec& v) const {
    return std::binary_search(all_roots.begin(), all_roots.end(), v);
}

FiniteRootSystem build_finite_from_cartan(const Label& label, const IntMatrix& cartan) {
    FiniteRootSystem s;
    s.label = label;
    s.cartan = cartan;
    s.form = form_from_cartan(cartan);
    const int n = static_cast<int>(cartan.size());
    for (int i = 0; i < n; ++i) {
        Vec e(n, 0);
        e[i] = 1;
        s.simple_roots.push_back(e);
    }
    auto pos = positive_roots(cartan);
    Rat longest = 0;
    for (const Vec& v : pos) longest = std::max(longest, s.norm(v));
    if (longest != Rat(2)) throw InternalError("finite form not normalized for " + to_string(label));
    Vec best_long, best_short;
    for (const Vec& v : pos) {
        const bool is_long = s.norm(v) == longest;
        Vec& slot = is_long ? best_long : best_short;
        if (slot.empty() || height(v) > height(slot)) slot = v;
        s.all_roots.push_back(v);
        Vec neg = v;
        for (Int& x : neg) x = -x;
        s.all_roots.push_back(neg);
    }
    std::sort(s.all_roots.begin(), s.all_roots.end());
    s.highest_root = best_long;
    s.highest_short_root = best_short.empty() ? best_long : best_short;
    s.lowest_root = best_long;
    for (Int& x : s.lowest_root) x = -x;
    s.dim_g = static_cast<Int>(s.all_roots.size()) + n;
    return s;
}

FiniteRootSystem build_finite(const Label& label) {
    if (label.is_affine()) throw UnknownLabel(to_string(label) + " is not finite");
    auto norm = normalize(label);
    if (norm.size() != 1) throw UnknownLabel(to_string(label) + " is not indecomposable");
    Label canon = norm.front();
    auto s = build_finite_from_cartan(canon, finite_cartan(canon.family, canon.rank));
    s.dual_coxeter = dual_coxeter(canon);
    return s;
}

Int dual_coxeter_table(const Label& l) {
    const Int n = l.rank;
    switch (l.family) {
        case 'A': return n + 1;
        case 'B': return 2 * n - 1;
        case 'C': return n + 1;
        case 'D': return 2 * n - 2;
        case 'E': return n == 6 ? 12 : n == 7 ? 18 : 30;
        case 'F': return 9;
        case 'G': return 4;
    }
    throw UnknownLabel(to_string(l));
}

Int dual_coxeter(const Label& label) {
    auto c = normalize(label.bare());
    if (c.size() != 1 || label.is_affine()) throw UnknownLabel(to_string(label));
    Label l = c.front();
    auto aff = build_affine(Label{l.family, l.rank, 1});
    Int sum = 0;
    for (Int x : aff->comarks) sum += x;
    if (sum != dual_coxeter_table(l))
        throw InternalError("comark sum disagrees with table for " + to_string(l));
    return sum;
}

Int lie_algebra_dimension(const Label& label) { return build_finite(label).dim_g; }

Int weyl_group_order(const Label& label) {
    auto c = normalize(label.bare());
    if (c.size() != 1 || label.is_affine()) throw UnknownLabel(to_string(label));
    const Label l = c.front();
    const Int n = l.rank;
    Int fact = 1;
    for (Int i = 2; i <= n; ++i) fact *= i;
    switch (l.family) {
        case 'A': return fact * (n + 1);
        case 'B':
        case 'C': return fact * (Int(1) << n);
        case 'D': return fact * (Int(1) << (n - 1));
        case 'E': return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
        case 'F': return 1152;
        case 'G': return 12;
    }
    throw UnknownLabel(to_string(l));
}

Vec reflect(const Vec& v, const Vec& alpha, const RatMatrix& form) {
    Rat c = Rat(2) * dot(alpha, form, v) / dot(alpha, form, alpha);
    if (c.denominator() != 1) throw InternalError("non-integral reflection coefficient");
    Vec out = v;
    const Int k = c.numerator();
    for (size_t i = 0; i < out.size(); ++i) out[i] -= k * alpha[i];
    return out;
}

ClosureResult root_closure(const RatMatrix& form, const std::vector<Vec>& seed,
                           std::optional<Int> bound) {
    ClosureResult res;
    std::vector<Vec> members;
    std::deque<Vec> todo;
    auto within = [&](const Vec& v) {
        if (!bound) return true;
        for (Int x : v)
            if (x > *bound || x < -*bound) return false;
        return true;
    };
    auto add = [&](const Vec& v) {
        if (!within(v)) {
            res.truncated = true;
            return;
        }
        if (res.roots.insert(v).second) {
            members.push_back(v);
            todo.push_back(v);
        }
    };
    for (const Vec& v : seed) {
        add(v);
        Vec neg = v;
        for (Int& x : neg) x = -x;
        add(neg);
    }
    while (!todo.empty()) {
        Vec v = todo.front();
        todo.pop_front();
        const size_t count = members.size();
        for (size_t i = 0; i < count; ++i) {
            add(reflect(members[i], v, form));
            add(reflect(v, members[i], form));
        }
    }
    return res;
}

bool is_finite_closed(const std::set<Vec>& roots, const std::set<Vec>& ambient) {
    for (const Vec& a : roots)
        for (const Vec& b : roots) {
            Vec s = a;
            for (size_t i = 0; i < s.size(); ++i) s[i] += b[i];
            if (ambient.count(s) && !roots.count(s)) return false;
        }
    return true;
}

}  // namespace kmroots
