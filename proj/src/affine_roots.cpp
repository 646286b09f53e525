#include "kmroots/affine_roots.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "kmroots/errors.hpp"

namespace kmroots {

const char* to_string(RootKind k) {
    switch (k) {
        case RootKind::not_a_root: return "not_a_root";
        case RootKind::imaginary: return "imaginary";
        case RootKind::real_short: return "real_short";
        case RootKind::real_middle: return "real_middle";
        case RootKind::real_long: return "real_long";
    }
    return "?";
}

Vec AffineRootSystem::projection(const Vec& v) const {
    Vec p = v;
    const Int lv = v[0];
    for (size_t i = 0; i < p.size(); ++i) p[i] -= lv * delta[i];
    return p;
}

RootKind AffineRootSystem::length_kind(const Rat& n) const {
    auto it = std::find(lengths.begin(), lengths.end(), n);
    if (it == lengths.end()) return RootKind::not_a_root;
    const size_t idx = static_cast<size_t>(it - lengths.begin());
    if (idx + 1 == lengths.size()) return RootKind::real_long;
    if (idx == 0) return RootKind::real_short;
    return RootKind::real_middle;
}

std::vector<Vec> AffineRootSystem::simple_roots() const {
    std::vector<Vec> out;
    for (int i = 0; i < size(); ++i) {
        Vec e(size(), 0);
        e[i] = 1;
        out.push_back(e);
    }
    return out;
}

int AffineRootSystem::finite_index(const Vec& f) const {
    auto it = finite_lookup.find(f);
    return it == finite_lookup.end() ? -1 : it->second;
}

namespace {

std::shared_ptr<AffineRootSystem> construct(const Label& label) {
    auto sys = std::make_shared<AffineRootSystem>();
    sys->label = label;
    sys->twist = label.twist;
    const int l = label.nodes() - 1;
    char ffam = label.family;
    using S = AffineRootSystem::Scheme;
    if (label.twist == 1) {
        sys->scheme = S::untwisted;
    } else if (label.twist == 3) {
        sys->scheme = S::twisted;
        ffam = 'G';
    } else if (label.family == 'E') {
        sys->scheme = S::twisted;
        ffam = 'F';
    } else if (label.family == 'A' && label.rank % 2 == 1) {
        sys->scheme = S::twisted;
        ffam = 'C';
    } else if (label.family == 'A') {
        sys->scheme = S::twisted_even;
        ffam = 'B';
    } else {
        sys->scheme = S::twisted;
        ffam = 'B';
    }
    sys->finite = build_finite_from_cartan(underlying_finite(label), finite_cartan(ffam, l));
    const FiniteRootSystem& fin = sys->finite;

    // Finite-part direction of node 0, as minus a multiple of a dominant root.
    Vec top;
    Int mult = 1;
    switch (sys->scheme) {
        case S::untwisted: top = fin.highest_root; break;
        case S::twisted: top = fin.highest_short_root; break;
        case S::twisted_even:
            top = fin.highest_short_root;
            mult = 2;
            break;
    }
    std::vector<Vec> dirs;
    Vec d0 = top;
    for (Int& x : d0) x *= -mult;
    dirs.push_back(d0);
    for (int i = 0; i < l; ++i) {
        Vec e(l, 0);
        e[i] = 1;
        dirs.push_back(e);
    }
    const int n = l + 1;
    sys->cartan.assign(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat v = Rat(2) * dot(dirs[i], fin.form, dirs[j]) / dot(dirs[i], fin.form, dirs[i]);
            if (v.denominator() != 1) throw InternalError("non-integral affine Cartan entry");
            sys->cartan[i][j] = v.numerator();
        }
    sys->form = form_from_cartan(sys->cartan);
    sys->marks.assign(n, 1);
    for (int i = 0; i < l; ++i) sys->marks[i + 1] = mult * top[i];
    sys->delta = sys->marks;
    for (int i = 0; i < n; ++i) {
        Int s = 0;
        for (int j = 0; j < n; ++j) s += sys->cartan[i][j] * sys->marks[j];
        if (s != 0) throw InternalError("marks are not a null vector for " + to_string(label));
    }
    // Comarks are proportional to a_i (a_i|a_i); primitive integral scaling.
    std::vector<Rat> co(n);
    for (int i = 0; i < n; ++i) co[i] = Rat(sys->marks[i]) * sys->form[i][i];
    Int den = 1;
    for (auto& c : co) den = std::lcm(den, c.denominator());
    Int g = 0;
    for (auto& c : co) g = std::gcd(g, (c * den).numerator());
    for (auto& c : co) sys->comarks.push_back((c * den).numerator() / g);

    // Finite-part lookup, with lengths measured in the affine form.
    auto lift = [&](const Vec& f) {
        Vec v(n, 0);
        for (int i = 0; i < l; ++i) v[i + 1] = f[i];
        return v;
    };
    Rat longest = 0;
    for (size_t i = 0; i < fin.all_roots.size(); ++i) {
        sys->finite_lookup.emplace(fin.all_roots[i], static_cast<int>(i));
        longest = std::max(longest, sys->norm(lift(fin.all_roots[i])));
    }
    sys->finite_long_norm = longest;
    std::set<Rat> lens;
    for (const Vec& f : fin.all_roots) {
        const Rat nf = sys->norm(lift(f));
        sys->finite_is_long.push_back(nf == longest && l > 0 &&
                                      sys->scheme == S::twisted ? 1 : 0);
        lens.insert(nf);
    }
    for (int i = 0; i < n; ++i) lens.insert(sys->form[i][i]);
    sys->lengths.assign(lens.begin(), lens.end());
    return sys;
}

}  // namespace

AffinePtr build_affine(const Label& label) {
    auto norm = normalize(label.bare());
    if (norm.size() != 1 || !norm.front().is_affine())
        throw UnknownLabel(to_string(label) + " is not an indecomposable affine type");
    const Label canon = norm.front().bare();
    static std::mutex mu;
    static std::map<std::string, AffinePtr> cache;
    const std::string key = to_string(canon);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    AffinePtr built = construct(canon);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, built).first->second;
}

RootKind is_root(const AffineRootSystem& sys, const Vec& v) {
    if (static_cast<int>(v.size()) != sys.size())
        throw DimensionMismatch("expected " + std::to_string(sys.size()) + " coordinates");
    const Int lv = v[0];
    Vec p = sys.projection(v);
    bool zero = std::all_of(p.begin(), p.end(), [](Int x) { return x == 0; });
    if (zero) return lv != 0 ? RootKind::imaginary : RootKind::not_a_root;
    Vec f(p.begin() + 1, p.end());
    const int idx = sys.finite_index(f);
    using S = AffineRootSystem::Scheme;
    if (idx >= 0) {
        if (sys.scheme == S::twisted && sys.finite_is_long[idx] && lv % sys.twist != 0)
            return RootKind::not_a_root;
        return sys.length_kind(sys.norm(v));
    }
    if (sys.scheme == S::twisted_even && lv % 2 != 0) {
        for (Int& x : f) {
            if (x % 2 != 0) return RootKind::not_a_root;
            x /= 2;
        }
        const int h = sys.finite_index(f);
        if (h >= 0 && sys.norm(sys.projection(v)) == sys.lengths.back())
            return RootKind::real_long;
    }
    return RootKind::not_a_root;
}

std::vector<Vec> enumerate_real_roots(const AffineRootSystem& sys, Int m_max) {
    std::vector<Vec> out;
    const int n = sys.size();
    using S = AffineRootSystem::Scheme;
    const Rat shortest_finite = sys.lengths.front();
    for (Int m = -m_max; m <= m_max; ++m) {
        for (size_t i = 0; i < sys.finite.all_roots.size(); ++i) {
            const Vec& f = sys.finite.all_roots[i];
            Vec v(n, 0);
            for (int j = 0; j + 1 < n; ++j) v[j + 1] = f[j];
            Vec base = v;
            if (!(sys.scheme == S::twisted && sys.finite_is_long[i] && m % sys.twist != 0)) {
                for (int j = 0; j < n; ++j) v[j] += m * sys.delta[j];
                out.push_back(v);
            }
            if (sys.scheme == S::twisted_even && m % 2 != 0 && sys.norm(base) == shortest_finite) {
                Vec w(n, 0);
                for (int j = 0; j < n; ++j) w[j] = 2 * base[j] + m * sys.delta[j];
                out.push_back(w);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vec> enumerate_roots(const AffineRootSystem& sys, Int m_max) {
    auto out = enumerate_real_roots(sys, m_max);
    for (Int m = -m_max; m <= m_max; ++m) {
        if (m == 0) continue;
        Vec v = sys.delta;
        for (Int& x : v) x *= m;
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace kmroots
