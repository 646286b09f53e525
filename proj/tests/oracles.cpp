#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace oracle {

using namespace kmroots;

namespace {

struct Tables {
    std::vector<Vec> roots;
    std::vector<std::vector<Rat>> inner;
    std::vector<std::vector<int>> reflect;  // index of s_i(r_j)
    std::vector<std::vector<char>> diff_is_root;
    std::vector<std::vector<int>> sum;  // -1 when r_i + r_j is not a root
};

int find_root(const std::vector<Vec>& roots, const Vec& v) {
    auto it = std::find(roots.begin(), roots.end(), v);
    return it == roots.end() ? -1 : static_cast<int>(it - roots.begin());
}

Tables make_tables(const FiniteRootSystem& f) {
    Tables t;
    t.roots = f.all_roots;
    const size_t n = t.roots.size();
    t.inner.assign(n, std::vector<Rat>(n));
    t.reflect.assign(n, std::vector<int>(n, -1));
    t.diff_is_root.assign(n, std::vector<char>(n, 0));
    t.sum.assign(n, std::vector<int>(n, -1));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) t.inner[i][j] = dot(t.roots[i], f.form, t.roots[j]);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            const Rat c = Rat(2) * t.inner[i][j] / t.inner[i][i];
            Vec v = t.roots[j], d = t.roots[j], s = t.roots[j];
            for (size_t k = 0; k < v.size(); ++k) {
                v[k] -= c.numerator() * t.roots[i][k];
                d[k] -= t.roots[i][k];
                s[k] += t.roots[i][k];
            }
            t.reflect[i][j] = find_root(t.roots, v);
            t.diff_is_root[i][j] = find_root(t.roots, d) >= 0;
            t.sum[i][j] = find_root(t.roots, s);
        }
    return t;
}

std::vector<char> generated(const Tables& t, const std::vector<int>& gens) {
    std::vector<char> in(t.roots.size(), 0);
    std::vector<int> todo;
    for (int g : gens) {
        in[g] = 1;
        todo.push_back(g);
    }
    while (!todo.empty()) {
        const int x = todo.back();
        todo.pop_back();
        for (int g : gens) {
            const int y = t.reflect[g][x];
            if (!in[y]) {
                in[y] = 1;
                todo.push_back(y);
            }
        }
    }
    return in;
}

bool closed(const Tables& t, const std::vector<char>& in) {
    for (size_t i = 0; i < in.size(); ++i)
        for (size_t j = 0; j < in.size(); ++j)
            if (in[i] && in[j] && t.sum[i][j] >= 0 && !in[t.sum[i][j]]) return false;
    return true;
}

bool independent(const Tables& t, const std::vector<int>& set) {
    RatMatrix gram;
    for (int a : set) {
        std::vector<Rat> row;
        for (int b : set) row.push_back(t.inner[a][b]);
        gram.push_back(row);
    }
    return determinant(gram) > Rat(0);
}

}  // namespace

std::set<std::string> brute_force_maximal_types(const Label& label) {
    const FiniteRootSystem f = build_finite(label);
    const Tables t = make_tables(f);
    const int n = static_cast<int>(t.roots.size());
    std::map<std::vector<char>, std::vector<int>> found;

    std::vector<int> current;
    auto extend = [&](auto&& self, int from) -> void {
        if (!current.empty()) found.emplace(generated(t, current), current);
        for (int c = from; c < n; ++c) {
            bool ok = true;
            for (int a : current)
                if (t.inner[a][c] > Rat(0) || t.diff_is_root[a][c]) ok = false;
            if (!ok) continue;
            current.push_back(c);
            if (independent(t, current)) self(self, c + 1);
            current.pop_back();
        }
    };
    extend(extend, 0);

    auto size = [](const std::vector<char>& s) { return std::count(s.begin(), s.end(), 1); };
    auto inside = [](const std::vector<char>& a, const std::vector<char>& b) {
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] && !b[i]) return false;
        return true;
    };
    std::set<std::string> out;
    for (auto it = found.begin(); it != found.end();)
        it = closed(t, it->first) ? std::next(it) : found.erase(it);
    for (const auto& [set, base] : found) {
        if (size(set) == n) continue;
        bool maximal = true;
        for (const auto& [other, unused] : found)
            if (size(other) < n && size(other) > size(set) && inside(set, other)) {
                maximal = false;
                break;
            }
        if (!maximal) continue;
        std::vector<Vec> simple;
        for (int i : base) simple.push_back(t.roots[i]);
        out.insert(to_string(finite_subsystem_type(f, simple)));
    }
    return out;
}

}  // namespace oracle

namespace oracle {

using kmroots::Int;
using kmroots::IntMatrix;

namespace {

// Bareiss elimination with row swaps; exact for integer input.
__int128 det(std::vector<std::vector<__int128>> m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    __int128 prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

__int128 minor(const IntMatrix& a, unsigned mask) {
    std::vector<int> idx;
    for (size_t i = 0; i < a.size(); ++i)
        if (mask >> i & 1) idx.push_back(static_cast<int>(i));
    std::vector<std::vector<__int128>> m(idx.size(), std::vector<__int128>(idx.size()));
    for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = 0; j < idx.size(); ++j) m[i][j] = a[idx[i]][idx[j]];
    return det(m);
}

bool connected(const IntMatrix& a, unsigned mask) {
    if (mask == 0) return false;
    unsigned seen = mask & (~mask + 1), grow = seen;
    while (grow) {
        unsigned next = 0;
        for (size_t i = 0; i < a.size(); ++i)
            if (grow >> i & 1)
                for (size_t j = 0; j < a.size(); ++j)
                    if ((mask >> j & 1) && a[i][j] != 0 && !(seen >> j & 1)) next |= 1u << j;
        seen |= next;
        grow = next;
    }
    return seen == mask;
}

IntMatrix restrict(const IntMatrix& a, unsigned mask) {
    std::vector<int> idx;
    for (size_t i = 0; i < a.size(); ++i)
        if (mask >> i & 1) idx.push_back(static_cast<int>(i));
    IntMatrix m(idx.size(), std::vector<Int>(idx.size()));
    for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = 0; j < idx.size(); ++j) m[i][j] = a[idx[i]][idx[j]];
    return m;
}

}  // namespace

GcmType connected_type(const IntMatrix& a) {
    const unsigned full = (1u << a.size()) - 1;
    bool proper_positive = true;
    for (unsigned s = 1; s < full; ++s)
        if (minor(a, s) <= 0) proper_positive = false;
    const __int128 d = minor(a, full);
    if (proper_positive && d > 0) return GcmType::finite;
    if (proper_positive && d == 0) return GcmType::affine;
    return GcmType::indefinite;
}

bool symmetrizable(const IntMatrix& a) {
    // Simple cycles through node sequences of length >= 3, checked as closed
    // walks over distinct nodes.
    const int n = static_cast<int>(a.size());
    std::vector<int> path;
    std::vector<char> used(n, 0);
    bool ok = true;
    auto rec = [&](auto& self) -> void {
        if (!ok) return;
        const int last = path.back();
        if (path.size() >= 3 && a[last][path[0]] != 0) {
            __int128 fwd = 1, back = 1;
            for (size_t i = 0; i < path.size(); ++i) {
                const int u = path[i], v = path[(i + 1) % path.size()];
                fwd *= a[u][v];
                back *= a[v][u];
            }
            if (fwd != back) ok = false;
        }
        for (int v = path[0] + 1; v < n; ++v)
            if (!used[v] && a[last][v] != 0) {
                used[v] = 1;
                path.push_back(v);
                self(self);
                path.pop_back();
                used[v] = 0;
            }
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        used.assign(n, 0);
        used[s] = 1;
        rec(rec);
    }
    return ok;
}

bool hyperbolic(const IntMatrix& a) {
    const unsigned full = (1u << a.size()) - 1;
    if (!connected(a, full) || connected_type(a) != GcmType::indefinite) return false;
    for (unsigned s = 1; s < full; ++s)
        if (connected(a, s) && connected_type(restrict(a, s)) == GcmType::indefinite) return false;
    return true;
}

}  // namespace oracle
