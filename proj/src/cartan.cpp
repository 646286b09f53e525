#include "kmroots/cartan.hpp"

#include <algorithm>
#include <queue>

#include "kmroots/errors.hpp"

namespace kmroots {

IntMatrix finite_cartan(char family, int n) {
    if (n < 1) throw UnknownLabel(std::string(1, family) + std::to_string(n));
    IntMatrix a(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto link = [&](int i, int j, int aij = -1, int aji = -1) {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    switch (family) {
        case 'A':
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            break;
        case 'B':
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
            if (n >= 2) link(n - 2, n - 1, -1, -2);  // last node short
            break;
        case 'C':
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
            if (n >= 2) link(n - 2, n - 1, -2, -1);  // last node long
            break;
        case 'D':
            if (n < 2) throw UnknownLabel("D" + std::to_string(n));
            for (int i = 0; i + 3 < n; ++i) link(i, i + 1);
            if (n >= 3) {
                link(n - 3, n - 2);
                link(n - 3, n - 1);
            }
            break;
        case 'E':
            if (n < 6 || n > 8) throw UnknownLabel("E" + std::to_string(n));
            // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4.
            link(0, 2);
            link(1, 3);
            for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
            break;
        case 'F':
            if (n != 4) throw UnknownLabel("F" + std::to_string(n));
            link(0, 1);
            link(1, 2, -1, -2);  // nodes 1,2 long; 3,4 short
            link(2, 3);
            break;
        case 'G':
            if (n != 2) throw UnknownLabel("G" + std::to_string(n));
            link(0, 1, -3, -1);  // node 1 short
            break;
        default: throw UnknownLabel(std::string(1, family) + std::to_string(n));
    }
    return a;
}

bool is_gcm(const IntMatrix& a) {
    const size_t n = a.size();
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != n || a[i][i] != 2) return false;
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (a[i][j] > 0) return false;
            if ((a[i][j] == 0) != (a[j][i] == 0)) return false;
        }
    }
    return true;
}

std::vector<std::vector<int>> connected_blocks(const IntMatrix& a) {
    const int n = static_cast<int>(a.size());
    std::vector<int> seen(n, 0);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> block;
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int i = q.front();
            q.pop();
            block.push_back(i);
            for (int j = 0; j < n; ++j)
                if (!seen[j] && (a[i][j] != 0 || a[j][i] != 0)) {
                    seen[j] = 1;
                    q.push(j);
                }
        }
        std::sort(block.begin(), block.end());
        out.push_back(block);
    }
    return out;
}

std::vector<Rat> symmetrizer(const IntMatrix& a) {
    if (!is_gcm(a)) throw InvalidGCM("not a generalized Cartan matrix");
    const int n = static_cast<int>(a.size());
    std::vector<Rat> d(n, Rat(0));
    for (const auto& block : connected_blocks(a)) {
        d[block.front()] = 1;
        std::queue<int> q;
        q.push(block.front());
        while (!q.empty()) {
            int i = q.front();
            q.pop();
            for (int j : block) {
                if (j == i || a[i][j] == 0) continue;
                Rat dj = d[i] * Rat(a[i][j]) / Rat(a[j][i]);
                if (d[j] == Rat(0)) {
                    d[j] = dj;
                    q.push(j);
                } else if (d[j] != dj) {
                    throw InvalidGCM("matrix is not symmetrizable");
                }
            }
        }
        Rat top(0);
        for (int i : block) top = std::max(top, d[i]);
        for (int i : block) d[i] = d[i] * Rat(2) / top;
    }
    return d;
}

RatMatrix form_from_cartan(const IntMatrix& a) {
    auto d = symmetrizer(a);
    const size_t n = a.size();
    RatMatrix f(n, std::vector<Rat>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) f[i][j] = d[i] * Rat(a[i][j]) / Rat(2);
    return f;
}

IntMatrix principal_submatrix(const IntMatrix& a, const std::vector<int>& nodes) {
    IntMatrix s(nodes.size(), std::vector<Int>(nodes.size()));
    for (size_t i = 0; i < nodes.size(); ++i)
        for (size_t j = 0; j < nodes.size(); ++j) s[i][j] = a[nodes[i]][nodes[j]];
    return s;
}

Rat dot(const Vec& u, const RatMatrix& form, const Vec& v) {
    Rat s = 0;
    for (size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0) continue;
        Rat row = 0;
        for (size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) row += form[i][j] * Rat(v[j]);
        s += Rat(u[i]) * row;
    }
    return s;
}

Rat determinant(RatMatrix m) {
    const size_t n = m.size();
    Rat det = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m[p][c] == Rat(0)) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == Rat(0)) continue;
            Rat f = m[r][c] / m[c][c];
            for (size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

DefiniteType classify_connected(const IntMatrix& a) {
    // Positive definite iff every leading principal minor is positive.
    // A connected symmetrizable GCM that is not finite is affine exactly when
    // the form is singular and every proper principal minor is positive;
    // for connected diagrams it suffices to drop any single node.
    RatMatrix f = form_from_cartan(a);
    const size_t n = f.size();
    bool definite = true;
    for (size_t k = 1; k <= n && definite; ++k) {
        RatMatrix lead(k, std::vector<Rat>(k));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) lead[i][j] = f[i][j];
        if (determinant(lead) <= Rat(0)) definite = false;
    }
    if (definite) return DefiniteType::finite;
    if (determinant(f) != Rat(0)) return DefiniteType::indefinite;
    for (size_t drop = 0; drop < n; ++drop) {
        std::vector<int> keep;
        for (size_t i = 0; i < n; ++i)
            if (i != drop) keep.push_back(static_cast<int>(i));
        IntMatrix sub = principal_submatrix(a, keep);
        for (const auto& block : connected_blocks(sub))
            if (classify_connected(principal_submatrix(sub, block)) != DefiniteType::finite)
                return DefiniteType::indefinite;
    }
    return DefiniteType::affine;
}

}  // namespace kmroots
