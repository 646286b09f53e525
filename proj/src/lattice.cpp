#include "kmroots/lattice.hpp"

#include <algorithm>
#include <cstdlib>

#include "kmroots/errors.hpp"

namespace kmroots {

namespace {

Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw InternalError("lattice arithmetic overflow");
    return r;
}

Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw InternalError("lattice arithmetic overflow");
    return r;
}

void axpy(std::vector<Int>& row, Int q, const std::vector<Int>& piv) {
    if (q == 0) return;
    for (size_t k = 0; k < row.size(); ++k) row[k] = checked_sub(row[k], checked_mul(q, piv[k]));
}

Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

}  // namespace

IntMatrix hermite_normal_form(IntMatrix rows) {
    rows.erase(std::remove_if(rows.begin(), rows.end(), is_zero), rows.end());
    if (rows.empty()) return rows;
    const size_t cols = rows.front().size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows.size(); ++c) {
        // Euclid on column c among rows r.. until a single nonzero remains.
        while (true) {
            size_t best = rows.size();
            for (size_t i = r; i < rows.size(); ++i)
                if (rows[i][c] != 0 && (best == rows.size() || std::llabs(rows[i][c]) < std::llabs(rows[best][c])))
                    best = i;
            if (best == rows.size()) break;
            std::swap(rows[r], rows[best]);
            bool done = true;
            for (size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                axpy(rows[i], rows[i][c] / rows[r][c], rows[r]);
                if (rows[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (rows[r][c] == 0) continue;
        if (rows[r][c] < 0)
            for (Int& x : rows[r]) x = -x;
        for (size_t i = 0; i < r; ++i) axpy(rows[i], floor_div(rows[i][c], rows[r][c]), rows[r]);
        ++r;
    }
    rows.resize(r);
    return rows;
}

std::optional<Vec> Lattice::coordinates(const Vec& v) const {
    if (static_cast<int>(v.size()) != ambient_dim) throw DimensionMismatch("lattice vector length");
    Vec rest = v;
    Vec coef(basis.size(), 0);
    for (size_t k = 0; k < basis.size(); ++k) {
        size_t p = 0;
        while (basis[k][p] == 0) ++p;
        if (rest[p] % basis[k][p] != 0) return std::nullopt;
        coef[k] = rest[p] / basis[k][p];
        axpy(rest, coef[k], basis[k]);
    }
    if (!is_zero(rest)) return std::nullopt;
    return coef;
}

bool Lattice::contains(const Vec& v) const { return coordinates(v).has_value(); }

Lattice lattice_from_roots(const std::vector<Vec>& roots, int ambient_dim) {
    if (ambient_dim < 0) {
        if (roots.empty()) throw DimensionMismatch("cannot infer dimension of an empty set");
        ambient_dim = static_cast<int>(roots.front().size());
    }
    for (const Vec& v : roots)
        if (static_cast<int>(v.size()) != ambient_dim) throw DimensionMismatch("generator length");
    return Lattice{ambient_dim, hermite_normal_form(roots)};
}

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
    IntMatrix rows = a.basis;
    rows.insert(rows.end(), b.basis.begin(), b.basis.end());
    return Lattice{a.ambient_dim, hermite_normal_form(rows)};
}

bool lattice_contains(const Lattice& big, const Lattice& small) {
    for (const Vec& v : small.basis)
        if (!big.contains(v)) return false;
    return true;
}

namespace {

RatMatrix coefficient_matrix(const Lattice& whole, const Lattice& sub) {
    RatMatrix m;
    for (const Vec& v : sub.basis) {
        auto c = whole.coordinates(v);
        if (!c) throw NotASublattice("generator outside the ambient lattice");
        std::vector<Rat> row;
        for (Int x : *c) row.emplace_back(x);
        m.push_back(row);
    }
    return m;
}

}  // namespace

Index sublattice_index(const Lattice& whole, const Lattice& sub) {
    RatMatrix m = coefficient_matrix(whole, sub);
    if (sub.rank() < whole.rank()) return Index::inf();
    Rat d = determinant(m);
    if (d.denominator() != 1) throw InternalError("non-integral lattice determinant");
    return Index::of(std::llabs(d.numerator()));
}

std::vector<Int> quotient_invariants(const Lattice& whole, const Lattice& sub) {
    RatMatrix rm = coefficient_matrix(whole, sub);
    if (sub.rank() < whole.rank()) throw NotASublattice("quotient is infinite");
    const size_t n = rm.size();
    IntMatrix m(n, std::vector<Int>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m[i][j] = rm[i][j].numerator();
    // Smith normal form by alternating row and column Euclid steps.
    for (size_t t = 0; t < n; ++t) {
        while (true) {
            size_t bi = n, bj = n;
            for (size_t i = t; i < n; ++i)
                for (size_t j = t; j < n; ++j)
                    if (m[i][j] != 0 && (bi == n || std::llabs(m[i][j]) < std::llabs(m[bi][bj]))) {
                        bi = i;
                        bj = j;
                    }
            if (bi == n) break;
            std::swap(m[t], m[bi]);
            for (auto& row : m) std::swap(row[t], row[bj]);
            bool clean = true;
            for (size_t i = t + 1; i < n; ++i) {
                Int q = m[i][t] / m[t][t];
                for (size_t j = t; j < n; ++j) m[i][j] = checked_sub(m[i][j], checked_mul(q, m[t][j]));
                if (m[i][t] != 0) clean = false;
            }
            for (size_t j = t + 1; j < n; ++j) {
                Int q = m[t][j] / m[t][t];
                for (size_t i = t; i < n; ++i) m[i][j] = checked_sub(m[i][j], checked_mul(q, m[i][t]));
                if (m[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            // Divisibility: fold any entry not divisible by the pivot into row t.
            bool divisible = true;
            for (size_t i = t + 1; i < n && divisible; ++i)
                for (size_t j = t + 1; j < n && divisible; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        for (size_t k = t; k < n; ++k) m[t][k] += m[i][k];
                        divisible = false;
                    }
            if (divisible) break;
        }
    }
    std::vector<Int> out;
    for (size_t i = 0; i < n; ++i) {
        Int d = std::llabs(m[i][i]);
        if (d != 1) out.push_back(d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vec> intersect_with_roots(const AffineRootSystem& sys, const Lattice& sub, Int m_max) {
    if (sub.ambient_dim != sys.size()) throw NotASublattice("dimension differs from the ambient system");
    std::vector<Vec> out;
    for (const Vec& v : enumerate_roots(sys, m_max))
        if (sub.contains(v)) out.push_back(v);
    return out;
}

}  // namespace kmroots
