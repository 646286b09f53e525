#include <algorithm>
#include <set>

#include "kmroots/classifier.hpp"
#include "kmroots/errors.hpp"

namespace kmroots {

namespace {

bool is_prime(Int n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Int power(Int b, int e) {
    Int r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

Int binom(int n, int k) {
    Int r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

const char* const kPrimeNames[] = {"p", "q", "r", "s", "t", "u"};

}  // namespace

std::string IndexFormula::str() const {
    if (infinite) return "Infinite";
    if (primes.empty()) return std::to_string(coefficient);
    std::string s = coefficient == 1 ? "" : std::to_string(coefficient) + "·";
    std::string cond;
    for (size_t i = 0; i < primes.size(); ++i) {
        const std::string name = kPrimeNames[i % 6];
        if (i) s += "·";
        s += name;
        if (primes[i].exponent != 1) s += "^" + std::to_string(primes[i].exponent);
        if (primes[i].excluded) cond += ", " + name + "≠" + std::to_string(primes[i].excluded);
    }
    return s + cond;
}

std::vector<Int> IndexFormula::values(Int bound, Int max_prime) const {
    if (infinite) return {};
    std::set<Int> out;
    auto rec = [&](auto&& self, size_t i, Int acc) -> void {
        if (acc > bound) return;
        if (i == primes.size()) {
            out.insert(acc);
            return;
        }
        for (Int p = 2; p <= max_prime; ++p) {
            if (!is_prime(p) || p == primes[i].excluded) continue;
            const Int f = power(p, primes[i].exponent);
            if (f > bound / acc + 1) break;
            self(self, i + 1, acc * f);
        }
    };
    rec(rec, 0, coefficient);
    return {out.begin(), out.end()};
}

bool IndexFormula::matches(const Index& v) const {
    if (infinite || v.infinite()) return infinite && v.infinite();
    const Int x = *v.value;
    if (primes.empty()) return x == coefficient;
    const auto vals = values(x, x);
    return std::binary_search(vals.begin(), vals.end(), x);
}

IndexFormula IndexFormula::operator*(const IndexFormula& o) const {
    if (infinite || o.infinite) return inf();
    IndexFormula r{false, coefficient * o.coefficient, primes};
    r.primes.insert(r.primes.end(), o.primes.begin(), o.primes.end());
    return r;
}

bool IndexFormula::operator==(const IndexFormula& o) const {
    if (infinite != o.infinite || coefficient != o.coefficient || primes.size() != o.primes.size()) return false;
    for (size_t i = 0; i < primes.size(); ++i)
        if (primes[i].exponent != o.primes[i].exponent || primes[i].excluded != o.primes[i].excluded) return false;
    return true;
}

std::string to_string(EntryKind k) {
    switch (k) {
        case EntryKind::indecomposable: return "indecomposable";
        case EntryKind::decomposable: return "decomposable";
        case EntryKind::lower_rank: return "lower-rank";
        case EntryKind::composite: return "composite";
    }
    return "";
}

namespace {

// Normalized components; alias decorations are dropped unless `mark` is set.
Components part(char family, int rank, int twist, LengthClass mark = LengthClass::unmarked) {
    Components c = normalize(Label{family, rank, twist, LengthClass::unmarked});
    for (Label& l : c) l.length = mark;
    return c;
}

Components sum(Components a, const Components& b) {
    a.insert(a.end(), b.begin(), b.end());
    sort_components(a);
    return a;
}

struct Builder {
    Label ambient;
    std::vector<ClassificationEntry> rows;

    void add(Components sub, IndexFormula idx, EntryKind kind, bool inferred = false) {
        sort_components(sub);
        for (const auto& r : rows)
            if (r.sub == sub && r.index == idx) return;
        rows.push_back({ambient, std::move(sub), idx, kind, inferred});
    }
    void same(int exponent, Int excluded = 0) {
        add({ambient.bare()}, IndexFormula::prime_power(exponent, excluded), EntryKind::indecomposable);
    }
    void ind(Components sub, Int index) { add(std::move(sub), IndexFormula::constant(index), EntryKind::indecomposable); }
    void dec(Components sub, Int index, bool inferred = false) {
        add(std::move(sub), IndexFormula::constant(index), EntryKind::decomposable, inferred);
    }
    void lower(Components sub) { add(std::move(sub), IndexFormula::inf(), EntryKind::lower_rank); }
};

constexpr auto S = LengthClass::short_roots;
constexpr auto L = LengthClass::long_roots;

[[noreturn]] void out_of_range(const Label& l) { throw OutOfTableRange(to_string(l)); }

void untwisted(Builder& b) {
    const int n = b.ambient.rank;
    switch (b.ambient.family) {
        case 'A':
            b.same(n);
            if (n >= 2) b.lower(part('A', n - 1, 1));
            for (int k = 1; k <= n - 2; ++k) b.lower(sum(part('A', k, 1), part('A', n - 1 - k, 1)));
            break;
        case 'B':
            if (n < 3) out_of_range(b.ambient);
            b.same(n);
            b.ind(part('D', n, 1), 2);
            for (int m = 1; m <= n - 2; ++m) b.dec(sum(part('B', m, 1), part('D', n - m, 1)), 4 * binom(n, m));
            b.lower(part('B', n - 1, 1));
            break;
        case 'C':
            if (n < 2) out_of_range(b.ambient);
            b.same(n);
            for (int m = 1; m <= n - 1; ++m) b.dec(sum(part('C', m, 1), part('C', n - m, 1)), binom(n, m));
            b.lower(part('A', n - 1, 1));
            break;
        case 'D':
            if (n < 4) out_of_range(b.ambient);
            b.same(n);
            for (int m = 2; m <= n - 2; ++m) b.dec(sum(part('D', m, 1), part('D', n - m, 1)), 4 * binom(n, m));
            b.lower(part('A', n - 1, 1));
            break;
        case 'E':
            if (n == 6) {
                b.same(6);
                b.dec(sum(part('A', 5, 1), part('A', 1, 1)), 72);
                b.dec(sum(part('A', 2, 1), sum(part('A', 2, 1), part('A', 2, 1))), 720);
                b.lower(part('D', 5, 1));
            } else if (n == 7) {
                b.ind(part('A', 7, 1), 144);
                b.same(7);
                b.dec(sum(part('D', 6, 1), part('A', 1, 1)), 126);
                b.dec(sum(part('A', 5, 1), part('A', 2, 1)), 2016);
                b.lower(part('E', 6, 1));
            } else {
                b.ind(part('A', 8, 1), 5760);
                b.ind(part('D', 8, 1), 270);
                b.same(8);
                b.dec(sum(part('E', 7, 1), part('A', 1, 1)), 240);
                b.dec(sum(part('E', 6, 1), part('A', 2, 1)), 6720);
                b.dec(sum(part('A', 4, 1), part('A', 4, 1)), 241920);
            }
            break;
        case 'F':
            b.ind(part('B', 4, 1), 3);
            b.same(4);
            b.dec(sum(part('A', 2, 1, S), part('A', 2, 1, L)), 96);
            b.dec(sum(part('C', 3, 1), part('A', 1, 1, L)), 384);
            break;
        case 'G':
            b.ind(part('A', 2, 1, L), 2);
            b.same(2);
            b.dec(sum(part('A', 1, 1, S), part('A', 1, 1, L)), 6);
            break;
        default: out_of_range(b.ambient);
    }
}

void twisted(Builder& b) {
    const Label& a = b.ambient;
    if (a.family == 'A' && a.rank % 2 == 0) {
        const int n = a.rank / 2;
        b.same(n, 2);
        if (n == 1) {
            b.ind(part('A', 1, 1, S), 2);
            b.ind(part('A', 1, 1, L), 2);
            return;
        }
        b.ind(part('A', 2 * n - 1, 2), 2);
        b.ind(part('B', n, 1), power(2, n + 1));
        if (n == 2) b.ind(part('D', 3, 2), 2);
        for (int m = 1; m <= n - 1; ++m)
            b.dec(sum(part('A', 2 * m, 2), part('A', 2 * n - 2 * m - 1, 2)), 2 * binom(n, m));
        for (int m = 2; m <= n - 1; ++m)
            b.dec(sum(part('D', m, 1), part('A', 2 * n - 2 * m, 2)), power(2, m + 2) * binom(n, m));
        // The source row leaves its binomial parameter free; m = 2 is the
        // rank of the first summand.
        if (n >= 3) b.dec(sum(part('D', 3, 2, L), part('A', 2 * n - 4, 2)), 2 * binom(n, 2), true);
    } else if (a.family == 'A') {
        const int n = (a.rank + 1) / 2;
        if (n < 3) out_of_range(a);
        b.same(n, 2);
        b.ind(part('C', n, 1), power(2, n - 1));
        for (int m = 1; m <= n - 1; ++m)
            b.dec(sum(part('A', 2 * m - 1, 2), part('A', 2 * n - 2 * m - 1, 2)), 2 * binom(n, m));
        b.lower(part('A', n - 1, 1));
    } else if (a.family == 'D' && a.twist == 2) {
        const int n = a.rank - 1;
        if (n < 2) out_of_range(a);
        b.same(n, 2);
        b.ind(part('B', n, 1), 2);
        if (n == 2) b.ind(part('C', 2, 1), 2);
        for (int m = 1; m <= n - 2; ++m)
            b.dec(sum(part('D', n - m, 1), part('D', m + 1, 2)), 4 * binom(n, m));
        b.lower(part('D', n, 2));
    } else if (a.family == 'E') {
        b.same(4, 2);
        b.ind(part('F', 4, 1), 4);
        b.ind(part('C', 4, 1), 24);
        b.dec(sum(part('A', 5, 2), part('A', 1, 1, L)), 24);
    } else if (a.family == 'D' && a.twist == 3) {
        b.same(2, 3);
        b.ind(part('G', 2, 1), 3);
        b.ind(part('A', 2, 1, S), 2);
        b.dec(sum(part('A', 1, 1, S), part('A', 1, 1, L)), 6);
    } else {
        out_of_range(a);
    }
}

}  // namespace

std::vector<ClassificationEntry> table_maximal(const Label& ambient) {
    if (!ambient.is_affine() || !is_canonical(ambient)) out_of_range(ambient);
    Builder b{ambient.bare(), {}};
    if (ambient.twist == 1)
        untwisted(b);
    else
        twisted(b);
    return b.rows;
}

bool type_matches(const Components& table, const Components& found) {
    if (table.size() != found.size()) return false;
    std::vector<int> perm(found.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    do {
        bool ok = true;
        for (size_t i = 0; i < table.size() && ok; ++i) {
            const Label& t = table[i];
            const Label& f = found[perm[i]];
            ok = t.bare() == f.bare() && (t.length == LengthClass::unmarked || t.length == f.length);
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace kmroots
