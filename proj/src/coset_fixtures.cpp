#include <algorithm>
#include <functional>
#include <map>

#include "kmroots/classifier.hpp"
#include "kmroots/coset.hpp"
#include "kmroots/errors.hpp"

namespace kmroots {

namespace {

struct Entry {
    Fixture info;
    std::function<Charge()> computed;
    Charge printed;
};

const Poly K = Poly::k();

Charge ratio(const Poly& num, const Poly& den) { return Charge::make(num, den); }

Components expected_type(const std::string& text) {
    Components c = parse_components(text);
    if (text.find('.') == std::string::npos)
        for (Label& l : c) l.length = LengthClass::unmarked;
    return c;
}

std::vector<Vec> unit_vectors(int dim, const std::vector<int>& nodes) {
    std::vector<Vec> out;
    for (int n : nodes) {
        Vec v(dim, 0);
        v[n] = 1;
        out.push_back(v);
    }
    return out;
}

// Finite Levi subsystem on the given 1-based Bourbaki nodes.
std::function<Charge()> levi(const std::string& ambient, std::vector<int> nodes) {
    for (int& n : nodes) --n;
    return [=] {
        const Label g = parse_label(ambient);
        return coset_charge(finite_embedding(g, unit_vectors(g.nodes(), nodes)));
    };
}

// A maximal subsystem of the given type from the extended-diagram list.
std::function<Charge()> maximal(const std::string& ambient, const std::string& sub) {
    return [=] {
        const Label g = parse_label(ambient);
        const Components want = expected_type(sub);
        for (const auto& s : finite_maximal_subsystems(g))
            if (type_matches(want, s.type)) return coset_charge(finite_embedding(g, s.simple_roots));
        throw InternalError("no maximal subsystem " + sub + " in " + ambient);
    };
}

// A maximal-rank affine subsystem found by the search at growing bounds.
std::function<Charge()> searched(const std::string& ambient, const std::string& sub) {
    return [=] {
        const auto sys = build_affine(parse_label(ambient));
        const Components want = expected_type(sub);
        for (Int m = 2; m <= 4; ++m) {
            const SearchResult found = maximal_subsystems_search(sys, {m, 5});
            for (const auto& s : found.maximal)
                if (type_matches(want, s.type())) return twisted_coset_charge(affine_embedding(s));
            // Closed but not maximal, e.g. a summand inside a larger one.
            for (const auto& c : found.candidates)
                if (c.simple_root_condition && c.lattice_condition && type_matches(want, c.type))
                    return twisted_coset_charge(affine_embedding(make_subsystem(sys, c.base, false)));
        }
        throw InternalError("search found no " + sub + " in " + ambient);
    };
}

// Affine hull of a finite Levi subsystem on ambient nodes (0 = extra node).
std::function<Charge()> hull(const std::string& ambient, std::vector<int> nodes, const std::string& sub) {
    return [=] {
        const auto sys = build_affine(parse_label(ambient));
        const Subsystem s = affine_hull(make_subsystem(sys, unit_vectors(sys->size(), nodes), false));
        if (!type_matches(expected_type(sub), s.type()))
            throw InternalError("hull has type " + to_string(s.type()) + ", expected " + sub);
        return twisted_coset_charge(affine_embedding(s));
    };
}

// Levi subsystem of type B on ambient nodes (chain ending at the short node)
// extended by m delta minus its highest short root, the sum of its simple
// roots, with the least m giving a real root.
std::function<Charge()> short_hull(const std::string& ambient, std::vector<int> nodes, const std::string& sub) {
    return [=] {
        const auto sys = build_affine(parse_label(ambient));
        std::vector<Vec> base = unit_vectors(sys->size(), nodes);
        for (Int m = 1; m <= 4; ++m) {
            Vec v = sys->delta;
            for (Int& x : v) x *= m;
            for (int n : nodes) v[n] -= 1;
            if (!is_real(is_root(*sys, v))) continue;
            base.push_back(v);
            const Subsystem s = make_subsystem(sys, base, false);
            if (!type_matches(expected_type(sub), s.type()))
                throw InternalError("extension has type " + to_string(s.type()) + ", expected " + sub);
            return twisted_coset_charge(affine_embedding(s));
        }
        throw NoAffineExtension(sub + " in " + ambient);
    };
}

std::vector<int> range(int from, int to) {
    std::vector<int> out;
    for (int i = from; i <= to; ++i) out.push_back(i);
    return out;
}

std::string lbl(char f, int n, int twist = 0) {
    return std::string(1, f) + std::to_string(n) + (twist ? "^(" + std::to_string(twist) + ")" : "");
}

struct Registry {
    std::vector<Entry> entries;
    std::map<std::string, size_t> by_id;

    void add(std::string id, std::string printed, bool twisted, bool is_maximal, LevelClaim claim,
             std::vector<BigRat> levels, std::function<Charge()> computed, Charge printed_charge,
             bool low_confidence = false) {
        by_id[id] = entries.size();
        entries.push_back({Fixture{std::move(id), std::move(printed), twisted, is_maximal, low_confidence, claim,
                                   std::move(levels)},
                           std::move(computed), std::move(printed_charge)});
    }
};

void untwisted_classical(Registry& r) {
    using C = LevelClaim;
    for (int n = 3; n <= 6; ++n) {
        const std::string a = lbl('A', n);
        for (int m = 1; m <= n - 2; ++m)
            r.add(a + ">" + lbl('A', m) + "+" + lbl('A', n - m - 1),
                  "k((n+2k+1)(n+k(n-m)(m+1))-m(n-m-1)+(k+1)^2)/((k+n+1)(k+m+1)(k+n-m))", false, true,
                  C::no_positive_integer, {}, levi(a, [&] {
                      auto v = range(1, n);
                      v.erase(v.begin() + m);
                      return v;
                  }()),
                  ratio(K * ((n + 2 * K + 1) * (n + K * (n - m) * (m + 1)) - m * (n - m - 1) + (K + 1) * (K + 1)),
                        (K + n + 1) * (K + m + 1) * (K + n - m)));
        for (int m = 1; m <= n - 1; ++m)
            r.add(a + ">" + lbl('A', m), "k(n-m)((n+m+2)(k+1)+nm)/((k+n+1)(k+m+1))", false, m == n - 1,
                  C::no_positive_integer, {}, levi(a, range(1, m)),
                  ratio(K * (n - m) * ((n + m + 2) * (K + 1) + n * m), (K + n + 1) * (K + m + 1)));
    }
    for (int n = 3; n <= 6; ++n) {
        const std::string b = lbl('B', n);
        r.add(b + ">" + lbl('B', n - 1), "k(4n^2-8n+4kn-k+1)/((k+2n-1)(k+2n-3))", false, true, C::no_integer, {},
              levi(b, range(2, n)),
              ratio(K * (4 * n * n - 8 * n + 4 * K * n - K + 1), (K + 2 * n - 1) * (K + 2 * n - 3)));
        r.add(b + ">" + lbl('D', n), "kn(2k+2n-3)/((k+2n-1)(k+2(n-1)))", false, true, C::no_integer, {},
              maximal(b, lbl('D', n)), ratio(K * n * (2 * K + 2 * n - 3), (K + 2 * n - 1) * (K + 2 * (n - 1))));
        for (int m = 1; m <= n - 2; ++m)
            r.add(b + ">" + lbl('B', m) + "+" + lbl('D', n - m),
                  "k(n-m)(2m+1)(k-1)(2n+2k-3)/((k+2n-1)(k+2m-1)(k+2(n-m)-2))", false, true, C::exact,
                  {1, BigRat(3 - 2 * n, 2)}, maximal(b, lbl('B', m) + "+" + lbl('D', n - m)),
                  ratio(K * (n - m) * (2 * m + 1) * (K - 1) * (2 * n + 2 * K - 3),
                        (K + 2 * n - 1) * (K + 2 * m - 1) * (K + 2 * (n - m) - 2)));
    }
    for (int n = 3; n <= 6; ++n) {
        const std::string c = lbl('C', n);
        r.add(c + ">" + lbl('A', n - 1), "k(n^3+n^2k+2kn+k+n+1)/((k+n+1)(2k+n))", false, true, C::no_integer, {},
              levi(c, range(1, n - 1)),
              ratio(K * (n * n * n + n * n * K + 2 * K * n + K + n + 1), (K + n + 1) * (2 * K + n)));
        for (int m = 1; m <= n - 1; ++m)
            r.add(c + ">" + lbl('C', m) + "+" + lbl('C', n - m),
                  "m(n-m)k(2k+1)(2k+n+2)/((k+n+1)(k+m+1)(k+n-m+1))", false, true, C::integers_exact,
                  n % 2 == 0 ? std::vector<BigRat>{BigRat(-n / 2 - 1)} : std::vector<BigRat>{},
                  maximal(c, lbl('C', m) + "+" + lbl('C', n - m)),
                  ratio(m * (n - m) * K * (2 * K + 1) * (2 * K + n + 2), (K + n + 1) * (K + m + 1) * (K + n - m + 1)));
        for (int m = 1; m <= n - 1; ++m)
            r.add(c + ">" + lbl('C', m), "k(n-m)((2(m+n)+1)(k+1)+2mn)/((k+n+1)(k+m+1))", false, false,
                  C::no_positive_integer, {}, levi(c, range(n - m + 1, n)),
                  ratio(K * (n - m) * ((2 * (m + n) + 1) * (K + 1) + 2 * m * n), (K + n + 1) * (K + m + 1)));
    }
    for (int n = 4; n <= 6; ++n) {
        const std::string d = lbl('D', n);
        r.add(d + ">" + lbl('A', n - 1), "k((k+1)n^2+(2-k)n+k-2)/((k+2(n-1))(k+n))", false, true, C::no_integer, {},
              levi(d, range(1, n - 1)),
              ratio(K * ((K + 1) * n * n + (2 - K) * n + K - 2), (K + 2 * (n - 1)) * (K + n)));
        for (int m = 2; m <= n - 2; ++m)
            r.add(d + ">" + lbl('D', m) + "+" + lbl('D', n - m),
                  "4km(k-1)(n-m)(n+k-2)/((k+2(n-1))(k+2(m-1))(k+2(n-m-1)))", false, true, C::exact, {1, 2 - n},
                  maximal(d, lbl('D', m) + "+" + lbl('D', n - m)),
                  ratio(4 * K * m * (K - 1) * (n - m) * (n + K - 2),
                        (K + 2 * (n - 1)) * (K + 2 * (m - 1)) * (K + 2 * (n - m - 1))));
    }
}

void untwisted_exceptional(Registry& r) {
    using C = LevelClaim;
    r.add("E6>D5", "k(84+33k)/((k+12)(k+8))", false, true, C::no_integer, {}, levi("E6", range(2, 6)),
          ratio(K * (84 + 33 * K), (K + 12) * (K + 8)));
    r.add("E6>A5+A1", "40k(k-1)(k+3)/((k+12)(k+6)(k+2))", false, true, C::exact, {-3, 1}, maximal("E6", "A5+A1"),
          ratio(40 * K * (K - 1) * (K + 3), (K + 12) * (K + 6) * (K + 2)));
    r.add("E6>A2+A2+A2", "6k(8k-21)/((k+12)(k+3))", false, true, C::no_integer, {}, maximal("E6", "A2+A2+A2"),
          ratio(6 * K * (8 * K - 21), (K + 12) * (K + 3)));
    r.add("E7>E6", "k(55k+192)/((k+18)(k+12))", false, true, C::no_integer, {}, levi("E7", range(1, 6)),
          ratio(K * (55 * K + 192), (K + 18) * (K + 12)));
    r.add("E7>A7", "70k(k-1)/((k+8)(k+18))", false, true, C::exact, {1}, maximal("E7", "A7"),
          ratio(70 * K * (K - 1), (K + 8) * (K + 18)));
    r.add("E7>D6+A1", "64k(k-1)(k+4)/((k+18)(k+10)(k+2))", false, true, C::exact, {-4, 1}, maximal("E7", "D6+A1"),
          ratio(64 * K * (K - 1) * (K + 4), (K + 18) * (K + 10) * (K + 2)));
    r.add("E7>A5+A2", "90k(k-1)(k+4)/((k+18)(k+6)(k+3))", false, true, C::exact, {-4, 1}, maximal("E7", "A5+A2"),
          ratio(90 * K * (K - 1) * (K + 4), (K + 18) * (K + 6) * (K + 3)));
    r.add("E8>A8", "168k(k-1)/((k+30)(k+9))", false, true, C::exact, {1}, maximal("E8", "A8"),
          ratio(168 * K * (K - 1), (K + 30) * (K + 9)));
    r.add("E8>D8", "128k(k-1)/((k+30)(k+14))", false, true, C::exact, {1}, maximal("E8", "D8"),
          ratio(128 * K * (K - 1), (K + 30) * (K + 14)));
    r.add("E8>E7+A1", "112k(k-1)(k+6)/((k+30)(k+18)(k+2))", false, true, C::exact, {-6, 1}, maximal("E8", "E7+A1"),
          ratio(112 * K * (K - 1) * (K + 6), (K + 30) * (K + 18) * (K + 2)));
    r.add("E8>E6+A2", "162k(k-1)(k+6)/((k+30)(k+12)(k+3))", false, true, C::exact, {-6, 1}, maximal("E8", "E6+A2"),
          ratio(162 * K * (K - 1) * (K + 6), (K + 30) * (K + 12) * (K + 3)));
    r.add("E8>A4+A4", "200k(k-1)/((k+30)(k+5))", false, true, C::exact, {1}, maximal("E8", "A4+A4"),
          ratio(200 * K * (K - 1), (K + 30) * (K + 5)));
    r.add("F4>B4", "8k(2k+5)/((k+9)(k+7))", false, true, C::exact, {BigRat(-5, 2)}, maximal("F4", "B4"),
          ratio(8 * K * (2 * K + 5), (K + 9) * (K + 7)));
    r.add("F4>A2+A2", "4k(20k^2+51k+9)/((k+9)(k+3)(2k+3))", false, true, C::no_integer, {}, maximal("F4", "A2+A2"),
          ratio(4 * K * (20 * K * K + 51 * K + 9), (K + 9) * (K + 3) * (2 * K + 3)));
    r.add("F4>C3+A1", "k(59k^2+61k-70)/(2(k+9)(k+4)(k+1))", false, true, C::no_integer, {}, maximal("F4", "C3+A1"),
          ratio(K * (59 * K * K + 61 * K - 70), 2 * (K + 9) * (K + 4) * (K + 1)));
    r.add("G2>A2", "2k(17k+5)/(3(k+4)(k+1))", false, true, C::no_integer, {}, maximal("G2", "A2"),
          ratio(2 * K * (17 * K + 5), 3 * (K + 4) * (K + 1)));
    r.add("G2>A1+A1", "2k(15k^2+26k+14)/((k+4)(k+2)(3k+2))", false, true, C::no_integer, {}, maximal("G2", "A1+A1"),
          ratio(2 * K * (15 * K * K + 26 * K + 14), (K + 4) * (K + 2) * (3 * K + 2)));
}

void twisted(Registry& r) {
    using C = LevelClaim;
    // The text gives no copy for each value; the first goes to the long copy,
    // the only one that can carry the stated level-1 embedding.
    r.add("A2^(2)>..A1^(1)", "k(k-1)/((k+3)(k+2))", true, true, C::exact, {1}, searched("A2^(2)", "..A1^(1)"),
          ratio(K * (K - 1), (K + 3) * (K + 2)));
    r.add("A2^(2)>.A1^(1)", "k(13k-1)/(2(k+3)(2k+1))", true, true, C::none, {}, searched("A2^(2)", ".A1^(1)"),
          ratio(K * (13 * K - 1), 2 * (K + 3) * (2 * K + 1)));
    for (int n = 2; n <= 3; ++n) {
        const std::string g = lbl('A', 2 * n, 2);
        const int N = 2 * n;
        r.add(g + ">" + lbl('A', 2 * n - 1, 2), "k((4n^2+1)(k+1)+2n(4k+1))/(2(k+2n+1)(k+n))", true, true,
              C::no_integer, {}, searched(g, lbl('A', 2 * n - 1, 2)),
              ratio(K * ((4 * n * n + 1) * (K + 1) + 2 * n * (4 * K + 1)), 2 * (K + 2 * n + 1) * (K + n)));
        if (n == 2)
            r.add(g + ">D3^(2)", "5k(29k+37)/(2(k+9)(k+2))", true, true, C::no_integer, {}, searched(g, "D3^(2)"),
                  ratio(5 * K * (29 * K + 37), 2 * (K + 9) * (K + 2)));
        r.add(g + ">" + lbl('B', n, 1), "kn(k-2n-3)/((k+2n+1)(k+2n-1))", true, true, C::exact, {2 * n + 3},
              searched(g, lbl('B', n, 1)), ratio(K * n * (K - 2 * n - 3), (K + 2 * n + 1) * (K + 2 * n - 1)));
        for (int m = 1; m <= n - 1; ++m) {
            const int M = 2 * m;
            r.add(g + ">" + lbl('A', 2 * m, 2) + "+" + lbl('A', 2 * (n - m) - 1, 2),
                  "k[k(2(N-M)(M+N+MN)+k(4(M+M^2-N)-(M+N)^2)+(5N-3M))-(N-1)(M-1)+M^2+N^2+(k+1)^2+1]"
                  "/[(k+N+1)(k+M+1)(2k+N-M)]",
                  true, true, C::none, {}, searched(g, lbl('A', 2 * m, 2) + "+" + lbl('A', 2 * (n - m) - 1, 2)),
                  ratio(K * (K * (2 * (N - M) * (M + N + M * N) + K * (4 * (M + M * M - N) - (M + N) * (M + N)) +
                                  (5 * N - 3 * M)) -
                             (N - 1) * (M - 1) + M * M + N * N + (K + 1) * (K + 1) + 1),
                        (K + N + 1) * (K + M + 1) * (2 * K + N - M)),
                  true);
        }
        for (int m = 2; m <= n - 1; ++m) {
            const int M = 2 * m;
            r.add(g + ">" + lbl('D', m, 1) + "+" + lbl('A', 2 * n - 2 * m, 2),
                  "km(2Nk(N-M+2k+1)+M(N-k-3k^2+2)+5k^2+2k-2)/(2(k+N+1)(k+N-M+1)(k+m-1))", true, true, C::none, {},
                  searched(g, lbl('D', m, 1) + "+" + lbl('A', 2 * n - 2 * m, 2)),
                  ratio(K * m * (2 * N * K * (N - M + 2 * K + 1) + M * (N - K - 3 * K * K + 2) + 5 * K * K + 2 * K - 2),
                        2 * (K + N + 1) * (K + N - M + 1) * (K + m - 1)),
                  true);
        }
        if (n >= 3)
            r.add(g + ">D3^(2)+" + lbl('A', 2 * n - 4, 2),
                  "k(2kN(8(k+N)-7)+(N-1)^2-31k^2-18k+12)/(2(k+N+1)(k+N-3)(k+2))", true, true, C::no_integer, {},
                  searched(g, "D3^(2)+" + lbl('A', 2 * n - 4, 2)),
                  ratio(K * (2 * K * N * (8 * (K + N) - 7) + (N - 1) * (N - 1) - 31 * K * K - 18 * K + 12),
                        2 * (K + N + 1) * (K + N - 3) * (K + 2)));
    }
    for (int n = 3; n <= 4; ++n) {
        const std::string g = lbl('A', 2 * n - 1, 2);
        r.add(g + ">" + lbl('A', n - 1, 1), "3nk(2nk+1)/(2(k+2n)(2k+n))", true, true, C::no_integer, {},
              hull(g, range(1, n - 1), lbl('A', n - 1, 1)),
              ratio(3 * n * K * (2 * n * K + 1), 2 * (K + 2 * n) * (2 * K + n)));
        r.add(g + ">" + lbl('C', n, 1), "-(2n+1)k(4n^2-2n+2+(2n+1)k)/(2(k+2n)(k+2n+2))", true, true, C::no_integer,
              {}, searched(g, lbl('C', n, 1)),
              ratio(-(2 * n + 1) * K * (4 * n * n - 2 * n + 2 + (2 * n + 1) * K), 2 * (K + 2 * n) * (K + 2 * n + 2)));
    }
    for (int n = 2; n <= 4; ++n) {
        const std::string g = lbl('D', n + 1, 2);
        r.add(g + ">" + lbl('B', n, 1), "-k(2(2n^2-n+1)+(3n-1)k)/(2(k+2n)(k+4n-2))", true, true, C::integers_exact,
              n == 3 ? std::vector<BigRat>{-4} : std::vector<BigRat>{}, searched(g, lbl('B', n, 1)),
              ratio(-K * (2 * (2 * n * n - n + 1) + (3 * n - 1) * K), 2 * (K + 2 * n) * (K + 4 * n - 2)));
        r.add(g + ">" + lbl('D', n, 2), "k(4n(n+k-1)+k-2)/((k+2n)(k+2n-2))", true, true, C::no_integer, {},
              short_hull(g, range(2, n), lbl('D', n, 2)),
              ratio(K * (4 * n * (n + K - 1) + K - 2), (K + 2 * n) * (K + 2 * n - 2)));
        for (int m = 1; m <= n - 2; ++m)
            r.add(g + ">" + lbl('D', n - m, 1) + "+" + lbl('D', m + 1, 2),
                  "-k(n-m)[8((n-m)(2mn+1+k(m+n))-1)+2k(3n(1-2k)+m(6-5k)-2mn)+7k(2-k)]"
                  "/[2(k+2n)(k+2m)(k+4n-4m-4)]",
                  true, true, C::none, {}, searched(g, lbl('D', n - m, 1) + "+" + lbl('D', m + 1, 2)),
                  ratio(-K * (n - m) *
                            (8 * ((n - m) * (2 * m * n + 1 + K * (m + n)) - 1) +
                             2 * K * (3 * n * (1 - 2 * K) + m * (6 - 5 * K) - 2 * m * n) + 7 * K * (2 - K)),
                        2 * (K + 2 * n) * (K + 2 * m) * (K + 4 * n - 4 * m - 4)));
    }
    r.add("D3^(2)>C2^(1)", "-5k(5k+14)/(2(k+4)(k+6))", true, true, C::none, {}, searched("D3^(2)", "C2^(1)"),
          ratio(-5 * K * (5 * K + 14), 2 * (K + 4) * (K + 6)));
    r.add("E6^(2)>C4^(1)", "-3k(11k+158)/((k+12)(k+10))", true, true, C::no_integer, {}, searched("E6^(2)", "C4^(1)"),
          ratio(-3 * K * (11 * K + 158), (K + 12) * (K + 10)));
    r.add("E6^(2)>F4^(1)", "-13k(5k+42)/((k+12)(k+18))", true, true, C::no_integer, {}, searched("E6^(2)", "F4^(1)"),
          ratio(-13 * K * (5 * K + 42), (K + 12) * (K + 18)));
    r.add("E6^(2)>A5^(2)+..A1^(1)", "k(31k^2+4k-672)/(2(k+12)(k+6)(k+4))", true, true, C::no_integer, {},
          searched("E6^(2)", "A5^(2)+..A1^(1)"),
          ratio(K * (31 * K * K + 4 * K - 672), 2 * (K + 12) * (K + 6) * (K + 4)));
    r.add("D4^(3)>G2^(1)", "-28k(k+3)/((k+6)(k+12))", true, true, C::exact, {-3}, searched("D4^(3)", "G2^(1)"),
          ratio(-28 * K * (K + 3), (K + 6) * (K + 12)));
    r.add("D4^(3)>.A2^(1)", "6k(k-1)/((k+6)(k+3))", true, true, C::exact, {1}, searched("D4^(3)", ".A2^(1)"),
          ratio(6 * K * (K - 1), (K + 6) * (K + 3)));
    r.add("D4^(3)>.A1^(1)+..A1^(1)", "2k(k-4)/((k+6)(k+2))", true, true, C::exact, {4},
          searched("D4^(3)", ".A1^(1)+..A1^(1)"), ratio(2 * K * (K - 4), (K + 6) * (K + 2)));
}

const Registry& registry() {
    static const Registry r = [] {
        Registry reg;
        untwisted_classical(reg);
        untwisted_exceptional(reg);
        twisted(reg);
        return reg;
    }();
    return r;
}

const Entry& entry(const std::string& id) {
    const auto& reg = registry();
    auto it = reg.by_id.find(id);
    if (it == reg.by_id.end()) throw UnknownFixture(id);
    return reg.entries[it->second];
}

bool claim_holds(const Fixture& f, const Charge& c) {
    if (c.is_zero()) return false;
    const auto levels = conformal_levels(c).levels;
    std::vector<BigRat> all, integers;
    for (const auto& l : levels) {
        all.push_back(l.level);
        if (l.kind == LevelKind::integer) integers.push_back(l.level);
    }
    std::vector<BigRat> stated;
    for (const BigRat& s : f.stated_levels)
        if (s != 0 && !c.excluded_levels.count(s)) stated.push_back(s);
    std::sort(stated.begin(), stated.end());
    switch (f.claim) {
        case LevelClaim::none: return true;
        case LevelClaim::exact: return all == stated;
        case LevelClaim::integers_exact: return integers == stated;
        case LevelClaim::no_integer: return integers.empty();
        case LevelClaim::no_positive_integer:
            return std::none_of(integers.begin(), integers.end(), [](const BigRat& x) { return x > 0; });
    }
    return false;
}

}  // namespace

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> list = [] {
        std::vector<Fixture> out;
        for (const auto& e : registry().entries) out.push_back(e.info);
        return out;
    }();
    return list;
}

const Fixture& fixture(const std::string& id) { return entry(id).info; }

FixtureReport verify_printed_formula(const std::string& id) {
    const Entry& e = entry(id);
    FixtureReport rep;
    rep.id = id;
    rep.printed = e.printed;
    rep.computed = e.computed();
    rep.difference = charge_difference(rep.computed, rep.printed);
    rep.identity = rep.difference.is_zero();
    rep.consistent = e.printed.numerator(0) == 0 &&
                     e.printed.numerator.degree() == rep.computed.numerator.degree() &&
                     e.printed.denominator.degree() == rep.computed.denominator.degree();
    rep.levels_ok = claim_holds(e.info, rep.computed);
    return rep;
}

}  // namespace kmroots
