#include <map>
#include <set>

#include "doctest.h"
#include "kmroots/affine_roots.hpp"
#include "kmroots/errors.hpp"
#include "kmroots/kac_moody.hpp"

using namespace kmroots;

namespace {
std::vector<Label> finite_labels() {
    std::vector<Label> out;
    for (int n = 1; n <= 8; ++n) out.push_back({'A', n, 0});
    for (int n = 3; n <= 8; ++n) out.push_back({'B', n, 0});
    for (int n = 2; n <= 8; ++n) out.push_back({'C', n, 0});
    for (int n = 4; n <= 8; ++n) out.push_back({'D', n, 0});
    for (int n = 6; n <= 8; ++n) out.push_back({'E', n, 0});
    out.push_back({'F', 4, 0});
    out.push_back({'G', 2, 0});
    return out;
}

size_t classical_count(const Label& l) {
    const size_t n = l.rank;
    switch (l.family) {
        case 'A': return n * (n + 1);
        case 'B':
        case 'C': return 2 * n * n;
        case 'D': return 2 * n * (n - 1);
        case 'E': return n == 6 ? 72 : n == 7 ? 126 : 240;
        case 'F': return 48;
        default: return 12;
    }
}

std::vector<Label> affine_labels(int max_rank) {
    std::vector<Label> out;
    for (const char* s : {"A1^(1)", "A2^(1)", "A3^(1)", "A4^(1)", "A5^(1)", "B3^(1)", "B4^(1)",
                          "B5^(1)", "C2^(1)", "C3^(1)", "C4^(1)", "C5^(1)", "D4^(1)", "D5^(1)",
                          "G2^(1)", "F4^(1)", "A2^(2)", "A4^(2)", "A6^(2)", "A8^(2)", "A10^(2)",
                          "A5^(2)", "A7^(2)", "A9^(2)", "D3^(2)", "D4^(2)", "D5^(2)", "D6^(2)",
                          "E6^(2)", "D4^(3)"}) {
        Label l = parse_label(s);
        if (l.nodes() - 1 <= max_rank) out.push_back(l);
    }
    return out;
}
}  // namespace

TEST_CASE("finite root counts, closure and dual Coxeter numbers") {
    for (const Label& l : finite_labels()) {
        CAPTURE(to_string(l));
        auto f = build_finite(l);
        CHECK(f.all_roots.size() == classical_count(l));
        CHECK(f.norm(f.highest_root) == Rat(2));
        CHECK(f.dual_coxeter == dual_coxeter_table(l));
        auto closure = root_closure(f.form, f.simple_roots);
        CHECK(closure.roots.size() == f.all_roots.size());
        std::set<Rat> lengths;
        for (const Vec& v : f.all_roots) lengths.insert(f.norm(v));
        CHECK(lengths.size() <= 2);
        for (const Vec& a : f.simple_roots)
            for (const Vec& b : f.simple_roots) {
                if (a == b) continue;
                Vec d = a;
                for (size_t i = 0; i < d.size(); ++i) d[i] -= b[i];
                CHECK_FALSE(f.contains(d));
            }
    }
    CHECK(build_finite(parse_label("A2")).dim_g == 8);
    CHECK(build_finite(parse_label("E8")).dim_g == 248);
    CHECK(dual_coxeter(parse_label("E8")) == 30);
    CHECK_THROWS_AS(build_finite(Label{'E', 9, 0}), UnknownLabel);
}

TEST_CASE("G2 has six long and six short roots") {
    auto g = build_finite(parse_label("G2"));
    int longs = 0;
    for (const Vec& v : g.all_roots) longs += g.norm(v) == Rat(2);
    CHECK(longs == 6);
}

TEST_CASE("root closure edge cases") {
    auto a2 = build_finite(parse_label("A2"));
    CHECK(root_closure(a2.form, {}).roots.empty());
    CHECK(root_closure(a2.form, {Vec{1, 0}}).roots.size() == 2);
}

TEST_CASE("affine registry data") {
    auto a1 = build_affine(parse_label("A1^(1)"));
    CHECK(a1->cartan == IntMatrix{{2, -2}, {-2, 2}});
    CHECK(a1->delta == Vec{1, 1});
    auto d43 = build_affine(parse_label("D4^(3)"));
    CHECK(d43->marks == Vec{1, 2, 1});
    auto a42 = build_affine(parse_label("A4^(2)"));
    CHECK(a42->lengths.size() == 3);
    for (const Label& l : affine_labels(8)) {
        CAPTURE(to_string(l));
        auto s = build_affine(l);
        for (int i = 0; i < s->size(); ++i) {
            Int t = 0;
            for (int j = 0; j < s->size(); ++j) t += s->cartan[i][j] * s->marks[j];
            CHECK(t == 0);
        }
        CHECK(classify_connected(s->cartan) == DefiniteType::affine);
    }
}

TEST_CASE("untwisted dual Coxeter numbers come from comarks") {
    CHECK(build_affine(parse_label("E8^(1)"))->comarks.size() == 9);
    CHECK(dual_coxeter(parse_label("B5")) == 9);
    CHECK(dual_coxeter(parse_label("C4")) == 5);
    CHECK(dual_coxeter(parse_label("G2")) == 4);
}

TEST_CASE("presentation agrees with exact reflection-based membership") {
    for (const Label& l : affine_labels(4)) {
        CAPTURE(to_string(l));
        auto s = build_affine(l);
        const Int m = 2;
        auto real = enumerate_real_roots(*s, m);
        std::set<Vec> real_set(real.begin(), real.end());
        CHECK(real_set.size() == real.size());
        // Every level in range times a box of finite directions.
        Int box = 0;
        for (const Vec& f : s->finite.all_roots)
            for (Int x : f) box = std::max(box, 2 * (x < 0 ? -x : x));
        box += 1;
        const int rk = s->rank();
        size_t checked = 0;
        for (Int lv = -m; lv <= m; ++lv) {
            std::vector<Int> p(rk, -box);
            while (true) {
                Vec cur(s->size());
                cur[0] = lv;
                for (int i = 0; i < rk; ++i) cur[i + 1] = p[i] + lv * s->delta[i + 1];
                auto mine = is_root(*s, cur);
                auto truth = classify_kac_moody(s->cartan, cur);
                const bool ok = (truth == KacMoodyKind::real) == is_real(mine) &&
                                (truth == KacMoodyKind::imaginary) == (mine == RootKind::imaginary);
                if (!ok) {
                    std::string c;
                    for (Int x : cur) c += std::to_string(x) + " ";
                    FAIL_CHECK("membership mismatch at " << c);
                }
                if (is_real(mine) != (real_set.count(cur) == 1)) FAIL_CHECK("enumeration mismatch");
                ++checked;
                int i = 0;
                while (i < rk && ++p[i] > box) p[i++] = -box;
                if (i == rk) break;
            }
        }
        CHECK(checked > 0);
    }
}

TEST_CASE("affine root examples") {
    auto a1 = build_affine(parse_label("A1^(1)"));
    CHECK(enumerate_real_roots(*a1, 1).size() == 6);
    CHECK(is_root(*a1, Vec{1, 1}) == RootKind::imaginary);
    CHECK(is_root(*a1, Vec{0, 2}) == RootKind::not_a_root);
    CHECK_THROWS_AS(is_root(*a1, Vec{1}), DimensionMismatch);
    auto a22 = build_affine(parse_label("A2^(2)"));
    for (const Vec& v : enumerate_real_roots(*a22, 2))
        if (is_root(*a22, v) == RootKind::real_long) CHECK(a22->level(v) % 2 != 0);
    auto a42 = build_affine(parse_label("A4^(2)"));
    std::set<RootKind> seen;
    for (const Vec& v : enumerate_real_roots(*a42, 1)) seen.insert(is_root(*a42, v));
    CHECK(seen.size() == 3);
    for (const char* t : {"A5^(2)", "D4^(2)", "E6^(2)", "D4^(3)"}) {
        auto s = build_affine(parse_label(t));
        const Int r = s->twist;
        for (const Vec& v : enumerate_real_roots(*s, 4))
            if (is_root(*s, v) == RootKind::real_long) CHECK(s->level(v) % r == 0);
    }
}
