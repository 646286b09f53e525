#include <algorithm>

#include "doctest.h"
#include "kmroots/errors.hpp"
#include "kmroots/hyperbolic.hpp"
#include "oracles.hpp"

using namespace kmroots;

namespace {

const IntMatrix triangle = {{2, -2, 0}, {-2, 2, -1}, {0, -1, 2}};
const IntMatrix rank2 = {{2, -3}, {-3, 2}};
const IntMatrix twisted = {{2, -4, 0}, {-1, 2, -1}, {0, -1, 2}};

std::vector<std::string> types(const std::vector<Subdiagram>& s) {
    std::vector<std::string> out;
    for (const auto& d : s) out.push_back(to_string(d.type));
    std::sort(out.begin(), out.end());
    return out;
}

IntMatrix permuted(const IntMatrix& m, const std::vector<int>& p) {
    IntMatrix out(m.size(), std::vector<Int>(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j) out[i][j] = m[p[i]][p[j]];
    return out;
}

}  // namespace

TEST_CASE("hyperbolicity") {
    CHECK_FALSE(is_hyperbolic(registry_cartan(parse_label("A1^(1)"))).hyperbolic);
    CHECK_FALSE(is_hyperbolic(registry_cartan(parse_label("E6^(2)"))).hyperbolic);
    CHECK_FALSE(is_hyperbolic(registry_cartan(parse_label("F4"))).hyperbolic);
    const auto v = is_hyperbolic(triangle);
    CHECK(v.hyperbolic);
    CHECK(types(v.certificate) == std::vector<std::string>{"A1+A1", "A1^(1)", "A2"});
    CHECK(is_hyperbolic(rank2).hyperbolic);
    CHECK(types(maximal_non_indefinite_subsystems(rank2)) == std::vector<std::string>{"A1", "A1"});
    CHECK(types(maximal_non_indefinite_subsystems(twisted)) ==
          std::vector<std::string>{"..A2", ".A1+..A1", "A2^(2)"});
    // A rank-4 chain ending in a double bond of both signs contains an
    // A1^(1) with a node attached.
    const IntMatrix bad = {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, -2}, {0, 0, -2, 2}};
    CHECK_FALSE(is_hyperbolic(bad).hyperbolic);
    CHECK_THROWS_AS(maximal_non_indefinite_subsystems(bad), NotHyperbolic);
    CHECK_FALSE(is_hyperbolic({{2, 0}, {0, 2}}).hyperbolic);
    CHECK_THROWS_AS(is_hyperbolic({{2, -1}, {0, 2}}), InvalidGCM);
    CHECK_THROWS_AS(is_hyperbolic({{2, -1, -1}, {-2, 2, -1}, {-1, -1, 2}}), InvalidGCM);
}

TEST_CASE("hyperbolicity agrees with the minor oracle on small matrices") {
    int hyperbolic = 0, checked = 0;
    for (int n = 1; n <= 3; ++n)
        oracle::for_each_gcm(n, -4, [&](const IntMatrix& a) {
            if (!oracle::symmetrizable(a)) {
                CHECK_THROWS_AS(is_hyperbolic(a), InvalidGCM);
                return;
            }
            const bool expect = oracle::hyperbolic(a);
            CHECK(is_hyperbolic(a).hyperbolic == expect);
            hyperbolic += expect;
            ++checked;
        });
    CHECK(checked > 1000);
    CHECK(hyperbolic > 100);
}

TEST_CASE("hyperbolic roots") {
    const HyperbolicRoots r(rank2);
    CHECK(r.is_real_root({1, 0}));
    CHECK(r.is_real_root({3, 1}));
    CHECK(r.is_real_root({-1, -3}));
    CHECK(r.is_real_root({8, 3}));
    CHECK_FALSE(r.is_real_root({2, 0}));
    CHECK_FALSE(r.is_real_root({1, -1}));
    CHECK(r.is_imaginary_root({1, 1}));
    CHECK(r.is_imaginary_root({2, 3}));
    CHECK_FALSE(r.is_imaginary_root({0, 0}));
    CHECK_FALSE(r.is_root({2, 0}));
    CHECK_THROWS_AS(r.is_root({1, 0, 0}), DimensionMismatch);
    CHECK_THROWS_AS(HyperbolicRoots(registry_cartan(parse_label("A2^(2)"))), NotHyperbolic);
    CHECK(r.simple_root_witness({{1, 0}, {0, 1}}) == std::nullopt);
    CHECK(r.simple_root_witness({{1, 0}, {2, 1}}).has_value());
}

TEST_CASE("regular subalgebras of hyperbolic diagrams") {
    CHECK_THROWS_AS(regular_non_indefinite_subalgebras(triangle, 0, 4), ConditionViolated);
    CHECK_THROWS_AS(regular_non_indefinite_subalgebras(registry_cartan(parse_label("B3^(1)")), 1, 4),
                    NotHyperbolic);

    const auto two = regular_non_indefinite_subalgebras(rank2, 1, 4);
    REQUIRE(two.size() == 1);
    CHECK(to_string(two[0].type) == "A1");
    CHECK(two[0].verified);

    const auto three = regular_non_indefinite_subalgebras(triangle, 1, 4);
    std::vector<std::string> got;
    for (const auto& e : three) {
        got.push_back(to_string(e.type));
        CHECK(e.realized);
        CHECK(e.verified);
    }
    CHECK(got == std::vector<std::string>{"A1", "A1+A1", "A1^(1)", "A2"});
    // The same-type copies of A1^(1) appear as a second chain.
    const auto& aff = *std::find_if(three.begin(), three.end(),
                                    [](const HyperbolicEntry& e) { return to_string(e.type) == "A1^(1)"; });
    CHECK(aff.chains.size() == 2);

    for (const auto& e : regular_non_indefinite_subalgebras(twisted, 2, 4)) CHECK(e.verified);
}

TEST_CASE("relabeling nodes permutes the subalgebras") {
    auto multiset = [](const IntMatrix& m) {
        std::vector<std::string> out;
        for (const auto& e : regular_non_indefinite_subalgebras(m, 2, 4)) out.push_back(to_string(e.type));
        return out;
    };
    for (const IntMatrix& m : {triangle, twisted}) {
        std::vector<int> p = {0, 1, 2};
        const auto base = multiset(m);
        while (std::next_permutation(p.begin(), p.end())) CHECK(multiset(permuted(m, p)) == base);
    }
}
