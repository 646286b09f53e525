#include <set>
#include <string>

#include "doctest.h"
#include "kmroots/finite_roots.hpp"
#include "oracles.hpp"

using namespace kmroots;

namespace {

std::set<std::string> types_of(const std::string& label) {
    std::set<std::string> out;
    for (const auto& s : finite_maximal_subsystems(parse_label(label))) out.insert(to_string(s.type));
    return out;
}

}  // namespace

TEST_CASE("maximal subsystems of G2") {
    CHECK(types_of("G2") == std::set<std::string>{"..A2", ".A1+..A1"});
}

TEST_CASE("maximal subsystems of type A") {
    CHECK(types_of("A1") == std::set<std::string>{});
    CHECK(types_of("A4") == std::set<std::string>{"A3", "A2+A1"});
    CHECK(types_of("A5") == std::set<std::string>{"A4", "A3+A1", "A2+A2"});
}

TEST_CASE("maximal subsystems of E8 include the maximal-rank ones") {
    auto t = types_of("E8");
    for (const char* want : {"D8", "A8", "E7+A1", "E6+A2", "A4+A4"}) CHECK(t.count(want) == 1);
    CHECK(t.count("A7+A1") == 0);
}

TEST_CASE("maximal subsystems are proper and closed bases") {
    for (const char* name : {"B3", "C3", "F4", "D4", "B4"}) {
        auto f = build_finite(parse_label(name));
        for (const auto& s : finite_maximal_subsystems(parse_label(name))) {
            for (size_t i = 0; i < s.simple_roots.size(); ++i)
                for (size_t j = i + 1; j < s.simple_roots.size(); ++j) {
                    Vec d = s.simple_roots[i];
                    for (size_t k = 0; k < d.size(); ++k) d[k] -= s.simple_roots[j][k];
                    CHECK_FALSE(f.contains(d));
                }
            auto c = root_closure(f.form, s.simple_roots);
            CHECK(c.roots.size() < f.all_roots.size());
        }
    }
}

TEST_CASE("brute-force oracle agrees on small finite types") {
    for (const char* name : {"A1", "A2", "A3", "B3", "C3", "G2", "F4", "B4", "C4", "D4", "A4"}) {
        CAPTURE(name);
        CHECK(oracle::brute_force_maximal_types(parse_label(name)) == types_of(name));
    }
}
