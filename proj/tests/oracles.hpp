#pragma once
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kmroots/finite_roots.hpp"

namespace oracle {

// Types of all maximal closed subsystems of a finite root system, found by
// enumerating every obtuse set of roots whose pairwise differences are not
// roots and comparing the generated root sets by inclusion.
std::set<std::string> brute_force_maximal_types(const kmroots::Label& label);

}  // namespace oracle

namespace oracle {

enum class GcmType { finite, affine, indefinite };

// Type of a connected generalized Cartan matrix from the principal minors of
// the matrix itself: finite when all are positive, affine when the full
// determinant vanishes and every proper one is positive.
GcmType connected_type(const kmroots::IntMatrix& a);

// Cycle condition a_ij a_jk ... a_li = a_ji a_kj ... a_il over all cycles.
bool symmetrizable(const kmroots::IntMatrix& a);

// Connected, indefinite, and every connected proper subdiagram finite or
// affine.
bool hyperbolic(const kmroots::IntMatrix& a);

// Calls fn on every n x n generalized Cartan matrix with entries >= lo.
template <class Fn>
void for_each_gcm(int n, kmroots::Int lo, Fn fn) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
    // Per pair: 0 = both zero, otherwise both negative.
    const kmroots::Int opts = 1 + lo * lo;
    kmroots::IntMatrix a(n, std::vector<kmroots::Int>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    std::vector<kmroots::Int> pick(pairs.size(), 0);
    for (;;) {
        for (size_t p = 0; p < pairs.size(); ++p) {
            const auto [i, j] = pairs[p];
            if (pick[p] == 0) {
                a[i][j] = a[j][i] = 0;
            } else {
                a[i][j] = -1 - (pick[p] - 1) % (-lo);
                a[j][i] = -1 - (pick[p] - 1) / (-lo);
            }
        }
        fn(a);
        size_t p = 0;
        while (p < pick.size() && ++pick[p] == opts) pick[p++] = 0;
        if (p == pick.size()) return;
    }
}

}  // namespace oracle
