#include "kmroots/kac_moody.hpp"

#include <algorithm>

#include "kmroots/errors.hpp"

namespace kmroots {

KacMoodyKind classify_kac_moody(const IntMatrix& a, Vec v) {
    const size_t n = a.size();
    if (v.size() != n) throw DimensionMismatch("vector length differs from matrix size");
    const bool has_pos = std::any_of(v.begin(), v.end(), [](Int x) { return x > 0; });
    const bool has_neg = std::any_of(v.begin(), v.end(), [](Int x) { return x < 0; });
    if (has_pos == has_neg) return KacMoodyKind::not_a_root;  // zero or mixed signs
    if (has_neg)
        for (Int& x : v) x = -x;
    while (true) {
        if (std::any_of(v.begin(), v.end(), [](Int x) { return x < 0; }))
            return KacMoodyKind::not_a_root;
        std::vector<int> support;
        for (size_t i = 0; i < n; ++i)
            if (v[i] != 0) support.push_back(static_cast<int>(i));
        if (support.size() == 1) return v[support[0]] == 1 ? KacMoodyKind::real : KacMoodyKind::not_a_root;
        bool moved = false;
        for (size_t i = 0; i < n && !moved; ++i) {
            Int pairing = 0;
            for (size_t j = 0; j < n; ++j) pairing += a[i][j] * v[j];
            if (pairing > 0) {
                v[i] -= pairing;
                moved = true;
            }
        }
        if (moved) continue;
        // Fundamental chamber: imaginary iff the support is connected.
        auto blocks = connected_blocks(principal_submatrix(a, support));
        return blocks.size() == 1 ? KacMoodyKind::imaginary : KacMoodyKind::not_a_root;
    }
}

}  // namespace kmroots
