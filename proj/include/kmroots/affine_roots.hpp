#pragma once
#include <memory>
#include <unordered_map>
#include <vector>

#include "kmroots/finite_roots.hpp"

namespace kmroots {

struct VecHash {
    size_t operator()(const Vec& v) const noexcept {
        size_t h = 1469598103934665603ull;
        for (Int x : v) h = (h ^ static_cast<size_t>(x + 0x9e37)) * 1099511628211ull;
        return h;
    }
};

enum class RootKind { not_a_root, imaginary, real_short, real_middle, real_long };
const char* to_string(RootKind k);
inline bool is_real(RootKind k) {
    return k == RootKind::real_short || k == RootKind::real_middle || k == RootKind::real_long;
}

// Node 0 always carries mark 1, so the level of a root (its delta
// coefficient) is simply its node-0 coordinate. Nodes 1..l span the finite
// part. For A_{2l}^(2) node 0 is the end whose deletion leaves B_l.
struct AffineRootSystem {
    enum class Scheme { untwisted, twisted, twisted_even };  // twisted_even: A_{2l}^(2)

    Label label;
    Scheme scheme = Scheme::untwisted;
    int twist = 1;
    IntMatrix cartan;
    RatMatrix form;  // largest simple root has squared length 2
    Vec marks;
    Vec comarks;
    Vec delta;
    FiniteRootSystem finite;          // finite part, own normalization
    std::vector<Rat> lengths;         // distinct real squared lengths, ascending
    Rat finite_long_norm;             // longest finite-part root, in `form`

    int rank() const { return static_cast<int>(cartan.size()) - 1; }
    int size() const { return static_cast<int>(cartan.size()); }
    Int level(const Vec& v) const { return v[0]; }
    // v - level(v) * delta, the finite direction (node-0 coordinate is 0).
    Vec projection(const Vec& v) const;
    Rat norm(const Vec& v) const { return dot(v, form, v); }
    Rat inner(const Vec& u, const Vec& v) const { return dot(u, form, v); }
    RootKind length_kind(const Rat& norm) const;

    std::vector<Vec> simple_roots() const;

    // Index of a finite-part root (coords over nodes 1..l) or -1.
    int finite_index(const Vec& finite_coords) const;
    std::vector<char> finite_is_long;  // per finite root, in the affine form
    std::unordered_map<Vec, int, VecHash> finite_lookup;
};

using AffinePtr = std::shared_ptr<const AffineRootSystem>;

// Cached per canonical label; the returned object is immutable.
AffinePtr build_affine(const Label& label);

std::vector<Vec> enumerate_real_roots(const AffineRootSystem& sys, Int m_max);
// Real roots plus the imaginary roots m*delta with 0 < |m| <= m_max.
std::vector<Vec> enumerate_roots(const AffineRootSystem& sys, Int m_max);
RootKind is_root(const AffineRootSystem& sys, const Vec& v);

}  // namespace kmroots
