#pragma once
#include <optional>
#include <string>
#include <vector>

#include "kmroots/affine_roots.hpp"

namespace kmroots {

// Positive integer or Infinite (empty value).
struct Index {
    std::optional<Int> value;
    bool infinite() const { return !value.has_value(); }
    std::string str() const { return value ? std::to_string(*value) : "Infinite"; }
    friend bool operator==(const Index&, const Index&) = default;
    static Index inf() { return Index{}; }
    static Index of(Int v) { return Index{v}; }
};

// Integer row span in row Hermite normal form: echelon, positive pivots,
// entries above each pivot reduced into [0, pivot).
struct Lattice {
    int ambient_dim = 0;
    IntMatrix basis;

    int rank() const { return static_cast<int>(basis.size()); }
    bool contains(const Vec& v) const;
    // Coefficients of v in the HNF basis, or nullopt when v is outside.
    std::optional<Vec> coordinates(const Vec& v) const;
    friend bool operator==(const Lattice&, const Lattice&) = default;
    friend bool operator<(const Lattice& a, const Lattice& b) { return a.basis < b.basis; }
};

IntMatrix hermite_normal_form(IntMatrix rows);
Lattice lattice_from_roots(const std::vector<Vec>& roots, int ambient_dim = -1);
Lattice lattice_sum(const Lattice& a, const Lattice& b);
bool lattice_contains(const Lattice& big, const Lattice& small);

Index sublattice_index(const Lattice& whole, const Lattice& sub);
// Invariant factors of whole / sub (Smith normal form diagonal, ones dropped).
std::vector<Int> quotient_invariants(const Lattice& whole, const Lattice& sub);

// Real and imaginary roots of |level| <= m_max lying in the lattice.
std::vector<Vec> intersect_with_roots(const AffineRootSystem& sys, const Lattice& sub, Int m_max);

}  // namespace kmroots
