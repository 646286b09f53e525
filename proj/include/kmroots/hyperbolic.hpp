#pragma once
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kmroots/classifier.hpp"

namespace kmroots {

struct Subdiagram {
    std::vector<int> nodes;  // ascending
    Components type;
};

struct HyperbolicVerdict {
    bool hyperbolic = false;
    std::string reason;                   // why not, when false
    std::vector<Subdiagram> certificate;  // every (l-1)-node subdiagram, when true
};

// Indecomposable, of indefinite type, and every proper principal
// subdiagram finite or affine. Throws InvalidGCM on a malformed or
// non-symmetrizable matrix.
HyperbolicVerdict is_hyperbolic(const IntMatrix& m);

// The (l-1)-node subdiagrams with their types. Throws NotHyperbolic.
std::vector<Subdiagram> maximal_non_indefinite_subsystems(const IntMatrix& m);

// Root system of a hyperbolic matrix in the simple-root basis.
class HyperbolicRoots {
public:
    explicit HyperbolicRoots(IntMatrix m);  // throws NotHyperbolic

    const IntMatrix& cartan() const { return cartan_; }
    const RatMatrix& form() const { return form_; }
    int size() const { return static_cast<int>(cartan_.size()); }
    Rat norm(const Vec& v) const { return dot(v, form_, v); }

    // Exact: reflections lower the height of a positive real root until it
    // is simple.
    bool is_real_root(const Vec& v) const;
    // Exact for hyperbolic matrices: nonzero lattice vectors of norm <= 0.
    bool is_imaginary_root(const Vec& v) const;
    bool is_root(const Vec& v) const { return is_real_root(v) || is_imaginary_root(v); }

    // No difference of two elements is a root.
    std::optional<std::pair<Vec, Vec>> simple_root_witness(const std::vector<Vec>& base) const;

private:
    IntMatrix cartan_;
    RatMatrix form_;
};

struct HyperbolicEntry {
    Components type;
    std::vector<Vec> base;                        // empty when no realization was found
    std::vector<std::vector<std::string>> chains;  // every derivation reaching this type
    bool realized = false;
    bool verified = false;  // base vectors are real roots and no difference is a root
    std::optional<std::pair<Vec, Vec>> witness;
};

// Starts from the maximal subdiagrams and applies `depth` expansion steps.
// An affine component is replaced by a table row realized through the
// bounded search at m_max; a finite one by a maximal-rank subsystem.
// Entries are deduplicated by component multiset, sorted by type, and each
// is "maximal within its derivation chain" only. Throws NotHyperbolic,
// ConditionViolated (depth < 1), OutOfTableRange.
std::vector<HyperbolicEntry> regular_non_indefinite_subalgebras(const IntMatrix& m, int depth, Int m_max);

}  // namespace kmroots
