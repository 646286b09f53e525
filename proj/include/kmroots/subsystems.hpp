#pragma once
#include <optional>
#include <utility>
#include <vector>

#include "kmroots/lattice.hpp"

namespace kmroots {

// One indecomposable block of a recognised Cartan matrix. nodes[i] is the
// input index playing the role of registry node i of `label`.
struct RecognizedComponent {
    Label label;
    std::vector<int> nodes;
};

// Cartan matrix of a registry type in the node order used throughout:
// Bourbaki for finite types, node 0 first (mark 1) for affine types.
IntMatrix registry_cartan(const Label& label);

// Block decomposition and registry matching up to simultaneous permutation.
// With lengths, each block is decorated short/long when its set of squared
// lengths differs from the ambient set. Throws IndefiniteType.
std::vector<RecognizedComponent> recognize_type(const IntMatrix& cartan,
                                                const std::vector<Rat>& sq_lengths = {},
                                                const std::vector<Rat>& ambient_lengths = {});
Components labels_of(const std::vector<RecognizedComponent>& comps);

struct Subsystem {
    AffinePtr ambient;
    std::vector<Vec> simple_roots;
    IntMatrix cartan;
    std::vector<RecognizedComponent> components;
    Index weyl_index;  // Infinite whenever some component is finite
    Lattice lattice;

    Components type() const { return labels_of(components); }
    bool all_affine() const;
    int rank() const;  // sum of finite ranks of the components
};

// Builds the subsystem record for a base. Throws NotARealRoot if some
// element is not a real root, IndefiniteType if the Gram data is not of
// finite/affine type per block. Without `with_index` the Weyl index is left
// Infinite.
Subsystem make_subsystem(AffinePtr ambient, std::vector<Vec> base, bool with_index = true);

struct ConditionResult {
    bool ok = true;
    std::optional<std::pair<Vec, Vec>> witness;
};
// alpha - beta must not be a root for any two elements. With full = false,
// pairs of long roots are skipped when the ambient has two root lengths.
ConditionResult check_simple_root_condition(const AffineRootSystem& sys, const std::vector<Vec>& base,
                                            bool full = true);

Subsystem minimal_subsystem(AffinePtr ambient, const std::vector<Vec>& seeds, Int m_max);

// Roots (real and imaginary) of the subsystem with ambient |level| <= m_max.
std::vector<Vec> subsystem_roots(const Subsystem& sub, Int m_max);

struct LatticeVerdict {
    bool ok = true;
    std::vector<Vec> extra;  // in the lattice but not in the subsystem
};
LatticeVerdict lattice_criterion_detail(const Subsystem& sub, Int m_max);
bool verify_lattice_criterion(const Subsystem& sub, Int m_max);

// Throws NotAffine when a component is finite.
Index weyl_index(const Subsystem& sub);

// Image of a vector given in the simple-root basis of `comp`'s registry
// type, expressed in ambient coordinates.
Vec map_component_vector(const Subsystem& sub, const RecognizedComponent& comp, const Vec& abstract);

}  // namespace kmroots
