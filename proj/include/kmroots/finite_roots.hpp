#pragma once
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "kmroots/cartan.hpp"
#include "kmroots/label.hpp"

namespace kmroots {

struct FiniteRootSystem {
    Label label;
    std::vector<Vec> simple_roots;  // unit vectors
    IntMatrix cartan;
    RatMatrix form;                 // (highest root|highest root) = 2
    std::vector<Vec> all_roots;     // lexicographic order
    Vec highest_root;
    Vec lowest_root;
    Vec highest_short_root;         // equals highest_root when simply laced
    Int dim_g = 0;
    Int dual_coxeter = 0;

    int rank() const { return static_cast<int>(simple_roots.size()); }
    bool contains(const Vec& v) const;
    Rat norm(const Vec& v) const { return dot(v, form, v); }
};

// Label must be finite and canonical after normalization (2A1 is rejected).
FiniteRootSystem build_finite(const Label& label);
// Finite system from an explicit Cartan matrix of finite type, Bourbaki
// numbering assumed only for the label it carries.
FiniteRootSystem build_finite_from_cartan(const Label& label, const IntMatrix& cartan);

Int dual_coxeter(const Label& label);
Int dual_coxeter_table(const Label& label);
Int lie_algebra_dimension(const Label& label);
// Order of the Weyl group of a finite label.
Int weyl_group_order(const Label& label);

// Closure of a seed set under negation and mutual reflections. With a bound,
// vectors whose sup-norm exceeds it are dropped and `truncated` is set.
struct ClosureResult {
    std::set<Vec> roots;
    bool truncated = false;
};
ClosureResult root_closure(const RatMatrix& form, const std::vector<Vec>& seed,
                           std::optional<Int> bound = std::nullopt);

struct FiniteSubsystem {
    Components type;
    std::vector<Vec> simple_roots;
};
std::vector<FiniteSubsystem> finite_maximal_subsystems(const Label& label);

// Decorated component types of a finite subsystem given by a base inside
// `ambient`. Decoration is attached only when the component's set of root
// lengths differs from the ambient's.
Components finite_subsystem_type(const FiniteRootSystem& ambient, const std::vector<Vec>& base);

Vec reflect(const Vec& v, const Vec& alpha, const RatMatrix& form);
bool is_finite_closed(const std::set<Vec>& roots, const std::set<Vec>& ambient);

}  // namespace kmroots
