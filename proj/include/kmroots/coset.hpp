#pragma once
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kmroots/finite_roots.hpp"
#include "kmroots/polynomial.hpp"
#include "kmroots/subsystems.hpp"

namespace kmroots {

// Virasoro central charge as a reduced rational function of the level k.
// Both polynomials have integer coefficients with joint content 1 and the
// denominator has positive leading coefficient. Critical levels stay in
// `excluded_levels` even when the reduction cancels the pole.
struct Charge {
    Poly numerator = 0;
    Poly denominator = 1;
    std::set<BigRat> excluded_levels;

    static Charge make(const Poly& num, const Poly& den, std::set<BigRat> excluded = {});
    bool is_zero() const { return numerator.is_zero(); }
    // Throws ConditionViolated at an excluded level.
    BigRat at(const BigRat& k) const;
    std::string str() const;

    friend Charge operator+(const Charge& a, const Charge& b);
    friend Charge operator-(const Charge& a, const Charge& b);
    friend Charge operator*(const BigRat& r, const Charge& c);
};

// Cross-multiplied difference a.num * b.den - b.num * a.den.
Poly charge_difference(const Charge& a, const Charge& b);

// Sum over components of (c k) dim g_i / (c k + h_i), c = level_factor.
Charge sugawara_charge(const Components& g, const BigRat& level_factor = 1);

struct DynkinIndex {
    Rat j;      // squared length of the component's highest root
    Rat index;  // 2 / j; the level map is k' = index * k
};
// `component` is the base of one indecomposable subsystem of `ambient`.
// Throws NotEmbedded when some vector is not an ambient root.
DynkinIndex dynkin_index(const FiniteRootSystem& ambient, const std::vector<Vec>& component);

struct EmbeddedComponent {
    Label label;  // finite, or affine in the twisted setting
    Rat j;
};
struct Embedding {
    Label ambient;
    std::vector<EmbeddedComponent> components;
};

// Splits a base of ambient roots into indecomposable components and
// measures each Dynkin index. Throws NotEmbedded.
Embedding finite_embedding(const Label& ambient, const std::vector<Vec>& base);

// D_k(g) - sum_i D_{2k/j_i}(h_i).
Charge coset_charge(const Embedding& e);

enum class LevelKind { integer, half_integer, other_rational };
std::string to_string(LevelKind k);
struct ConformalLevel {
    BigRat level;
    LevelKind kind;
};
struct ConformalLevels {
    std::vector<ConformalLevel> levels;  // ascending, nonzero, non-critical
    int non_rational_roots = 0;          // counted with multiplicity
};
ConformalLevels conformal_levels(const Charge& c);

// sum_i a_i s_i over the marks of the diagram. Throws DimensionMismatch on a
// wrong length and InvalidTuple on negative or all-zero entries.
Int n_s(const AffineRootSystem& sys, const std::vector<Int>& s);

// Embedding of an affine subsystem: each component's j is the squared
// length of its longest simple root, rescaled so that the ambient's longest
// real root has squared length 2.
Embedding affine_embedding(const Subsystem& sub);

// r D_k(g) - sum_i D_{2k/j_i}(h_i) with r = q n_s(h) / (p n_s(g)), g and h_i
// the finite algebras whose loop algebras give the affine labels, and q the
// order of the restricted automorphism (lcm of the component twists). Empty
// tuples select the first node only. s_h runs over the component diagrams
// in order. Throws InvalidTuple, DimensionMismatch.
Charge twisted_coset_charge(const Embedding& e, const std::vector<Int>& s_g = {}, const std::vector<Int>& s_h = {});

// Realizes h inside g. A finite g is searched through chains of maximal
// subsystems, an affine g through the bounded search up to m_max (closed
// non-maximal candidates included). Unmarked decorations in h match either
// length. Throws NotEmbedded.
Embedding embed(const Label& g, const Components& h, Int m_max = 4);

// Every maximal subsystem of g with its charge: finite_maximal_subsystems
// for a finite g, the search at m_max for an affine one.
struct MaximalCharge {
    Components type;
    Charge charge;
};
std::vector<MaximalCharge> maximal_charges(const Label& g, Int m_max = 4);

// What the text around a printed formula claims about its zero levels.
enum class LevelClaim {
    none,                // no statement
    exact,               // stated levels are all nonzero non-critical zeros
    integers_exact,      // stated levels are all integer zeros
    no_integer,          // no integer zero
    no_positive_integer  // no positive integer zero
};

struct Fixture {
    std::string id;       // e.g. "B4>B1+D3", "D4^(3)>.A2^(1)"
    std::string printed;  // printed function as text
    bool twisted = false;
    bool maximal = false;         // a maximal pair of the classification
    bool low_confidence = false;  // checked for k=0 vanishing and degrees only
    LevelClaim claim = LevelClaim::none;
    std::vector<BigRat> stated_levels;
};
const std::vector<Fixture>& fixtures();
const Fixture& fixture(const std::string& id);  // throws UnknownFixture

struct FixtureReport {
    std::string id;
    Charge computed;
    Charge printed;
    bool identity = false;    // polynomial identity holds
    bool consistent = false;  // printed vanishes at 0 and has the computed degrees
    bool levels_ok = false;   // computed zeros agree with the stated claim
    Poly difference;          // charge_difference(computed, printed)
};
FixtureReport verify_printed_formula(const std::string& id);

}  // namespace kmroots
