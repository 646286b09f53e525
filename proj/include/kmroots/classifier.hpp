#pragma once
#include <optional>
#include <string>
#include <vector>

#include "kmroots/subsystems.hpp"

namespace kmroots {

// Index of a Weyl subgroup as stored in the classification tables:
// coefficient * prod(p_i ^ e_i) over free primes p_i (each possibly with one
// excluded prime), or Infinite.
struct IndexFormula {
    struct PrimePower {
        int exponent = 1;
        Int excluded = 0;  // 0 when every prime is allowed
    };
    bool infinite = false;
    Int coefficient = 1;
    std::vector<PrimePower> primes;

    static IndexFormula constant(Int c) { return {false, c, {}}; }
    static IndexFormula prime_power(int e, Int excluded = 0) { return {false, 1, {{e, excluded}}}; }
    static IndexFormula inf() { return {true, 1, {}}; }

    bool is_constant() const { return !infinite && primes.empty(); }
    std::string str() const;
    // Does some admissible choice of primes produce `value`?
    bool matches(const Index& value) const;
    // All values <= bound with every free prime <= max_prime.
    std::vector<Int> values(Int bound, Int max_prime) const;
    IndexFormula operator*(const IndexFormula& o) const;
    bool operator==(const IndexFormula& o) const;
};

enum class EntryKind { indecomposable, decomposable, lower_rank, composite };
std::string to_string(EntryKind k);

struct ClassificationEntry {
    Label ambient;
    Components sub;  // decoration unmarked = not fixed by the table
    IndexFormula index;
    EntryKind kind = EntryKind::indecomposable;
    bool inferred = false;  // parameter range not stated in the source row
};

// Hardcoded tables of maximal subsystems instantiated at the ambient rank.
// Throws OutOfTableRange for finite labels or ranks outside the table rows.
std::vector<ClassificationEntry> table_maximal(const Label& ambient);

// Table decorations are wildcards when unmarked.
bool type_matches(const Components& table, const Components& found);

struct SameTypeResult {
    bool valid = false;
    std::optional<Subsystem> sub;
    std::string reason;
};
// Copy of the ambient type with null root k*delta.
SameTypeResult same_type_subsystem(AffinePtr ambient, Int k);

// Drops the node-0 root of each selected component (1-based indices into
// sub.components). Throws NotUntwistedComponent.
Subsystem non_affine_from_affine(const Subsystem& sub, const std::vector<int>& components);

// Appends lowest root + k*delta (least k > 0 giving a root) to each finite
// component. Throws NoAffineExtension, ConditionViolated.
Subsystem affine_hull(const Subsystem& finite_sub);

// Chains of table steps up to `depth`, composing indices.
std::vector<ClassificationEntry> all_regular_subsystems(const Label& ambient, int depth);

struct SearchOptions {
    Int m_max = 4;
    int rank_cap = 5;  // number of ambient nodes
};

// One obtuse candidate base of affine type with both subsystem verdicts.
struct CandidateRecord {
    std::vector<Vec> base;
    Components type;
    bool simple_root_condition = false;
    bool lattice_condition = false;
};

struct SearchResult {
    std::vector<Subsystem> maximal;  // maximal-at-bound, canonical order
    std::vector<CandidateRecord> candidates;
};

// Maximal-rank subsystems with affine components whose null roots lie at
// level <= m_max. Throws SearchCapExceeded.
SearchResult maximal_subsystems_search(AffinePtr ambient, const SearchOptions& opts = {});

// Affine labels of rank <= 4 covered by the search/table regression.
const std::vector<Label>& regression_labels();

struct TableComparison {
    bool ok = true;
    std::vector<std::string> missing;     // expected from the table, not found
    std::vector<std::string> unexpected;  // found, not in the table
};
// Compares finite-index search results with table rows whose index is at most
// `index_bound` and whose free primes are at most m_max.
TableComparison compare_with_table(const Label& ambient, const std::vector<Subsystem>& found, Int index_bound,
                                   Int m_max);

}  // namespace kmroots
