#pragma once
#include <string>
#include <string_view>
#include <vector>

namespace kmroots {

enum class LengthClass { unmarked, short_roots, long_roots };

// A single indecomposable type X_n (twist 0) or X_n^(r) (twist 1..3).
// For affine labels `rank` is the subscript, not the number of nodes.
struct Label {
    char family = 'A';
    int rank = 1;
    int twist = 0;
    LengthClass length = LengthClass::unmarked;

    bool is_affine() const { return twist > 0; }
    // Number of simple roots of the corresponding diagram.
    int nodes() const;
    // Rank of the finite part (equals nodes() for finite labels).
    int finite_rank() const { return is_affine() ? nodes() - 1 : nodes(); }
    Label bare() const { return Label{family, rank, twist, LengthClass::unmarked}; }

    friend bool operator==(const Label&, const Label&) = default;
};

// Canonical sort order: larger rank first, then family, twist, decoration.
bool label_less(const Label& a, const Label& b);

using Components = std::vector<Label>;

// True when (family, rank, twist) is a canonical registry entry (no alias).
bool is_canonical(const Label& l);
// True when the label is canonical or a recognised low-rank alias.
bool is_known(const Label& l);
// Replace aliases (D2, B1, C1, D3, B2, A1^(2), A3^(2), ...) by canonical
// components. Throws UnknownLabel for anything outside the registries.
Components normalize(const Label& l);
Components normalize(const Components& c);
void sort_components(Components& c);

std::string to_string(const Label& l);
std::string to_string(const Components& c);

// Grammar: ["."|".."] [MULT] FAMILY RANK ["^(" TWIST ")"], joined by "+".
// Result is normalized and sorted. Throws ParseError with a 1-based column.
Components parse_components(std::string_view text);
// Single component; throws ParseError if the text normalizes to several.
Label parse_label(std::string_view text);

// Finite type whose Weyl group is the linear part of the affine Weyl group
// (the finite part spanned by nodes 1..n in the registry ordering).
Label underlying_finite(const Label& affine);
// The finite simple Lie algebra whose loop algebra (twisted or not)
// realizes the affine label: X_N for X_N^(r).
Label loop_algebra(const Label& affine);

}  // namespace kmroots
