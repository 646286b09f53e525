#include "kmroots/label.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

#include "kmroots/errors.hpp"

namespace kmroots {

int Label::nodes() const {
    if (twist == 0) return rank;
    if (twist == 1) return rank + 1;
    if (twist == 3) return 3;  // D4^(3)
    switch (family) {
        case 'A': return rank % 2 == 0 ? rank / 2 + 1 : (rank + 1) / 2 + 1;
        case 'D': return rank;  // D_{l+1}^(2) has l+1 nodes
        case 'E': return 5;     // E6^(2)
        default: return rank + 1;
    }
}

bool label_less(const Label& a, const Label& b) {
    auto key = [](const Label& l) {
        return std::make_tuple(-l.rank, l.family, l.twist, static_cast<int>(l.length));
    };
    return key(a) < key(b);
}

static bool finite_ok(char f, int n, bool canonical) {
    switch (f) {
        case 'A': return n >= 1;
        case 'B': return n >= (canonical ? 3 : 1);
        case 'C': return n >= (canonical ? 2 : 1);
        case 'D': return n >= (canonical ? 4 : 2);
        case 'E': return n >= 6 && n <= 8;
        case 'F': return n == 4;
        case 'G': return n == 2;
        default: return false;
    }
}

static bool registry_ok(const Label& l, bool canonical) {
    const char f = l.family;
    const int n = l.rank;
    switch (l.twist) {
        case 0:
        case 1: return finite_ok(f, n, canonical);
        case 2:
            if (f == 'A') {
                if (n % 2 == 0) return n >= 2;
                return n >= (canonical ? 5 : 1);
            }
            if (f == 'D') return n >= (canonical ? 3 : 2);
            return f == 'E' && n == 6;
        case 3: return f == 'D' && n == 4;
        default: return false;
    }
}

bool is_canonical(const Label& l) { return registry_ok(l, true); }
bool is_known(const Label& l) { return registry_ok(l, false); }

Components normalize(const Label& l) {
    if (!is_known(l)) throw UnknownLabel(to_string(l));
    auto with = [&](char f, int n, int t, LengthClass alias_len) {
        Label r{f, n, t, l.length == LengthClass::unmarked ? alias_len : l.length};
        return r;
    };
    const auto S = LengthClass::short_roots, L = LengthClass::long_roots,
               U = LengthClass::unmarked;
    const int t = l.twist;
    if (t <= 1) {
        switch (l.family) {
            case 'D':
                if (l.rank == 2) return {with('A', 1, t, U), with('A', 1, t, U)};
                if (l.rank == 3) return {with('A', 3, t, U)};
                break;
            case 'B':
                if (l.rank == 1) return {with('A', 1, t, S)};
                if (l.rank == 2) return {with('C', 2, t, S)};
                break;
            case 'C':
                if (l.rank == 1) return {with('A', 1, t, L)};
                break;
        }
    } else if (t == 2) {
        if (l.family == 'A' && l.rank == 1) return {with('A', 1, 1, L)};
        if (l.family == 'A' && l.rank == 3) return {with('D', 3, 2, U)};
        if (l.family == 'D' && l.rank == 2) return {with('A', 1, 1, S)};
    }
    return {l};
}

void sort_components(Components& c) { std::sort(c.begin(), c.end(), label_less); }

Components normalize(const Components& c) {
    Components out;
    for (const auto& l : c) {
        auto n = normalize(l);
        out.insert(out.end(), n.begin(), n.end());
    }
    sort_components(out);
    return out;
}

std::string to_string(const Label& l) {
    std::string s;
    if (l.length == LengthClass::short_roots) s = ".";
    if (l.length == LengthClass::long_roots) s = "..";
    s += l.family;
    s += std::to_string(l.rank);
    if (l.twist > 0) s += "^(" + std::to_string(l.twist) + ")";
    return s;
}

std::string to_string(const Components& c) {
    std::string s;
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) s += "+";
        s += to_string(c[i]);
    }
    return s.empty() ? "0" : s;
}

namespace {

struct Cursor {
    std::string_view text;
    size_t pos = 0;
    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }
    int col() const { return static_cast<int>(pos) + 1; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, col()); }
    int number() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
        int v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (text[pos++] - '0');
            if (v > 1000) fail("number too large");
        }
        return v;
    }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }
};

}  // namespace

Components parse_components(std::string_view text) {
    Cursor cur{text};
    Components raw;
    while (true) {
        while (cur.peek() == ' ') ++cur.pos;
        const int start = cur.col();
        LengthClass len = LengthClass::unmarked;
        if (cur.peek() == '.') {
            ++cur.pos;
            len = LengthClass::short_roots;
            if (cur.peek() == '.') {
                ++cur.pos;
                len = LengthClass::long_roots;
            }
        }
        int mult = 1;
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            mult = cur.number();
            if (mult < 1) cur.fail("multiplicity must be positive");
        }
        const char fam = cur.peek();
        if (fam < 'A' || fam > 'G') cur.fail("expected a family letter A-G");
        ++cur.pos;
        Label l{fam, cur.number(), 0, len};
        if (cur.peek() == '^') {
            ++cur.pos;
            cur.expect('(');
            l.twist = cur.number();
            cur.expect(')');
        }
        if (!is_known(l)) throw ParseError("unknown type " + to_string(l), start);
        for (int i = 0; i < mult; ++i) raw.push_back(l);
        while (cur.peek() == ' ') ++cur.pos;
        if (cur.done()) break;
        cur.expect('+');
    }
    return normalize(raw);
}

Label parse_label(std::string_view text) {
    auto c = parse_components(text);
    if (c.size() != 1) throw ParseError("expected a single indecomposable type", 1);
    return c.front();
}

Label underlying_finite(const Label& a) {
    if (!a.is_affine()) return a;
    const int l = a.nodes() - 1;
    if (a.twist == 1) return Label{a.family, a.rank, 0};
    if (a.twist == 3) return Label{'G', 2, 0};
    if (a.family == 'E') return Label{'F', 4, 0};
    if (a.family == 'A' && a.rank % 2 == 1) return Label{'C', l, 0};
    // A_{2l}^(2) and D_{l+1}^(2): finite part of type B_l (B_1 = A_1, B_2 = C_2).
    if (l == 1) return Label{'A', 1, 0};
    if (l == 2) return Label{'C', 2, 0};
    return Label{'B', l, 0};
}

Label loop_algebra(const Label& a) { return Label{a.family, a.rank, 0}; }

}  // namespace kmroots
