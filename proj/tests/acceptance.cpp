// Acceptance run: one PASS/FAIL line per criterion, details indented below.
// All comparisons are exact; the bounds below are the only tunables.

#include <chrono>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "kmroots/classifier.hpp"
#include "kmroots/coset.hpp"
#include "kmroots/errors.hpp"
#include "kmroots/hyperbolic.hpp"
#include "oracles.hpp"

using namespace kmroots;

namespace {

constexpr Int kMmax = 4;               // null-root level bound for every search
constexpr Int kIndexBound = 36;        // largest table index compared
constexpr Int kMaxK = 12;              // same-type sweep range
constexpr long kAllowedDisagreements = 0;
constexpr int kSweepSize = 4;          // largest matrix in the hyperbolicity sweep
constexpr Int kSweepMinEntry = -4;

struct Outcome {
    bool pass = true;
    std::string summary;
    std::vector<std::string> details;
};

std::map<std::string, SearchResult>& searches() {
    static std::map<std::string, SearchResult> cache;
    return cache;
}

const SearchResult& search(const Label& l) {
    auto& cache = searches();
    const std::string key = to_string(l);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, maximal_subsystems_search(build_affine(l), {kMmax, 5})).first;
    return it->second;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep = ", ") {
    std::string out;
    for (const auto& x : xs) out += (out.empty() ? "" : sep) + x;
    return out;
}

// ---- 1: search reproduces the tables

Outcome table_regression() {
    Outcome o;
    int agree = 0;
    for (const Label& l : regression_labels()) {
        const auto t0 = std::chrono::steady_clock::now();
        const TableComparison diff = compare_with_table(l, search(l).maximal, kIndexBound, kMmax);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (diff.ok) {
            ++agree;
            continue;
        }
        o.pass = false;
        std::ostringstream d;
        d << to_string(l) << " (" << static_cast<int>(secs) << " s): missing [" << join(diff.missing)
          << "] unexpected [" << join(diff.unexpected) << "]";
        o.details.push_back(d.str());
    }
    o.summary = std::to_string(agree) + "/" + std::to_string(regression_labels().size()) +
                " labels agree with the tables at m_max " + std::to_string(kMmax);
    return o;
}

// ---- 2: same-type copies

Outcome same_type_sweep() {
    Outcome o;
    int checked = 0;
    for (const Label& l : regression_labels()) {
        const AffinePtr sys = build_affine(l);
        for (Int k = 1; k <= kMaxK; ++k) {
            const bool expect = l.twist == 1 || (l.twist == 3 ? k % 3 != 0 : k % 2 == 1);
            const SameTypeResult r = same_type_subsystem(sys, k);
            ++checked;
            std::string problem;
            if (r.valid != expect) {
                problem = r.valid ? "valid, rule says invalid" : "invalid (" + r.reason + "), rule says valid";
            } else if (r.valid) {
                Int power = 1;
                for (int i = 0; i < l.finite_rank(); ++i) power *= k;
                if (!check_simple_root_condition(*sys, r.sub->simple_roots).ok) problem = "fails the simple-root condition";
                if (r.sub->weyl_index != Index::of(power))
                    problem = "index " + r.sub->weyl_index.str() + ", expected " + std::to_string(power);
            }
            if (!problem.empty()) {
                o.pass = false;
                o.details.push_back(to_string(l) + " k=" + std::to_string(k) + ": " + problem);
            }
        }
    }
    o.summary = std::to_string(checked) + " (label, k) pairs, k <= " + std::to_string(kMaxK);
    return o;
}

// ---- 3: simple-root condition against the truncated lattice criterion

// Levels of the components' null roots; empty when some component is finite.
std::vector<Int> null_levels(const AffinePtr& sys, const std::vector<Vec>& base) {
    const Subsystem sub = make_subsystem(sys, base, false);
    std::vector<Int> out;
    for (const auto& comp : sub.components) {
        if (!comp.label.is_affine()) return {};
        const Vec& marks = build_affine(comp.label.bare())->marks;
        Int level = 0;
        for (size_t i = 0; i < comp.nodes.size(); ++i) level += marks[i] * sub.simple_roots[comp.nodes[i]][0];
        out.push_back(level);
    }
    return out;
}

Outcome criterion_equivalence() {
    Outcome o;
    long total = 0, disagree = 0, equal_levels = 0, unequal_levels = 0;
    for (const Label& l : regression_labels()) {
        const AffinePtr sys = build_affine(l);
        long here = 0;
        for (const CandidateRecord& c : search(l).candidates) {
            ++total;
            if (c.simple_root_condition == c.lattice_condition) continue;
            ++here;
            const std::vector<Int> lv = null_levels(sys, c.base);
            const bool equal = !lv.empty() && std::set<Int>(lv.begin(), lv.end()).size() == 1;
            ++(equal ? equal_levels : unequal_levels);
        }
        disagree += here;
        if (here) o.details.push_back(to_string(l) + ": " + std::to_string(here) + " disagreements");
    }
    o.pass = disagree <= kAllowedDisagreements;
    o.summary = std::to_string(disagree) + " disagreements over " + std::to_string(total) + " candidates (" +
                std::to_string(equal_levels) + " with equal component levels, " + std::to_string(unequal_levels) +
                " with unequal levels)";
    return o;
}

// ---- 4: lattice index of equal-rank maximal pairs

Outcome lattice_index() {
    Outcome o;
    int pairs = 0;
    for (const Label& l : regression_labels()) {
        const AffinePtr sys = build_affine(l);
        const Lattice whole = lattice_from_roots(sys->simple_roots());
        std::set<std::string> seen;
        for (const Subsystem& s : search(l).maximal) {
            if (!s.all_affine()) continue;
            const Components t = s.type();
            // Same-type copies at level k have index k by construction.
            if (t.size() == 1 && t[0].bare() == l) continue;
            const Index idx = sublattice_index(whole, lattice_from_roots(s.simple_roots, sys->size()));
            const bool three = (l == parse_label("G2^(1)") && t.size() == 1 && t[0].bare() == parse_label("A2^(1)")) ||
                               (l == parse_label("D4^(3)") && t.size() == 1 && t[0].bare() == parse_label("G2^(1)"));
            const Index want = Index::of(three ? 3 : 2);
            const std::string key = to_string(t) + " " + idx.str();
            if (!seen.insert(key).second) continue;
            ++pairs;
            if (idx != want) {
                o.pass = false;
                o.details.push_back(to_string(l) + " > " + to_string(t) + ": index " + idx.str() + ", expected " +
                                    want.str());
            }
        }
    }
    o.summary = std::to_string(pairs) + " distinct equal-rank maximal pairs";
    return o;
}

// ---- 5: untwisted coset formulas

std::set<BigRat> integer_levels(const Charge& c) {
    std::set<BigRat> out;
    for (const auto& l : conformal_levels(c).levels)
        if (l.kind == LevelKind::integer) out.insert(l.level);
    return out;
}

Outcome untwisted_cosets() {
    Outcome o;
    int total = 0, identities = 0, claims = 0;
    for (const Fixture& f : fixtures()) {
        if (f.twisted) continue;
        ++total;
        const FixtureReport r = verify_printed_formula(f.id);
        identities += r.identity;
        claims += r.levels_ok;
        if (r.identity && r.levels_ok) continue;
        o.pass = false;
        std::string d = f.id + ":";
        if (!r.identity) d += " printed " + r.printed.str() + " vs computed " + r.computed.str() + ";";
        if (!r.levels_ok) d += " level claim fails;";
        o.details.push_back(d);
    }
    // Level sets named explicitly, integer levels only.
    const std::map<std::string, std::set<BigRat>> named = {
        {"E6>A5+A1", {-3, 1}}, {"E7>D6+A1", {-4, 1}},  {"E7>A5+A2", {-4, 1}}, {"E8>A8", {1}},
        {"E8>D8", {1}},        {"E8>E7+A1", {-6, 1}}, {"E8>E6+A2", {-6, 1}}, {"E8>A4+A4", {1}}};
    for (const auto& [id, want] : named) {
        const std::set<BigRat> got = integer_levels(verify_printed_formula(id).computed);
        if (got == want) continue;
        o.pass = false;
        std::string g;
        for (const BigRat& x : got) g += (g.empty() ? "" : ",") + to_string(x);
        o.details.push_back(id + ": integer levels {" + g + "}");
    }
    for (const Fixture& f : fixtures()) {
        if (f.twisted || !(f.id[0] == 'G' || f.id[0] == 'F' || f.id[0] == 'A')) continue;
        for (const BigRat& x : integer_levels(verify_printed_formula(f.id).computed))
            if (x > 0) {
                o.pass = false;
                o.details.push_back(f.id + ": vanishes at positive integer level " + to_string(x));
            }
    }
    o.summary = std::to_string(identities) + "/" + std::to_string(total) + " identities, " + std::to_string(claims) +
                "/" + std::to_string(total) + " level claims";
    return o;
}

// ---- 6: twisted coset formulas

bool listed_twisted(const Fixture& f) {
    if (f.low_confidence) return true;
    for (const char* p : {"A2^(2)>", "D4^(3)>", "E6^(2)>", "D3^(2)>B2^(1)", "D4^(2)>B3^(1)", "D5^(2)>B4^(1)"})
        if (f.id.rfind(p, 0) == 0) return true;
    return false;
}

Outcome twisted_cosets() {
    Outcome o;
    int listed = 0, passed = 0, extra = 0, extra_passed = 0;
    for (const Fixture& f : fixtures()) {
        if (!f.twisted) continue;
        const FixtureReport r = verify_printed_formula(f.id);
        const bool ok = f.low_confidence ? r.consistent : r.identity && r.levels_ok;
        if (!listed_twisted(f)) {
            ++extra;
            extra_passed += ok;
            if (!ok) o.details.push_back("(informational) " + f.id + " differs");
            continue;
        }
        ++listed;
        passed += ok;
        if (ok) continue;
        o.pass = false;
        std::string d = f.id + ": computed " + r.computed.str() + ", printed " + r.printed.str();
        if (f.low_confidence)
            d += " (degree/zero check failed)";
        else
            d += "; difference " + r.difference.str() + (r.levels_ok ? "" : "; level claim fails");
        o.details.push_back(d);
    }
    o.summary = std::to_string(passed) + "/" + std::to_string(listed) + " listed fixtures, " +
                std::to_string(extra_passed) + "/" + std::to_string(extra) + " further fixtures";
    return o;
}

// ---- 7: positive integer conformal levels are 1

Outcome level_one() {
    Outcome o;
    int pairs = 0;
    for (const Fixture& f : fixtures()) {
        if (f.twisted || !f.maximal) continue;
        ++pairs;
        for (const BigRat& x : integer_levels(verify_printed_formula(f.id).computed))
            if (x > 0 && x != 1) {
                o.pass = false;
                o.details.push_back(f.id + ": conformal at level " + to_string(x));
            }
    }
    o.summary = std::to_string(pairs) + " untwisted maximal pairs";
    return o;
}

// ---- 8: hyperbolic pipeline

std::vector<std::string> sorted_types(const std::vector<Subdiagram>& s) {
    std::vector<std::string> out;
    for (const auto& d : s) out.push_back(to_string(d.type));
    std::sort(out.begin(), out.end());
    return out;
}

Outcome hyperbolic_pipeline() {
    Outcome o;
    struct Example {
        IntMatrix m;
        std::vector<std::string> subdiagrams, depth_one;
    };
    const std::vector<Example> examples = {
        {{{2, -3}, {-3, 2}}, {"A1", "A1"}, {"A1"}},
        {{{2, -2, 0}, {-2, 2, -1}, {0, -1, 2}}, {"A1+A1", "A1^(1)", "A2"}, {"A1", "A1+A1", "A1^(1)", "A2"}},
        {{{2, -4, 0}, {-1, 2, -1}, {0, -1, 2}},
         {"..A2", ".A1+..A1", "A2^(2)"},
         {"..A1", "..A1^(1)", "..A2", ".A1+..A1", ".A1^(1)", "A2^(2)"}},
    };
    int entries = 0;
    for (const Example& ex : examples) {
        std::ostringstream name;
        name << "rank " << ex.m.size() << " " << ex.subdiagrams.back();
        const HyperbolicVerdict v = is_hyperbolic(ex.m);
        if (!v.hyperbolic || sorted_types(v.certificate) != ex.subdiagrams) {
            o.pass = false;
            o.details.push_back(name.str() + ": subdiagrams " + join(sorted_types(v.certificate)));
            continue;
        }
        std::vector<std::string> got;
        for (const auto& e : regular_non_indefinite_subalgebras(ex.m, 1, kMmax)) {
            got.push_back(to_string(e.type));
            ++entries;
            if (!e.verified) {
                o.pass = false;
                o.details.push_back(name.str() + ": " + to_string(e.type) + " not verified");
            }
        }
        if (got != ex.depth_one) {
            o.pass = false;
            o.details.push_back(name.str() + ": depth-1 entries " + join(got));
        }
    }
    // Exhaustive agreement with the principal-minor definition.
    long checked = 0, hyperbolic = 0, wrong = 0;
    for (int n = 1; n <= kSweepSize; ++n)
        oracle::for_each_gcm(n, kSweepMinEntry, [&](const IntMatrix& a) {
            if (!oracle::symmetrizable(a)) return;
            ++checked;
            const bool expect = oracle::hyperbolic(a);
            hyperbolic += expect;
            if (is_hyperbolic(a).hyperbolic != expect) ++wrong;
        });
    if (wrong) {
        o.pass = false;
        o.details.push_back(std::to_string(wrong) + " sweep disagreements");
    }
    o.summary = std::to_string(entries) + " verified entries; sweep of " + std::to_string(checked) +
                " symmetrizable matrices up to size " + std::to_string(kSweepSize) + " (" +
                std::to_string(hyperbolic) + " hyperbolic) agrees";
    if (wrong) o.summary = std::to_string(entries) + " entries; sweep disagrees";
    return o;
}

// ---- 9: finite maximal subsystems against the brute-force oracle

Outcome finite_oracle() {
    Outcome o;
    int labels = 0;
    for (const char* name : {"A1", "A2", "A3", "A4", "C2", "B3", "C3", "B4", "C4", "D4", "G2", "F4"}) {
        ++labels;
        const Label l = parse_label(name);
        std::set<std::string> mine;
        for (const auto& s : finite_maximal_subsystems(l)) mine.insert(to_string(s.type));
        const std::set<std::string> brute = oracle::brute_force_maximal_types(l);
        if (mine == brute) continue;
        o.pass = false;
        o.details.push_back(std::string(name) + ": library {" + join({mine.begin(), mine.end()}) + "} oracle {" +
                            join({brute.begin(), brute.end()}) + "}");
    }
    o.summary = std::to_string(labels) + " finite types of rank <= 4";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {1, "table regression", table_regression},
        {2, "same-type copies", same_type_sweep},
        {3, "simple-root condition equals the lattice criterion", criterion_equivalence},
        {4, "sublattice index 2 or 3", lattice_index},
        {5, "untwisted coset formulas", untwisted_cosets},
        {6, "twisted coset formulas", twisted_cosets},
        {7, "positive conformal levels are 1", level_one},
        {8, "hyperbolic pipeline", hyperbolic_pipeline},
        {9, "finite oracle", finite_oracle},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.summary = std::string("error: ") + e.what();
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.number << " (" << c.name << "): " << o.summary
                  << std::endl;
        for (const auto& d : o.details) std::cout << "    " << d << "\n";
    }
    std::cout << (9 - failed) << "/9 criteria pass" << std::endl;
    return failed ? 1 : 0;
}
