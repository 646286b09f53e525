#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "kmroots/classifier.hpp"
#include "kmroots/coset.hpp"
#include "kmroots/errors.hpp"
#include "kmroots/hyperbolic.hpp"

using json = nlohmann::json;
using namespace kmroots;

namespace {

enum Exit { ok = 0, usage = 1, inconsistent = 2, mismatch = 3 };

Int default_mmax() {
    if (const char* env = std::getenv("KMROOTS_MMAX")) {
        try {
            return std::stoll(env);
        } catch (const std::exception&) {
            throw ConditionViolated(std::string("KMROOTS_MMAX is not an integer: ") + env);
        }
    }
    return 4;
}

std::string rat(const Rat& q) {
    return q.denominator() == 1 ? std::to_string(q.numerator())
                                : std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::string approx(const BigRat& q) {
    std::ostringstream os;
    os << "≈ " << std::setprecision(12) << q.convert_to<double>();
    return os.str();
}

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConditionViolated("cannot read " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ConditionViolated(path + ": " + e.what());
    }
}

std::vector<Vec> read_base(const std::string& path) {
    const json j = read_json(path);
    try {
        return j.get<std::vector<Vec>>();
    } catch (const json::exception&) {
        throw ConditionViolated(path + ": expected an array of integer vectors");
    }
}

json charge_json(const Charge& c) {
    json out = {{"charge", c.str()}, {"numerator", c.numerator.str()}, {"denominator", c.denominator.str()}};
    out["critical_levels"] = json::array();
    for (const BigRat& x : c.excluded_levels) out["critical_levels"].push_back(to_string(x));
    return out;
}

json levels_json(const Charge& c) {
    json out = {{"levels", json::array()}, {"non_rational_roots", 0}};
    if (c.is_zero()) {
        out["identically_zero"] = true;
        return out;
    }
    const ConformalLevels lv = conformal_levels(c);
    for (const auto& l : lv.levels) out["levels"].push_back({{"level", to_string(l.level)}, {"kind", to_string(l.kind)}});
    out["non_rational_roots"] = lv.non_rational_roots;
    return out;
}

json components_json(const Embedding& e) {
    json out = json::array();
    for (const auto& c : e.components) out.push_back({{"label", to_string(c.label)}, {"j", rat(c.j)}});
    return out;
}

// ---- roots

int cmd_roots(const std::string& text, Int m_max) {
    const Label l = parse_label(text);
    json out = {{"label", to_string(l)}, {"roots", json::array()}};
    if (!l.is_affine()) {
        const FiniteRootSystem sys = build_finite(l);
        for (const Vec& v : sys.all_roots) out["roots"].push_back({{"coords", v}, {"norm", rat(sys.norm(v))}});
        out["finite"] = true;
    } else {
        const AffinePtr sys = build_affine(l);
        for (const Vec& v : enumerate_roots(*sys, m_max))
            out["roots"].push_back(
                {{"coords", v}, {"level", sys->level(v)}, {"kind", to_string(is_root(*sys, v))}});
        out["finite"] = false;
        out["m_max"] = m_max;
    }
    out["count"] = out["roots"].size();
    std::cout << out.dump(2) << "\n";
    return ok;
}

// ---- check

int cmd_check(const std::string& text, const std::string& base_file, Int m_max) {
    const Label l = parse_label(text);
    if (!l.is_affine()) throw NotAffine(to_string(l));
    const AffinePtr sys = build_affine(l);
    const std::vector<Vec> base = read_base(base_file);
    for (const Vec& v : base)
        if (static_cast<int>(v.size()) != sys->size())
            throw DimensionMismatch("vectors need " + std::to_string(sys->size()) + " coordinates");
    const ConditionResult eq1 = check_simple_root_condition(*sys, base);
    const Subsystem sub = make_subsystem(sys, base, true);
    const LatticeVerdict lat = lattice_criterion_detail(sub, m_max);
    json out = {{"label", to_string(l)}, {"base", base},          {"eq1", eq1.ok},
                {"lattice", lat.ok},     {"m_max", m_max},        {"components", to_string(sub.type())},
                {"index", sub.weyl_index.str()}};
    if (eq1.witness) out["eq1_witness"] = {eq1.witness->first, eq1.witness->second};
    if (!lat.extra.empty()) out["lattice_extra"] = lat.extra;
    std::cout << out.dump(2) << "\n";
    if (eq1.ok != lat.ok) {
        std::cerr << "the simple-root condition and the lattice criterion disagree\n";
        return inconsistent;
    }
    return ok;
}

// ---- classify

json entry_json(const ClassificationEntry& e) {
    return {{"sub", to_string(e.sub)}, {"index", e.index.str()}, {"kind", to_string(e.kind)}, {"inferred", e.inferred}};
}

json subsystem_json(const Subsystem& s) {
    return {{"sub", to_string(s.type())}, {"index", s.weyl_index.str()}, {"base", s.simple_roots}};
}

int cmd_classify(const std::string& text, int depth, Int m_max, bool search) {
    const Label l = parse_label(text);
    if (!l.is_affine()) throw NotAffine(to_string(l));
    json out = {{"label", to_string(l)}};
    if (!search) {
        out["mode"] = "table";
        out["depth"] = depth;
        out["entries"] = json::array();
        const auto entries = depth <= 1 ? table_maximal(l) : all_regular_subsystems(l, depth);
        for (const auto& e : entries) out["entries"].push_back(entry_json(e));
        std::cout << out.dump(2) << "\n";
        return ok;
    }
    const SearchResult found = maximal_subsystems_search(build_affine(l), {m_max, 5});
    const TableComparison diff = compare_with_table(l, found.maximal, 36, m_max);
    out["mode"] = "search";
    out["m_max"] = m_max;
    out["found"] = json::array();
    for (const auto& s : found.maximal) out["found"].push_back(subsystem_json(s));
    out["missing"] = diff.missing;
    out["unexpected"] = diff.unexpected;
    out["agrees"] = diff.ok;
    std::cout << out.dump(2) << "\n";
    return diff.ok ? ok : mismatch;
}

// ---- charge and levels

struct PairQuery {
    std::string g, h;
    std::vector<Int> s_g, s_h;
    Int m_max = 4;
};

Charge pair_charge(const PairQuery& q, json& out) {
    const Label g = parse_label(q.g);
    const Components h = parse_components(q.h);
    const Embedding e = embed(g, h, q.m_max);
    out["g"] = to_string(g);
    out["h"] = to_string(h);
    out["components"] = components_json(e);
    if (!g.is_affine()) {
        if (!q.s_g.empty() || !q.s_h.empty()) throw ConditionViolated("tuples apply to affine pairs only");
        return coset_charge(e);
    }
    out["m_max"] = q.m_max;
    return twisted_coset_charge(e, q.s_g, q.s_h);
}

int cmd_charge(const PairQuery& q, const std::optional<std::string>& level) {
    json out;
    const Charge c = pair_charge(q, out);
    out.update(charge_json(c));
    if (level) {
        BigRat k;
        try {
            k = BigRat(*level);
        } catch (const std::exception&) {
            throw ConditionViolated("level is not a rational number: " + *level);
        }
        const BigRat v = c.at(k);
        out["k"] = to_string(k);
        out["value"] = to_string(v);
        out["approx"] = approx(v);
    }
    std::cout << out.dump(2) << "\n";
    return ok;
}

int cmd_levels(const PairQuery& q, bool all) {
    json out;
    if (all) {
        const Label g = parse_label(q.g);
        out["g"] = to_string(g);
        out["pairs"] = json::array();
        for (const auto& mc : maximal_charges(g, q.m_max)) {
            json p = {{"h", to_string(mc.type)}};
            p.update(charge_json(mc.charge));
            p.update(levels_json(mc.charge));
            out["pairs"].push_back(p);
        }
        if (g.is_affine()) out["m_max"] = q.m_max;
    } else {
        const Charge c = pair_charge(q, out);
        out.update(charge_json(c));
        out.update(levels_json(c));
    }
    std::cout << out.dump(2) << "\n";
    return ok;
}

// ---- hyperbolic

int cmd_hyperbolic(const std::string& file, int depth, Int m_max) {
    IntMatrix m;
    try {
        m = read_json(file).get<IntMatrix>();
    } catch (const json::exception&) {
        throw InvalidGCM(file + ": expected a square integer matrix");
    }
    for (const auto& row : m)
        if (row.size() != m.size()) throw InvalidGCM(file + ": matrix is not square");
    const HyperbolicVerdict v = is_hyperbolic(m);
    json out = {{"matrix", m}, {"hyperbolic", v.hyperbolic}};
    if (!v.hyperbolic) {
        out["reason"] = v.reason;
        std::cout << out.dump(2) << "\n";
        return usage;
    }
    out["subdiagrams"] = json::array();
    for (const auto& s : v.certificate) out["subdiagrams"].push_back({{"nodes", s.nodes}, {"type", to_string(s.type)}});
    out["depth"] = depth;
    out["m_max"] = m_max;
    out["entries"] = json::array();
    bool consistent = true;
    for (const auto& e : regular_non_indefinite_subalgebras(m, depth, m_max)) {
        json j = {{"type", to_string(e.type)}, {"realized", e.realized}, {"verified", e.verified},
                  {"base", e.base},            {"chains", e.chains},     {"scope", "maximal within derivation chain"}};
        if (e.witness) j["witness"] = {e.witness->first, e.witness->second};
        consistent = consistent && (!e.realized || e.verified);
        out["entries"].push_back(j);
    }
    std::cout << out.dump(2) << "\n";
    return consistent ? ok : inconsistent;
}

// ---- verify-tables

json verify_search_tables(int max_rank, Int m_max, bool& all_ok) {
    json out = json::array();
    for (const Label& l : regression_labels()) {
        if (l.finite_rank() > max_rank) continue;
        const SearchResult found = maximal_subsystems_search(build_affine(l), {m_max, 5});
        const TableComparison diff = compare_with_table(l, found.maximal, 36, m_max);
        all_ok = all_ok && diff.ok;
        out.push_back({{"label", to_string(l)}, {"ok", diff.ok}, {"missing", diff.missing}, {"unexpected", diff.unexpected}});
    }
    return out;
}

json verify_coset(bool& all_ok) {
    json out = json::array();
    for (const Fixture& f : fixtures()) {
        const FixtureReport r = verify_printed_formula(f.id);
        const bool pass = f.low_confidence ? r.consistent : r.identity && r.levels_ok;
        all_ok = all_ok && pass;
        json j = {{"id", f.id},
                  {"ok", pass},
                  {"twisted", f.twisted},
                  {"low_confidence", f.low_confidence},
                  {"identity", r.identity},
                  {"levels_ok", r.levels_ok},
                  {"consistent", r.consistent},
                  {"computed", r.computed.str()},
                  {"printed", r.printed.str()}};
        if (!r.identity) j["difference"] = r.difference.str();
        out.push_back(j);
    }
    return out;
}

json verify_lemma_kn(int max_rank, bool& all_ok) {
    json out = json::array();
    for (const Label& l : regression_labels()) {
        if (l.finite_rank() > max_rank) continue;
        const AffinePtr sys = build_affine(l);
        json ks = json::array();
        bool label_ok = true;
        for (Int k = 1; k <= 12; ++k) {
            const bool expect = l.twist == 1 || (l.twist == 3 ? k % 3 != 0 : k % 2 == 1);
            const SameTypeResult r = same_type_subsystem(sys, k);
            bool pass = r.valid == expect;
            if (pass && r.valid) {
                Int power = 1;
                for (int i = 0; i < l.finite_rank(); ++i) power *= k;
                pass = check_simple_root_condition(*sys, r.sub->simple_roots).ok &&
                       r.sub->weyl_index == Index::of(power);
            }
            label_ok = label_ok && pass;
            ks.push_back({{"k", k}, {"valid", r.valid}, {"expected", expect}, {"ok", pass}});
        }
        all_ok = all_ok && label_ok;
        out.push_back({{"label", to_string(l)}, {"ok", label_ok}, {"k", ks}});
    }
    return out;
}

int cmd_verify_tables(const std::string& scope, int max_rank, Int m_max) {
    bool all_ok = true;
    json out = {{"scope", scope}};
    if (scope == "tables" || scope == "all") {
        out["tables"] = verify_search_tables(max_rank, m_max, all_ok);
        out["m_max"] = m_max;
    }
    if (scope == "coset" || scope == "all") out["coset"] = verify_coset(all_ok);
    if (scope == "lemma-kn" || scope == "all") out["lemma_kn"] = verify_lemma_kn(max_rank, all_ok);
    out["ok"] = all_ok;
    std::cout << out.dump(2) << "\n";
    return all_ok ? ok : mismatch;
}

std::vector<Int> tuple_option(const std::string& text) {
    std::vector<Int> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stoll(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw InvalidTuple("not an integer: " + part);
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Regular subalgebras of affine Kac-Moody algebras and coset central charges"};
    app.require_subcommand(1);
    std::optional<Int> mmax_flag;
    std::string label, label2, file, scope = "all", sg, sh;
    std::optional<std::string> level;
    int depth = 1, max_rank = 4;
    bool search = false, table = false, all = false;

    auto* roots = app.add_subcommand("roots", "List roots of a finite or affine type");
    roots->add_option("label", label, "Type label, e.g. A4^(2) or E8")->required();
    roots->add_option("--mmax", mmax_flag, "Largest |level| for affine types");

    auto* check = app.add_subcommand("check", "Test a candidate base against both subsystem criteria");
    check->add_option("label", label, "Affine type label")->required();
    check->add_option("base", file, "JSON file holding simple-root coordinate vectors")->required();
    check->add_option("--mmax", mmax_flag, "Truncation level for the lattice criterion");

    auto* classify = app.add_subcommand("classify", "Maximal regular subsystems from the tables or the search");
    classify->add_option("label", label, "Affine type label")->required();
    classify->add_option("--depth", depth, "Chain depth in table mode")->check(CLI::PositiveNumber);
    classify->add_option("--mmax", mmax_flag, "Largest null-root level in search mode");
    auto* search_flag = classify->add_flag("--search", search, "Run the bounded search and diff against the table");
    classify->add_flag("--table", table, "Print table entries (default)")->excludes(search_flag);

    auto* charge = app.add_subcommand("charge", "Coset central charge of h in g");
    charge->add_option("ambient", label, "Ambient label")->required();
    charge->add_option("subalgebra", label2, "Subalgebra components, e.g. A5+A1")->required();
    charge->add_option("--k", level, "Evaluate at this level");
    charge->add_option("--mmax", mmax_flag, "Search bound for affine ambients");
    charge->add_option("--sg", sg, "Comma-separated tuple on the nodes of g");
    charge->add_option("--sh", sh, "Comma-separated tuple on the nodes of h");

    auto* levels = app.add_subcommand("levels", "Levels where the coset charge vanishes");
    levels->add_option("ambient", label, "Ambient label")->required();
    auto* h_opt = levels->add_option("subalgebra", label2, "Subalgebra components");
    levels->add_flag("--all", all, "Every maximal subsystem of g")->excludes(h_opt);
    levels->add_option("--mmax", mmax_flag, "Search bound for affine ambients");
    levels->add_option("--sg", sg, "Comma-separated tuple on the nodes of g");
    levels->add_option("--sh", sh, "Comma-separated tuple on the nodes of h");

    auto* hyperbolic = app.add_subcommand("hyperbolic", "Hyperbolicity and regular non-indefinite subalgebras");
    hyperbolic->add_option("gcm", file, "JSON file holding a generalized Cartan matrix")->required();
    hyperbolic->add_option("--depth", depth, "Expansion steps after the maximal subdiagrams")->check(CLI::PositiveNumber);
    hyperbolic->add_option("--mmax", mmax_flag, "Search bound for affine subdiagrams");

    auto* verify = app.add_subcommand("verify-tables", "Regression sweep against the printed tables and formulas");
    verify->add_option("--scope", scope, "tables, coset, lemma-kn or all")
        ->check(CLI::IsMember({"tables", "coset", "lemma-kn", "all"}));
    verify->add_option("--maxrank", max_rank, "Largest finite rank of swept labels")->check(CLI::PositiveNumber);
    verify->add_option("--mmax", mmax_flag, "Search bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        const Int m_max = mmax_flag ? *mmax_flag : default_mmax();
        if (m_max < 1) throw ConditionViolated("m_max must be positive");
        PairQuery q{label, label2, tuple_option(sg), tuple_option(sh), m_max};
        if (*roots) return cmd_roots(label, m_max);
        if (*check) return cmd_check(label, file, m_max);
        if (*classify) return cmd_classify(label, depth, m_max, search);
        if (*charge) return cmd_charge(q, level);
        if (*levels) {
            if (!all && label2.empty()) throw ConditionViolated("give a subalgebra or --all");
            return cmd_levels(q, all);
        }
        if (*hyperbolic) return cmd_hyperbolic(file, depth, m_max);
        if (*verify) return cmd_verify_tables(scope, max_rank, m_max);
    } catch (const InternalError& e) {
        std::cerr << e.what() << "\n";
        return inconsistent;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return inconsistent;
    }
    return usage;
}
