#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "kmroots/errors.hpp"
#include "kmroots/subsystems.hpp"

namespace kmroots {

IntMatrix registry_cartan(const Label& label) {
    if (!label.is_affine()) return finite_cartan(label.family, label.rank);
    return build_affine(label)->cartan;
}

namespace {

std::vector<Label> candidates(int s, bool affine) {
    std::vector<Label> out;
    if (!affine) {
        out.push_back({'A', s, 0});
        if (s >= 3) out.push_back({'B', s, 0});
        if (s >= 2) out.push_back({'C', s, 0});
        if (s >= 4) out.push_back({'D', s, 0});
        if (s >= 6 && s <= 8) out.push_back({'E', s, 0});
        if (s == 4) out.push_back({'F', 4, 0});
        if (s == 2) out.push_back({'G', 2, 0});
        return out;
    }
    const int l = s - 1;
    if (l < 1) return out;
    out.push_back({'A', l, 1});
    if (l >= 3) out.push_back({'B', l, 1});
    if (l >= 2) out.push_back({'C', l, 1});
    if (l >= 4) out.push_back({'D', l, 1});
    if (l >= 6 && l <= 8) out.push_back({'E', l, 1});
    if (l == 4) out.push_back({'F', 4, 1});
    if (l == 2) out.push_back({'G', 2, 1});
    out.push_back({'A', 2 * l, 2});
    if (l >= 3) out.push_back({'A', 2 * l - 1, 2});
    if (l >= 2) out.push_back({'D', l + 1, 2});
    if (l == 4) out.push_back({'E', 6, 2});
    if (l == 2) out.push_back({'D', 4, 3});
    return out;
}

using Signature = std::vector<std::pair<Int, Int>>;

Signature signature(const IntMatrix& a, int i) {
    Signature s;
    for (size_t j = 0; j < a.size(); ++j)
        if (static_cast<int>(j) != i && a[i][j] != 0) s.emplace_back(a[i][j], a[j][i]);
    std::sort(s.begin(), s.end());
    return s;
}

// Finds perm with block[perm[i]][perm[j]] == reg[i][j] for all i, j.
bool match(const IntMatrix& reg, const IntMatrix& block, std::vector<int>& perm) {
    const int n = static_cast<int>(reg.size());
    std::vector<Signature> rs(n), bs(n);
    for (int i = 0; i < n; ++i) {
        rs[i] = signature(reg, i);
        bs[i] = signature(block, i);
    }
    {
        auto a = rs, b = bs;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }
    perm.assign(n, -1);
    std::vector<char> used(n, 0);
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == n) return true;
        for (int c = 0; c < n; ++c) {
            if (used[c] || bs[c] != rs[i]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                ok = block[c][perm[j]] == reg[i][j] && block[perm[j]][c] == reg[j][i];
            if (!ok) continue;
            perm[i] = c;
            used[c] = 1;
            if (self(self, i + 1)) return true;
            used[c] = 0;
        }
        perm[i] = -1;
        return false;
    };
    return rec(rec, 0);
}

}  // namespace

std::vector<RecognizedComponent> recognize_type(const IntMatrix& cartan, const std::vector<Rat>& sq_lengths,
                                                const std::vector<Rat>& ambient_lengths) {
    if (!is_gcm(cartan)) throw InvalidGCM("input is not a generalized Cartan matrix");
    std::set<Rat> amb(ambient_lengths.begin(), ambient_lengths.end());
    std::vector<RecognizedComponent> out;
    for (const auto& block : connected_blocks(cartan)) {
        IntMatrix sub = principal_submatrix(cartan, block);
        const DefiniteType kind = classify_connected(sub);
        if (kind == DefiniteType::indefinite) throw IndefiniteType("block of size " + std::to_string(block.size()));
        bool found = false;
        for (const Label& cand : candidates(static_cast<int>(block.size()), kind == DefiniteType::affine)) {
            std::vector<int> perm;
            if (!match(registry_cartan(cand), sub, perm)) continue;
            RecognizedComponent rc{cand, {}};
            for (int p : perm) rc.nodes.push_back(block[p]);
            if (!sq_lengths.empty() && !amb.empty()) {
                std::set<Rat> mine;
                for (int i : block) mine.insert(sq_lengths[i]);
                if (mine != amb)
                    rc.label.length = *mine.begin() == *amb.begin() ? LengthClass::short_roots
                                                                    : LengthClass::long_roots;
            }
            out.push_back(rc);
            found = true;
            break;
        }
        if (!found) throw InternalError("no registry match for a block of definite type");
    }
    std::stable_sort(out.begin(), out.end(), [](const RecognizedComponent& a, const RecognizedComponent& b) {
        return label_less(a.label, b.label);
    });
    return out;
}

Components labels_of(const std::vector<RecognizedComponent>& comps) {
    Components c;
    for (const auto& rc : comps) c.push_back(rc.label);
    return c;
}

}  // namespace kmroots
