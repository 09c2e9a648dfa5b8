#pragma once

// Enumeration of extended quivers up to relabelling of even and odd vertices.
// Each N_k is a rectangle t * 1_{I x J} (the positive part), so every quiver
// produced satisfies Condition C.

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "csa/quiver.hpp"

namespace csa::testing {

struct RectCode {
    int t = 0;
    unsigned I = 0, J = 0;  // bit masks over odd vertices
};

inline std::vector<RectCode> rectangle_codes(int m, int max_mult) {
    std::vector<RectCode> codes{{0, 0, 0}};
    for (int t = 1; t <= max_mult; ++t)
        for (unsigned I = 1; I < (1u << m); ++I)
            for (unsigned J = 1; J < (1u << m); ++J)
                if ((I & J) == 0) codes.push_back({t, I, J});
    return codes;
}

inline std::vector<std::vector<int>> permutations(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline unsigned permute_mask(unsigned mask, const std::vector<int>& s) {
    unsigned out = 0;
    for (std::size_t a = 0; a < s.size(); ++a)
        if (mask & (1u << a)) out |= 1u << s[a];
    return out;
}

struct EnumerationStats {
    long classes = 0;
};

// Calls visit once per isomorphism class of quivers with n even and m odd vertices,
// |B_ij| <= max_mult and 2-path multiplicity t <= max_mult.
inline EnumerationStats enumerate_quivers(int n, int m, int max_mult,
                                          const std::function<void(const ExtendedQuiver&)>& visit) {
    EnumerationStats stats;
    const auto codes = rectangle_codes(m, max_mult);
    const int C = static_cast<int>(codes.size());
    const auto odd_perms = permutations(m);
    // code index after relabelling the odd vertices
    std::vector<std::vector<int>> code_perm(odd_perms.size(), std::vector<int>(C));
    for (std::size_t s = 0; s < odd_perms.size(); ++s)
        for (int c = 0; c < C; ++c) {
            RectCode r{codes[c].t, permute_mask(codes[c].I, odd_perms[s]), permute_mask(codes[c].J, odd_perms[s])};
            auto it = std::find_if(codes.begin(), codes.end(),
                                   [&](const RectCode& x) { return x.t == r.t && x.I == r.I && x.J == r.J; });
            code_perm[s][c] = static_cast<int>(it - codes.begin());
        }
    const auto even_perms = permutations(n);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    const int P = static_cast<int>(pairs.size());
    const int base = 2 * max_mult + 1;
    long total_b = 1;
    for (int e = 0; e < P; ++e) total_b *= base;

    auto decode_b = [&](long code) {
        IntMatrix B(n, std::vector<int>(n, 0));
        for (int e = 0; e < P; ++e) {
            int v = static_cast<int>(code % base) - max_mult;
            code /= base;
            B[pairs[e].first][pairs[e].second] = v;
            B[pairs[e].second][pairs[e].first] = -v;
        }
        return B;
    };
    auto permute_b = [&](const IntMatrix& B, const std::vector<int>& h) {
        IntMatrix out(n, std::vector<int>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) out[h[i]][h[j]] = B[i][j];
        return out;
    };

    for (long bc = 0; bc < total_b; ++bc) {
        IntMatrix B = decode_b(bc);
        // keep B only if it is the smallest code in its S_n orbit; remember its stabilizer
        bool minimal = true;
        std::vector<const std::vector<int>*> stab;
        for (const auto& h : even_perms) {
            IntMatrix hb = permute_b(B, h);
            if (hb == B) {
                stab.push_back(&h);
                continue;
            }
            long code = 0;
            for (int e = P - 1; e >= 0; --e) code = code * base + hb[pairs[e].first][pairs[e].second] + max_mult;
            if (code < bc) {
                minimal = false;
                break;
            }
        }
        if (!minimal) continue;

        std::vector<int> c(n, 0), img(n);
        while (true) {
            bool canonical = true;
            for (const auto* h : stab) {
                for (std::size_t s = 0; s < odd_perms.size() && canonical; ++s) {
                    for (int k = 0; k < n; ++k) img[(*h)[k]] = code_perm[s][c[k]];
                    if (std::lexicographical_compare(img.begin(), img.end(), c.begin(), c.end())) canonical = false;
                }
                if (!canonical) break;
            }
            if (canonical) {
                ExtendedQuiver q(n, m);
                q.B = B;
                for (int k = 0; k < n; ++k) {
                    const auto& r = codes[c[k]];
                    for (int i = 0; i < m; ++i)
                        for (int j = 0; j < m; ++j)
                            if ((r.I >> i & 1u) && (r.J >> j & 1u)) q.path(i, k, j, r.t);
                }
                ++stats.classes;
                visit(q);
            }
            int k = 0;
            while (k < n && ++c[k] == C) c[k++] = 0;
            if (k == n) break;
        }
    }
    return stats;
}

}  // namespace csa::testing
