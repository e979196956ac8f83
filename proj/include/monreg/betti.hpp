#pragma once

#include <map>
#include <vector>

#include "monreg/extint.hpp"
#include "monreg/graded_module.hpp"
#include "monreg/homology.hpp"

namespace monreg {

/// Graded Betti numbers on a window: entries[(i, j)] = beta_ij, absent means
/// zero within the probed range. beta_ij = 0 for i > nvars holds by global
/// dimension and is asserted, not computed.
struct BettiTable {
    std::map<std::pair<int, int>, long long> entries;
    int nvars = 0;
    int d_min = 0;
    int d_max = -1;
    bool stabilized = false;

    long long at(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
};

/// t_i and regularity derived from a Betti table.
struct RegularityReport {
    std::map<int, ExtInt> t;  // i -> t_i(M), -inf if no Betti numbers at i
    ExtInt reg = ExtInt::neg_inf();
    int d_min = 0;
    int d_max = -1;
    bool stabilized = false;
    int doublings = 0;
};

namespace detail {

/// Rank of the Koszul-assembled map (K_i (x) M)_j -> (K_{i-1} (x) M)_j, split
/// into multidegree blocks when labels are present. Basis of (K_i (x) M)_j:
/// pairs (S, b) with S an i-subset of the variables, b a basis vector of
/// M_{j-i}; differential (S, b) -> sum of signed (S minus v, x_v b).
template <class F>
long long koszul_map_rank(const TruncatedGradedModule<F>& M, int i, int j) {
    int n = M.nvars;
    if (i < 1 || i > n) return 0;
    int src_deg = j - i;
    if (src_deg < M.d_min || src_deg >= M.d_max) return 0;  // source empty (bounded below)
    if (M.dim(src_deg) == 0) return 0;
    const auto& field = M.field;

    auto src_subsets = subsets_of_size(n, i);
    auto dst_subsets = subsets_of_size(n, i - 1);
    std::map<std::vector<int>, int> dst_index;
    for (size_t k = 0; k < dst_subsets.size(); ++k) dst_index[dst_subsets[k]] = static_cast<int>(k);

    int src_dim = M.dim(src_deg);
    int dst_dim = M.dim(src_deg + 1);
    if (dst_dim == 0) return 0;

    // group source basis elements into blocks by multidegree
    std::map<Multidegree, std::vector<SparseVec<F>>> block_rows_by_key;
    auto key_of = [&](const std::vector<int>& S, const Multidegree& label) {
        Multidegree key = label;
        for (int v : S) key.e[v] = static_cast<std::int16_t>(key.e[v] + 1);
        return key;
    };
    // target flat index (S', b') -> per-block local index
    std::map<Multidegree, std::map<long long, int>> target_local;
    auto target_slot = [&](const Multidegree& key, long long flat) {
        auto& m = target_local[key];
        auto it = m.find(flat);
        if (it != m.end()) return it->second;
        int idx = static_cast<int>(m.size());
        m.emplace(flat, idx);
        return idx;
    };

    bool labeled = M.is_labeled();
    Multidegree zero{};
    std::map<Multidegree, std::vector<SparseVec<F>>> columns_by_key;
    for (size_t s = 0; s < src_subsets.size(); ++s) {
        const auto& S = src_subsets[s];
        for (int b = 0; b < src_dim; ++b) {
            Multidegree key = labeled ? key_of(S, M.label(src_deg, b)) : zero;
            SparseVec<F> col;
            for (size_t k = 0; k < S.size(); ++k) {
                std::vector<int> sub = S;
                sub.erase(sub.begin() + static_cast<long>(k));
                long long dst_block = dst_index.at(sub);
                auto sign_is_neg = (k % 2 == 1);
                const auto& act = M.action(S[k] + 1, src_deg)[b];
                for (const auto& [row, coeff] : act) {
                    long long flat = dst_block * dst_dim + row;
                    auto v = sign_is_neg ? field.neg(coeff) : coeff;
                    poly_target_accumulate(field, col, target_slot(key, flat), v);
                }
            }
            if (!col.empty()) {
                std::sort(col.begin(), col.end(), [](const auto& a, const auto& b2) { return a.first < b2.first; });
                columns_by_key[key].push_back(std::move(col));
            }
        }
    }

    long long rank = 0;
    for (auto& [key, cols] : columns_by_key) {
        // transpose to rows over column index space
        int ncols = static_cast<int>(cols.size());
        std::vector<SparseVec<F>> rows(target_local[key].size());
        for (int c = 0; c < ncols; ++c)
            for (const auto& [r, v] : cols[c]) rows[r].emplace_back(c, v);
        rank += sparse_rank(field, ncols, std::move(rows));
    }
    return rank;
}

}  // namespace detail

/// Graded Betti numbers via Koszul homology: beta_ij = dim H_i(K (x) M)_j.
/// Probes j - i across [d_min, d_max - 1]; requires the module to be bounded
/// below so the incoming map at the window floor is honestly zero. The
/// stabilized flag certifies that the top nvars+1 probed module degrees carry
/// no Betti contributions.
template <class F>
BettiTable betti_table(const TruncatedGradedModule<F>& M) {
    if (!M.bounded_below)
        throw PreconditionError("betti_table: module must be bounded below (window too small)");
    if (!actions_commute(M)) throw PreconditionError("betti_table: action matrices do not commute");
    int n = M.nvars;
    BettiTable B;
    B.nvars = n;
    B.d_min = M.d_min;
    B.d_max = M.d_max;

    // binomials C(n, i)
    std::vector<long long> choose(n + 2, 0);
    choose[0] = 1;
    for (int i = 1; i <= n; ++i) choose[i] = choose[i - 1] * (n - i + 1) / i;

    for (int i = 0; i <= n; ++i) {
        for (int src = M.d_min; src <= M.d_max - 1; ++src) {
            int j = src + i;
            long long piece = choose[i] * M.dim(src);
            if (piece == 0) continue;
            long long beta = piece - detail::koszul_map_rank(M, i, j) - detail::koszul_map_rank(M, i + 1, j);
            if (beta < 0) throw Error("betti_table: negative rank bookkeeping");
            if (beta > 0) B.entries[{i, j}] = beta;
        }
    }

    B.stabilized = true;
    for (const auto& [ij, beta] : B.entries)
        if (ij.second - ij.first >= M.d_max - 1 - n) B.stabilized = false;
    return B;
}

inline RegularityReport regularity_from_betti(const BettiTable& B) {
    RegularityReport R;
    R.d_min = B.d_min;
    R.d_max = B.d_max;
    R.stabilized = B.stabilized;
    for (int i = 0; i <= B.nvars; ++i) R.t[i] = ExtInt::neg_inf();
    for (const auto& [ij, beta] : B.entries) {
        auto& ti = R.t[ij.first];
        ti = max(ti, ExtInt(ij.second));
    }
    for (const auto& [i, ti] : R.t) R.reg = max(R.reg, ti - i);
    return R;
}

/// reg M = sup_i { t_i(M) - i } from the Koszul route.
template <class F>
RegularityReport regularity(const TruncatedGradedModule<F>& M) {
    return regularity_from_betti(betti_table(M));
}

}  // namespace monreg
