#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "monreg/free_complex.hpp"
#include "monreg/graded_module.hpp"
#include "monreg/linalg.hpp"

namespace monreg {

namespace detail {

struct MultidegreeHash {
    size_t operator()(const Multidegree& a) const {
        std::uint64_t h = 1469598103934665603ULL;
        for (int i = 0; i < kMaxVars; ++i) {
            h ^= static_cast<std::uint16_t>(a.e[i]);
            h *= 1099511628211ULL;
        }
        return static_cast<size_t>(h);
    }
};

template <class F>
void poly_target_accumulate(const F& field, SparseVec<F>& col, int row, const typename F::Elt& coeff) {
    for (auto& [r, v] : col)
        if (r == row) {
            v = field.add(v, coeff);
            return;
        }
    col.emplace_back(row, coeff);
}

/// Homology data of one graded block at one position. In the multigraded
/// case a block basis is a sorted list of column ids (the monomial part is
/// the block multidegree minus the column shift); the unlabeled case keys
/// basis elements by (column, monomial).
template <class F>
struct BlockSlot {
    std::vector<int> cols;                                 // multigraded basis
    std::vector<std::pair<int, Monomial>> basis;           // unlabeled basis
    std::map<std::pair<int, Monomial>, int> basis_index;   // unlabeled lookup

    std::vector<int> ker_free;            // kernel coordinate labels (basis indices)
    std::vector<SparseVec<F>> out_rows;   // rref rows of the outgoing map
    std::vector<int> out_pivots;
    std::vector<SparseVec<F>> quot_rows;  // rref rows of the image, in kernel coordinates
    std::vector<int> quot_pivots;
    std::vector<int> hom_coords;          // kernel coordinates of the homology basis

    int size(bool multigraded) const {
        return multigraded ? static_cast<int>(cols.size()) : static_cast<int>(basis.size());
    }

    int col_index(int c) const {
        auto it = std::lower_bound(cols.begin(), cols.end(), c);
        return (it != cols.end() && *it == c) ? static_cast<int>(it - cols.begin()) : -1;
    }

    int dim() const { return static_cast<int>(hom_coords.size()); }

    /// Representative of homology basis vector t in block coordinates.
    SparseVec<F> representative(const F& field, int t) const {
        int f = ker_free[hom_coords[t]];
        SparseVec<F> rep;
        for (size_t i = 0; i < out_rows.size(); ++i) {
            auto c = sparse_get(field, out_rows[i], f);
            if (!field.is_zero(c)) rep.emplace_back(out_pivots[i], field.neg(c));
        }
        rep.emplace_back(f, field.one());
        std::sort(rep.begin(), rep.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return rep;
    }

    /// Homology coordinates of a cycle z (block coordinates, in the kernel of
    /// the outgoing map). Kernel coordinates are read off at the echelon free
    /// columns, reduced by the image rows, and gathered at the free remainder.
    SparseVec<F> project(const F& field, const SparseVec<F>& z) const {
        SparseVec<F> kc;
        size_t i = 0;
        for (size_t j = 0; j < ker_free.size(); ++j) {
            while (i < z.size() && z[i].first < ker_free[j]) ++i;
            if (i < z.size() && z[i].first == ker_free[j]) kc.emplace_back(static_cast<int>(j), z[i].second);
        }
        for (size_t r = 0; r < quot_rows.size(); ++r) {
            auto c = sparse_get(field, kc, quot_pivots[r]);
            if (!field.is_zero(c)) kc = sparse_add_scaled(field, kc, field.neg(c), quot_rows[r]);
        }
        SparseVec<F> out;
        i = 0;
        for (size_t t = 0; t < hom_coords.size(); ++t) {
            while (i < kc.size() && kc[i].first < hom_coords[t]) ++i;
            if (i < kc.size() && kc[i].first == hom_coords[t]) out.emplace_back(static_cast<int>(t), kc[i].second);
        }
        return out;
    }
};

/// Blocks of one total degree in deterministic (lexicographic) key order.
template <class F>
struct DegreeBlocks {
    std::vector<Multidegree> keys;
    std::vector<std::vector<BlockSlot<F>>> slots;  // [block][position 0..P+1]
    std::unordered_map<Multidegree, int, MultidegreeHash> lookup;

    int find(const Multidegree& key) const {
        auto it = lookup.find(key);
        return it == lookup.end() ? -1 : it->second;
    }
};

template <class F>
DegreeBlocks<F> build_bases(const FreeComplex<F>& C, int max_pos, int degree) {
    DegreeBlocks<F> blocks;
    auto slot_of = [&](const Multidegree& key) -> std::vector<BlockSlot<F>>& {
        auto [it, fresh] = blocks.lookup.try_emplace(key, static_cast<int>(blocks.keys.size()));
        if (fresh) {
            blocks.keys.push_back(key);
            blocks.slots.emplace_back(max_pos + 2);
        }
        return blocks.slots[it->second];
    };
    for (int p = 0; p <= max_pos + 1; ++p) {
        const FreeModule& mod = C.module(p);
        for (int c = 0; c < mod.rank(); ++c) {
            int rem = degree - mod.shifts[c].total();
            if (rem < 0) continue;
            if (C.multigraded) {
                const Multidegree& s = mod.shifts[c];
                for_each_monomial_of_degree(C.nvars, rem, [&](const Monomial& m) {
                    slot_of(s + Multidegree::of(m))[p].cols.push_back(c);
                });
            } else {
                for_each_monomial_of_degree(C.nvars, rem, [&](const Monomial& m) {
                    auto& slot = slot_of(Multidegree{})[p];
                    int idx = static_cast<int>(slot.basis.size());
                    slot.basis.emplace_back(c, m);
                    slot.basis_index.emplace(std::make_pair(c, m), idx);
                });
            }
        }
    }
    // deterministic block order: sort by multidegree, remap
    std::vector<int> order(blocks.keys.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return blocks.keys[x] < blocks.keys[y]; });
    DegreeBlocks<F> sorted;
    for (int id : order) {
        sorted.lookup.emplace(blocks.keys[id], static_cast<int>(sorted.keys.size()));
        sorted.keys.push_back(blocks.keys[id]);
        sorted.slots.push_back(std::move(blocks.slots[id]));
    }
    return sorted;
}

/// Columns of d_position restricted to one block over the target block basis.
template <class F>
std::vector<SparseVec<F>> block_matrix_columns(const FreeComplex<F>& C, const BlockSlot<F>& source,
                                               const BlockSlot<F>& target, int position) {
    const auto& field = C.field;
    int src_size = source.size(C.multigraded);
    std::vector<SparseVec<F>> cols(src_size);
    for (int k = 0; k < src_size; ++k) {
        if (C.multigraded) {
            // the entry monomial is pinned by the shifts; only the column matters
            for (const auto& [r, entry] : C.diffs[position].cols[source.cols[k]]) {
                int t = target.col_index(r);
                if (t < 0) continue;
                for (const auto& [u, coeff] : entry.terms)
                    poly_target_accumulate(field, cols[k], t, coeff);
            }
        } else {
            const auto& [c, m] = source.basis[k];
            for (const auto& [r, entry] : C.diffs[position].cols[c])
                for (const auto& [u, coeff] : entry.terms) {
                    auto it = target.basis_index.find(std::make_pair(r, u * m));
                    if (it == target.basis_index.end()) continue;
                    poly_target_accumulate(field, cols[k], it->second, coeff);
                }
        }
        std::sort(cols[k].begin(), cols[k].end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        cols[k].erase(std::remove_if(cols[k].begin(), cols[k].end(),
                                     [&](const auto& t) { return field.is_zero(t.second); }),
                      cols[k].end());
    }
    return cols;
}

/// Fills the homology structure of every slot at positions 0..max_pos.
template <class F>
void compute_block_homology(const FreeComplex<F>& C, std::vector<BlockSlot<F>>& slots, int max_pos) {
    const auto& field = C.field;
    std::vector<std::vector<SparseVec<F>>> out_cols(max_pos + 2);
    for (int p = 1; p <= max_pos + 1; ++p)
        if (p <= C.length()) out_cols[p] = block_matrix_columns(C, slots[p], slots[p - 1], p);

    for (int p = 0; p <= max_pos; ++p) {
        auto& slot = slots[p];
        int cols = slot.size(C.multigraded);
        std::vector<SparseVec<F>> rows;
        if (p >= 1 && p <= C.length()) {
            rows.resize(slots[p - 1].size(C.multigraded));
            for (int c = 0; c < cols; ++c)
                for (const auto& [r, v] : out_cols[p][c]) rows[r].emplace_back(c, v);
        }
        Rref<F> out_rref(field, cols, std::move(rows));
        slot.ker_free = out_rref.free_cols();
        slot.out_rows = out_rref.rows();
        slot.out_pivots = out_rref.pivot_cols();

        std::vector<SparseVec<F>> image_rows;
        if (p + 1 <= C.length()) {
            for (const auto& col : out_cols[p + 1]) {
                SparseVec<F> kc;
                size_t i = 0;
                for (size_t j = 0; j < slot.ker_free.size(); ++j) {
                    while (i < col.size() && col[i].first < slot.ker_free[j]) ++i;
                    if (i < col.size() && col[i].first == slot.ker_free[j])
                        kc.emplace_back(static_cast<int>(j), col[i].second);
                }
                if (!kc.empty()) image_rows.push_back(std::move(kc));
            }
        }
        Rref<F> quot_rref(field, static_cast<int>(slot.ker_free.size()), std::move(image_rows));
        slot.quot_rows = quot_rref.rows();
        slot.quot_pivots = quot_rref.pivot_cols();
        slot.hom_coords = quot_rref.free_cols();
    }
}

}  // namespace detail

/// Homology modules H_p(C) for p in [min_pos, max_pos], computed degree by
/// degree over the window. Matrices split into multidegree blocks when the
/// complex is multigraded; representatives come from echelon free
/// coordinates, and multiplication maps act by lift-multiply-project.
template <class F>
std::vector<TruncatedGradedModule<F>> homology_range(const FreeComplex<F>& C, int min_pos, int max_pos,
                                                     int d_min, int d_max) {
    if (d_min > d_max) throw PreconditionError("homology_range: degenerate window");
    if (min_pos < 0 || min_pos > max_pos) throw PreconditionError("homology_range: bad position range");
    const auto& field = C.field;

    std::vector<detail::DegreeBlocks<F>> degrees(d_max - d_min + 1);
    for (int d = d_min; d <= d_max; ++d) {
        degrees[d - d_min] = detail::build_bases(C, max_pos, d);
        for (auto& slots : degrees[d - d_min].slots) detail::compute_block_homology(C, slots, max_pos);
    }

    std::vector<TruncatedGradedModule<F>> result;
    for (int p = min_pos; p <= max_pos; ++p) {
        TruncatedGradedModule<F> M(field);
        M.nvars = C.nvars;
        M.d_min = d_min;
        M.d_max = d_max;
        M.dims.assign(d_max - d_min + 1, 0);
        if (C.multigraded) M.labels.resize(d_max - d_min + 1);

        // block offsets per degree at this position
        std::vector<std::vector<int>> offsets(d_max - d_min + 1);
        for (int d = d_min; d <= d_max; ++d) {
            const auto& blocks = degrees[d - d_min];
            int off = 0;
            offsets[d - d_min].resize(blocks.keys.size());
            for (size_t b = 0; b < blocks.keys.size(); ++b) {
                offsets[d - d_min][b] = off;
                int dim = blocks.slots[b][p].dim();
                off += dim;
                if (C.multigraded)
                    for (int t = 0; t < dim; ++t) M.labels[d - d_min].push_back(blocks.keys[b]);
            }
            M.dims[d - d_min] = off;
        }

        M.actions.assign(C.nvars, {});
        for (int v = 1; v <= C.nvars; ++v) {
            M.actions[v - 1].resize(std::max(0, M.window_size() - 1));
            for (int d = d_min; d < d_max; ++d)
                M.actions[v - 1][d - d_min].assign(M.dims[d - d_min], SparseVec<F>{});
        }
        for (int d = d_min; d < d_max; ++d) {
            const auto& this_blocks = degrees[d - d_min];
            const auto& next_blocks = degrees[d + 1 - d_min];
            for (size_t b = 0; b < this_blocks.keys.size(); ++b) {
                const auto& slot = this_blocks.slots[b][p];
                if (slot.dim() == 0) continue;
                int src_off = offsets[d - d_min][b];
                for (int v = 1; v <= C.nvars; ++v) {
                    Monomial xv = Monomial::variable(C.nvars, v);
                    Multidegree target_key = this_blocks.keys[b];
                    if (C.multigraded) target_key = target_key + Multidegree::of(xv);
                    int tb = next_blocks.find(target_key);
                    for (int t = 0; t < slot.dim(); ++t) {
                        auto rep = slot.representative(field, t);
                        if (tb < 0) throw Error("homology_range: multiplication image left the window blocks");
                        const auto& target_slot = next_blocks.slots[tb][p];
                        SparseVec<F> image;
                        for (const auto& [idx, coeff] : rep) {
                            int target_idx;
                            if (C.multigraded) {
                                target_idx = target_slot.col_index(slot.cols[idx]);
                            } else {
                                const auto& [c, m] = slot.basis[idx];
                                auto jt = target_slot.basis_index.find(std::make_pair(c, m * xv));
                                target_idx = jt == target_slot.basis_index.end() ? -1 : jt->second;
                            }
                            if (target_idx < 0)
                                throw Error("homology_range: multiplication image left the window blocks");
                            image.emplace_back(target_idx, coeff);
                        }
                        std::sort(image.begin(), image.end(),
                                  [](const auto& a, const auto& b2) { return a.first < b2.first; });
                        auto coords = target_slot.project(field, image);
                        if (coords.empty()) continue;
                        int dst_off = offsets[d + 1 - d_min][tb];
                        auto& col = M.actions[v - 1][d - d_min][src_off + t];
                        for (auto& [r, val] : coords) col.emplace_back(dst_off + r, val);
                        std::sort(col.begin(), col.end(),
                                  [](const auto& a, const auto& b2) { return a.first < b2.first; });
                    }
                }
            }
        }

        int min_shift = std::numeric_limits<int>::max();
        for (const auto& s : C.module(p).shifts) min_shift = std::min(min_shift, s.total());
        M.bounded_below = C.module(p).rank() == 0 || d_min <= min_shift;
        int tail = 0;
        for (int d = std::max(d_min, d_max - C.nvars); d <= d_max; ++d) tail += M.dims[d - d_min];
        M.stabilized = tail == 0;
        result.push_back(std::move(M));
    }
    return result;
}

template <class F>
TruncatedGradedModule<F> homology_module(const FreeComplex<F>& C, int position, int d_min, int d_max) {
    return homology_range(C, position, position, d_min, d_max)[0];
}

}  // namespace monreg
