#pragma once

#include <string>
#include <vector>

#include "monreg/betti.hpp"
#include "monreg/free_complex.hpp"
#include "monreg/homology.hpp"
#include "monreg/torext.hpp"

namespace monreg {

namespace detail {

inline std::vector<std::pair<int, Monomial>> free_piece_basis(const std::vector<int>& shifts, int nvars,
                                                              int degree) {
    std::vector<std::pair<int, Monomial>> basis;
    for (int c = 0; c < static_cast<int>(shifts.size()); ++c)
        for_each_monomial_of_degree(nvars, degree - shifts[c],
                                    [&](const Monomial& m) { basis.emplace_back(c, m); });
    return basis;
}

/// A module presented degree by degree in working coordinates: dimensions,
/// multiplication columns, and (from step one on) the expression of each
/// basis vector in the ambient free module of the previous step.
template <class F>
struct DegreewiseModule {
    int base = 0;
    std::vector<int> dims;
    std::vector<std::vector<std::vector<SparseVec<F>>>> mult;  // [var-1][d-base][col]
    std::vector<std::vector<SparseVec<F>>> ambient;            // [d-base][col], may be empty

    int dim(int d) const {
        int idx = d - base;
        return (idx >= 0 && idx < static_cast<int>(dims.size())) ? dims[idx] : 0;
    }
};

}  // namespace detail

/// A minimal graded free resolution of a finite-length truncated module,
/// built degreewise: generators are echelon complements of m * M in each
/// degree, syzygies are graded-piece kernels, and the process stops at
/// homological degree nvars, where the last kernel must vanish.
template <class F>
struct FiniteFreeResolution {
    bool completed = false;
    std::string failure;
    FreeComplex<F> complex;
    std::vector<std::vector<int>> shifts;  // generator degrees per homological position
};

template <class F>
FiniteFreeResolution<F> resolve_finite_length(const TruncatedGradedModule<F>& M) {
    const auto& field = M.field;
    const int n = M.nvars;
    auto si = sup_inf(M);
    if (!si.is_finite_length)
        throw PreconditionError("resolve_finite_length: module is not finite length in its window");
    FiniteFreeResolution<F> out{false, "", FreeComplex<F>{field, n, false, {}, {}}, {}};
    if (si.sup.is_neg_inf()) {  // zero module resolves by the empty complex
        out.completed = true;
        out.complex.modules.push_back(FreeModule{});
        out.complex.diffs.resize(1);
        out.shifts.push_back({});
        return out;
    }
    const int a = si.inf.value();
    const int top = si.sup.value() + n + 1;
    const int width = top - a + 1;

    // step-zero working module: M itself, zero-extended outside its window
    detail::DegreewiseModule<F> cur;
    cur.base = a;
    cur.dims.assign(width, 0);
    cur.mult.assign(n, std::vector<std::vector<SparseVec<F>>>(width));
    for (int d = a; d <= top; ++d) {
        int dim = M.in_window(d) ? M.dim(d) : 0;
        cur.dims[d - a] = dim;
        for (int v = 1; v <= n; ++v) {
            auto& cols = cur.mult[v - 1][d - a];
            cols.assign(dim, SparseVec<F>{});
            if (dim > 0 && d >= M.d_min && d < M.d_max)
                for (int c = 0; c < dim; ++c) cols[c] = M.action(v, d)[c];
        }
    }

    std::vector<int> prev_shifts;  // generator degrees of F_{step-1}
    for (int step = 0; step <= n; ++step) {
        // generators: echelon complement of the span of x_v * cur_{d-1} in cur_d
        std::vector<std::pair<int, int>> gens;  // (degree, coordinate)
        for (int d = a; d <= top; ++d) {
            if (cur.dim(d) == 0) continue;
            std::vector<SparseVec<F>> image_rows;
            if (d > a)
                for (int v = 1; v <= n; ++v)
                    for (const auto& col : cur.mult[v - 1][d - 1 - a])
                        if (!col.empty()) image_rows.push_back(col);
            Rref<F> rref(field, cur.dim(d), std::move(image_rows));
            for (int j : rref.free_cols()) gens.emplace_back(d, j);
        }

        std::vector<int> shifts;
        shifts.reserve(gens.size());
        for (const auto& [d, j] : gens) shifts.push_back(d);

        FreeModule mod;
        for (int d : shifts) {
            Multidegree pseudo{};
            pseudo.e[0] = static_cast<std::int16_t>(d);
            mod.shifts.push_back(pseudo);
        }
        out.complex.modules.push_back(std::move(mod));
        out.complex.diffs.emplace_back();
        out.shifts.push_back(shifts);

        if (step >= 1) {
            // differential entries: generator vectors read off in the ambient
            // basis of F_{step-1}
            auto& diff = out.complex.diffs[step];
            diff.cols.resize(gens.size());
            for (size_t gidx = 0; gidx < gens.size(); ++gidx) {
                auto [d, j] = gens[gidx];
                const auto& w = cur.ambient[d - a][j];
                auto basis = detail::free_piece_basis(prev_shifts, n, d);
                std::map<int, PolyEntry<F>> per_target;
                for (const auto& [flat, coeff] : w) {
                    const auto& [c, m] = basis[flat];
                    if (m.is_unit())
                        out.failure = "non-minimal entry produced at step " + std::to_string(step);
                    poly_accumulate(field, per_target[c], coeff, m);
                }
                for (auto& [c, e] : per_target)
                    if (!e.empty()) diff.cols[gidx].emplace_back(c, std::move(e));
            }
        }
        if (!out.failure.empty()) return out;

        // syzygies: graded-piece kernels of the map out of F_step
        detail::DegreewiseModule<F> next;
        next.base = a;
        next.dims.assign(width, 0);
        next.mult.assign(n, std::vector<std::vector<SparseVec<F>>>(width));
        next.ambient.assign(width, {});
        std::vector<std::vector<int>> kernel_free(width);
        std::vector<std::map<std::pair<int, Monomial>, int>> src_index(width);

        for (int d = a; d <= top; ++d) {
            auto src_basis = detail::free_piece_basis(shifts, n, d);
            for (size_t k = 0; k < src_basis.size(); ++k) src_index[d - a][src_basis[k]] = static_cast<int>(k);
            if (src_basis.empty()) continue;

            std::vector<SparseVec<F>> rows;
            if (step == 0) {
                // map to M: generator coordinate vectors pushed by monomials
                int target_dim = M.in_window(d) ? M.dim(d) : 0;
                rows.assign(target_dim, SparseVec<F>{});
                for (size_t k = 0; k < src_basis.size(); ++k) {
                    const auto& [g, m] = src_basis[k];
                    // multiply the generator coordinate vector by m inside M
                    SparseVec<F> vec{{gens[g].second, field.one()}};
                    int deg = gens[g].first;
                    for (int v = 1; v <= n && !vec.empty(); ++v)
                        for (int e = 0; e < m.exponent(v) && !vec.empty(); ++e) {
                            SparseVec<F> pushed;
                            if (deg >= M.d_min && deg < M.d_max)
                                for (const auto& [idx, coeff] : vec)
                                    pushed = sparse_add_scaled(field, pushed, coeff, M.action(v, deg)[idx]);
                            vec = std::move(pushed);
                            ++deg;
                        }
                    for (const auto& [r, coeff] : vec) rows[r].emplace_back(static_cast<int>(k), coeff);
                }
            } else {
                // map to F_{step-1}: polynomial entries on graded pieces
                auto dst_basis = detail::free_piece_basis(prev_shifts, n, d);
                std::map<std::pair<int, Monomial>, int> dst_index;
                for (size_t k = 0; k < dst_basis.size(); ++k) dst_index[dst_basis[k]] = static_cast<int>(k);
                rows.assign(dst_basis.size(), SparseVec<F>{});
                const auto& diff = out.complex.diffs[step];
                for (size_t k = 0; k < src_basis.size(); ++k) {
                    const auto& [c, m] = src_basis[k];
                    for (const auto& [r, e] : diff.cols[c])
                        for (const auto& [u, coeff] : e.terms)
                            rows[dst_index.at({r, u * m})].emplace_back(static_cast<int>(k), coeff);
                }
                for (auto& row : rows)
                    std::sort(row.begin(), row.end(),
                              [](const auto& x, const auto& y) { return x.first < y.first; });
            }

            Rref<F> rref(field, static_cast<int>(src_basis.size()), std::move(rows));
            auto kernel = rref.kernel_basis();
            kernel_free[d - a] = rref.free_cols();
            next.dims[d - a] = static_cast<int>(kernel.size());
            next.ambient[d - a] = std::move(kernel);
        }

        // induced multiplication on the kernels: ambient multiply, regather
        for (int d = a; d < top; ++d) {
            auto src_basis_d = detail::free_piece_basis(shifts, n, d);
            for (int v = 1; v <= n; ++v) {
                auto& cols = next.mult[v - 1][d - a];
                cols.assign(next.dims[d - a], SparseVec<F>{});
                if (next.dims[d - a] == 0 || next.dims[d + 1 - a] == 0) continue;
                Monomial xv = Monomial::variable(n, v);
                for (int k = 0; k < next.dims[d - a]; ++k) {
                    SparseVec<F> image;
                    for (const auto& [flat, coeff] : next.ambient[d - a][k]) {
                        const auto& [c, m] = src_basis_d[flat];
                        image.emplace_back(src_index[d + 1 - a].at({c, m * xv}), coeff);
                    }
                    std::sort(image.begin(), image.end(),
                              [](const auto& x, const auto& y) { return x.first < y.first; });
                    // kernel coordinates read off at the free columns
                    SparseVec<F> kc;
                    size_t i = 0;
                    const auto& free = kernel_free[d + 1 - a];
                    for (size_t jj = 0; jj < free.size(); ++jj) {
                        while (i < image.size() && image[i].first < free[jj]) ++i;
                        if (i < image.size() && image[i].first == free[jj])
                            kc.emplace_back(static_cast<int>(jj), image[i].second);
                    }
                    cols[k] = std::move(kc);
                }
            }
        }

        prev_shifts = shifts;
        cur = std::move(next);
    }

    for (int d = a; d <= top; ++d)
        if (cur.dim(d) != 0) {
            out.failure = "kernel survives past homological degree " + std::to_string(n);
            return out;
        }
    out.completed = true;
    return out;
}

/// Outcome of the finite-length Ext check: Ext^i(M, R) must vanish for i < n
/// and reg Ext^n(M, R) must equal -n - inf M, with the finite-length rule
/// (reg = sup) holding on Ext^n as a cross-check.
struct ExtLawResult {
    bool pass = false;
    bool lower_ext_vanish = false;
    bool resolution_completed = false;
    bool finite_rule_consistent = false;
    ExtInt inf_m = ExtInt::pos_inf();
    ExtInt ext_reg = ExtInt::neg_inf();
    ExtInt expected = ExtInt::neg_inf();
    std::string failure;
};

template <class F>
ExtLawResult finite_length_ext_law(const TruncatedGradedModule<F>& M) {
    const int n = M.nvars;
    ExtLawResult res;
    auto si = sup_inf(M);
    if (!si.is_finite_length)
        throw PreconditionError("finite_length_ext_law: module is not finite length in its window");
    res.inf_m = si.inf;
    if (si.sup.is_neg_inf()) {
        res.pass = res.lower_ext_vanish = res.resolution_completed = res.finite_rule_consistent = true;
        return res;
    }
    const int a = si.inf.value();
    const int s = si.sup.value();

    auto resolution = resolve_finite_length(M);
    res.resolution_completed = resolution.completed;
    if (!resolution.completed) {
        res.failure = resolution.failure;
        return res;
    }

    auto D = dualize_into_ring(resolution.complex);
    int L = resolution.complex.length();
    Window w{-(s + n + 1), -a + n + 1};
    auto H = homology_range(D, 0, L, w.d_min, w.d_max);

    res.lower_ext_vanish = true;
    for (int i = 0; i < n && i <= L; ++i)
        if (!H[L - i].is_zero()) res.lower_ext_vanish = false;

    const auto& En = H[L - n];
    auto reg_report = regularity(En);
    res.ext_reg = reg_report.reg;
    res.expected = ExtInt(-n - a);
    auto sie = sup_inf(En);
    res.finite_rule_consistent = sie.sup == reg_report.reg;
    res.pass = res.lower_ext_vanish && res.finite_rule_consistent && reg_report.stabilized &&
               res.ext_reg == res.expected;
    if (!res.pass && res.failure.empty()) res.failure = "ext law values disagree";
    return res;
}

}  // namespace monreg
