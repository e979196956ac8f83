#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "monreg/field.hpp"
#include "monreg/ideal.hpp"

namespace monreg {

/// A multidegree: one (possibly negative) integer per variable. Unused slots
/// beyond the ambient count stay zero, so array comparison is well defined.
struct Multidegree {
    std::array<std::int16_t, kMaxVars> e{};

    static Multidegree of(const Monomial& m) {
        Multidegree a;
        for (int v = 1; v <= m.vars(); ++v) a.e[v - 1] = static_cast<std::int16_t>(m.exponent(v));
        return a;
    }

    int total() const {
        int t = 0;
        for (int x : e) t += x;
        return t;
    }

    bool componentwise_leq(const Multidegree& other) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] > other.e[i]) return false;
        return true;
    }

    /// The monomial x^(other - this); requires this <= other componentwise.
    Monomial monomial_to(const Multidegree& other, int nvars) const {
        Monomial m(nvars);
        for (int v = 1; v <= nvars; ++v) m.set_exponent(v, other.e[v - 1] - e[v - 1]);
        return m;
    }

    friend Multidegree operator+(Multidegree a, const Multidegree& b) {
        for (int i = 0; i < kMaxVars; ++i) a.e[i] = static_cast<std::int16_t>(a.e[i] + b.e[i]);
        return a;
    }
    friend Multidegree operator-(Multidegree a, const Multidegree& b) {
        for (int i = 0; i < kMaxVars; ++i) a.e[i] = static_cast<std::int16_t>(a.e[i] - b.e[i]);
        return a;
    }
    Multidegree negated() const {
        Multidegree a;
        for (int i = 0; i < kMaxVars; ++i) a.e[i] = static_cast<std::int16_t>(-e[i]);
        return a;
    }
    friend auto operator<=>(const Multidegree&, const Multidegree&) = default;
};

/// A free module given by its column shifts: column j represents R(-a_j).
struct FreeModule {
    std::vector<Multidegree> shifts;
    int rank() const { return static_cast<int>(shifts.size()); }
};

/// A polynomial matrix entry: a sum of (coefficient, monomial) terms.
template <class F>
struct PolyEntry {
    std::vector<std::pair<Monomial, typename F::Elt>> terms;  // sorted by monomial
    bool empty() const { return terms.empty(); }
};

template <class F>
PolyEntry<F> make_term(const F& field, typename F::Elt coeff, const Monomial& m) {
    PolyEntry<F> e;
    if (!field.is_zero(coeff)) e.terms.emplace_back(m, std::move(coeff));
    return e;
}

template <class F>
void poly_accumulate(const F& field, PolyEntry<F>& into, const typename F::Elt& coeff, const Monomial& m) {
    auto it = std::lower_bound(into.terms.begin(), into.terms.end(), m,
                               [](const auto& t, const Monomial& mm) { return t.first < mm; });
    if (it != into.terms.end() && it->first == m) {
        it->second = field.add(it->second, coeff);
        if (field.is_zero(it->second)) into.terms.erase(it);
    } else if (!field.is_zero(coeff)) {
        into.terms.emplace(it, m, coeff);
    }
}

/// One differential, stored column-major: cols[c] lists (row, entry).
template <class F>
struct Differential {
    std::vector<std::vector<std::pair<int, PolyEntry<F>>>> cols;
};

/// A bounded complex of free modules F_0 .. F_L with differentials
/// d_i : F_i -> F_{i-1} (diffs[i]; diffs[0] is unused and empty). When
/// `multigraded` is set every entry is multihomogeneous against the shifts,
/// and graded pieces split into multidegree blocks.
template <class F>
struct FreeComplex {
    F field;
    int nvars = 0;
    bool multigraded = true;
    std::vector<FreeModule> modules;
    std::vector<Differential<F>> diffs;

    int length() const { return static_cast<int>(modules.size()) - 1; }
    const FreeModule& module(int i) const {
        static const FreeModule empty{};
        return (i >= 0 && i < static_cast<int>(modules.size())) ? modules[i] : empty;
    }
    const Differential<F>& diff(int i) const {
        static const Differential<F> none{};
        return (i >= 1 && i < static_cast<int>(diffs.size())) ? diffs[i] : none;
    }
};

namespace detail {

inline std::vector<std::vector<int>> subsets_of_size(int m, int size) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == size) {
            out.push_back(cur);
            return;
        }
        for (int v = next; v < m; ++v) {
            if (m - v < size - static_cast<int>(cur.size())) break;
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace detail

/// The Koszul complex on x1..xn: K_i = R(-i)^C(n,i) indexed by i-subsets of
/// the variables in lex order, differential entries +-x_v.
template <class F>
FreeComplex<F> koszul_complex(int nvars, const F& field) {
    if (nvars < 1 || nvars > kMaxVars) throw PreconditionError("koszul_complex: nvars out of range [1, 16]");
    FreeComplex<F> K{field, nvars, true, {}, {}};
    std::vector<std::vector<std::vector<int>>> subsets(nvars + 1);
    std::vector<std::map<std::vector<int>, int>> index(nvars + 1);
    for (int i = 0; i <= nvars; ++i) {
        subsets[i] = detail::subsets_of_size(nvars, i);
        for (size_t c = 0; c < subsets[i].size(); ++c) index[i][subsets[i][c]] = static_cast<int>(c);
        FreeModule mod;
        for (const auto& s : subsets[i]) {
            Monomial prod = Monomial::unit(nvars);
            for (int v : s) prod = prod * Monomial::variable(nvars, v + 1);
            mod.shifts.push_back(Multidegree::of(prod));
        }
        K.modules.push_back(std::move(mod));
    }
    K.diffs.resize(nvars + 1);
    for (int i = 1; i <= nvars; ++i) {
        K.diffs[i].cols.resize(subsets[i].size());
        for (size_t c = 0; c < subsets[i].size(); ++c) {
            const auto& s = subsets[i][c];
            for (size_t k = 0; k < s.size(); ++k) {
                std::vector<int> sub = s;
                sub.erase(sub.begin() + static_cast<long>(k));
                auto coeff = (k % 2 == 0) ? field.one() : field.neg(field.one());
                K.diffs[i].cols[c].emplace_back(index[i - 1][sub],
                                                make_term(field, coeff, Monomial::variable(nvars, s[k] + 1)));
            }
        }
    }
    return K;
}

/// The Taylor complex of a monomial ideal: T_i indexed by i-subsets of the
/// minimal generators with shifts multideg(lcm S); it resolves R/I.
template <class F>
FreeComplex<F> taylor_complex(const MonomialIdeal& I, const F& field) {
    if (I.is_zero() || I.is_unit()) throw PreconditionError("taylor_complex: ideal must be proper and nonzero");
    int g = I.generator_count();
    if (g > 20) throw CapExceededError("taylor_complex: more than 20 generators (2^|G| blowup)");
    int n = I.vars();
    FreeComplex<F> T{field, n, true, {}, {}};
    auto lcm_of = [&](const std::vector<int>& s) {
        Monomial m = Monomial::unit(n);
        for (int k : s) m = lcm(m, I.generators()[k]);
        return m;
    };
    std::vector<std::vector<std::vector<int>>> subsets(g + 1);
    std::vector<std::map<std::vector<int>, int>> index(g + 1);
    for (int i = 0; i <= g; ++i) {
        subsets[i] = detail::subsets_of_size(g, i);
        for (size_t c = 0; c < subsets[i].size(); ++c) index[i][subsets[i][c]] = static_cast<int>(c);
        FreeModule mod;
        for (const auto& s : subsets[i]) mod.shifts.push_back(Multidegree::of(lcm_of(s)));
        T.modules.push_back(std::move(mod));
    }
    T.diffs.resize(g + 1);
    for (int i = 1; i <= g; ++i) {
        T.diffs[i].cols.resize(subsets[i].size());
        for (size_t c = 0; c < subsets[i].size(); ++c) {
            const auto& s = subsets[i][c];
            Monomial full = lcm_of(s);
            for (size_t k = 0; k < s.size(); ++k) {
                std::vector<int> sub = s;
                sub.erase(sub.begin() + static_cast<long>(k));
                auto coeff = (k % 2 == 0) ? field.one() : field.neg(field.one());
                T.diffs[i].cols[c].emplace_back(index[i - 1][sub], make_term(field, coeff, full / lcm_of(sub)));
            }
        }
    }
    return T;
}

/// Total complex of a tensor product: (F (x) G)_m = sum F_i (x) G_{m-i},
/// differential d_F (x) 1 + (-1)^i 1 (x) d_G. Basis pairs are ordered by
/// (i, F-column, G-column).
template <class F>
FreeComplex<F> tensor_complexes(const FreeComplex<F>& A, const FreeComplex<F>& B) {
    if (A.nvars != B.nvars) throw PreconditionError("tensor_complexes: ambient variable counts differ");
    if (!(A.field.spec() == B.field.spec())) throw PreconditionError("tensor_complexes: fields differ");
    const auto& field = A.field;
    FreeComplex<F> T{field, A.nvars, A.multigraded && B.multigraded, {}, {}};
    int L = A.length() + B.length();

    // basis offsets: position m, block i starts at offset[m][i]
    std::vector<std::vector<int>> offset(L + 1);
    for (int m = 0; m <= L; ++m) {
        FreeModule mod;
        offset[m].assign(m + 2, 0);
        for (int i = 0; i <= m; ++i) {
            offset[m][i] = mod.rank();
            int j = m - i;
            if (i > A.length() || j > B.length()) {
                offset[m][i + 1] = mod.rank();
                continue;
            }
            for (const auto& sa : A.modules[i].shifts)
                for (const auto& sb : B.modules[j].shifts) mod.shifts.push_back(sa + sb);
        }
        offset[m][m + 1] = mod.rank();
        T.modules.push_back(std::move(mod));
    }

    T.diffs.resize(L + 1);
    for (int m = 1; m <= L; ++m) {
        T.diffs[m].cols.resize(T.modules[m].rank());
        for (int i = 0; i <= m; ++i) {
            int j = m - i;
            if (i > A.length() || j > B.length()) continue;
            int rb = B.modules[j].rank();
            for (int ca = 0; ca < A.modules[i].rank(); ++ca)
                for (int cb = 0; cb < rb; ++cb) {
                    int col = offset[m][i] + ca * rb + cb;
                    auto& entries = T.diffs[m].cols[col];
                    // d_A part: (i, ca, cb) -> (i-1, ra, cb)
                    if (i >= 1)
                        for (const auto& [ra, e] : A.diffs[i].cols[ca])
                            entries.emplace_back(offset[m - 1][i - 1] + ra * rb + cb, e);
                    // d_B part with Koszul sign (-1)^i: (i, ca, cb) -> (i, ca, rbb)
                    if (j >= 1) {
                        int rb1 = B.modules[j - 1].rank();
                        for (const auto& [rbb, e] : B.diffs[j].cols[cb]) {
                            PolyEntry<F> signed_e = e;
                            if (i % 2 == 1)
                                for (auto& t : signed_e.terms) t.second = field.neg(t.second);
                            entries.emplace_back(offset[m - 1][i] + ca * rb1 + rbb, std::move(signed_e));
                        }
                    }
                }
        }
    }
    return T;
}

/// Hom(F, R) re-read as a chain complex: position j holds Hom(F_{L-j}, R)
/// with negated shifts and transposed differentials, so homology at position
/// L - i is Ext^i of the module F resolves.
template <class F>
FreeComplex<F> dualize_into_ring(const FreeComplex<F>& A) {
    const auto& field = A.field;
    int L = A.length();
    FreeComplex<F> D{field, A.nvars, A.multigraded, {}, {}};
    for (int j = 0; j <= L; ++j) {
        FreeModule mod;
        for (const auto& s : A.modules[L - j].shifts) mod.shifts.push_back(s.negated());
        D.modules.push_back(std::move(mod));
    }
    D.diffs.resize(L + 1);
    for (int j = 1; j <= L; ++j) {
        // D_j = Hom(F_{L-j}) -> D_{j-1} = Hom(F_{L-j+1}): transpose of d_{L-j+1}
        const auto& d = A.diffs[L - j + 1];
        D.diffs[j].cols.resize(A.modules[L - j].rank());
        for (size_t c = 0; c < d.cols.size(); ++c)
            for (const auto& [r, e] : d.cols[c]) D.diffs[j].cols[r].emplace_back(static_cast<int>(c), e);
        for (auto& col : D.diffs[j].cols)
            std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    return D;
}

/// Basis of the total-degree-d piece of F_position: for each column with
/// shift a, all monomials of degree d - |a|, columns first, monomials in
/// canonical order.
template <class F>
std::vector<std::pair<int, Monomial>> graded_piece_basis(const FreeComplex<F>& A, int position, int degree) {
    std::vector<std::pair<int, Monomial>> basis;
    const FreeModule& mod = A.module(position);
    for (int c = 0; c < mod.rank(); ++c) {
        int rem = degree - mod.shifts[c].total();
        for_each_monomial_of_degree(A.nvars, rem, [&](const Monomial& m) { basis.emplace_back(c, m); });
    }
    return basis;
}

template <class F>
long long rank_in_degree(const FreeComplex<F>& A, int position, int degree) {
    long long r = 0;
    for (const auto& s : A.module(position).shifts)
        r += count_monomials_of_degree(A.nvars, degree - s.total());
    return r;
}

/// Symbolic check that consecutive differentials compose to zero.
template <class F>
bool differentials_compose_to_zero(const FreeComplex<F>& A) {
    const auto& field = A.field;
    for (int i = 2; i <= A.length(); ++i) {
        for (size_t c = 0; c < A.diffs[i].cols.size(); ++c) {
            std::map<int, PolyEntry<F>> composite;
            for (const auto& [mid, e1] : A.diffs[i].cols[c])
                for (const auto& [r, e2] : A.diffs[i - 1].cols[mid])
                    for (const auto& [m1, c1] : e1.terms)
                        for (const auto& [m2, c2] : e2.terms)
                            poly_accumulate(field, composite[r], field.mul(c1, c2), m1 * m2);
            for (const auto& [r, e] : composite)
                if (!e.empty()) return false;
        }
    }
    return true;
}

/// Checks multihomogeneity: every term of entry (r, c) of d_i has multidegree
/// shift(c) - shift(r).
template <class F>
bool entries_multihomogeneous(const FreeComplex<F>& A) {
    for (int i = 1; i <= A.length(); ++i)
        for (size_t c = 0; c < A.diffs[i].cols.size(); ++c)
            for (const auto& [r, e] : A.diffs[i].cols[c]) {
                Multidegree want = A.modules[i].shifts[c] - A.modules[i - 1].shifts[r];
                for (const auto& [m, coeff] : e.terms)
                    if (Multidegree::of(m) != want) return false;
            }
    return true;
}

}  // namespace monreg
