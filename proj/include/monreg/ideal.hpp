#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "monreg/monomial.hpp"

namespace monreg {

/// A monomial ideal held as its minimal generating set (an antichain under
/// divisibility) in canonical order. The zero ideal has no generators; the
/// unit ideal is generated by 1.
class MonomialIdeal {
public:
    explicit MonomialIdeal(int nvars) : nvars_(check(nvars)) {}

    static MonomialIdeal zero(int nvars) { return MonomialIdeal(nvars); }

    static MonomialIdeal unit(int nvars) {
        MonomialIdeal I(nvars);
        I.gens_.push_back(Monomial::unit(nvars));
        return I;
    }

    /// Minimalizes: keeps only the divisibility antichain and sorts
    /// canonically. Membership semantics are unchanged.
    static MonomialIdeal make(int nvars, std::vector<Monomial> gens) {
        MonomialIdeal I(nvars);
        for (const auto& g : gens)
            if (g.vars() != nvars)
                throw PreconditionError("generator " + g.str() + " has wrong variable count");
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        // sorted by degree, so a divisor always precedes its multiples
        for (const auto& g : gens) {
            bool redundant = false;
            for (const auto& kept : I.gens_)
                if (kept.divides(g)) {
                    redundant = true;
                    break;
                }
            if (!redundant) I.gens_.push_back(g);
        }
        return I;
    }

    int vars() const { return nvars_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    int generator_count() const { return static_cast<int>(gens_.size()); }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return !gens_.empty() && gens_.front().is_unit(); }
    bool is_proper() const { return !is_unit(); }

    /// Monomial membership: divisibility by some generator.
    bool contains(const Monomial& u) const {
        if (u.vars() != nvars_)
            throw PreconditionError("membership query with mismatched variable count");
        for (const auto& g : gens_)
            if (g.divides(u)) return true;
        return false;
    }

    bool contains(const MonomialIdeal& other) const {
        if (other.nvars_ != nvars_) throw PreconditionError("containment query with mismatched variable count");
        for (const auto& g : other.gens_)
            if (!contains(g)) return false;
        return true;
    }

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.nvars_ == b.nvars_ && a.gens_ == b.gens_;
    }

    /// Largest exponent of x_var among the generators (0 if absent).
    int max_exponent(int var) const {
        int e = 0;
        for (const auto& g : gens_) e = std::max(e, g.exponent(var));
        return e;
    }

    int max_generator_degree() const {
        int d = 0;
        for (const auto& g : gens_) d = std::max(d, g.total_degree());
        return d;
    }

    std::string str() const {
        if (is_zero()) return "(0)";
        std::string s = "(";
        for (size_t i = 0; i < gens_.size(); ++i) {
            if (i) s += ", ";
            s += gens_[i].str();
        }
        return s + ")";
    }

private:
    static int check(int nvars) {
        if (nvars < 0 || nvars > kMaxVars)
            throw CapExceededError("variable count " + std::to_string(nvars) + " out of range [0, 16]");
        return nvars;
    }

    int nvars_;
    std::vector<Monomial> gens_;
};

inline MonomialIdeal minimalize(const std::vector<Monomial>& gens, int nvars) {
    return MonomialIdeal::make(nvars, gens);
}

inline void check_same_vars(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.vars() != b.vars())
        throw PreconditionError("ideals live in different ambient variable counts (" +
                                std::to_string(a.vars()) + " vs " + std::to_string(b.vars()) + ")");
}

/// (I : v) for a single monomial v, generated by g / gcd(g, v).
inline MonomialIdeal colon(const MonomialIdeal& I, const Monomial& v) {
    std::vector<Monomial> gens;
    gens.reserve(I.generators().size());
    for (const auto& g : I.generators()) gens.push_back(colon(g, v));
    return MonomialIdeal::make(I.vars(), gens);
}

inline MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
    check_same_vars(I, J);
    std::vector<Monomial> gens = I.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return MonomialIdeal::make(I.vars(), gens);
}

/// I ∩ J, generated by pairwise lcms of the generators.
inline MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
    check_same_vars(I, J);
    std::vector<Monomial> gens;
    gens.reserve(I.generators().size() * J.generators().size());
    for (const auto& g : I.generators())
        for (const auto& h : J.generators()) gens.push_back(lcm(g, h));
    return MonomialIdeal::make(I.vars(), gens);
}

/// I · J, generated by pairwise products.
inline MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
    check_same_vars(I, J);
    std::vector<Monomial> gens;
    gens.reserve(I.generators().size() * J.generators().size());
    for (const auto& g : I.generators())
        for (const auto& h : J.generators()) gens.push_back(g * h);
    return MonomialIdeal::make(I.vars(), gens);
}

/// (I : J) = ∩_{v ∈ G(J)} (I : v). J must be nonzero.
inline MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
    check_same_vars(I, J);
    if (J.is_zero()) throw PreconditionError("colon by the zero ideal");
    MonomialIdeal result = colon(I, J.generators().front());
    for (size_t i = 1; i < J.generators().size(); ++i)
        result = intersect(result, colon(I, J.generators()[i]));
    return result;
}

/// (I : x_var^inf): the generators with x_var set to 1, minimalized. Equals
/// (I : x_var^k) for k = max x_var-exponent among the generators.
inline MonomialIdeal saturate_variable(const MonomialIdeal& I, int var) {
    if (var < 1 || var > I.vars())
        throw PreconditionError("saturate_variable: variable index out of range");
    std::vector<Monomial> gens;
    gens.reserve(I.generators().size());
    for (const auto& g : I.generators()) gens.push_back(g.without_variable(var));
    return MonomialIdeal::make(I.vars(), gens);
}

/// Re-reads an ideal whose generators avoid x_n in ambient n-1 variables.
inline MonomialIdeal restrict(const MonomialIdeal& I) {
    int n = I.vars();
    if (n == 0) throw PreconditionError("restrict: no variable to drop");
    std::vector<Monomial> gens;
    gens.reserve(I.generators().size());
    for (const auto& g : I.generators()) gens.push_back(g.with_vars(n - 1));
    return MonomialIdeal::make(n - 1, gens);
}

/// Embeds an ideal into a larger ambient variable count.
inline MonomialIdeal extend_to(const MonomialIdeal& I, int new_nvars) {
    if (new_nvars < I.vars()) throw PreconditionError("extend_to: shrinking ambient count");
    std::vector<Monomial> gens;
    gens.reserve(I.generators().size());
    for (const auto& g : I.generators()) gens.push_back(g.with_vars(new_nvars));
    return MonomialIdeal::make(new_nvars, gens);
}

/// The maximal homogeneous ideal (x1, ..., xn).
inline MonomialIdeal maximal_ideal(int nvars) {
    std::vector<Monomial> gens;
    for (int v = 1; v <= nvars; ++v) gens.push_back(Monomial::variable(nvars, v));
    return MonomialIdeal::make(nvars, gens);
}

/// dim_k (I)_d: number of degree-d monomials lying in I.
inline long long ideal_dim_in_degree(const MonomialIdeal& I, int degree) {
    long long c = 0;
    for_each_monomial_of_degree(I.vars(), degree, [&](const Monomial& m) {
        if (I.contains(m)) ++c;
    });
    return c;
}

/// dim_k (R/I)_d: number of degree-d monomials outside I.
inline long long quotient_dim_in_degree(const MonomialIdeal& I, int degree) {
    return count_monomials_of_degree(I.vars(), degree) - ideal_dim_in_degree(I, degree);
}

}  // namespace monreg
