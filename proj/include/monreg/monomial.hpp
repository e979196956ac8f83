#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "monreg/errors.hpp"

namespace monreg {

inline constexpr int kMaxVars = 16;
inline constexpr int kMaxExponent = 255;

/// A monomial in x1..xn as a packed exponent vector. Variables are indexed
/// 1..n throughout the public API. Exponents are capped at kMaxExponent so a
/// monomial always fits in one fixed-width word block.
class Monomial {
public:
    Monomial() : nvars_(0) { exp_.fill(0); }

    explicit Monomial(int nvars) : nvars_(static_cast<std::uint8_t>(nvars)) {
        check_nvars(nvars);
        exp_.fill(0);
    }

    static Monomial unit(int nvars) { return Monomial(nvars); }

    static Monomial variable(int nvars, int var, int power = 1) {
        Monomial m(nvars);
        m.set_exponent(var, power);
        return m;
    }

    static Monomial from_exponents(std::span<const int> exps) {
        Monomial m(static_cast<int>(exps.size()));
        for (int i = 0; i < static_cast<int>(exps.size()); ++i) m.set_exponent(i + 1, exps[i]);
        return m;
    }
    static Monomial from_exponents(std::initializer_list<int> exps) {
        return from_exponents(std::span<const int>(exps.begin(), exps.size()));
    }

    int vars() const { return nvars_; }

    int exponent(int var) const {
        check_var(var);
        return exp_[var - 1];
    }

    void set_exponent(int var, int e) {
        check_var(var);
        if (e < 0 || e > kMaxExponent)
            throw CapExceededError("exponent " + std::to_string(e) + " out of range [0, 255]");
        exp_[var - 1] = static_cast<std::uint8_t>(e);
    }

    int total_degree() const {
        int d = 0;
        for (int i = 0; i < nvars_; ++i) d += exp_[i];
        return d;
    }

    bool is_unit() const { return total_degree() == 0; }

    /// m(u): largest variable index with positive exponent; 0 for the unit
    /// monomial (where it is undefined).
    int max_var() const {
        for (int i = nvars_ - 1; i >= 0; --i)
            if (exp_[i] > 0) return i + 1;
        return 0;
    }

    /// l(u): exponent of x_{m(u)}; 0 for the unit monomial.
    int leading_power() const {
        int m = max_var();
        return m == 0 ? 0 : exp_[m - 1];
    }

    bool divides(const Monomial& other) const {
        check_compatible(other);
        for (int i = 0; i < nvars_; ++i)
            if (exp_[i] > other.exp_[i]) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        a.check_compatible(b);
        Monomial r(a.nvars_);
        for (int i = 0; i < a.nvars_; ++i) {
            int e = a.exp_[i] + b.exp_[i];
            if (e > kMaxExponent) throw CapExceededError("exponent overflow in monomial product");
            r.exp_[i] = static_cast<std::uint8_t>(e);
        }
        return r;
    }

    /// Exact division; a must be divisible by b.
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        a.check_compatible(b);
        Monomial r(a.nvars_);
        for (int i = 0; i < a.nvars_; ++i) {
            if (a.exp_[i] < b.exp_[i]) throw PreconditionError("monomial division is not exact");
            r.exp_[i] = static_cast<std::uint8_t>(a.exp_[i] - b.exp_[i]);
        }
        return r;
    }

    friend Monomial gcd(const Monomial& a, const Monomial& b) {
        a.check_compatible(b);
        Monomial r(a.nvars_);
        for (int i = 0; i < a.nvars_; ++i) r.exp_[i] = std::min(a.exp_[i], b.exp_[i]);
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        a.check_compatible(b);
        Monomial r(a.nvars_);
        for (int i = 0; i < a.nvars_; ++i) r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
        return r;
    }

    /// u : v  =  u / gcd(u, v).
    friend Monomial colon(const Monomial& a, const Monomial& b) { return a / gcd(a, b); }

    /// The monomial with x_var set to 1 (exponent dropped).
    Monomial without_variable(int var) const {
        Monomial r = *this;
        r.set_exponent(var, 0);
        return r;
    }

    /// Re-read in a different ambient variable count. Shrinking requires the
    /// dropped variables to be absent.
    Monomial with_vars(int new_nvars) const {
        check_nvars(new_nvars);
        for (int i = new_nvars; i < nvars_; ++i)
            if (exp_[i] > 0)
                throw PreconditionError("monomial involves x" + std::to_string(i + 1) +
                                        ", cannot restrict to " + std::to_string(new_nvars) + " variables");
        Monomial r = *this;
        r.nvars_ = static_cast<std::uint8_t>(new_nvars);
        for (int i = new_nvars; i < kMaxVars; ++i) r.exp_[i] = 0;
        return r;
    }

    /// Canonical order: total degree first, then lex with x1 > x2 > ... (the
    /// monomial with the larger exponent at the first differing variable
    /// comes first). Fixes serialization and generator ordering.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        a.check_compatible(b);
        if (int da = a.total_degree(), db = b.total_degree(); da != db) return da <=> db;
        for (int i = 0; i < a.nvars_; ++i)
            if (a.exp_[i] != b.exp_[i]) return b.exp_[i] <=> a.exp_[i];
        return std::strong_ordering::equal;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.nvars_ == b.nvars_ && a.exp_ == b.exp_;
    }

    /// Text form, `x1^2*x3`; the unit monomial prints as `1`.
    std::string str() const {
        std::string s;
        for (int i = 0; i < nvars_; ++i) {
            if (exp_[i] == 0) continue;
            if (!s.empty()) s += '*';
            s += 'x';
            s += std::to_string(i + 1);
            if (exp_[i] > 1) {
                s += '^';
                s += std::to_string(static_cast<int>(exp_[i]));
            }
        }
        return s.empty() ? "1" : s;
    }

private:
    static void check_nvars(int n) {
        if (n < 0 || n > kMaxVars)
            throw CapExceededError("variable count " + std::to_string(n) + " out of range [0, 16]");
    }
    void check_var(int var) const {
        if (var < 1 || var > nvars_)
            throw PreconditionError("variable index " + std::to_string(var) + " out of range [1, " +
                                    std::to_string(nvars_) + "]");
    }
    void check_compatible(const Monomial& other) const {
        if (nvars_ != other.nvars_)
            throw PreconditionError("monomials live in different ambient variable counts (" +
                                    std::to_string(nvars_) + " vs " + std::to_string(other.nvars_) + ")");
    }

    std::array<std::uint8_t, kMaxVars> exp_;
    std::uint8_t nvars_;
};

/// Calls fn(Monomial) for every monomial of the given total degree in
/// 1..nvars, in canonical (lexicographic) order.
inline void for_each_monomial_of_degree(int nvars, int degree,
                                        const std::function<void(const Monomial&)>& fn) {
    if (degree < 0) return;
    if (nvars == 0) {
        if (degree == 0) fn(Monomial::unit(0));
        return;
    }
    Monomial m(nvars);
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == nvars) {
            m.set_exponent(nvars, remaining);
            fn(m);
            m.set_exponent(nvars, 0);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            m.set_exponent(var, e);
            self(self, var + 1, remaining - e);
        }
        m.set_exponent(var, 0);
    };
    if (degree > kMaxExponent * nvars) return;
    rec(rec, 1, degree);
}

/// Number of monomials of the given total degree in nvars variables,
/// C(degree + nvars - 1, nvars - 1).
inline long long count_monomials_of_degree(int nvars, int degree) {
    if (degree < 0) return 0;
    if (nvars == 0) return degree == 0 ? 1 : 0;
    long long r = 1;
    for (int i = 1; i < nvars; ++i) r = r * (degree + i) / i;
    return r;
}

}  // namespace monreg
