#pragma once

#include <compare>
#include <ostream>
#include <string>

#include "monreg/errors.hpp"

namespace monreg {

/// Integer extended with -inf and +inf, used for degrees and regularities.
/// The infinities are distinguished values, never numeric stand-ins.
class ExtInt {
public:
    constexpr ExtInt() : kind_(Kind::Finite), value_(0) {}
    constexpr ExtInt(int v) : kind_(Kind::Finite), value_(v) {}

    static constexpr ExtInt neg_inf() { return ExtInt(Kind::NegInf); }
    static constexpr ExtInt pos_inf() { return ExtInt(Kind::PosInf); }

    constexpr bool is_finite() const { return kind_ == Kind::Finite; }
    constexpr bool is_neg_inf() const { return kind_ == Kind::NegInf; }
    constexpr bool is_pos_inf() const { return kind_ == Kind::PosInf; }

    /// Finite value; throws on infinities.
    constexpr int value() const {
        if (!is_finite()) throw PreconditionError("ExtInt: value() on infinite value");
        return value_;
    }

    friend constexpr bool operator==(ExtInt a, ExtInt b) {
        return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(ExtInt a, ExtInt b) {
        auto rank = [](const ExtInt& x) { return x.kind_ == Kind::NegInf ? -1 : x.kind_ == Kind::PosInf ? 1 : 0; };
        if (rank(a) != rank(b)) return rank(a) <=> rank(b);
        if (a.kind_ == Kind::Finite) return a.value_ <=> b.value_;
        return std::strong_ordering::equal;
    }

    /// Shift by a finite amount; infinities absorb.
    friend constexpr ExtInt operator+(ExtInt a, int b) {
        if (!a.is_finite()) return a;
        return ExtInt(a.value_ + b);
    }
    friend constexpr ExtInt operator-(ExtInt a, int b) { return a + (-b); }

    std::string str() const {
        if (is_neg_inf()) return "-inf";
        if (is_pos_inf()) return "+inf";
        return std::to_string(value_);
    }
    friend std::ostream& operator<<(std::ostream& os, ExtInt v) { return os << v.str(); }

private:
    enum class Kind { NegInf, Finite, PosInf };
    constexpr explicit ExtInt(Kind k) : kind_(k), value_(0) {}
    Kind kind_;
    int value_;
};

inline constexpr ExtInt max(ExtInt a, ExtInt b) { return a < b ? b : a; }
inline constexpr ExtInt min(ExtInt a, ExtInt b) { return b < a ? b : a; }

}  // namespace monreg
