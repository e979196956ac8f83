#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "monreg/errors.hpp"

namespace monreg {

/// Runtime description of the ground field: characteristic 0 selects exact
/// rationals, a prime p < 2^31 selects F_p. The default prime is 32003.
struct FieldSpec {
    std::uint32_t characteristic = 32003;

    bool is_rationals() const { return characteristic == 0; }
    std::string str() const { return is_rationals() ? "QQ" : "F" + std::to_string(characteristic); }
    friend bool operator==(FieldSpec a, FieldSpec b) = default;
};

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline FieldSpec validated(FieldSpec spec) {
    if (spec.characteristic == 0) return spec;
    if (spec.characteristic >= (1u << 31) || !is_prime(spec.characteristic))
        throw PreconditionError("field characteristic must be 0 or a prime below 2^31");
    return spec;
}

/// F_p arithmetic on int64 values in [0, p). Products fit in int64 since
/// p < 2^31.
class PrimeField {
public:
    using Elt = std::int64_t;

    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (!is_prime(p)) throw PreconditionError("PrimeField: " + std::to_string(p) + " is not prime");
    }

    FieldSpec spec() const { return FieldSpec{static_cast<std::uint32_t>(p_)}; }

    Elt zero() const { return 0; }
    Elt one() const { return 1; }
    Elt from_int(std::int64_t v) const {
        v %= p_;
        return v < 0 ? v + p_ : v;
    }
    Elt add(Elt a, Elt b) const {
        Elt s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elt sub(Elt a, Elt b) const {
        Elt s = a - b;
        return s < 0 ? s + p_ : s;
    }
    Elt neg(Elt a) const { return a == 0 ? 0 : p_ - a; }
    Elt mul(Elt a, Elt b) const { return (a * b) % p_; }
    Elt inv(Elt a) const {
        if (a == 0) throw PreconditionError("PrimeField: inverse of zero");
        // Fermat: a^(p-2)
        Elt result = 1, base = a;
        for (std::int64_t e = p_ - 2; e > 0; e >>= 1) {
            if (e & 1) result = mul(result, base);
            base = mul(base, base);
        }
        return result;
    }
    Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
    bool is_zero(Elt a) const { return a == 0; }
    bool eq(Elt a, Elt b) const { return a == b; }
    std::string str(Elt a) const { return std::to_string(a); }

private:
    std::int64_t p_;
};

/// Exact rational arithmetic (arbitrary precision, header-only backend).
class RationalField {
public:
    using Elt = boost::multiprecision::cpp_rational;

    FieldSpec spec() const { return FieldSpec{0}; }

    Elt zero() const { return 0; }
    Elt one() const { return 1; }
    Elt from_int(std::int64_t v) const { return Elt(v); }
    Elt add(const Elt& a, const Elt& b) const { return a + b; }
    Elt sub(const Elt& a, const Elt& b) const { return a - b; }
    Elt neg(const Elt& a) const { return -a; }
    Elt mul(const Elt& a, const Elt& b) const { return a * b; }
    Elt inv(const Elt& a) const {
        if (a == 0) throw PreconditionError("RationalField: inverse of zero");
        return 1 / a;
    }
    Elt div(const Elt& a, const Elt& b) const { return mul(a, inv(b)); }
    bool is_zero(const Elt& a) const { return a == 0; }
    bool eq(const Elt& a, const Elt& b) const { return a == b; }
    std::string str(const Elt& a) const { return a.str(); }
};

/// Calls fn with the concrete field selected by spec. fn must be callable on
/// both PrimeField and RationalField and return the same type for each.
template <class Fn>
auto with_field(FieldSpec spec, Fn&& fn) {
    spec = validated(spec);
    if (spec.is_rationals()) return fn(RationalField{});
    return fn(PrimeField{spec.characteristic});
}

}  // namespace monreg
