#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hypermorse {

/// Exact scalar. Integers and residues are stored as rationals with unit
/// denominator; the owning Ring keeps them normalized.
using Scalar = mpq_class;

/// Coefficient ring of a chain complex: the integers, the rationals, or a
/// prime field Z/p.
class Ring {
public:
    enum class Kind { integers, rationals, prime_field };

    static Ring integers() { return Ring(Kind::integers, 0); }
    static Ring rationals() { return Ring(Kind::rationals, 0); }
    /// Throws ValidationError unless p is prime.
    static Ring prime_field(unsigned long p);

    /// Parses "Z", "Q", "Zp:<prime>" (also "Z/<prime>", "Z<prime>").
    static Ring parse(std::string_view text);

    Kind kind() const noexcept { return kind_; }
    unsigned long characteristic() const noexcept { return p_; }
    bool is_field() const noexcept { return kind_ != Kind::integers; }
    std::string name() const;

    /// Maps an arbitrary rational into the ring. Fails for non-integral
    /// values over Z and for denominators divisible by p over Z/p.
    Scalar from_rational(const Scalar& x) const;
    Scalar normalize(Scalar x) const;

    Scalar add(const Scalar& a, const Scalar& b) const { return normalize(a + b); }
    Scalar sub(const Scalar& a, const Scalar& b) const { return normalize(a - b); }
    Scalar mul(const Scalar& a, const Scalar& b) const { return normalize(a * b); }
    Scalar neg(const Scalar& a) const { return normalize(-a); }
    /// Multiplicative inverse in a field. Throws for zero or over Z.
    Scalar inverse(const Scalar& a) const;
    bool is_unit(const Scalar& a) const;

    friend bool operator==(const Ring& a, const Ring& b) noexcept {
        return a.kind_ == b.kind_ && a.p_ == b.p_;
    }

private:
    Ring(Kind kind, unsigned long p) : kind_(kind), p_(p) {}

    Kind kind_;
    unsigned long p_;
};

/// Exact decimal rendering: "3", "-7/2".
std::string to_string(const Scalar& x);

/// Parses an exact rational from "3", "-7/2" or a finite decimal "1.25".
/// Throws ParseError on anything else.
Scalar parse_rational(std::string_view text);

}  // namespace hypermorse
