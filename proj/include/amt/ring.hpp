#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "amt/errors.hpp"

namespace amt {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// The ground ring of a based complex: Z, Q, or F_p for a prime p < 2^31.
struct RingSpec {
    enum class Kind { Integers, Rationals, PrimeField };

    Kind kind = Kind::Integers;
    std::uint32_t modulus = 0;  // set iff kind == PrimeField

    static RingSpec integers() { return {Kind::Integers, 0}; }
    static RingSpec rationals() { return {Kind::Rationals, 0}; }
    static RingSpec prime_field(std::uint32_t p);

    // Parses a ring token: "Z", "Q", or "F<p>" (e.g. "F5").
    static RingSpec parse(std::string_view token);
    std::string token() const;

    bool is_field() const { return kind != Kind::Integers; }
    bool operator==(const RingSpec&) const = default;
};

// An exact scalar in canonical form. For Z the denominator is 1, for Q the
// fraction is in lowest terms with positive denominator, for F_p the value
// is an integer in [0, p). Canonical form makes equality structural.
class Scalar {
public:
    Scalar() = default;  // zero in every ring

    const Rat& value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool operator==(const Scalar&) const = default;

private:
    explicit Scalar(Rat v) : v_(std::move(v)) {}
    Rat v_;

    friend class Ring;
};

// Arithmetic over a RingSpec. All results are canonical Scalars; all
// operations are exact and total except invert, which rejects non-units.
class Ring {
public:
    explicit Ring(RingSpec spec) : spec_(spec) {}

    const RingSpec& spec() const { return spec_; }

    Scalar zero() const { return Scalar(); }
    Scalar one() const { return from_int(1); }
    Scalar from_int(long long v) const;
    Scalar from_rat(const Rat& v) const;  // reduces into the ring; Z rejects non-integers

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;

    bool is_unit(const Scalar& a) const;
    Scalar invert(const Scalar& a) const;  // throws ValidationError on non-units

    // Textual grammar, shared with the file formats:
    //   Z: -?[0-9]+    Q: integer or -?[0-9]+/[1-9][0-9]*    F_p: [0-9]+
    Scalar parse(std::string_view s) const;
    std::string format(const Scalar& a) const;

private:
    Scalar canonical(Rat v) const;
    RingSpec spec_;
};

bool is_prime_u32(std::uint32_t n);

}  // namespace amt
