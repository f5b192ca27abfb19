#include "amt/ring.hpp"

#include <cctype>

namespace amt {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

RingSpec RingSpec::prime_field(std::uint32_t p) {
    if (p >= (1u << 31))
        throw InputError("prime-field modulus must be < 2^31, got " + std::to_string(p));
    if (!is_prime_u32(p))
        throw InputError("prime-field modulus must be prime, got " + std::to_string(p));
    return {Kind::PrimeField, p};
}

RingSpec RingSpec::parse(std::string_view token) {
    if (token == "Z") return integers();
    if (token == "Q") return rationals();
    if (token.size() >= 2 && token[0] == 'F') {
        std::uint64_t p = 0;
        for (std::size_t i = 1; i < token.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(token[i])))
                throw InputError("bad ring token '" + std::string(token) + "'");
            p = p * 10 + static_cast<std::uint64_t>(token[i] - '0');
            if (p >= (1ull << 31))
                throw InputError("prime-field modulus must be < 2^31 in '" + std::string(token) + "'");
        }
        return prime_field(static_cast<std::uint32_t>(p));
    }
    throw InputError("bad ring token '" + std::string(token) + "' (expected Z, Q, or F<p>)");
}

std::string RingSpec::token() const {
    switch (kind) {
        case Kind::Integers: return "Z";
        case Kind::Rationals: return "Q";
        case Kind::PrimeField: return "F" + std::to_string(modulus);
    }
    return "?";
}

namespace {

Int mod_reduce(const Int& v, std::uint32_t p) {
    Int r = v % p;
    if (r < 0) r += p;
    return r;
}

}  // namespace

Scalar Ring::canonical(Rat v) const {
    if (spec_.kind == RingSpec::Kind::PrimeField) {
        // Field elements are integers in [0, p); denominators cannot arise
        // from ring operations, but from_rat may hand us one.
        Int num = numerator(v);
        Int den = denominator(v);
        if (den != 1) {
            Int d = mod_reduce(den, spec_.modulus);
            Scalar dinv = invert(Scalar(Rat(d)));
            num *= numerator(dinv.value());
        }
        return Scalar(Rat(mod_reduce(num, spec_.modulus)));
    }
    return Scalar(std::move(v));
}

Scalar Ring::from_int(long long v) const { return canonical(Rat(Int(v))); }

Scalar Ring::from_rat(const Rat& v) const {
    if (spec_.kind == RingSpec::Kind::Integers && denominator(v) != 1)
        throw InputError("non-integer value in ring Z");
    return canonical(v);
}

Scalar Ring::add(const Scalar& a, const Scalar& b) const { return canonical(a.value() + b.value()); }
Scalar Ring::sub(const Scalar& a, const Scalar& b) const { return canonical(a.value() - b.value()); }
Scalar Ring::mul(const Scalar& a, const Scalar& b) const { return canonical(a.value() * b.value()); }
Scalar Ring::neg(const Scalar& a) const { return canonical(-a.value()); }

bool Ring::is_unit(const Scalar& a) const {
    switch (spec_.kind) {
        case RingSpec::Kind::Integers: return a.value() == 1 || a.value() == -1;
        case RingSpec::Kind::Rationals: return !a.is_zero();
        case RingSpec::Kind::PrimeField: return !a.is_zero();
    }
    return false;
}

Scalar Ring::invert(const Scalar& a) const {
    if (!is_unit(a)) throw ValidationError("element " + format(a) + " is not invertible in " + spec_.token());
    switch (spec_.kind) {
        case RingSpec::Kind::Integers:
            return a;  // 1 and -1 are their own inverses
        case RingSpec::Kind::Rationals: {
            Int num = numerator(a.value());
            Int den = denominator(a.value());
            // cpp_rational wants a positive denominator at construction
            if (num < 0) return Scalar(Rat(-den, -num));
            return Scalar(Rat(den, num));
        }
        case RingSpec::Kind::PrimeField: {
            Int x = numerator(a.value());
            Int inv = powm(x, Int(spec_.modulus - 2), Int(spec_.modulus));
            return Scalar(Rat(inv));
        }
    }
    throw ValidationError("unreachable ring kind");
}

Scalar Ring::parse(std::string_view s) const {
    auto malformed = [&] {
        return InputError("malformed " + spec_.token() + " element '" + std::string(s) + "'");
    };
    if (s.empty()) throw malformed();

    auto is_digits = [](std::string_view t) {
        if (t.empty()) return false;
        for (char c : t)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };

    switch (spec_.kind) {
        case RingSpec::Kind::Integers: {
            std::string_view body = s[0] == '-' ? s.substr(1) : s;
            if (!is_digits(body)) throw malformed();
            Int n{std::string(s)};
            return Scalar(Rat(n));
        }
        case RingSpec::Kind::Rationals: {
            auto slash = s.find('/');
            if (slash == std::string_view::npos) {
                std::string_view body = s[0] == '-' ? s.substr(1) : s;
                if (!is_digits(body)) throw malformed();
                Int n{std::string(s)};
                return Scalar(Rat(n));
            }
            std::string_view num = s.substr(0, slash);
            std::string_view den = s.substr(slash + 1);
            std::string_view num_body = !num.empty() && num[0] == '-' ? num.substr(1) : num;
            if (!is_digits(num_body) || !is_digits(den)) throw malformed();
            Int d{std::string(den)};
            if (d == 0) throw InputError("zero denominator in '" + std::string(s) + "'");
            if (den[0] == '0') throw malformed();  // grammar: [1-9][0-9]*
            Int n{std::string(num)};
            return Scalar(Rat(n, d));
        }
        case RingSpec::Kind::PrimeField: {
            if (!is_digits(s)) throw malformed();
            Int n{std::string(s)};
            return canonical(Rat(n));
        }
    }
    throw malformed();
}

std::string Ring::format(const Scalar& a) const {
    const Rat& v = a.value();
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

}  // namespace amt
