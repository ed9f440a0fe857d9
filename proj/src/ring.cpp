#include "hypermorse/ring.hpp"

#include "hypermorse/errors.hpp"

#include <cctype>

namespace hypermorse {

namespace {

bool is_prime(unsigned long p) {
    if (p < 2) return false;
    for (unsigned long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

Ring Ring::prime_field(unsigned long p) {
    if (!is_prime(p)) throw ValidationError("Z/p requires a prime modulus, got " + std::to_string(p));
    return Ring(Kind::prime_field, p);
}

Ring Ring::parse(std::string_view text) {
    if (text == "Z") return integers();
    if (text == "Q") return rationals();
    std::string_view digits;
    if (text.starts_with("Zp:")) digits = text.substr(3);
    else if (text.starts_with("Z/")) digits = text.substr(2);
    else if (text.starts_with("Z") && text.size() > 1) digits = text.substr(1);
    if (digits.empty()) throw ParseError("unknown ring '" + std::string(text) + "' (expected Z, Q or Zp:<prime>)");
    unsigned long p = 0;
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("unknown ring '" + std::string(text) + "' (expected Z, Q or Zp:<prime>)");
        p = p * 10 + static_cast<unsigned long>(c - '0');
        if (p > 1000000007UL) throw ParseError("prime modulus too large in '" + std::string(text) + "'");
    }
    return prime_field(p);
}

std::string Ring::name() const {
    switch (kind_) {
        case Kind::integers: return "Z";
        case Kind::rationals: return "Q";
        case Kind::prime_field: return "Zp:" + std::to_string(p_);
    }
    return "?";
}

Scalar Ring::normalize(Scalar x) const {
    if (kind_ != Kind::prime_field) return x;
    // callers only produce integral values here
    mpz_class r = x.get_num() % mpz_class(p_);
    if (r < 0) r += p_;
    return Scalar(r);
}

Scalar Ring::from_rational(const Scalar& raw) const {
    Scalar x = raw;
    x.canonicalize();
    switch (kind_) {
        case Kind::rationals: return x;
        case Kind::integers:
            if (x.get_den() != 1) throw ValidationError("value " + to_string(x) + " is not an integer");
            return x;
        case Kind::prime_field: {
            mpz_class den = x.get_den() % mpz_class(p_);
            if (den == 0) throw ValidationError("denominator of " + to_string(x) + " vanishes mod " + std::to_string(p_));
            mpz_class inv;
            mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p_).get_mpz_t());
            return normalize(Scalar(mpz_class(x.get_num() * inv)));
        }
    }
    return x;
}

bool Ring::is_unit(const Scalar& a) const {
    if (kind_ == Kind::integers) return a == 1 || a == -1;
    return a != 0;
}

Scalar Ring::inverse(const Scalar& a) const {
    if (a == 0) throw InternalError("division by zero");
    switch (kind_) {
        case Kind::integers:
            if (a == 1 || a == -1) return a;
            throw InternalError("non-unit " + to_string(a) + " has no inverse over Z");
        case Kind::rationals: return Scalar(1) / a;
        case Kind::prime_field: {
            mpz_class inv;
            mpz_class num = a.get_num();
            mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), mpz_class(p_).get_mpz_t());
            return Scalar(inv);
        }
    }
    return a;
}

std::string to_string(const Scalar& x) {
    Scalar c = x;
    c.canonicalize();
    return c.get_str();
}

Scalar parse_rational(std::string_view text) {
    std::string s(text);
    auto bad = [&] { return ParseError("not an exact rational: '" + s + "'"); };
    if (s.empty()) throw bad();
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw bad();
    auto all_digits = [](std::string_view t) {
        if (t.empty()) return false;
        for (char c : t)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    bool negative = s[0] == '-';
    std::string_view body(s.data() + start, s.size() - start);
    Scalar value;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash), den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) throw bad();
        mpz_class d(std::string(den), 10);
        if (d == 0) throw bad();
        value = Scalar(mpz_class(std::string(num), 10), d);
        value.canonicalize();
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto whole = body.substr(0, dot), frac = body.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
            (!frac.empty() && !all_digits(frac)))
            throw bad();
        mpz_class den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        mpz_class num(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
        value = Scalar(num, den);
        value.canonicalize();
    } else {
        if (!all_digits(body)) throw bad();
        value = Scalar(mpz_class(std::string(body), 10));
    }
    return negative ? Scalar(-value) : value;
}

}  // namespace hypermorse
