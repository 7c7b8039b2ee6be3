#pragma once

// Exact coefficient fields: the rationals (GMP-backed) and prime fields
// GF(p) with machine-word residues.  Every algebraic object in the library
// carries a field value of one of these types; all arithmetic goes through
// the field so GF(p) reduction can never be forgotten.

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "froblab/errors.hpp"

namespace froblab {

class QField {
public:
    using Elem = mpq_class;

    static constexpr bool is_prime_field = false;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_long(long v) const { return Elem(v); }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }

    Elem inv(const Elem& a) const {
        if (is_zero(a)) throw Error("division by zero");
        return Elem(1) / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool is_one(const Elem& a) const { return a == 1; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    // Accepts "p", "-p" and "p/q"; canonicalizes to lowest terms with
    // positive denominator.
    Elem parse(std::string_view s) const {
        mpq_class v;
        if (mpq_set_str(v.get_mpq_t(), std::string(s).c_str(), 10) != 0)
            throw InputError("bad rational literal: '" + std::string(s) + "'");
        if (sgn(v.get_den()) == 0)
            throw InputError("zero denominator in rational literal: '" + std::string(s) + "'");
        v.canonicalize();
        return v;
    }

    std::string to_string(const Elem& a) const { return a.get_str(); }
    std::string name() const { return "Q"; }

    bool operator==(const QField&) const { return true; }
    bool operator!=(const QField&) const { return false; }
};

class FpField {
public:
    using Elem = std::int64_t;

    static constexpr bool is_prime_field = true;

    explicit FpField(std::int64_t p) : p_(p) {
        if (!is_prime(p)) throw InputError("modulus " + std::to_string(p) + " is not prime");
    }

    std::int64_t modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return p_ == 1 ? 0 : 1; }

    Elem from_long(long v) const {
        Elem r = static_cast<Elem>(v % p_);
        return r < 0 ? r + p_ : r;
    }

    Elem add(Elem a, Elem b) const {
        Elem r = a + b;
        return r >= p_ ? r - p_ : r;
    }
    Elem sub(Elem a, Elem b) const {
        Elem r = a - b;
        return r < 0 ? r + p_ : r;
    }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((static_cast<__int128>(a) * b) % p_);
    }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }

    Elem inv(Elem a) const {
        if (a == 0) throw Error("division by zero in GF(" + std::to_string(p_) + ")");
        // extended Euclid
        std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t; new_t = tmp;
            tmp = r - q * new_r;
            r = new_r; new_r = tmp;
        }
        return t < 0 ? t + p_ : t;
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    bool is_zero(Elem a) const { return a == 0; }
    bool is_one(Elem a) const { return a == one(); }
    bool eq(Elem a, Elem b) const { return a == b; }

    // Accepts arbitrary-precision integers and "a/b" with b invertible.
    Elem parse(std::string_view s) const {
        std::string str(s);
        auto slash = str.find('/');
        if (slash == std::string::npos) return reduce_big(str);
        Elem num = reduce_big(str.substr(0, slash));
        Elem den = reduce_big(str.substr(slash + 1));
        if (den == 0)
            throw InputError("denominator '" + str.substr(slash + 1) + "' is zero in GF(" +
                             std::to_string(p_) + ")");
        return div(num, den);
    }

    std::string to_string(Elem a) const { return std::to_string(a); }
    std::string name() const { return "F" + std::to_string(p_); }

    bool operator==(const FpField& o) const { return p_ == o.p_; }
    bool operator!=(const FpField& o) const { return p_ != o.p_; }

    static bool is_prime(std::int64_t p) {
        if (p < 2) return false;
        if (p % 2 == 0) return p == 2;
        for (std::int64_t d = 3; d * d <= p; d += 2)
            if (p % d == 0) return false;
        return true;
    }

private:
    Elem reduce_big(const std::string& s) const {
        mpz_class z;
        if (mpz_set_str(z.get_mpz_t(), s.c_str(), 10) != 0)
            throw InputError("bad integer literal: '" + s + "'");
        mpz_class r = z % p_;
        Elem v = static_cast<Elem>(r.get_si());
        return v < 0 ? v + p_ : v;
    }

    std::int64_t p_;
};

template <class F>
void require_same_field(const F& a, const F& b, const char* where) {
    if (a != b) throw FieldMismatch(std::string("field mismatch in ") + where);
}

} // namespace froblab
