#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ldu/errors.hpp"

namespace ldu {

// The commutative domain R: arbitrary-precision integers.
using Int = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::pow;

// Exact quotient a / b in R. Throws DivisionByZero when b = 0 and
// NotDivisible when b does not divide a.
Int exact_div(const Int& a, const Int& b);

// An element of the field of quotients F, kept canonical: gcd(num, den) = 1,
// den > 0, and zero is 0/1.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(const Int& n) : num_(n), den_(1) {}           // NOLINT: implicit from R
    Rat(long long n) : num_(n), den_(1) {}            // NOLINT
    Rat(const Int& n, const Int& d) : num_(n), den_(d) { reduce(); }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    // The R value of an integral fraction; throws NotIntegral otherwise.
    const Int& to_int() const;

    Rat operator-() const;
    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    Rat& operator*=(const Rat& o);
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }

    Rat reciprocal() const;

    // "p/q", or plain "p" when q = 1.
    std::string str() const;

private:
    void reduce();

    Int num_;
    Int den_;
};

// Canonical fraction n/d in lowest terms with a positive denominator.
inline Rat frac_reduce(const Int& n, const Int& d) { return Rat(n, d); }

std::ostream& operator<<(std::ostream& os, const Rat& r);

// Parse a decimal integer. Throws ParseError on anything else.
Int parse_int(std::string_view text);

// Parse "p" or "p/q" into a canonical fraction. Throws ParseError.
Rat parse_rat(std::string_view text);

std::string to_string(const Int& v);

// Permutation sign (+1/-1) of a sequence of distinct indices.
int permutation_sign(const std::vector<std::size_t>& seq);

}  // namespace ldu
