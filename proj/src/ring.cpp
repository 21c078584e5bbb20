#include "ldu/ring.hpp"

#include <cctype>
#include <ostream>

namespace ldu {

Int exact_div(const Int& a, const Int& b) {
    if (b == 0) throw DivisionByZero();
    Int q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0)
        throw NotDivisible(to_string(b) + " does not divide " + to_string(a));
    return q;
}

void Rat::reduce() {
    if (den_ == 0) throw DivisionByZero("fraction with zero denominator");
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    Int g = gcd(num_, den_);
    num_ /= g;
    den_ /= g;
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

const Int& Rat::to_int() const {
    if (den_ != 1) throw NotIntegral(str() + " is not in the ring");
    return num_;
}

Rat Rat::operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rat& Rat::operator+=(const Rat& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rat& Rat::operator-=(const Rat& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rat& Rat::operator*=(const Rat& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.num_ == 0) throw DivisionByZero();
    num_ *= o.den_;
    den_ *= o.num_;
    reduce();
    return *this;
}

Rat Rat::reciprocal() const {
    if (num_ == 0) throw DivisionByZero("reciprocal of zero");
    return Rat(den_, num_);
}

std::string Rat::str() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Int parse_int(std::string_view text) {
    if (text.empty()) throw ParseError("empty integer literal");
    std::size_t i = (text[0] == '+' || text[0] == '-') ? 1 : 0;
    if (i == text.size()) throw ParseError("bad integer literal '" + std::string(text) + "'");
    for (std::size_t k = i; k < text.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(text[k])))
            throw ParseError("bad integer literal '" + std::string(text) + "'");
    // cpp_int's string constructor rejects an explicit plus sign
    if (text[0] == '+') text.remove_prefix(1);
    return Int(std::string(text));
}

Rat parse_rat(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(text));
    Int n = parse_int(text.substr(0, slash));
    Int d = parse_int(text.substr(slash + 1));
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rat(n, d);
}

std::string to_string(const Int& v) { return v.str(); }

int permutation_sign(const std::vector<std::size_t>& seq) {
    int sign = 1;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) sign = -sign;
    return sign;
}

}  // namespace ldu
