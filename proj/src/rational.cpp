#include "ufrac/rational.hpp"

#include <stdexcept>

namespace ufrac {

PosRational::PosRational(Nat num, Nat den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_ <= 0 || den_ <= 0) {
        throw std::domain_error("PosRational requires positive numerator and denominator");
    }
    Nat g = nat_gcd(num_, den_);
    if (g > 1) {
        mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

// a/b + c/d with gcd(a,b) = gcd(c,d) = 1. With g = gcd(b,d) the remaining
// common factor of a*(d/g) + c*(b/g) and b*(d/g) divides g, so only one
// small gcd is needed regardless of how large the operands have grown.
PosRational PosRational::operator+(const PosRational& o) const {
    Nat g = nat_gcd(den_, o.den_);
    Nat b1 = den_ / g;
    Nat d1 = o.den_ / g;
    Nat t = num_ * d1 + o.num_ * b1;
    Nat g2 = nat_gcd(t, g);
    Nat num = t / g2;
    Nat den = b1 * (o.den_ / g2);
    return PosRational(std::move(num), std::move(den), reduced_tag{});
}

std::strong_ordering PosRational::operator<=>(const PosRational& o) const {
    Nat lhs = num_ * o.den_;
    Nat rhs = o.num_ * den_;
    int c = cmp(lhs, rhs);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string PosRational::str() const { return num_.get_str() + "/" + den_.get_str(); }

}  // namespace ufrac
