#include "ufrac/nat.hpp"

#include <stdexcept>

namespace ufrac {

std::size_t decimal_digits(const Nat& n) {
    if (n == 0) return 1;
    std::size_t d = mpz_sizeinbase(n.get_mpz_t(), 10);
    if (d <= 1) return d;
    // mpz_sizeinbase may report one digit too many for base 10.
    Nat low;
    mpz_ui_pow_ui(low.get_mpz_t(), 10, static_cast<unsigned long>(d - 1));
    return n >= low ? d : d - 1;
}

std::size_t approx_digits(const Nat& n) {
    if (n == 0) return 1;
    return mpz_sizeinbase(n.get_mpz_t(), 10);
}

Nat parse_nat(const std::string& text) {
    if (text.empty()) throw std::domain_error("empty integer literal");
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw std::domain_error("bad integer literal: \"" + text + "\"");
        }
    }
    return Nat(text, 10);
}

Nat nat_pow(const Nat& base, unsigned long exp) {
    Nat r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

bool fits_u64(const Nat& n) {
    return n >= 0 && mpz_fits_ulong_p(n.get_mpz_t()) != 0;
}

std::uint64_t to_u64(const Nat& n) { return static_cast<std::uint64_t>(mpz_get_ui(n.get_mpz_t())); }

}  // namespace ufrac
