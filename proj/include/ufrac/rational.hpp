#pragma once

#include <compare>
#include <string>

#include "ufrac/nat.hpp"

namespace ufrac {

// Positive rational held in lowest terms at all times: num and den are
// coprime and >= 1 for every reachable value.
class PosRational {
  public:
    PosRational() : num_(1), den_(1) {}
    PosRational(Nat num, Nat den);  // reduces; rejects zero or negative parts

    static PosRational unit(const Nat& den) { return PosRational(Nat(1), den); }

    const Nat& num() const { return num_; }
    const Nat& den() const { return den_; }
    bool is_integral() const { return den_ == 1; }

    PosRational operator+(const PosRational& o) const;

    bool operator==(const PosRational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const PosRational& o) const;

    std::string str() const;  // "num/den" in decimal

  private:
    struct reduced_tag {};
    PosRational(Nat num, Nat den, reduced_tag)
        : num_(std::move(num)), den_(std::move(den)) {}

    Nat num_;
    Nat den_;
};

}  // namespace ufrac
