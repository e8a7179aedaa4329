#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "errors.hpp"

namespace eqpath {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Coefficient ring: the integers, the rationals, or a prime field F_p.
// Elements are carried as exact rationals; for Integers the denominator is
// always 1, for PrimeField(p) values are least nonnegative residues.
class Ring {
public:
  enum class Kind { Integers, Rationals, PrimeField };

  static Ring integers() { return Ring(Kind::Integers, 0); }
  static Ring rationals() { return Ring(Kind::Rationals, 0); }
  static Ring prime_field(const Int& p);

  Kind kind() const { return kind_; }
  const Int& prime() const { return p_; }
  bool is_field() const { return kind_ != Kind::Integers; }

  bool operator==(const Ring& o) const {
    return kind_ == o.kind_ && p_ == o.p_;
  }
  bool operator!=(const Ring& o) const { return !(*this == o); }

  // Canonical form of a value in this ring. For F_p the input may carry a
  // denominator coprime to p; it is folded in via a modular inverse.
  Rat normalize(const Rat& x) const;

  Rat add(const Rat& a, const Rat& b) const { return normalize(a + b); }
  Rat sub(const Rat& a, const Rat& b) const { return normalize(a - b); }
  Rat mul(const Rat& a, const Rat& b) const { return normalize(a * b); }
  Rat neg(const Rat& a) const { return normalize(-a); }
  // Multiplicative inverse; fields only, nonzero input.
  Rat inv(const Rat& a) const;

  std::string name() const;
  // CLI spelling: "z", "q", "fp:P".
  static Ring parse(const std::string& text);

private:
  Ring(Kind k, const Int& p) : kind_(k), p_(p) {}
  Kind kind_;
  Int p_;
};

Int mod_inverse(const Int& a, const Int& p);

}  // namespace eqpath
