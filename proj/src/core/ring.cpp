#include "ring.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

namespace eqpath {

namespace {

bool is_prime(const Int& p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  return boost::multiprecision::miller_rabin_test(p, 32);
}

}  // namespace

Ring Ring::prime_field(const Int& p) {
  if (!is_prime(p)) {
    fail(ErrorCode::Ring, "prime field modulus must be prime, got " + p.str());
  }
  return Ring(Kind::PrimeField, p);
}

Int mod_inverse(const Int& a, const Int& p) {
  // Extended Euclid; a must be nonzero mod p.
  Int old_r = a % p, r = p;
  if (old_r < 0) old_r += p;
  Int old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  require_internal(old_r == 1, "mod_inverse: argument not invertible");
  Int res = old_s % p;
  if (res < 0) res += p;
  return res;
}

Rat Ring::normalize(const Rat& x) const {
  switch (kind_) {
    case Kind::Rationals:
      return x;
    case Kind::Integers:
      require_internal(denominator(x) == 1,
                       "integer ring value has nontrivial denominator");
      return x;
    case Kind::PrimeField: {
      Int num = numerator(x) % p_;
      if (num < 0) num += p_;
      Int den = denominator(x) % p_;
      if (den == 0) fail(ErrorCode::Ring, "denominator divisible by modulus");
      if (den != 1) num = (num * mod_inverse(den, p_)) % p_;
      return Rat(num);
    }
  }
  return x;
}

Rat Ring::inv(const Rat& a) const {
  switch (kind_) {
    case Kind::Rationals:
      if (a == 0) fail(ErrorCode::Ring, "division by zero");
      return Rat(1) / a;
    case Kind::PrimeField: {
      Rat v = normalize(a);
      if (v == 0) fail(ErrorCode::Ring, "division by zero in prime field");
      return Rat(mod_inverse(numerator(v), p_));
    }
    case Kind::Integers:
      fail(ErrorCode::Ring, "inverse requested over the integers");
  }
  return a;
}

std::string Ring::name() const {
  switch (kind_) {
    case Kind::Integers:
      return "z";
    case Kind::Rationals:
      return "q";
    case Kind::PrimeField:
      return "fp:" + p_.str();
  }
  return "?";
}

Ring Ring::parse(const std::string& text) {
  if (text == "z" || text == "Z") return integers();
  if (text == "q" || text == "Q") return rationals();
  if (text.rfind("fp:", 0) == 0) {
    try {
      Int p(text.substr(3));
      return prime_field(p);
    } catch (const std::exception&) {
      fail(ErrorCode::Parse, "bad prime field modulus in '" + text + "'");
    }
  }
  fail(ErrorCode::Parse, "unknown coefficient ring '" + text +
                             "' (expected z, q or fp:P)");
}

}  // namespace eqpath
