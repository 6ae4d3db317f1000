#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qr {

// Thrown when two computation routes that a theorem forces to agree
// disagree, or when a checked structural invariant fails. Any sighting
// means a bug in the library or a violated caller contract (for example,
// a composite number passed where a prime was promised).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

using u128 = unsigned __int128;
using i128 = __int128;

// (a * b) % m without overflow, valid for every m <= UINT64_MAX.
inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

}  // namespace detail

// base^exp mod modulus by square-and-multiply, overflow-safe for any
// modulus representable in 64 bits. modulus == 0 is a domain error.
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t modulus);

// Deterministic strong-pseudoprime test, exact for all n < 2^64.
bool is_prime(std::uint64_t n) noexcept;

// All primes strictly below bound, ascending (2 included).
std::vector<std::uint32_t> primes_below(std::uint32_t bound);

// A validated odd prime p with 3 <= p < 2^31. The cap keeps 2*q*a with
// a <= (p-1)/2 and q*p < 2^62 inside 64-bit unsigned arithmetic in every
// floor-sum kernel downstream, so those kernels stay allocation-free.
class OddPrime {
 public:
  explicit OddPrime(std::uint64_t value);

  std::uint32_t value() const noexcept { return value_; }

  // Size of the half system A = {1, ..., (p-1)/2}.
  std::uint32_t half() const noexcept { return (value_ - 1) / 2; }

  friend bool operator==(OddPrime, OddPrime) = default;

 private:
  std::uint32_t value_;
};

// Exact reduced fraction num/den with den > 0. Construction reduces
// eagerly, so equality is structural. Arithmetic runs through 128-bit
// intermediates and throws std::overflow_error if a reduced result no
// longer fits the 64-bit fields.
class Rational {
 public:
  Rational() noexcept : num_(0), den_(1) {}
  Rational(std::int64_t n) noexcept : num_(n), den_(1) {}
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }

  Rational operator-() const;
  friend Rational operator+(const Rational& x, const Rational& y);
  friend Rational operator-(const Rational& x, const Rational& y);
  friend Rational operator*(const Rational& x, const Rational& y);
  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y);

 private:
  struct raw_t {};
  Rational(std::int64_t num, std::int64_t den, raw_t) noexcept : num_(num), den_(den) {}
  static Rational reduced(detail::i128 num, detail::i128 den);

  std::int64_t num_;
  std::int64_t den_;
};

// Greatest integer <= x. Exact, toward minus infinity, no floating point.
std::int64_t rational_floor(const Rational& x);

// A Legendre/Jacobi symbol value: -1, 0 or +1.
class Symbol {
 public:
  constexpr explicit Symbol(int v) : v_(v) {
    if (v < -1 || v > 1) throw std::domain_error("Symbol: value must be -1, 0 or +1");
  }

  constexpr int value() const noexcept { return v_; }

  // (-1)^e
  static constexpr Symbol minus_one_pow(std::uint64_t e) { return Symbol(e % 2 == 0 ? 1 : -1); }

  friend constexpr Symbol operator*(Symbol a, Symbol b) { return Symbol(a.v_ * b.v_); }
  friend constexpr bool operator==(Symbol, Symbol) = default;

 private:
  int v_;
};

}  // namespace qr
