#include "qr/arith.hpp"

#include <limits>
#include <string>

namespace qr {

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t modulus) {
  if (modulus == 0) throw std::domain_error("mod_pow: modulus must be positive");
  std::uint64_t result = 1 % modulus;
  base %= modulus;
  while (exp > 0) {
    if (exp & 1) result = detail::mul_mod(result, base, modulus);
    base = detail::mul_mod(base, base, modulus);
    exp >>= 1;
  }
  return result;
}

namespace {

constexpr std::uint64_t kSmallPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// Strong-pseudoprime round for odd n with n - 1 = d * 2^r.
bool strong_probable_prime(std::uint64_t n, std::uint64_t a, std::uint64_t d, int r) {
  std::uint64_t x = mod_pow(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < r; ++i) {
    x = detail::mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t p : kSmallPrimes) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // The first twelve primes form a deterministic witness set for every
  // n < 2^64 (Sorenson and Webster, "Strong pseudoprimes to twelve prime
  // bases", Math. Comp. 86, 2017).
  for (std::uint64_t a : kSmallPrimes) {
    if (!strong_probable_prime(n, a, d, r)) return false;
  }
  return true;
}

std::vector<std::uint32_t> primes_below(std::uint32_t bound) {
  std::vector<std::uint32_t> out;
  if (bound <= 2) return out;
  std::vector<bool> composite(bound, false);
  for (std::uint32_t i = 2; i < bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j < bound; j += i) {
      composite[static_cast<std::size_t>(j)] = true;
    }
  }
  return out;
}

OddPrime::OddPrime(std::uint64_t value) {
  if (value < 3 || value >= (std::uint64_t{1} << 31)) {
    throw std::domain_error("OddPrime: need 3 <= p < 2^31, got " + std::to_string(value));
  }
  if (value % 2 == 0) {
    throw std::domain_error("OddPrime: " + std::to_string(value) + " is even");
  }
  if (!is_prime(value)) {
    throw std::domain_error("OddPrime: " + std::to_string(value) + " is not prime");
  }
  value_ = static_cast<std::uint32_t>(value);
}

namespace {

detail::u128 gcd_u128(detail::u128 a, detail::u128 b) {
  while (b != 0) {
    const detail::u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational Rational::reduced(detail::i128 num, detail::i128 den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num != 0) {
    const detail::u128 g =
        gcd_u128(static_cast<detail::u128>(num < 0 ? -num : num), static_cast<detail::u128>(den));
    num /= static_cast<detail::i128>(g);
    den /= static_cast<detail::i128>(g);
  } else {
    den = 1;
  }
  constexpr detail::i128 lo = std::numeric_limits<std::int64_t>::min();
  constexpr detail::i128 hi = std::numeric_limits<std::int64_t>::max();
  if (num < lo || num > hi || den > hi) {
    throw std::overflow_error("Rational: reduced value does not fit 64-bit fields");
  }
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den), raw_t{});
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  *this = reduced(num, den);
}

Rational Rational::operator-() const {
  return reduced(-static_cast<detail::i128>(num_), den_);
}

Rational operator+(const Rational& x, const Rational& y) {
  const detail::i128 num = static_cast<detail::i128>(x.num_) * y.den_ +
                           static_cast<detail::i128>(y.num_) * x.den_;
  const detail::i128 den = static_cast<detail::i128>(x.den_) * y.den_;
  return Rational::reduced(num, den);
}

Rational operator-(const Rational& x, const Rational& y) {
  const detail::i128 num = static_cast<detail::i128>(x.num_) * y.den_ -
                           static_cast<detail::i128>(y.num_) * x.den_;
  const detail::i128 den = static_cast<detail::i128>(x.den_) * y.den_;
  return Rational::reduced(num, den);
}

Rational operator*(const Rational& x, const Rational& y) {
  const detail::i128 num = static_cast<detail::i128>(x.num_) * y.num_;
  const detail::i128 den = static_cast<detail::i128>(x.den_) * y.den_;
  return Rational::reduced(num, den);
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
  const detail::i128 lhs = static_cast<detail::i128>(x.num_) * y.den_;
  const detail::i128 rhs = static_cast<detail::i128>(y.num_) * x.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::int64_t rational_floor(const Rational& x) {
  std::int64_t q = x.num() / x.den();
  if (x.num() % x.den() != 0 && x.num() < 0) --q;
  return q;
}

}  // namespace qr
