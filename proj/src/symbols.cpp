#include "qr/symbols.hpp"

#include <bit>
#include <string>

namespace qr {

Symbol euler_criterion(std::uint64_t a, std::uint64_t p) {
  if (p < 3 || p % 2 == 0 || p >= (std::uint64_t{1} << 63)) {
    throw std::domain_error("euler_criterion: p must be an odd prime below 2^63");
  }
  a %= p;
  if (a == 0) return Symbol(0);
  const std::uint64_t e = mod_pow(a, (p - 1) / 2, p);
  if (e == 1) return Symbol(1);
  if (e == p - 1) return Symbol(-1);
  throw ConsistencyError("euler_criterion: a^((p-1)/2) mod p = " + std::to_string(e) + " for a=" +
                         std::to_string(a) + ", p=" + std::to_string(p) + "; p is not prime");
}

Symbol legendre_euler(std::uint64_t a, OddPrime p) { return euler_criterion(a, p.value()); }

Symbol legendre_gauss(std::uint64_t a, OddPrime p, GaussVariant variant) {
  std::uint64_t q = a % p.value();
  if (q == 0) return Symbol(0);
  switch (variant) {
    case GaussVariant::SignProduct:
      return gauss_sign_product(static_cast<std::int64_t>(q), p).symbol;
    case GaussVariant::MSum:
      return Symbol::minus_one_pow(m_sum(static_cast<std::int64_t>(q), p));
    case GaussVariant::MuSum:
      if (q % 2 == 0) q += p.value();  // odd representative of the residue class
      return Symbol::minus_one_pow(mu_sum(static_cast<std::int64_t>(q), p));
  }
  throw std::logic_error("legendre_gauss: unknown variant");
}

Symbol jacobi(std::int64_t a, std::int64_t n) {
  if (n <= 0 || n % 2 == 0) throw std::domain_error("jacobi: n must be a positive odd integer");
  std::int64_t r = a % n;
  if (r < 0) r += n;
  std::uint64_t num = static_cast<std::uint64_t>(r);
  std::uint64_t den = static_cast<std::uint64_t>(n);
  int sign = 1;
  // invariant at each reduction: 0 < num < den, den odd
  while (num != 0) {
    const int twos = std::countr_zero(num);
    num >>= twos;
    // (2/den) = -1 exactly when den = 3, 5 mod 8
    if ((twos & 1) && ((den & 7) == 3 || (den & 7) == 5)) sign = -sign;
    // reciprocity flip before swapping the odd pair
    if ((num & 3) == 3 && (den & 3) == 3) sign = -sign;
    std::uint64_t next = den;
    if ((den >> 2) < num) {
      // quotient is 1..3; subtraction beats the divider
      next -= num;
      if (next >= num) next -= num;
      if (next >= num) next -= num;
    } else {
      next %= num;
    }
    den = num;
    num = next;
  }
  return den == 1 ? Symbol(sign) : Symbol(0);
}

namespace detail {

Symbol consensus_of(std::uint64_t a, std::uint32_t p, const std::array<NamedSymbol, 5>& routes) {
  bool agree = true;
  for (const auto& [name, value] : routes) {
    if (value != routes.front().second) agree = false;
  }
  if (agree) return routes.front().second;
  std::string msg = "symbol routes disagree for a=" + std::to_string(a) + ", p=" +
                    std::to_string(p) + ":";
  for (const auto& [name, value] : routes) {
    msg += " " + std::string(name) + "=" + std::to_string(value.value());
  }
  throw ConsistencyError(msg);
}

}  // namespace detail

Symbol symbol_consensus(std::uint64_t a, OddPrime p) {
  const std::array<detail::NamedSymbol, 5> routes{{
      {"euler", legendre_euler(a, p)},
      {"gauss-sign", legendre_gauss(a, p, GaussVariant::SignProduct)},
      {"m-sum", legendre_gauss(a, p, GaussVariant::MSum)},
      {"mu-sum", legendre_gauss(a, p, GaussVariant::MuSum)},
      {"jacobi", jacobi(static_cast<std::int64_t>(a % p.value()), p.value())},
  }};
  return detail::consensus_of(a, p.value(), routes);
}

}  // namespace qr
