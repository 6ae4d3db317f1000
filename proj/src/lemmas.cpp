#include "qr/lemmas.hpp"

#include <string>

namespace qr {

namespace {

// Shared precondition: 1 <= q, q*p < 2^63, p does not divide q. The floor
// kernels form 2*q*a with a <= (p-1)/2, so 2*q*a < q*p stays in uint64.
std::uint64_t checked_q(std::int64_t q, OddPrime p) {
  if (q <= 0) throw std::domain_error("lemmas: q must be a positive integer");
  const std::uint64_t uq = static_cast<std::uint64_t>(q);
  if (uq > ((std::uint64_t{1} << 63) - 1) / p.value()) {
    throw std::domain_error("lemmas: q*p must stay below 2^63, got q=" + std::to_string(q));
  }
  if (uq % p.value() == 0) {
    throw std::domain_error("lemmas: p divides q, half-system decomposition undefined");
  }
  return uq;
}

void check_in_half_system(std::uint32_t a, OddPrime p) {
  if (a < 1 || a > p.half()) {
    throw std::domain_error("lemmas: a=" + std::to_string(a) + " outside half system of p=" +
                            std::to_string(p.value()));
  }
}

std::string trace_msg(const GaussTrace& t, const std::string& what) {
  return "GaussTrace(q=" + std::to_string(t.q) + ", p=" + std::to_string(t.p) + "): " + what;
}

}  // namespace

HalfResidue half_residue(std::int64_t q, OddPrime p, std::uint32_t a) {
  const std::uint64_t uq = checked_q(q, p);
  check_in_half_system(a, p);
  const std::uint32_t r = static_cast<std::uint32_t>(uq * a % p.value());
  if (2 * std::uint64_t{r} < p.value()) return {r, +1, r};
  return {r, -1, p.value() - r};
}

GaussTrace gauss_sign_product(std::int64_t q, OddPrime p) {
  const std::uint64_t uq = checked_q(q, p);
  GaussTrace t{p.value(), q, {}, 0, 0, Symbol(1)};
  t.rows.reserve(p.half());
  int sign = 1;
  for (std::uint32_t a = 1; a <= p.half(); ++a) {
    const std::uint64_t qa = uq * a;
    const std::uint32_t r = static_cast<std::uint32_t>(qa % p.value());
    const std::uint64_t floor_2qa = 2 * qa / p.value();
    const std::uint64_t floor_qa = qa / p.value();
    const bool upper = 2 * std::uint64_t{r} > p.value();
    t.rows.push_back({a, r, upper ? -1 : +1, upper ? p.value() - r : r, floor_2qa, floor_qa});
    t.M += floor_2qa;
    t.mu += floor_qa;
    if (upper) sign = -sign;
  }
  t.symbol = Symbol(sign);
  return t;
}

std::uint64_t m_sum(std::int64_t q, OddPrime p) {
  const std::uint64_t uq = checked_q(q, p);
  std::uint64_t sum = 0;
  for (std::uint64_t a = 1; a <= p.half(); ++a) sum += 2 * uq * a / p.value();
  return sum;
}

std::uint64_t mu_sum(std::int64_t q, OddPrime p) {
  const std::uint64_t uq = checked_q(q, p);
  std::uint64_t sum = 0;
  for (std::uint64_t a = 1; a <= p.half(); ++a) sum += uq * a / p.value();
  return sum;
}

int halfness_indicator(std::int64_t q, OddPrime p, std::uint32_t a) {
  const std::uint64_t uq = checked_q(q, p);
  check_in_half_system(a, p);
  const std::uint64_t qa = uq * a;
  return static_cast<int>(2 * qa / p.value() - 2 * (qa / p.value()));
}

std::uint64_t pairing_check(std::int64_t q, OddPrime p, std::uint32_t a) {
  const std::uint64_t uq = checked_q(q, p);
  check_in_half_system(a, p);
  if (4 * std::uint64_t{a} < p.value()) {
    throw std::domain_error("pairing_check: a=" + std::to_string(a) +
                            " is not a paired term (need a > p/4)");
  }
  // a = p/4 cannot occur for odd p, so a > p/4 here and p - 2a is an odd
  // element of A.
  const std::uint32_t partner = p.value() - 2 * a;
  return 2 * uq * a / p.value() + uq * partner / p.value();
}

std::int64_t hermite_sum(const Rational& x, std::int64_t n) {
  if (n < 1) throw std::domain_error("hermite_sum: n must be >= 1");
  std::int64_t sum = 0;
  for (std::int64_t k = 0; k < n; ++k) sum += rational_floor(x + Rational(k, n));
  return sum;
}

std::int64_t hermite_defect(const Rational& x, std::int64_t n) {
  if (n < 1) throw std::domain_error("hermite_defect: n must be >= 1");
  return hermite_sum(x, n) - rational_floor(Rational(n) * x);
}

std::uint64_t mu_via_lattice(OddPrime p, OddPrime q) {
  if (p == q) throw std::domain_error("mu_via_lattice: p and q must be distinct");
  std::uint64_t sum = 0;
  for (std::uint32_t a = 1; a <= p.half(); ++a) {
    const Rational xa(a, p.value());
    for (std::uint32_t b = 1; b <= q.half(); ++b) {
      sum += static_cast<std::uint64_t>(rational_floor(xa - Rational(b, q.value()) + Rational(1)));
    }
  }
  return sum;
}

std::pair<int, int> lattice_complement(OddPrime p, OddPrime q, std::uint32_t a, std::uint32_t b) {
  if (p == q) throw std::domain_error("lattice_complement: p and q must be distinct");
  check_in_half_system(a, p);
  check_in_half_system(b, q);
  const Rational xa(a, p.value());
  const Rational xb(b, q.value());
  const int t1 = static_cast<int>(rational_floor(xa - xb + Rational(1)));
  const int t2 = static_cast<int>(rational_floor(xb - xa + Rational(1)));
  if (t1 + t2 != 1 || t1 < 0 || t1 > 1) {
    throw ConsistencyError("lattice_complement: terms (" + std::to_string(t1) + ", " +
                           std::to_string(t2) + ") are not complementary for a=" +
                           std::to_string(a) + " b=" + std::to_string(b));
  }
  if (rational_floor(xa + xb) != 0) {
    throw ConsistencyError("lattice_complement: floor(a/p + b/q) != 0 for a=" + std::to_string(a) +
                           " b=" + std::to_string(b));
  }
  return {t1, t2};
}

ReciprocityReport reciprocity_exponent(OddPrime p, OddPrime q) {
  if (p == q) throw std::domain_error("reciprocity_exponent: p and q must be distinct");
  ReciprocityReport rep{
      p,
      q,
      mu_sum(q.value(), p),
      mu_sum(p.value(), q),
      gauss_sign_product(q.value(), p).symbol,
      gauss_sign_product(p.value(), q).symbol,
      static_cast<std::uint64_t>(p.half()) * q.half(),
  };
  if (rep.mu + rep.nu != rep.exponent) {
    throw ConsistencyError("reciprocity_exponent: mu + nu = " + std::to_string(rep.mu + rep.nu) +
                           " != ((p-1)/2)((q-1)/2) = " + std::to_string(rep.exponent) +
                           " for p=" + std::to_string(p.value()) + " q=" +
                           std::to_string(q.value()));
  }
  if (rep.sym_qp * rep.sym_pq != Symbol::minus_one_pow(rep.mu + rep.nu)) {
    throw ConsistencyError("reciprocity_exponent: (p/q)(q/p) != (-1)^(mu+nu) for p=" +
                           std::to_string(p.value()) + " q=" + std::to_string(q.value()));
  }
  return rep;
}

Symbol reciprocity_product(OddPrime p, OddPrime q) {
  const ReciprocityReport rep = reciprocity_exponent(p, q);
  return Symbol::minus_one_pow(rep.mu + rep.nu);
}

void validate_trace(const GaussTrace& trace) {
  const OddPrime p(trace.p);  // re-validates the modulus
  std::uint64_t uq = 0;
  try {
    uq = checked_q(trace.q, p);
  } catch (const std::domain_error& e) {
    throw ConsistencyError(trace_msg(trace, e.what()));
  }
  if (trace.rows.size() != p.half()) {
    throw ConsistencyError(trace_msg(trace, "expected " + std::to_string(p.half()) + " rows, got " +
                                                std::to_string(trace.rows.size())));
  }
  std::uint64_t sum_2qa = 0;
  std::uint64_t sum_qa = 0;
  int sign = 1;
  std::vector<bool> seen(p.half() + 1, false);
  for (std::size_t i = 0; i < trace.rows.size(); ++i) {
    const GaussTraceRow& row = trace.rows[i];
    const std::string at = "row a=" + std::to_string(row.a) + ": ";
    if (row.a != i + 1) throw ConsistencyError(trace_msg(trace, at + "rows not in increasing a"));
    const std::uint64_t qa = uq * row.a;
    if (row.r == 0 || row.r >= p.value() || row.r != qa % p.value()) {
      throw ConsistencyError(trace_msg(trace, at + "r != q*a mod p"));
    }
    if (row.floor_2qa != 2 * qa / p.value() || row.floor_qa != qa / p.value()) {
      throw ConsistencyError(trace_msg(trace, at + "floor terms do not match q*a"));
    }
    if (row.eps != 1 && row.eps != -1) {
      throw ConsistencyError(trace_msg(trace, at + "eps outside {-1, +1}"));
    }
    const std::uint32_t expected_ap = row.eps == 1 ? row.r : p.value() - row.r;
    if (row.a_prime != expected_ap || row.a_prime < 1 || row.a_prime > p.half()) {
      throw ConsistencyError(trace_msg(trace, at + "a_prime does not match eps and r"));
    }
    const std::uint64_t halfness = row.floor_2qa - 2 * row.floor_qa;
    const bool upper = 2 * std::uint64_t{row.r} > p.value();
    if (halfness > 1 || (halfness == 1) != upper) {
      throw ConsistencyError(trace_msg(trace, at + "floor_2qa - 2*floor_qa fails the case split"));
    }
    if ((row.eps == -1) != upper) {
      throw ConsistencyError(trace_msg(trace, at + "eps does not match r vs p/2"));
    }
    if (seen[row.a_prime]) {
      throw ConsistencyError(trace_msg(trace, at + "a_prime repeats; not a bijection onto A"));
    }
    seen[row.a_prime] = true;
    sum_2qa += row.floor_2qa;
    sum_qa += row.floor_qa;
    sign *= row.eps;
  }
  // every a_prime distinct and in range, and |rows| = |A|: a bijection
  if (trace.M != sum_2qa) throw ConsistencyError(trace_msg(trace, "M != sum of floor_2qa"));
  if (trace.mu != sum_qa) throw ConsistencyError(trace_msg(trace, "mu != sum of floor_qa"));
  if (trace.symbol != Symbol(sign)) {
    throw ConsistencyError(trace_msg(trace, "symbol != product of eps"));
  }
  if (trace.symbol != Symbol::minus_one_pow(trace.M)) {
    throw ConsistencyError(trace_msg(trace, "symbol != (-1)^M"));
  }
  if (trace.q % 2 != 0 && trace.symbol != Symbol::minus_one_pow(trace.mu)) {
    throw ConsistencyError(trace_msg(trace, "symbol != (-1)^mu with q odd"));
  }
}

}  // namespace qr
