#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qr/arith.hpp"

namespace qr {

// Half-system decomposition of q*a mod p: the residue r in (0, p) written
// as r = eps * a_prime mod p with eps = +-1 and a_prime in A = {1..(p-1)/2}.
struct HalfResidue {
  std::uint32_t r;
  int eps;
  std::uint32_t a_prime;
};

// One row of a Gauss trace. floor_2qa and floor_qa come from direct integer
// division, independent of r; that floor_2qa - 2*floor_qa lands in {0, 1}
// and flags r > p/2 is a checked theorem, never a construction shortcut.
struct GaussTraceRow {
  std::uint32_t a;
  std::uint32_t r;
  int eps;
  std::uint32_t a_prime;
  std::uint64_t floor_2qa;
  std::uint64_t floor_qa;
};

// Full Gauss-Lemma evaluation of (q/p): one row per a in A in increasing
// order, the floor sums M and mu, and the sign product.
//
// symbol = prod(eps) = (-1)^M holds for every positive q coprime to p.
// The extra equality symbol = (-1)^mu needs q odd (Lemma 2's hypothesis);
// validate_trace checks it exactly under that condition.
struct GaussTrace {
  std::uint32_t p;
  std::int64_t q;
  std::vector<GaussTraceRow> rows;
  std::uint64_t M;
  std::uint64_t mu;
  Symbol symbol;
};

// Both floor-sum exponents and both symbols for a distinct odd prime pair,
// plus the reciprocity exponent ((p-1)/2)*((q-1)/2).
struct ReciprocityReport {
  OddPrime p;
  OddPrime q;
  std::uint64_t mu;   // sum over A of floor(q*a/p)
  std::uint64_t nu;   // sum over B of floor(p*b/q)
  Symbol sym_qp;      // (q/p)
  Symbol sym_pq;      // (p/q)
  std::uint64_t exponent;
};

// Lemma operations. All take q >= 1 coprime to p; q divisible by p is a
// domain error (the half-system decomposition has no sign for r = 0), and
// so are q <= 0 and q*p >= 2^63 (the floor kernels stay in uint64).

HalfResidue half_residue(std::int64_t q, OddPrime p, std::uint32_t a);

GaussTrace gauss_sign_product(std::int64_t q, OddPrime p);

// sum over a in A of floor(2*q*a / p)
std::uint64_t m_sum(std::int64_t q, OddPrime p);

// sum over a in A of floor(q*a / p)
std::uint64_t mu_sum(std::int64_t q, OddPrime p);

// floor(2*q*a/p) - 2*floor(q*a/p), always 0 or 1; equals 1 exactly when
// q*a mod p exceeds p/2.
int halfness_indicator(std::int64_t q, OddPrime p, std::uint32_t a);

// For a in A with a > p/4: floor(2*q*a/p) + floor(q*(p-2*a)/p).
// Equals q - 1 exactly; a <= p/4 is a domain error (not a paired term).
std::uint64_t pairing_check(std::int64_t q, OddPrime p, std::uint32_t a);

// Hermite's identity, left-hand side: sum_{k=0}^{n-1} floor(x + k/n),
// term by term with exact rational floors. Equals floor(n*x) for every
// rational x; callers wanting only the stated x >= 0 domain enforce it
// themselves.
std::int64_t hermite_sum(const Rational& x, std::int64_t n);

// f(x) = hermite_sum(x, n) - floor(n*x). Identically zero; kept separate
// so the two proof facts (f has period 1/n, f vanishes on [0, 1/n)) are
// testable as stated.
std::int64_t hermite_defect(const Rational& x, std::int64_t n);

// mu recomputed as the lattice double sum
// sum_{a in A} sum_{b in B} floor(a/p - b/q + 1)
// with exact rational arithmetic. Equals mu_sum(q, p); p == q is a domain
// error (the strict-inequality step of the derivation fails).
std::uint64_t mu_via_lattice(OddPrime p, OddPrime q);

// (floor(a/p - b/q + 1), floor(b/q - a/p + 1)) for a in A, b in B.
// Exactly one of the two is 1 and the other 0; floor(a/p + b/q) = 0 is
// checked alongside. Violations raise ConsistencyError.
std::pair<int, int> lattice_complement(OddPrime p, OddPrime q, std::uint32_t a, std::uint32_t b);

// mu, nu, both symbols and the exponent for a distinct prime pair. The two
// report invariants (mu + nu = exponent, sym_qp*sym_pq = (-1)^(mu+nu)) are
// asserted before returning.
ReciprocityReport reciprocity_exponent(OddPrime p, OddPrime q);

// (-1)^(mu + nu). Equals sym_qp * sym_pq and (-1)^(((p-1)/2)((q-1)/2)).
Symbol reciprocity_product(OddPrime p, OddPrime q);

// Checks every structural invariant of a trace (row count, residues, sign
// decomposition, halfness case split, bijection of a_prime onto A, sums,
// sign product, and for odd q the mu parity identity). Throws
// ConsistencyError describing the first violation.
void validate_trace(const GaussTrace& trace);

}  // namespace qr
