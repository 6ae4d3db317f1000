#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "qr/arith.hpp"
#include "qr/lemmas.hpp"

namespace qr {

enum class GaussVariant { SignProduct, MSum, MuSum };

// Euler-criterion kernel: (a/p) from a^((p-1)/2) mod p, for any odd prime
// p < 2^63. Primality of p is the caller's contract; a residue outside
// {0, 1, p-1} proves p composite and raises ConsistencyError. This is the
// untyped path the benchmark times on 63-bit primes.
Symbol euler_criterion(std::uint64_t a, std::uint64_t p);

// (a/p) via the Euler criterion, a reduced mod p internally.
Symbol legendre_euler(std::uint64_t a, OddPrime p);

// (a/p) via Gauss's Lemma: the sign product, (-1)^M, or (-1)^mu. Returns 0
// when p divides a without invoking the lemma. The mu-sum variant shifts an
// even residue to the odd representative a+p first; the mu parity identity
// holds for odd numerators only.
Symbol legendre_gauss(std::uint64_t a, OddPrime p, GaussVariant variant);

// Jacobi symbol (a/n) for odd n >= 1, by iterative binary reduction.
// Accepts any signed a (reduced mod n first); 0 when gcd(a, n) > 1 and 1
// for n = 1. Even or nonpositive n is a domain error.
Symbol jacobi(std::int64_t a, std::int64_t n);

// Evaluates all four Legendre routes plus jacobi and returns the common
// value. Disagreement raises ConsistencyError naming every route; that
// error firing means a broken build and must never happen.
Symbol symbol_consensus(std::uint64_t a, OddPrime p);

namespace detail {

using NamedSymbol = std::pair<const char*, Symbol>;

// Consensus core, shared with tests so the failure path is exercisable.
Symbol consensus_of(std::uint64_t a, std::uint32_t p, const std::array<NamedSymbol, 5>& routes);

}  // namespace detail

}  // namespace qr
