#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qr/arith.hpp"

namespace qr {

enum class Lemma { Gauss, Parity, Pairing, Hermite, Lattice, Reciprocity };

struct Counterexample {
  std::uint32_t p;  // 0 for grid-based checks with no prime pair
  std::uint32_t q;
  std::string details;
};

// Outcome of one exhaustive check. failures == 0 exactly when
// first_counterexample is absent.
struct VerificationReport {
  std::string lemma;
  std::uint64_t range_bound;
  std::uint64_t pairs_checked;
  std::uint64_t failures;
  std::optional<Counterexample> first_counterexample;
  std::chrono::duration<double> wall_time;
};

std::optional<Lemma> lemma_from_name(std::string_view name);
std::string_view lemma_name(Lemma lemma);
std::vector<Lemma> all_lemmas();

// Runs one lemma check over every ordered pair of distinct odd primes below
// max_prime (the hermite check instead walks a fixed rational grid). The
// sweep never stops early: failure counts and the first counterexample are
// independent of the worker count.
VerificationReport verify_lemma(Lemma lemma, std::uint32_t max_prime, unsigned workers = 1);

std::vector<VerificationReport> verify_all(std::uint32_t max_prime, unsigned workers = 1);

namespace detail {

// nullopt on success, failure details otherwise. Exceptions thrown by a
// check count as failures with the exception text as details.
using PairCheck = std::function<std::optional<std::string>(OddPrime p, OddPrime q)>;

VerificationReport sweep_pairs(std::string lemma, std::uint32_t max_prime, unsigned workers,
                               const PairCheck& check);

}  // namespace detail

}  // namespace qr
