#include "qr/verify.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "qr/lemmas.hpp"
#include "qr/symbols.hpp"
#include "qr/trace_io.hpp"

namespace qr {

namespace {

using Clock = std::chrono::steady_clock;

// Grid for the hermite check: every reduced u/v with u <= 300, v <= 30,
// against every 1 <= n <= 25. Dense around the period boundaries k/n at
// desk scale.
constexpr std::uint32_t kHermiteMaxNum = 300;
constexpr std::uint32_t kHermiteMaxDen = 30;
constexpr std::int64_t kHermiteMaxN = 25;

std::vector<std::uint32_t> odd_primes_below(std::uint32_t bound) {
  std::vector<std::uint32_t> odd = primes_below(bound);
  std::erase(odd, 2u);
  return odd;
}

std::optional<std::string> check_gauss(OddPrime p, OddPrime q) {
  const GaussTrace trace = gauss_sign_product(q.value(), p);
  validate_trace(trace);
  const Symbol via_m = Symbol::minus_one_pow(m_sum(q.value(), p));
  const Symbol via_euler = legendre_euler(q.value(), p);
  if (trace.symbol != via_m || trace.symbol != via_euler) {
    return "sign product " + std::to_string(trace.symbol.value()) + ", (-1)^M " +
           std::to_string(via_m.value()) + ", euler " + std::to_string(via_euler.value()) +
           "\ntrace: " + trace_to_json(trace).dump();
  }
  return std::nullopt;
}

std::optional<std::string> check_parity(OddPrime p, OddPrime q) {
  const std::uint64_t m = m_sum(q.value(), p);
  const std::uint64_t mu = mu_sum(q.value(), p);
  if (m % 2 != mu % 2) {
    return "M=" + std::to_string(m) + " and mu=" + std::to_string(mu) + " differ mod 2";
  }
  return std::nullopt;
}

std::optional<std::string> check_pairing(OddPrime p, OddPrime q) {
  const std::uint64_t expected = static_cast<std::uint64_t>(q.value()) - 1;
  for (std::uint32_t a = p.value() / 4 + 1; a <= p.half(); ++a) {
    const std::uint64_t got = pairing_check(q.value(), p, a);
    if (got != expected) {
      return "pairing_check(a=" + std::to_string(a) + ") = " + std::to_string(got) + " != q-1 = " +
             std::to_string(expected);
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_lattice(OddPrime p, OddPrime q) {
  const std::uint64_t mu_lattice = mu_via_lattice(p, q);
  const std::uint64_t mu_direct = mu_sum(q.value(), p);
  if (mu_lattice != mu_direct) {
    return "mu_via_lattice = " + std::to_string(mu_lattice) + " != mu_sum = " +
           std::to_string(mu_direct);
  }
  std::uint64_t sum_t1 = 0;
  std::uint64_t sum_t2 = 0;
  for (std::uint32_t a = 1; a <= p.half(); ++a) {
    for (std::uint32_t b = 1; b <= q.half(); ++b) {
      const auto [t1, t2] = lattice_complement(p, q, a, b);  // self-checks each cell
      sum_t1 += static_cast<std::uint64_t>(t1);
      sum_t2 += static_cast<std::uint64_t>(t2);
    }
  }
  const std::uint64_t exponent = static_cast<std::uint64_t>(p.half()) * q.half();
  if (sum_t1 != mu_lattice || sum_t1 + sum_t2 != exponent) {
    return "lattice sums (" + std::to_string(sum_t1) + ", " + std::to_string(sum_t2) +
           ") inconsistent with mu=" + std::to_string(mu_lattice) + ", exponent=" +
           std::to_string(exponent);
  }
  return std::nullopt;
}

std::optional<std::string> check_reciprocity(OddPrime p, OddPrime q) {
  const std::uint64_t mu = mu_sum(q.value(), p);
  const std::uint64_t nu = mu_sum(p.value(), q);
  const std::uint64_t exponent = static_cast<std::uint64_t>(p.half()) * q.half();
  const GaussTrace trace_qp = gauss_sign_product(q.value(), p);
  const GaussTrace trace_pq = gauss_sign_product(p.value(), q);
  const auto with_traces = [&](std::string what) {
    return what + "\ntrace (q/p): " + trace_to_json(trace_qp).dump() + "\ntrace (p/q): " +
           trace_to_json(trace_pq).dump();
  };
  if (mu + nu != exponent) {
    return with_traces("mu+nu = " + std::to_string(mu + nu) + " != exponent = " +
                       std::to_string(exponent));
  }
  if (trace_qp.symbol * trace_pq.symbol != Symbol::minus_one_pow(mu + nu)) {
    return with_traces("(q/p)(p/q) = " +
                       std::to_string((trace_qp.symbol * trace_pq.symbol).value()) +
                       " != (-1)^(mu+nu)");
  }
  if (reciprocity_product(p, q) != trace_qp.symbol * trace_pq.symbol) {
    return with_traces("reciprocity_product disagrees with the sign product");
  }
  return std::nullopt;
}

VerificationReport run_hermite_grid() {
  const auto start = Clock::now();
  VerificationReport report{std::string(lemma_name(Lemma::Hermite)), kHermiteMaxNum, 0, 0,
                            std::nullopt, {}};
  for (std::uint32_t v = 1; v <= kHermiteMaxDen; ++v) {
    for (std::uint32_t u = 0; u <= kHermiteMaxNum; ++u) {
      if (std::gcd(u, v) != 1) continue;
      const Rational x(u, v);
      for (std::int64_t n = 1; n <= kHermiteMaxN; ++n) {
        ++report.pairs_checked;
        const std::int64_t defect = hermite_defect(x, n);
        const std::int64_t shifted = hermite_defect(x + Rational(1, n), n);
        const bool base_interval = x < Rational(1, n);
        std::string problem;
        if (defect != 0) {
          problem = base_interval ? "f(x) != 0 on [0, 1/n), f = " + std::to_string(defect)
                                  : "f(x) = " + std::to_string(defect);
        } else if (shifted != defect) {
          problem = "f(x + 1/n) = " + std::to_string(shifted) + " != f(x)";
        }
        if (!problem.empty()) {
          ++report.failures;
          if (!report.first_counterexample) {
            report.first_counterexample = Counterexample{
                0, 0,
                "x=" + std::to_string(u) + "/" + std::to_string(v) + " n=" + std::to_string(n) +
                    ": " + problem};
          }
        }
      }
    }
  }
  report.wall_time = Clock::now() - start;
  return report;
}

}  // namespace

std::optional<Lemma> lemma_from_name(std::string_view name) {
  if (name == "gauss") return Lemma::Gauss;
  if (name == "parity") return Lemma::Parity;
  if (name == "pairing") return Lemma::Pairing;
  if (name == "hermite") return Lemma::Hermite;
  if (name == "lattice") return Lemma::Lattice;
  if (name == "reciprocity") return Lemma::Reciprocity;
  return std::nullopt;
}

std::string_view lemma_name(Lemma lemma) {
  switch (lemma) {
    case Lemma::Gauss: return "gauss";
    case Lemma::Parity: return "parity";
    case Lemma::Pairing: return "pairing";
    case Lemma::Hermite: return "hermite";
    case Lemma::Lattice: return "lattice";
    case Lemma::Reciprocity: return "reciprocity";
  }
  throw std::logic_error("lemma_name: unknown lemma");
}

std::vector<Lemma> all_lemmas() {
  return {Lemma::Gauss, Lemma::Parity, Lemma::Pairing, Lemma::Hermite, Lemma::Lattice,
          Lemma::Reciprocity};
}

namespace detail {

VerificationReport sweep_pairs(std::string lemma, std::uint32_t max_prime, unsigned workers,
                               const PairCheck& check) {
  const auto start = Clock::now();
  const std::vector<std::uint32_t> odd = odd_primes_below(max_prime);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  pairs.reserve(odd.size() * odd.size());
  for (const std::uint32_t p : odd) {
    for (const std::uint32_t q : odd) {
      if (p != q) pairs.emplace_back(p, q);
    }
  }

  struct SliceResult {
    std::uint64_t failures = 0;
    std::size_t first_index = 0;
    std::optional<Counterexample> first;
  };

  const auto run_slice = [&](std::size_t lo, std::size_t hi, SliceResult& out) {
    for (std::size_t i = lo; i < hi; ++i) {
      const OddPrime p(pairs[i].first);
      const OddPrime q(pairs[i].second);
      std::optional<std::string> failure;
      try {
        failure = check(p, q);
      } catch (const std::exception& e) {
        failure = std::string("exception: ") + e.what();
      }
      if (failure) {
        ++out.failures;
        if (!out.first) {
          out.first_index = i;
          out.first = Counterexample{p.value(), q.value(), std::move(*failure)};
        }
      }
    }
  };

  const std::size_t n = pairs.size();
  const std::size_t nworkers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(n, 1));
  std::vector<SliceResult> results(nworkers);
  if (nworkers == 1) {
    run_slice(0, n, results[0]);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(nworkers);
    for (std::size_t w = 0; w < nworkers; ++w) {
      const std::size_t lo = n * w / nworkers;
      const std::size_t hi = n * (w + 1) / nworkers;
      threads.emplace_back(run_slice, lo, hi, std::ref(results[w]));
    }
    for (std::thread& t : threads) t.join();
  }

  VerificationReport report{std::move(lemma), max_prime, n, 0, std::nullopt, {}};
  std::size_t best_index = n;
  for (const SliceResult& r : results) {
    report.failures += r.failures;
    if (r.first && r.first_index < best_index) {
      best_index = r.first_index;
      report.first_counterexample = r.first;
    }
  }
  report.wall_time = Clock::now() - start;
  return report;
}

}  // namespace detail

VerificationReport verify_lemma(Lemma lemma, std::uint32_t max_prime, unsigned workers) {
  switch (lemma) {
    case Lemma::Gauss:
      return detail::sweep_pairs("gauss", max_prime, workers, check_gauss);
    case Lemma::Parity:
      return detail::sweep_pairs("parity", max_prime, workers, check_parity);
    case Lemma::Pairing:
      return detail::sweep_pairs("pairing", max_prime, workers, check_pairing);
    case Lemma::Hermite:
      return run_hermite_grid();
    case Lemma::Lattice:
      return detail::sweep_pairs("lattice", max_prime, workers, check_lattice);
    case Lemma::Reciprocity:
      return detail::sweep_pairs("reciprocity", max_prime, workers, check_reciprocity);
  }
  throw std::logic_error("verify_lemma: unknown lemma");
}

std::vector<VerificationReport> verify_all(std::uint32_t max_prime, unsigned workers) {
  std::vector<VerificationReport> reports;
  for (const Lemma lemma : all_lemmas()) {
    reports.push_back(verify_lemma(lemma, max_prime, workers));
  }
  return reports;
}

}  // namespace qr
