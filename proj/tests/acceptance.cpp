#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "qr/bench.hpp"
#include "qr/symbols.hpp"
#include "qr/trace_io.hpp"
#include "qr/verify.hpp"
#include "oracles.hpp"
#include "subprocess.hpp"

using qr::GaussVariant;
using qr::OddPrime;
using qr::Rational;
using qr::Symbol;

namespace {

const std::string kTool = "\"" QRTOOL_PATH "\"";

void report_line(int criterion, bool pass, const std::string& text) {
  std::printf("criterion %d [%s] %s\n", criterion, pass ? "PASS" : "FAIL", text.c_str());
  std::fflush(stdout);
}

std::vector<std::uint32_t> odd_primes_below(std::uint32_t bound) {
  auto primes = qr::primes_below(bound);
  std::erase(primes, 2u);
  return primes;
}

}  // namespace

TEST_CASE("criterion 1: five symbol routes agree") {
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::string first;
  for (const std::uint32_t p : odd_primes_below(2000)) {
    const OddPrime prime(p);
    for (std::uint64_t a = 1; a < p; ++a) {
      const int euler = qr::legendre_euler(a, prime).value();
      const int gauss = qr::legendre_gauss(a, prime, GaussVariant::SignProduct).value();
      const int m = qr::legendre_gauss(a, prime, GaussVariant::MSum).value();
      const int mu = qr::legendre_gauss(a, prime, GaussVariant::MuSum).value();
      const int jac = qr::jacobi(static_cast<std::int64_t>(a), p).value();
      ++checks;
      if (euler != gauss || euler != m || euler != mu || euler != jac) {
        ++failures;
        if (first.empty()) {
          first = "a=" + std::to_string(a) + " p=" + std::to_string(p) + " routes " +
                  std::to_string(euler) + "/" + std::to_string(gauss) + "/" + std::to_string(m) +
                  "/" + std::to_string(mu) + "/" + std::to_string(jac);
        }
      }
    }
  }
  report_line(1, failures == 0,
              "euler, gauss-sign, m-sum, mu-sum, jacobi identical on all odd p < 2000, "
              "1 <= a < p (" +
                  std::to_string(checks) + " points)");
  INFO(first);
  CHECK(failures == 0);
}

TEST_CASE("criterion 2: sign product = (-1)^M = Euler criterion") {
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  for (const std::uint32_t p : odd_primes_below(2000)) {
    const OddPrime prime(p);
    for (std::uint64_t a = 1; a < p; ++a) {
      const Symbol product = qr::gauss_sign_product(static_cast<std::int64_t>(a), prime).symbol;
      const Symbol via_m = Symbol::minus_one_pow(qr::m_sum(static_cast<std::int64_t>(a), prime));
      const Symbol euler = qr::legendre_euler(a, prime);
      ++checks;
      if (product != via_m || product != euler) ++failures;
    }
  }
  report_line(2, failures == 0,
              "sign product, (-1)^M and Euler agree on the same range (" + std::to_string(checks) +
                  " points)");
  CHECK(failures == 0);
}

TEST_CASE("criterion 3: M = mu mod 2, and paired floor terms sum to q-1") {
  std::uint64_t parity_checks = 0;
  std::uint64_t pairing_checks = 0;
  std::uint64_t failures = 0;
  for (const std::uint32_t p : odd_primes_below(2000)) {
    const OddPrime prime(p);
    // odd coprime numerators: the parity transform presumes q odd
    for (std::uint64_t a = 1; a < p; a += 2) {
      const std::int64_t q = static_cast<std::int64_t>(a);
      if (qr::m_sum(q, prime) % 2 != qr::mu_sum(q, prime) % 2) ++failures;
      ++parity_checks;
      for (std::uint32_t idx = p / 4 + 1; idx <= prime.half(); ++idx) {
        if (qr::pairing_check(q, prime, idx) != a - 1) ++failures;
        ++pairing_checks;
      }
    }
  }
  report_line(3, failures == 0,
              "parity on " + std::to_string(parity_checks) + " (q, p) points, pairing identity on " +
                  std::to_string(pairing_checks) + " terms");
  CHECK(failures == 0);
}

TEST_CASE("criterion 4: Hermite defect vanishes on the rational grid") {
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  for (std::uint32_t v = 1; v <= 30; ++v) {
    for (std::uint32_t u = 0; u <= 300; ++u) {
      if (std::gcd(u, v) != 1) continue;
      const Rational x(u, v);
      for (std::int64_t n = 1; n <= 25; ++n) {
        ++checks;
        const std::int64_t defect = qr::hermite_defect(x, n);
        const std::int64_t shifted = qr::hermite_defect(x + Rational(1, n), n);
        if (defect != 0) ++failures;                      // identity
        if (shifted != defect) ++failures;                // period 1/n
        if (x < Rational(1, n) && defect != 0) ++failures;  // zero on the base interval
      }
    }
  }
  report_line(4, failures == 0,
              "f = 0, f(x + 1/n) = f(x), f = 0 on [0, 1/n) across " + std::to_string(checks) +
                  " grid points (u <= 300, v <= 30, n <= 25)");
  CHECK(checks == 137950);
  CHECK(failures == 0);
}

TEST_CASE("criterion 5: exponent identity, sign law, and the lattice route") {
  std::uint64_t pair_checks = 0;
  std::uint64_t lattice_checks = 0;
  std::uint64_t failures = 0;
  const auto primes = odd_primes_below(2000);
  for (const std::uint32_t pv : primes) {
    for (const std::uint32_t qv : primes) {
      if (pv == qv) continue;
      const OddPrime p(pv);
      const OddPrime q(qv);
      ++pair_checks;
      try {
        const qr::ReciprocityReport rep = qr::reciprocity_exponent(p, q);
        const Symbol euler_product = qr::legendre_euler(qv, p) * qr::legendre_euler(pv, q);
        const bool ok = rep.mu + rep.nu == rep.exponent &&
                        rep.exponent == std::uint64_t{p.half()} * q.half() &&
                        rep.sym_qp * rep.sym_pq == Symbol::minus_one_pow(rep.mu + rep.nu) &&
                        euler_product == Symbol::minus_one_pow(rep.exponent) &&
                        qr::reciprocity_product(p, q) == rep.sym_qp * rep.sym_pq;
        if (!ok) ++failures;
      } catch (const qr::ConsistencyError&) {
        ++failures;
      }
      if (pv < 200 && qv < 200) {
        ++lattice_checks;
        if (qr::mu_via_lattice(p, q) != qr::mu_sum(qv, p)) ++failures;
      }
    }
  }
  report_line(5, failures == 0,
              "mu+nu = ((p-1)/2)((q-1)/2) and (p/q)(q/p) = (-1)^(mu+nu) on " +
                  std::to_string(pair_checks) + " ordered pairs below 2000; lattice route on " +
                  std::to_string(lattice_checks) + " pairs below 200");
  CHECK(pair_checks == 302 * 301);
  CHECK(failures == 0);
}

TEST_CASE("criterion 6: lattice complementarity over full half-system grids") {
  std::uint64_t cells = 0;
  std::uint64_t failures = 0;
  const auto primes = odd_primes_below(200);
  for (const std::uint32_t pv : primes) {
    for (const std::uint32_t qv : primes) {
      if (pv == qv) continue;
      const OddPrime p(pv);
      const OddPrime q(qv);
      for (std::uint32_t a = 1; a <= p.half(); ++a) {
        for (std::uint32_t b = 1; b <= q.half(); ++b) {
          ++cells;
          try {
            // lattice_complement also checks floor(a/p + b/q) = 0 internally
            const auto [t1, t2] = qr::lattice_complement(p, q, a, b);
            if (t1 + t2 != 1) ++failures;
          } catch (const qr::ConsistencyError&) {
            ++failures;
          }
        }
      }
    }
  }
  report_line(6, failures == 0,
              "floor(a/p - b/q + 1) + floor(b/q - a/p + 1) = 1 and floor(a/p + b/q) = 0 on " +
                  std::to_string(cells) + " lattice cells (p, q < 200)");
  CHECK(failures == 0);
}

TEST_CASE("criterion 7: jacobi equals the Legendre-product oracle") {
  const auto spf = oracles::spf_table(100000);
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::int64_t> adist(-1000000000, 1000000000);
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  for (std::uint32_t n = 1; n < 100000; n += 2) {
    for (int i = 0; i < 100; ++i) {
      const std::int64_t a = adist(rng);
      ++checks;
      if (qr::jacobi(a, n) != oracles::factored_jacobi(a, n, spf)) ++failures;
    }
  }
  report_line(7, failures == 0,
              "jacobi matches the factored Legendre product for all odd n < 10^5, 100 random "
              "numerators each (" +
                  std::to_string(checks) + " evaluations)");
  CHECK(failures == 0);
}

TEST_CASE("criterion 8: 63-bit benchmark completes; ratio recorded") {
  const auto result = testutil::run_command(kTool + " bench --bits 63 --samples 500");
  REQUIRE(result.exit_code == 0);
  double jacobi_ns = 0;
  double euler_ns = 0;
  double speedup = 0;
  for (const auto& prefix :
       std::vector<std::pair<const char*, double*>>{{"jacobi", &jacobi_ns},
                                                    {"euler", &euler_ns},
                                                    {"speedup", &speedup}}) {
    const auto pos = result.output.find(prefix.first);
    REQUIRE(pos != std::string::npos);
    *prefix.second = std::stod(result.output.substr(pos + std::string(prefix.first).size()));
  }
  const bool pass = jacobi_ns > 0 && euler_ns > 0 && speedup > 1.0;
  report_line(8, pass,
              "bench --bits 63 ran: jacobi " + std::to_string(jacobi_ns) + " ns/op, euler " +
                  std::to_string(euler_ns) + " ns/op, measured speedup " +
                  std::to_string(speedup) + "x (soft expectation >= 5x)");
  CHECK(jacobi_ns > 0.0);
  CHECK(euler_ns > 0.0);
  CHECK(speedup > 1.0);
}

TEST_CASE("criterion 9: CLI trace round-trip, exit codes, verify under 10 s") {
  bool pass = true;

  // trace JSON round-trip through the real binary
  const auto trace_run = testutil::run_command(kTool + " trace 6 11 --format json");
  pass = pass && trace_run.exit_code == 0;
  REQUIRE(trace_run.exit_code == 0);
  const auto j = nlohmann::ordered_json::parse(trace_run.output);
  const qr::GaussTrace parsed = qr::trace_from_json(j);
  qr::validate_trace(parsed);
  std::uint64_t m = 0;
  std::uint64_t mu = 0;
  int sign = 1;
  for (const auto& row : parsed.rows) {
    m += row.floor_2qa;
    mu += row.floor_qa;
    sign *= row.eps;
  }
  const bool round_trip_ok = m == j["M"].get<std::uint64_t>() &&
                             mu == j["mu"].get<std::uint64_t>() &&
                             sign == j["symbol"].get<int>();
  pass = pass && round_trip_ok;
  CHECK(round_trip_ok);

  // exit-code contract
  const std::vector<std::pair<std::string, int>> exit_cases = {
      {"symbol 3 5", 0},
      {"symbol 2 15 --method jacobi", 0},
      {"symbol 4 15 --method euler 2>/dev/null", 2},
      {"trace 10 5 2>/dev/null", 2},
      {"hermite 7/4 2", 0},
      {"hermite 1/0 2 2>/dev/null", 2},
      {"verify --max-prime 4 2>/dev/null", 2},
      {"bench --bits 12 2>/dev/null", 2},
  };
  for (const auto& [args, expected] : exit_cases) {
    const int got = testutil::run_command(kTool + " " + args).exit_code;
    CAPTURE(args);
    CHECK(got == expected);
    pass = pass && got == expected;
  }

  // full verification sweep at 100, timed
  const auto start = std::chrono::steady_clock::now();
  const auto verify_run = testutil::run_command(kTool + " verify --max-prime 100 --lemma all");
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool verify_ok = verify_run.exit_code == 0 && seconds < 10.0;
  pass = pass && verify_ok;
  CHECK(verify_run.exit_code == 0);
  CHECK(seconds < 10.0);

  report_line(9, pass,
              "trace round-trip, exit codes 0/2, and verify --max-prime 100 --lemma all in " +
                  std::to_string(seconds) + " s");
}
