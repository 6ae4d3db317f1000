#include <charconv>
#include <cinttypes>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "qr/bench.hpp"
#include "qr/lemmas.hpp"
#include "qr/symbols.hpp"
#include "qr/trace_io.hpp"
#include "qr/verify.hpp"

namespace {

// Exit codes: 0 success/verified, 1 mathematical inconsistency or
// counterexample, 2 usage or domain error.

std::uint64_t reduce_mod(std::int64_t a, std::uint32_t p) {
  std::int64_t r = a % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

int run_symbol(std::int64_t a, std::int64_t n, const std::string& method) {
  int value = 0;
  if (method == "jacobi") {
    value = qr::jacobi(a, n).value();
  } else {
    const qr::OddPrime p(n < 0 ? 0 : static_cast<std::uint64_t>(n));
    const std::uint64_t ar = reduce_mod(a, p.value());
    if (method == "euler") {
      value = qr::legendre_euler(ar, p).value();
    } else if (method == "gauss-sign") {
      value = qr::legendre_gauss(ar, p, qr::GaussVariant::SignProduct).value();
    } else if (method == "m-sum") {
      value = qr::legendre_gauss(ar, p, qr::GaussVariant::MSum).value();
    } else if (method == "mu-sum") {
      value = qr::legendre_gauss(ar, p, qr::GaussVariant::MuSum).value();
    } else {
      value = qr::symbol_consensus(ar, p).value();
    }
  }
  std::printf("%d\n", value);
  return 0;
}

int run_trace(std::int64_t q, std::int64_t p, const std::string& format) {
  const qr::OddPrime prime(p < 0 ? 0 : static_cast<std::uint64_t>(p));
  const qr::GaussTrace trace = qr::gauss_sign_product(q, prime);
  if (format == "tsv") {
    std::fputs(qr::trace_to_tsv(trace).c_str(), stdout);
  } else {
    std::printf("%s\n", qr::trace_to_json(trace).dump(2).c_str());
  }
  return 0;
}

int run_verify(std::uint32_t max_prime, const std::string& lemma, unsigned workers) {
  if (max_prime < 5) {
    std::fprintf(stderr, "error: --max-prime must be at least 5\n");
    return 2;
  }
  std::vector<qr::VerificationReport> reports;
  if (lemma == "all") {
    reports = qr::verify_all(max_prime, workers);
  } else {
    const auto parsed = qr::lemma_from_name(lemma);
    if (!parsed) {
      std::fprintf(stderr, "error: unknown lemma '%s'\n", lemma.c_str());
      return 2;
    }
    reports.push_back(qr::verify_lemma(*parsed, max_prime, workers));
  }
  bool failed = false;
  for (const qr::VerificationReport& report : reports) {
    std::printf("%-12s range=%" PRIu64 " checked=%" PRIu64 " failures=%" PRIu64 " time=%.3fs\n",
                report.lemma.c_str(), report.range_bound, report.pairs_checked, report.failures,
                report.wall_time.count());
    if (report.failures > 0) {
      failed = true;
      const qr::Counterexample& ce = *report.first_counterexample;
      std::printf("counterexample p=%u q=%u: %s\n", ce.p, ce.q, ce.details.c_str());
    }
  }
  return failed ? 1 : 0;
}

int run_hermite(const std::string& x_text, std::int64_t n) {
  std::int64_t u = 0;
  std::int64_t v = 1;
  const auto slash = x_text.find('/');
  const char* begin = x_text.data();
  const char* end = x_text.data() + (slash == std::string::npos ? x_text.size() : slash);
  auto res = std::from_chars(begin, end, u);
  bool ok = res.ec == std::errc{} && res.ptr == end;
  if (ok && slash != std::string::npos) {
    const char* vbegin = x_text.data() + slash + 1;
    const char* vend = x_text.data() + x_text.size();
    res = std::from_chars(vbegin, vend, v);
    ok = res.ec == std::errc{} && res.ptr == vend;
  }
  if (!ok) {
    std::fprintf(stderr, "error: x must be a fraction u/v, got '%s'\n", x_text.c_str());
    return 2;
  }
  if (v <= 0 || u < 0 || n < 1) {
    std::fprintf(stderr, "error: need u >= 0, v > 0, n >= 1\n");
    return 2;
  }
  const qr::Rational x(u, v);
  const std::int64_t lhs = qr::hermite_sum(x, n);
  const std::int64_t rhs = qr::rational_floor(qr::Rational(n) * x);
  const bool equal = lhs == rhs;
  std::printf("%" PRId64 " %" PRId64 " %s\n", lhs, rhs, equal ? "OK" : "FAIL");
  return equal ? 0 : 1;
}

int run_bench_cmd(int bits, std::uint64_t samples, std::uint64_t seed) {
  const qr::BenchResult r = qr::run_bench(bits, samples, seed);
  std::printf("bits=%d samples=%" PRIu64 " seed=0x%" PRIx64 "\n", r.bits, r.samples, r.seed);
  std::printf("method   ns/op\n");
  std::printf("jacobi   %.2f\n", r.jacobi_ns);
  std::printf("euler    %.2f\n", r.euler_ns);
  std::printf("speedup  %.2fx\n", r.speedup);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Legendre/Jacobi symbols, Gauss-Lemma traces, reciprocity checks"};
  app.require_subcommand(1);

  std::int64_t sym_a = 0;
  std::int64_t sym_n = 0;
  std::string sym_method = "consensus";
  CLI::App* symbol = app.add_subcommand("symbol", "Compute a Legendre/Jacobi symbol");
  symbol->add_option("a", sym_a, "numerator")->required();
  symbol->add_option("n", sym_n, "modulus")->required();
  symbol->add_option("--method", sym_method, "computation route")
      ->check(CLI::IsMember({"euler", "gauss-sign", "m-sum", "mu-sum", "jacobi", "consensus"}));

  std::int64_t trace_q = 0;
  std::int64_t trace_p = 0;
  std::string trace_format = "json";
  CLI::App* trace = app.add_subcommand("trace", "Emit the full Gauss-Lemma table for (q/p)");
  trace->add_option("q", trace_q, "numerator, coprime to p")->required();
  trace->add_option("p", trace_p, "odd prime modulus")->required();
  trace->add_option("--format", trace_format)->check(CLI::IsMember({"json", "tsv"}));

  std::uint32_t verify_bound = 0;
  std::string verify_lemma = "all";
  unsigned verify_workers = 1;
  CLI::App* verify = app.add_subcommand("verify", "Exhaustively check the lemma identities");
  verify->add_option("--max-prime", verify_bound, "sweep odd prime pairs below this bound")
      ->required();
  verify->add_option("--lemma", verify_lemma)
      ->check(CLI::IsMember(
          {"gauss", "parity", "pairing", "hermite", "lattice", "reciprocity", "all"}));
  verify->add_option("--workers", verify_workers)->check(CLI::Range(1u, 1024u));

  std::string hermite_x;
  std::int64_t hermite_n = 0;
  CLI::App* hermite = app.add_subcommand("hermite", "Check the floor identity at x = u/v");
  hermite->add_option("x", hermite_x, "rational point, as u/v")->required();
  hermite->add_option("n", hermite_n, "number of terms")->required();

  int bench_bits = 0;
  std::uint64_t bench_samples = 1000;
  std::uint64_t bench_seed = qr::kDefaultBenchSeed;
  CLI::App* bench = app.add_subcommand("bench", "Time jacobi vs the Euler-criterion baseline");
  bench->add_option("--bits", bench_bits, "prime width, 31 or 63")->required();
  bench->add_option("--samples", bench_samples)->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (symbol->parsed()) return run_symbol(sym_a, sym_n, sym_method);
    if (trace->parsed()) return run_trace(trace_q, trace_p, trace_format);
    if (verify->parsed()) return run_verify(verify_bound, verify_lemma, verify_workers);
    if (hermite->parsed()) return run_hermite(hermite_x, hermite_n);
    if (bench->parsed()) return run_bench_cmd(bench_bits, bench_samples, bench_seed);
  } catch (const qr::ConsistencyError& e) {
    std::fprintf(stderr, "consistency error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
