#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "qr/trace_io.hpp"

using qr::GaussTrace;
using qr::OddPrime;

TEST_CASE("trace JSON carries the fixed schema in order") {
  const GaussTrace t = qr::gauss_sign_product(3, OddPrime(5));
  const auto j = qr::trace_to_json(t);
  CHECK(j.dump() ==
        R"({"p":5,"q":3,"rows":[)"
        R"({"a":1,"r":3,"eps":-1,"a_prime":2,"floor_2qa":1,"floor_qa":0},)"
        R"({"a":2,"r":1,"eps":1,"a_prime":1,"floor_2qa":2,"floor_qa":1}],)"
        R"("M":3,"mu":1,"symbol":-1})");
}

TEST_CASE("JSON round trip preserves the trace and its invariants") {
  for (const auto& [q, p] : {std::pair{3, 5}, {1, 7}, {6, 7}, {12, 13}, {10, 23}}) {
    const GaussTrace original = qr::gauss_sign_product(q, OddPrime(p));
    const std::string text = qr::trace_to_json(original).dump();
    const GaussTrace parsed = qr::trace_from_json(nlohmann::ordered_json::parse(text));
    qr::validate_trace(parsed);

    CHECK(parsed.p == original.p);
    CHECK(parsed.q == original.q);
    CHECK(parsed.symbol == original.symbol);
    REQUIRE(parsed.rows.size() == original.rows.size());

    // recompute the scalars from the parsed rows
    std::uint64_t m = 0;
    std::uint64_t mu = 0;
    int sign = 1;
    for (const auto& row : parsed.rows) {
      m += row.floor_2qa;
      mu += row.floor_qa;
      sign *= row.eps;
    }
    CHECK(m == original.M);
    CHECK(mu == original.mu);
    CHECK(qr::Symbol(sign) == original.symbol);
  }
}

TEST_CASE("TSV layout is one header, one row per a, then the scalars") {
  const GaussTrace t = qr::gauss_sign_product(3, OddPrime(7));
  CHECK(qr::trace_to_tsv(t) ==
        "a\tr\teps\ta_prime\tfloor_2qa\tfloor_qa\n"
        "1\t3\t1\t3\t0\t0\n"
        "2\t6\t-1\t1\t1\t0\n"
        "3\t2\t1\t2\t2\t1\n"
        "M\t3\n"
        "mu\t1\n"
        "symbol\t-1\n");
}

TEST_CASE("trace_from_json rejects malformed documents") {
  const auto good = qr::trace_to_json(qr::gauss_sign_product(3, OddPrime(5)));

  auto missing = good;
  missing.erase("mu");
  CHECK_THROWS_AS(qr::trace_from_json(missing), nlohmann::ordered_json::exception);

  auto bad_symbol = good;
  bad_symbol["symbol"] = 2;
  CHECK_THROWS_AS(qr::trace_from_json(bad_symbol), std::domain_error);

  auto corrupt = good;
  corrupt["rows"][0]["floor_qa"] = 7;
  CHECK_THROWS_AS(qr::validate_trace(qr::trace_from_json(corrupt)), qr::ConsistencyError);
}
