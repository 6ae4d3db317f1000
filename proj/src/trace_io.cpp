#include "qr/trace_io.hpp"

#include <sstream>

namespace qr {

nlohmann::ordered_json trace_to_json(const GaussTrace& trace) {
  nlohmann::ordered_json j;
  j["p"] = trace.p;
  j["q"] = trace.q;
  j["rows"] = nlohmann::ordered_json::array();
  for (const GaussTraceRow& row : trace.rows) {
    j["rows"].push_back({{"a", row.a},
                         {"r", row.r},
                         {"eps", row.eps},
                         {"a_prime", row.a_prime},
                         {"floor_2qa", row.floor_2qa},
                         {"floor_qa", row.floor_qa}});
  }
  j["M"] = trace.M;
  j["mu"] = trace.mu;
  j["symbol"] = trace.symbol.value();
  return j;
}

std::string trace_to_tsv(const GaussTrace& trace) {
  std::ostringstream out;
  out << "a\tr\teps\ta_prime\tfloor_2qa\tfloor_qa\n";
  for (const GaussTraceRow& row : trace.rows) {
    out << row.a << '\t' << row.r << '\t' << row.eps << '\t' << row.a_prime << '\t'
        << row.floor_2qa << '\t' << row.floor_qa << '\n';
  }
  out << "M\t" << trace.M << '\n';
  out << "mu\t" << trace.mu << '\n';
  out << "symbol\t" << trace.symbol.value() << '\n';
  return out.str();
}

GaussTrace trace_from_json(const nlohmann::ordered_json& j) {
  GaussTrace trace{j.at("p").get<std::uint32_t>(),
                   j.at("q").get<std::int64_t>(),
                   {},
                   j.at("M").get<std::uint64_t>(),
                   j.at("mu").get<std::uint64_t>(),
                   Symbol(j.at("symbol").get<int>())};
  for (const auto& row : j.at("rows")) {
    trace.rows.push_back({row.at("a").get<std::uint32_t>(), row.at("r").get<std::uint32_t>(),
                          row.at("eps").get<int>(), row.at("a_prime").get<std::uint32_t>(),
                          row.at("floor_2qa").get<std::uint64_t>(),
                          row.at("floor_qa").get<std::uint64_t>()});
  }
  return trace;
}

}  // namespace qr
