#include "lift/period_db.hpp"

#include <istream>

#include <json.hpp>

namespace lift {

namespace {

Int coeff_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw error("coefficient must be an integer or a decimal string");
}

}  // namespace

std::vector<PeriodRecord> parse_period_db(std::istream& in, const std::string& source) {
  std::vector<PeriodRecord> db;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
      PeriodRecord rec;
      rec.name = j.at("name").get<std::string>();
      for (const auto& c : j.at("coeffs")) rec.coeffs.push_back(coeff_from_json(c));
      rec.source = source;
      if (rec.coeffs.empty() || rec.coeffs[0] != 1)
        throw error("coefficients must begin with 1");
      db.push_back(std::move(rec));
    } catch (const std::exception& e) {
      throw error("malformed database line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return db;
}

std::vector<PeriodMatch> match_period(const std::vector<PeriodRecord>& db,
                                      const std::vector<Int>& coeffs,
                                      std::size_t min_overlap) {
  std::vector<PeriodMatch> out;
  for (const auto& rec : db) {
    std::size_t overlap = std::min(rec.coeffs.size(), coeffs.size());
    if (overlap < min_overlap) continue;
    bool agree = true;
    for (std::size_t i = 0; i < overlap && agree; ++i) agree = rec.coeffs[i] == coeffs[i];
    if (agree) out.push_back({&rec, overlap});
  }
  return out;
}

}  // namespace lift
