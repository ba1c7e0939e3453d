#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "blotto/construct.hpp"
#include "blotto/error.hpp"
#include "blotto/rational.hpp"
#include "blotto/security.hpp"
#include "blotto/strategy.hpp"
#include "blotto/sweep.hpp"

namespace blotto {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Strategy files: {"budget":"15","atoms":[{"x":"0","w":"1/2"}, ...]} with
// every rational serialized as "p/q" (or "p" when integral).

inline json strategy_to_json(const AtomicStrategy& f) {
  json atoms = json::array();
  for (const Atom& a : f.atoms()) atoms.push_back({{"x", a.x.to_string()}, {"w", a.w.to_string()}});
  return json{{"budget", f.budget().to_string()}, {"atoms", std::move(atoms)}};
}

inline AtomicStrategy strategy_from_json(const json& j) {
  if (!j.is_object() || !j.contains("budget") || !j["budget"].is_string() ||
      !j.contains("atoms") || !j["atoms"].is_array())
    fail(errc::parse_error,
         "strategy JSON must be {\"budget\": \"p/q\", \"atoms\": [...]}");
  Rational budget = Rational::parse(j["budget"].get<std::string>());
  std::vector<Atom> atoms;
  for (const json& a : j["atoms"]) {
    if (!a.is_object() || !a.contains("x") || !a["x"].is_string() || !a.contains("w") ||
        !a["w"].is_string())
      fail(errc::parse_error, "each atom must be {\"x\": \"p/q\", \"w\": \"p/q\"}");
    atoms.push_back(Atom{Rational::parse(a["x"].get<std::string>()),
                         Rational::parse(a["w"].get<std::string>())});
  }
  return AtomicStrategy(std::move(budget), std::move(atoms));
}

inline AtomicStrategy load_strategy(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::io_error, path + ": cannot open for reading");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    fail(errc::parse_error, path + ": " + e.what());
  }
  try {
    return strategy_from_json(j);
  } catch (const error& e) {
    throw error(e.code(), path + ": " + e.what());
  } catch (const json::exception& e) {
    fail(errc::parse_error, path + ": " + e.what());
  }
}

inline void save_strategy(const std::string& path, const AtomicStrategy& f) {
  std::ofstream out(path);
  if (!out) fail(errc::io_error, path + ": cannot open for writing");
  out << strategy_to_json(f).dump(2) << "\n";
  if (!out) fail(errc::io_error, path + ": write failed");
}

// ---------------------------------------------------------------------------
// Reports and bands.

inline json report_to_json(const SsCheckReport& rep, Ss2Reading reading) {
  json masses = json::array();
  for (const auto& [j, mass] : rep.ss1_masses)
    masses.push_back({{"j", j}, {"mass", mass.to_string()}});
  json violation;
  if (rep.ss2_violation) {
    violation = json{{"j", rep.ss2_violation->j},
                     {"x", rep.ss2_violation->x.to_string()},
                     {"lhs", rep.ss2_violation->lhs.to_string()},
                     {"rhs", rep.ss2_violation->rhs.to_string()}};
  }
  return json{{"ss1_ok", rep.ss1_ok},
              {"ss1_masses", std::move(masses)},
              {"ss1_outside", rep.ss1_outside.to_string()},
              {"ss2_ok", rep.ss2_ok},
              {"ss2_violation", std::move(violation)},
              {"ss2_reading", reading == Ss2Reading::closed ? "closed" : "strict"},
              {"security_strategy", rep.is_security_strategy()},
              {"value", rep.value.to_string()},
              {"witness_e", rep.witness_e.to_string()},
              {"centralized", rep.centralized.to_string()},
              {"agreement", rep.agreement}};
}

inline json bands_to_json(const std::vector<Band>& bs, const Rational& b_half) {
  json out = json::array();
  for (const Band& b : bs) {
    json item{{"k1", b.k1}, {"lo", b.lo.to_string()}, {"hi", b.hi.to_string()}};
    if (b.hi > b_half) item["clipped_hi"] = b_half.to_string();
    out.push_back(std::move(item));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sweep CSV. Columns: b1,lower_bound,centralized,in_band,band_k1,comb_value
// with rationals as "p/q" strings and empty cells for absent band fields.
// Rows are validated on emission.

inline void write_sweep_csv(const std::vector<SweepRecord>& rows, std::ostream& out) {
  out << "b1,lower_bound,centralized,in_band,band_k1,comb_value\n";
  for (const SweepRecord& r : rows) {
    validate(r);
    out << r.b1 << ',' << r.lower_bound.to_string() << ',' << r.centralized.to_string() << ','
        << (r.in_band ? "true" : "false") << ','
        << (r.band_k1 ? std::to_string(*r.band_k1) : std::string()) << ','
        << (r.comb_value ? r.comb_value->to_string() : std::string()) << '\n';
  }
}

inline std::string sweep_csv_string(const std::vector<SweepRecord>& rows) {
  std::ostringstream os;
  write_sweep_csv(rows, os);
  return os.str();
}

inline std::vector<SweepRecord> parse_sweep_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "b1,lower_bound,centralized,in_band,band_k1,comb_value")
    fail(errc::parse_error, "bad or missing sweep CSV header");
  std::vector<SweepRecord> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    while (cells.size() < 6) cells.emplace_back();
    if (cells.size() != 6) fail(errc::parse_error, "sweep CSV row with wrong arity: " + line);
    SweepRecord r;
    r.b1 = std::stol(cells[0]);
    r.lower_bound = Rational::parse(cells[1]);
    r.centralized = Rational::parse(cells[2]);
    if (cells[3] == "true") r.in_band = true;
    else if (cells[3] == "false") r.in_band = false;
    else fail(errc::parse_error, "sweep CSV in_band must be true or false");
    if (!cells[4].empty()) r.band_k1 = std::stol(cells[4]);
    if (!cells[5].empty()) r.comb_value = Rational::parse(cells[5]);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace blotto
