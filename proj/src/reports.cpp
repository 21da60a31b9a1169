#include "commlab/reports.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <stdexcept>

namespace commlab {

Json to_json(const IdentityReport& r) {
  Json cards = Json::object();
  for (const auto& [name, size] : r.cardinalities) cards[name] = size;
  Json j{{"check", r.check},     {"verdict", to_string(r.verdict)}, {"pass", r.verdict == Verdict::pass},
         {"cardinalities", cards}, {"stabilized", r.stabilized},     {"evaluations", r.evaluations}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json to_json(const ConnectivityScan& s) {
  return {{"checked", s.checked}, {"held", s.held}, {"connected", s.connected}};
}

Json to_json(const FiniteTrial& t) {
  return {{"seed", t.seed},
          {"degree", t.degree},
          {"group_order", t.group_order},
          {"n", t.n},
          {"subgroup_orders", t.subgroup_orders},
          {"fat_vs_symmetric", to_json(t.fat_vs_symmetric)},
          {"fix_first", to_json(t.fix_first)},
          {"connectivity", to_json(t.connectivity)},
          {"stabilized", t.fat_vs_symmetric.stabilized},
          {"pass", t.pass()}};
}

Json to_json(const TripleTrial& t) {
  return {{"seed", t.seed},
          {"degree", t.degree},
          {"group_order", t.group_order},
          {"subgroup_orders", t.subgroup_orders},
          {"distributes", to_json(t.distributes)},
          {"hall", to_json(t.hall)},
          {"pass", t.pass()}};
}

Json to_json(const Pi2Report& r) {
  return {{"m", 2},
          {"partition", "{1},{2}"},
          {"seed", r.seed},
          {"conj_depth", r.conj_depth},
          {"elements_checked", r.elements_checked},
          {"elements_in_both", r.elements_in_both},
          {"commutators_checked", r.commutators_checked},
          {"commutators_trivial", r.commutators_trivial},
          {"quotient_rank", r.quotient_rank},
          {"holds", r.holds}};
}

Json to_json(const Pi3Certificate& c) {
  return {{"m", 3},
          {"n", 3},
          {"partition", c.partition},
          {"seed", c.seed},
          {"conj_depth", c.conj_depth},
          {"witness_word", to_string(c.witness)},
          {"in_intersection", c.witness_in_intersection},
          {"gamma_level", c.witness_gamma_level},
          {"outside_gamma3", c.witness_outside_gamma3},
          {"samples", c.samples},
          {"sample_pass_counts",
           {{"in_intersection", c.samples_in_intersection}, {"in_gamma3", c.samples_in_gamma3}}},
          {"holds", c.holds}};
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y%m%dT%H%M%SZ", &tm);
  return buf;
}

void write_atomically(const std::filesystem::path& path, const std::string& text) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << text;
    if (!out.flush()) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::filesystem::path write_report(const std::filesystem::path& dir, const std::string& subcommand,
                                   std::uint64_t seed, const Json& payload, const Json& timing) {
  std::filesystem::create_directories(dir);
  Json doc{{"subcommand", subcommand}, {"seed", seed}};
  for (const auto& [key, value] : payload.items()) doc[key] = value;
  doc["timing"] = timing;

  const std::string stem = subcommand + "-" + std::to_string(seed) + "-" + utc_timestamp();
  auto path = dir / (stem + ".json");
  for (int k = 1; std::filesystem::exists(path); ++k) path = dir / (stem + "-" + std::to_string(k) + ".json");
  write_atomically(path, doc.dump(2) + "\n");
  write_atomically(dir / "latest", path.filename().string() + "\n");
  return path;
}

}  // namespace commlab
