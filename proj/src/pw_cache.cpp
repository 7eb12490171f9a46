// pw_cache.cpp — versioned JSON disk cache for the exact Peter-Weyl table.
// SPDX-License-Identifier: MIT
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <string>
#include <utility>

#include "json.hpp"
#include "qsph/peter_weyl.hpp"

namespace qsph {

std::string pw_cache_default_path() {
  const char* dir = std::getenv("CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return "";
  return std::string(dir) + "/pw_table.json";
}

void pw_cache_save(const PWTable<ExactRing>& table, const std::string& path) {
  nlohmann::ordered_json doc;
  doc["version"] = kPWCacheVersion;
  doc["q_indeterminate"] = "s";
  auto& entries = doc["entries"] = nlohmann::ordered_json::array();
  for (const auto& [two_l, level] : table.built_levels()) {
    for (const auto& [rs, entry] : *level) {
      entries.push_back({{"l2", two_l},
                         {"r2", rs.first},
                         {"s2", rs.second},
                         {"element", entry.element.str()},
                         {"norm_sq", entry.norm_sq.str()}});
    }
  }
  // atomic replacement keeps concurrent readers on a consistent file
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("pw_cache_save: cannot write " + tmp);
    out << doc.dump(1) << '\n';
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("pw_cache_save: cannot replace " + path);
  }
}

long pw_cache_load(PWTable<ExactRing>& table, const std::string& path) {
  std::ifstream in(path);
  if (!in) return 0;
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception&) {
    return 0;
  }
  if (doc.value("version", "") != kPWCacheVersion) return 0;
  if (doc.value("q_indeterminate", "") != "s") return 0;
  if (!doc.contains("entries") || !doc["entries"].is_array()) return 0;

  std::map<long, std::map<std::pair<long, long>, PWElement<ExactRing>>> levels;
  for (const auto& item : doc["entries"]) {
    const long two_l = item.at("l2").get<long>();
    const long two_r = item.at("r2").get<long>();
    const long two_s = item.at("s2").get<long>();
    const PWIndex idx(HalfInt::from_twice(two_l), HalfInt::from_twice(two_r),
                      HalfInt::from_twice(two_s));
    PWElement<ExactRing> entry{idx, parse_element(item.at("element").get<std::string>()),
                               QRat::parse(item.at("norm_sq").get<std::string>())};
    levels[two_l].emplace(std::make_pair(two_r, two_s), std::move(entry));
  }
  long adopted = 0;
  const auto already = table.built_levels();
  for (auto& [two_l, level] : levels) {
    if (two_l > table.max_l().twice()) continue;
    if (already.count(two_l) != 0) continue;
    const long dim = two_l + 1;
    if (static_cast<long>(level.size()) != dim * dim) continue;  // partial level: rebuild
    adopted += dim * dim;
    table.adopt_level(two_l, std::move(level));
  }
  return adopted;
}

}  // namespace qsph
