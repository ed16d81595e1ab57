#include "lachi/store.hpp"

#include <fstream>

#include "lachi/error.hpp"

namespace lachi {

std::optional<Json> ResultsStore::lookup(const std::string& key) const {
  std::ifstream in(path_);
  if (!in) return std::nullopt;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Json record = Json::parse(line, nullptr, false);
    // Skip torn or foreign lines rather than failing the command.
    if (record.is_discarded() || !record.is_object()) continue;
    if (record.value("key", std::string{}) == key && record.contains("payload")) return record.at("payload");
  }
  return std::nullopt;
}

ResultsStore::AuditOutcome ResultsStore::append(const std::string& key, const std::string& operation,
                                                const Json& payload, const Json& details) {
  AuditOutcome outcome;
  if (auto previous = lookup(key)) {
    outcome.had_previous = true;
    outcome.matches = *previous == payload;
  }
  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
  std::ofstream out(path_, std::ios::app);
  if (!out) throw Error(ErrorCode::IoError, "cannot append to results store " + path_.string());
  Json record;
  record["key"] = key;
  record["operation"] = operation;
  record["payload"] = payload;
  record["details"] = details;
  out << record.dump() << '\n';
  return outcome;
}

}  // namespace lachi
