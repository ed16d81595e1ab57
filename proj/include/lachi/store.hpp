#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "lachi/io.hpp"

namespace lachi {

/// Append-only JSON-lines file of results keyed by instance hash.
///
/// Each record is {"key", "operation", "payload", "details"}. The payload
/// holds only values that must be reproducible (chi_la, flags); witnesses,
/// node counts and timings go in details. Appending a record whose key is
/// already present compares payloads: that comparison is the determinism
/// audit.
class ResultsStore {
 public:
  explicit ResultsStore(std::filesystem::path path) : path_(std::move(path)) {}

  struct AuditOutcome {
    bool had_previous = false;
    bool matches = true;
  };

  /// Earliest stored payload for key, if any.
  std::optional<Json> lookup(const std::string& key) const;

  AuditOutcome append(const std::string& key, const std::string& operation, const Json& payload,
                      const Json& details);

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace lachi
