#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "bhopf/report.hpp"

namespace bhopf::cli {

inline constexpr const char* kSchema = "bhopf.run-report/1";

struct InputDigest {
  std::string path;
  std::string sha256;
};

struct Section {
  std::string name;
  CheckReport report;
};

class RunReport {
 public:
  RunReport(std::string command, bool timestamp);

  /// Hashes the file contents; throws FormatError if unreadable.
  void add_input(const std::filesystem::path& path);
  void add_section(std::string name, CheckReport report);
  void add_note(std::string key, nlohmann::json value) { extra_[key] = std::move(value); }
  void set_error(std::string message) { error_ = std::move(message); }

  bool passed() const;
  int exit_code() const;

  nlohmann::json to_json() const;
  void print_human(std::ostream& out, bool color) const;

 private:
  std::string command_;
  std::optional<std::string> timestamp_;
  std::vector<InputDigest> inputs_;
  std::vector<Section> sections_;
  nlohmann::json extra_ = nlohmann::json::object();
  std::optional<std::string> error_;
};

std::string sha256_hex(const std::string& bytes);

}  // namespace bhopf::cli
