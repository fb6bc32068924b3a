#include "run_report.hpp"

#include <openssl/evp.h>

#include <ctime>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "bhopf/errors.hpp"
#include "bhopf/io.hpp"

#ifndef BHOPF_VERSION
#define BHOPF_VERSION "0.0.0"
#endif

namespace bhopf::cli {

namespace {

std::string utc_now() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

const char* paint(bool color, bool ok) {
  if (!color) return "";
  return ok ? "\033[32m" : "\033[31m";
}

const char* reset(bool color) { return color ? "\033[0m" : ""; }

}  // namespace

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error("sha256 failed");
  std::ostringstream out;
  for (unsigned int k = 0; k < len; ++k) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[k]);
  return out.str();
}

RunReport::RunReport(std::string command, bool timestamp) : command_(std::move(command)) {
  if (timestamp) timestamp_ = utc_now();
}

void RunReport::add_input(const std::filesystem::path& path) {
  inputs_.push_back({path.string(), sha256_hex(io::read_text_file(path))});
}

void RunReport::add_section(std::string name, CheckReport report) {
  sections_.push_back({std::move(name), std::move(report)});
}

bool RunReport::passed() const {
  if (error_) return false;
  for (const auto& s : sections_)
    if (!s.report.passed()) return false;
  return true;
}

int RunReport::exit_code() const {
  if (error_) return 2;
  return passed() ? 0 : 1;
}

nlohmann::json RunReport::to_json() const {
  nlohmann::json j{{"schema", kSchema}, {"tool_version", BHOPF_VERSION}, {"command", command_}};
  if (timestamp_) j["timestamp"] = *timestamp_;
  j["inputs"] = nlohmann::json::array();
  for (const auto& in : inputs_) j["inputs"].push_back({{"path", in.path}, {"sha256", in.sha256}});
  j["reports"] = nlohmann::json::array();
  for (const auto& s : sections_) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& r : s.report.results()) {
      nlohmann::json c{{"name", r.name}, {"passed", r.passed}};
      if (r.witness) c["witness"] = *r.witness;
      checks.push_back(std::move(c));
    }
    j["reports"].push_back({{"name", s.name}, {"passed", s.report.passed()}, {"checks", std::move(checks)}});
  }
  for (const auto& [k, v] : extra_.items()) j[k] = v;
  if (error_) j["error"] = *error_;
  j["passed"] = passed();
  return j;
}

void RunReport::print_human(std::ostream& out, bool color) const {
  std::size_t total = 0, failed = 0;
  for (const auto& s : sections_) {
    out << "[" << s.name << "]\n";
    for (const auto& r : s.report.results()) {
      ++total;
      if (!r.passed) ++failed;
      out << "  " << paint(color, r.passed) << (r.passed ? "PASS" : "FAIL") << reset(color) << " " << r.name;
      if (r.witness) out << "  witness " << format_witness(*r.witness);
      out << "\n";
    }
  }
  if (extra_.contains("output")) out << "wrote " << extra_["output"].get<std::string>() << "\n";
  if (extra_.contains("written"))
    for (const auto& name : extra_["written"]) out << "wrote " << name.get<std::string>() << "\n";
  if (error_) {
    out << paint(color, false) << "ERROR" << reset(color) << " " << *error_ << "\n";
    return;
  }
  out << command_ << ": " << paint(color, passed()) << (passed() ? "PASS" : "FAIL") << reset(color) << " ("
      << total - failed << "/" << total << " checks passed)\n";
}

}  // namespace bhopf::cli
