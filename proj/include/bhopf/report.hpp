#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bhopf {

class Composite;

struct CheckResult {
  std::string name;
  bool passed;
  /// Basis multi-index of the first domain vector (lexicographic order) on
  /// which the two sides disagree. Present for every failed equation.
  std::optional<std::vector<std::size_t>> witness;
};

class CheckReport {
 public:
  void add_pass(std::string name);
  void add_failure(std::string name, std::vector<std::size_t> witness);
  /// A failure with no domain vector to point at, e.g. an unsolvable system.
  void add_failure(std::string name);
  /// Records lhs == rhs, with the witness decoded against the domain's
  /// tensor factor dimensions.
  void add_equation(std::string name, const Composite& lhs, const Composite& rhs,
                    std::span<const std::size_t> domain_dims);
  /// Appends every entry of `other`, prefixing names with "prefix.".
  void append(const CheckReport& other, std::string_view prefix = {});

  bool passed() const;
  const std::vector<CheckResult>& results() const { return results_; }
  const CheckResult* find(std::string_view name) const;
  const CheckResult* first_failure() const;

 private:
  std::vector<CheckResult> results_;
};

std::string format_witness(const std::vector<std::size_t>& witness);

}  // namespace bhopf
