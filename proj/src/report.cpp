#include "bhopf/report.hpp"

#include <algorithm>

#include "bhopf/composite.hpp"

namespace bhopf {

void CheckReport::add_pass(std::string name) { results_.push_back({std::move(name), true, std::nullopt}); }

void CheckReport::add_failure(std::string name, std::vector<std::size_t> witness) {
  results_.push_back({std::move(name), false, std::move(witness)});
}

void CheckReport::add_failure(std::string name) { results_.push_back({std::move(name), false, std::nullopt}); }

void CheckReport::add_equation(std::string name, const Composite& lhs, const Composite& rhs,
                               std::span<const std::size_t> domain_dims) {
  if (auto j = first_difference(lhs, rhs))
    add_failure(std::move(name), unflatten(*j, domain_dims));
  else
    add_pass(std::move(name));
}

void CheckReport::append(const CheckReport& other, std::string_view prefix) {
  for (const auto& r : other.results_) {
    auto copy = r;
    if (!prefix.empty()) copy.name = std::string(prefix) + "." + copy.name;
    results_.push_back(std::move(copy));
  }
}

bool CheckReport::passed() const {
  return std::all_of(results_.begin(), results_.end(), [](const auto& r) { return r.passed; });
}

const CheckResult* CheckReport::find(std::string_view name) const {
  auto it = std::find_if(results_.begin(), results_.end(), [&](const auto& r) { return r.name == name; });
  return it == results_.end() ? nullptr : &*it;
}

const CheckResult* CheckReport::first_failure() const {
  auto it = std::find_if(results_.begin(), results_.end(), [](const auto& r) { return !r.passed; });
  return it == results_.end() ? nullptr : &*it;
}

std::string format_witness(const std::vector<std::size_t>& witness) {
  std::string out = "(";
  for (std::size_t i = 0; i < witness.size(); ++i) out += (i ? "," : "") + std::to_string(witness[i]);
  return out + ")";
}

}  // namespace bhopf
