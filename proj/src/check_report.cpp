#include "gyro/check_report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

namespace gyro {

std::string format_number(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

void CheckReport::add_violation(Witness w) {
  ++violation_count_;
  if (witnesses_.size() < kMaxStoredWitnesses) witnesses_.push_back(std::move(w));
}

void CheckReport::observe_residual(double residual, const Witness& context) {
  if (std::isnan(residual)) residual = std::numeric_limits<double>::infinity();
  max_residual_ = std::max(max_residual_, residual);
  if (residual > tolerance_) add_violation(context);
}

bool CheckReport::has_rule(std::string_view rule) const {
  return std::any_of(witnesses_.begin(), witnesses_.end(),
                     [&](const Witness& w) { return w.rule == rule; });
}

void CheckReport::absorb(const CheckReport& other) {
  max_residual_ = std::max(max_residual_, other.max_residual_);
  tuples_checked_ += other.tuples_checked_;
  violation_count_ += other.violation_count_;
  for (const auto& w : other.witnesses_) {
    if (witnesses_.size() >= kMaxStoredWitnesses) break;
    witnesses_.push_back(w);
  }
  notes_.insert(notes_.end(), other.notes_.begin(), other.notes_.end());
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json strategy;
  if (strategy_.is_exhaustive()) {
    strategy = {{"kind", "exhaustive"}};
  } else {
    strategy = {{"kind", "sampled"}, {"seed", strategy_.seed}, {"count", strategy_.count}};
  }
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& w : witnesses_) {
    violations.push_back({{"rule", w.rule}, {"elements", w.elements}, {"detail", w.detail}});
  }
  return {
      {"v", 1},
      {"check", name_},
      {"strategy", strategy},
      {"tolerance", tolerance_},
      {"max_residual", max_residual_},
      {"tuples_checked", tuples_checked_},
      {"violation_count", violation_count_},
      {"violations", violations},
      {"notes", notes_},
      {"informational", informational_},
      {"verdict", verdict() ? "pass" : "fail"},
  };
}

nlohmann::json report_merge(const std::vector<nlohmann::json>& reports) {
  std::vector<nlohmann::json> sorted = reports;
  std::stable_sort(sorted.begin(), sorted.end(), [](const nlohmann::json& a, const nlohmann::json& b) {
    return a.at("check").get<std::string>() < b.at("check").get<std::string>();
  });
  bool pass = true;
  std::size_t tuples = 0, violations = 0;
  nlohmann::json checks = nlohmann::json::array();
  nlohmann::json failing = nlohmann::json::array();
  for (const auto& r : sorted) {
    const bool ok = r.at("verdict") == "pass";
    const bool info = r.value("informational", false);
    tuples += r.at("tuples_checked").get<std::size_t>();
    violations += r.at("violation_count").get<std::size_t>();
    checks.push_back({{"check", r.at("check")},
                      {"verdict", r.at("verdict")},
                      {"informational", info},
                      {"tuples_checked", r.at("tuples_checked")},
                      {"violation_count", r.at("violation_count")}});
    if (!ok && !info) {
      pass = false;
      failing.push_back(r.at("check"));
    }
  }
  return {{"v", 1},
          {"reports", sorted.size()},
          {"tuples_checked", tuples},
          {"violation_count", violations},
          {"checks", checks},
          {"failing", failing},
          {"verdict", pass ? "pass" : "fail"}};
}

nlohmann::json report_merge(const std::vector<CheckReport>& reports) {
  std::vector<nlohmann::json> docs;
  docs.reserve(reports.size());
  for (const auto& r : reports) docs.push_back(r.to_json());
  return report_merge(docs);
}

}  // namespace gyro
