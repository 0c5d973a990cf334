#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace gyro {

struct Strategy {
  enum class Kind { exhaustive, sampled };
  Kind kind = Kind::exhaustive;
  std::uint64_t seed = 0;
  std::size_t count = 0;

  static Strategy exhaustive() { return {}; }
  static Strategy sampled(std::uint64_t seed, std::size_t count) {
    return {Kind::sampled, seed, count};
  }
  bool is_exhaustive() const { return kind == Kind::exhaustive; }
};

/// Shortest decimal that reads back to the same double.
std::string format_number(double v);

/// One violating tuple: which rule failed, the elements involved (as labels)
/// and a free-form detail string.
struct Witness {
  std::string rule;
  std::vector<std::string> elements;
  std::string detail;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Outcome of a verification sweep.
///
/// Every violation is counted; only the first `kMaxStoredWitnesses` are kept.
/// `verdict()` is pass iff nothing was counted and the largest floating
/// residual stayed within `tolerance`.
class CheckReport {
 public:
  static constexpr std::size_t kMaxStoredWitnesses = 64;

  CheckReport() = default;
  CheckReport(std::string name, Strategy strategy, double tolerance = 0.0)
      : name_(std::move(name)), strategy_(strategy), tolerance_(tolerance) {}

  const std::string& name() const { return name_; }
  const Strategy& strategy() const { return strategy_; }
  double tolerance() const { return tolerance_; }
  double max_residual() const { return max_residual_; }
  std::size_t violation_count() const { return violation_count_; }
  std::size_t tuples_checked() const { return tuples_checked_; }
  const std::vector<Witness>& witnesses() const { return witnesses_; }
  const std::vector<std::string>& notes() const { return notes_; }

  bool verdict() const { return violation_count_ == 0 && max_residual_ <= tolerance_; }

  /// Informational reports record findings (such as counterexamples to a
  /// conjectured identity) without counting against an overall pass.
  bool informational() const { return informational_; }
  void set_informational(bool on) { informational_ = on; }

  void add_violation(Witness w);
  void add_note(std::string note) { notes_.push_back(std::move(note)); }
  void count_tuple(std::size_t n = 1) { tuples_checked_ += n; }

  /// Records a floating residual; a residual above tolerance is also a violation.
  void observe_residual(double residual, const Witness& context);

  bool has_rule(std::string_view rule) const;

  /// Folds another report's counts and witnesses into this one.
  void absorb(const CheckReport& other);

  nlohmann::json to_json() const;

 private:
  std::string name_;
  Strategy strategy_;
  double tolerance_ = 0.0;
  bool informational_ = false;
  double max_residual_ = 0.0;
  std::size_t violation_count_ = 0;
  std::size_t tuples_checked_ = 0;
  std::vector<Witness> witnesses_;
  std::vector<std::string> notes_;
};

/// Aggregated pass/fail over reports from one run, checks ordered by name.
/// Informational reports are listed but never fail the summary.
nlohmann::json report_merge(const std::vector<CheckReport>& reports);
nlohmann::json report_merge(const std::vector<nlohmann::json>& reports);

}  // namespace gyro
