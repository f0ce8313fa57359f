#pragma once

#include <stdexcept>
#include <string>

namespace hda {

/// Malformed input: bad file contents, ill-typed attachments, invalid indices.
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration exceeded its explicit budget. Never silently truncated.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, long long budget)
      : std::runtime_error(what + " (budget " + std::to_string(budget) + ")"), budget_(budget) {}
  long long budget() const { return budget_; }

 private:
  long long budget_;
};

/// Counter shared by a search; throws once more than `limit` items are produced.
class Budget {
 public:
  explicit Budget(long long limit, std::string label = "enumeration")
      : limit_(limit), label_(std::move(label)) {}
  void spend(long long n = 1) {
    used_ += n;
    if (used_ > limit_) throw BudgetExceeded(label_ + " exceeded its budget", limit_);
  }
  long long used() const { return used_; }
  long long limit() const { return limit_; }

 private:
  long long limit_;
  long long used_ = 0;
  std::string label_;
};

}  // namespace hda
