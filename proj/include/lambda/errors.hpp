#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lambda/ordered_group.hpp"

namespace lb {

/// Concrete data reproducing a failure: the charts involved, points given as
/// (chart, coordinates), and a free-form note.
struct Witness {
  std::vector<std::string> charts;
  std::vector<std::pair<std::string, std::vector<GroupValue>>> points;
  std::string detail;

  bool empty() const { return charts.empty() && points.empty() && detail.empty(); }
};

/// Domain error with a stable machine-readable code such as
/// "CocycleViolation" or "NoCommonChart".
class BuildingError : public std::runtime_error {
 public:
  BuildingError(std::string code, const std::string& message, Witness witness = {})
      : std::runtime_error(message), code_(std::move(code)), witness_(std::move(witness)) {}

  const std::string& code() const { return code_; }
  const Witness& witness() const { return witness_; }

 private:
  std::string code_;
  Witness witness_;
};

}  // namespace lb
