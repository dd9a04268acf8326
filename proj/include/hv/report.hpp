#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace hv {

enum class Status { Pass, Fail, Inconclusive };

std::string to_string(Status s);

/// Outcome of one named verification. A failing report always carries a
/// witness.
struct CheckReport {
  std::string name;
  nlohmann::json params = nlohmann::json::object();
  Status status = Status::Pass;
  nlohmann::json witness;

  bool passed() const { return status == Status::Pass; }

  static CheckReport pass(std::string name, nlohmann::json params = nlohmann::json::object(),
                          nlohmann::json evidence = nullptr);
  static CheckReport fail(std::string name, nlohmann::json params, nlohmann::json witness);
  static CheckReport inconclusive(std::string name, nlohmann::json params, nlohmann::json evidence);

  nlohmann::json to_json() const;
};

/// Folds sub-reports into one: any fail fails, else any inconclusive
/// makes it inconclusive. The first failing witness is kept.
CheckReport combine(std::string name, nlohmann::json params, const std::vector<CheckReport>& parts);

} // namespace hv
