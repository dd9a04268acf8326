#include "hv/report.hpp"

namespace hv {

std::string to_string(Status s) {
  switch (s) {
  case Status::Pass:
    return "pass";
  case Status::Fail:
    return "fail";
  case Status::Inconclusive:
    return "inconclusive";
  }
  return "unknown";
}

CheckReport CheckReport::pass(std::string name, nlohmann::json params, nlohmann::json evidence) {
  return {std::move(name), std::move(params), Status::Pass, std::move(evidence)};
}

CheckReport CheckReport::fail(std::string name, nlohmann::json params, nlohmann::json witness) {
  if (witness.is_null())
    witness = "unspecified";
  return {std::move(name), std::move(params), Status::Fail, std::move(witness)};
}

CheckReport CheckReport::inconclusive(std::string name, nlohmann::json params, nlohmann::json evidence) {
  return {std::move(name), std::move(params), Status::Inconclusive, std::move(evidence)};
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  j["params"] = params;
  j["status"] = to_string(status);
  if (!witness.is_null())
    j["witness"] = witness;
  return j;
}

CheckReport combine(std::string name, nlohmann::json params, const std::vector<CheckReport>& parts) {
  CheckReport out{std::move(name), std::move(params), Status::Pass, nullptr};
  nlohmann::json evidence = nlohmann::json::array();
  for (const auto& p : parts) {
    if (p.status == Status::Fail) {
      out.status = Status::Fail;
      out.witness = {{"failed", p.name}, {"witness", p.witness}};
      return out;
    }
    if (p.status == Status::Inconclusive)
      out.status = Status::Inconclusive;
    evidence.push_back({{"name", p.name}, {"status", to_string(p.status)}});
  }
  out.witness = {{"parts", evidence}};
  return out;
}

} // namespace hv
