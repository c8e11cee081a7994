#pragma once

#include <string>
#include <vector>

#include "cprig/laurent.hpp"
#include "cprig/rational.hpp"
#include "json.hpp"

namespace cprig {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, NumericPass };

std::string to_string(Status s);

/// Outcome of one named check. A failing report always carries a witness.
struct VerificationReport {
  std::string checkName;
  Status status = Status::Pass;
  Json params = Json::object();
  Json witness = nullptr;
  Json value = nullptr;

  bool passed() const { return status != Status::Fail; }
  Json to_json() const;
};

/// status Pass/Fail from a boolean; throws if a failing report has no witness.
VerificationReport make_report(std::string name, bool ok, Json params, Json witness, Json value);

Json to_json(const Rational& r);
Json to_json(const std::vector<Rational>& v);
/// List of {"exp", "coeff"} terms in increasing exponent.
Json to_json(const LaurentPoly& p);
Json to_json(const LaurentRational& r);

}  // namespace cprig
