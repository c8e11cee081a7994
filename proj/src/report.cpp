#include "cprig/report.hpp"

namespace cprig {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::NumericPass: return "numeric-pass";
  }
  return "fail";
}

Json VerificationReport::to_json() const {
  if (status == Status::Fail && witness.is_null())
    fail(ErrorCode::InvalidArgument, "failing report '" + checkName + "' has no witness");
  Json j;
  j["check"] = checkName;
  j["status"] = to_string(status);
  j["params"] = params;
  j["witness"] = witness;
  j["value"] = value;
  return j;
}

VerificationReport make_report(std::string name, bool ok, Json params, Json witness, Json value) {
  VerificationReport r;
  r.checkName = std::move(name);
  r.status = ok ? Status::Pass : Status::Fail;
  r.params = std::move(params);
  r.witness = std::move(witness);
  r.value = std::move(value);
  if (!ok && r.witness.is_null()) fail(ErrorCode::InvalidArgument, "failing report '" + r.checkName + "' has no witness");
  return r;
}

Json to_json(const Rational& r) {
  return Json{{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

Json to_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& r : v) a.push_back(to_json(r));
  return a;
}

Json to_json(const LaurentPoly& p) {
  Json a = Json::array();
  for (const auto& [e, c] : p.terms()) a.push_back(Json{{"exp", e}, {"coeff", to_json(c)}});
  return a;
}

Json to_json(const LaurentRational& r) {
  return Json{{"num", to_json(r.num())}, {"den", to_json(r.den())}};
}

}  // namespace cprig
