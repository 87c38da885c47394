#pragma once

#include <json.hpp>

#include "polydg/verify.hpp"

namespace polydg::verify {

void to_json(nlohmann::json& j, const Witness& w);
void from_json(const nlohmann::json& j, Witness& w);
void to_json(nlohmann::json& j, const CheckReport& r);
void from_json(const nlohmann::json& j, CheckReport& r);
void to_json(nlohmann::json& j, const AuditEntry& e);
void from_json(const nlohmann::json& j, AuditEntry& e);

bool operator==(const Witness& a, const Witness& b);
bool operator==(const CheckReport& a, const CheckReport& b);
bool operator==(const AuditEntry& a, const AuditEntry& b);

}  // namespace polydg::verify

namespace polydg {

/// {"value", "error", "method"} with the value rounded to double.
nlohmann::json eval_json(const EvalResult& r);

}  // namespace polydg
