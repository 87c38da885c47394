#include "polydg/report.hpp"

namespace polydg::verify {

void to_json(nlohmann::json& j, const Witness& w) {
    j = {{"point", w.point}, {"lhs", w.lhs},     {"rhs", w.rhs},
         {"margin", w.margin}, {"error", w.error}, {"label", w.label}};
}

void from_json(const nlohmann::json& j, Witness& w) {
    j.at("point").get_to(w.point);
    j.at("lhs").get_to(w.lhs);
    j.at("rhs").get_to(w.rhs);
    j.at("margin").get_to(w.margin);
    j.at("error").get_to(w.error);
    j.at("label").get_to(w.label);
}

void to_json(nlohmann::json& j, const CheckReport& r) {
    j = {{"check_id", r.check_id},
         {"params", r.params},
         {"passed", r.passed},
         {"tolerance", r.tolerance_used},
         {"witnesses", r.witnesses},
         {"counterexamples", r.counterexamples},
         {"inconclusive", r.inconclusive},
         {"metrics", r.metrics},
         {"note", r.note}};
}

void from_json(const nlohmann::json& j, CheckReport& r) {
    j.at("check_id").get_to(r.check_id);
    r.params = j.at("params");
    j.at("passed").get_to(r.passed);
    j.at("tolerance").get_to(r.tolerance_used);
    j.at("witnesses").get_to(r.witnesses);
    j.at("counterexamples").get_to(r.counterexamples);
    r.inconclusive = j.value("inconclusive", std::vector<Witness>{});
    r.metrics = j.value("metrics", std::map<std::string, double>{});
    r.note = j.value("note", std::string{});
}

void to_json(nlohmann::json& j, const AuditEntry& e) {
    j = {{"identity_id", e.identity_id},     {"formula", e.formula},
         {"status", e.status},               {"max_deviation", e.max_deviation},
         {"error_estimate", e.error_estimate}, {"note", e.note}};
}

void from_json(const nlohmann::json& j, AuditEntry& e) {
    j.at("identity_id").get_to(e.identity_id);
    j.at("formula").get_to(e.formula);
    j.at("status").get_to(e.status);
    j.at("max_deviation").get_to(e.max_deviation);
    j.at("error_estimate").get_to(e.error_estimate);
    j.at("note").get_to(e.note);
}

bool operator==(const Witness& a, const Witness& b) {
    return a.point == b.point && a.lhs == b.lhs && a.rhs == b.rhs && a.margin == b.margin && a.error == b.error &&
           a.label == b.label;
}

bool operator==(const CheckReport& a, const CheckReport& b) {
    return a.check_id == b.check_id && a.params == b.params && a.passed == b.passed &&
           a.witnesses == b.witnesses && a.counterexamples == b.counterexamples && a.inconclusive == b.inconclusive &&
           a.tolerance_used == b.tolerance_used && a.metrics == b.metrics && a.note == b.note;
}

bool operator==(const AuditEntry& a, const AuditEntry& b) {
    return a.identity_id == b.identity_id && a.formula == b.formula && a.status == b.status &&
           a.max_deviation == b.max_deviation && a.error_estimate == b.error_estimate && a.note == b.note;
}

}  // namespace polydg::verify

namespace polydg {

nlohmann::json eval_json(const EvalResult& r) {
    return {{"value", static_cast<double>(r.value)}, {"error", static_cast<double>(r.error)}, {"method", r.method}};
}

}  // namespace polydg
