#include "blowup/exactmath/certificate.hpp"

#include <json.hpp>

namespace blowup::exact {

bool Certificate::pass() const {
    if (steps_.empty()) return false;
    for (const auto& s : steps_)
        if (!s.pass) return false;
    return true;
}

const CertificateStep* Certificate::first_failure() const {
    for (const auto& s : steps_)
        if (!s.pass) return &s;
    return nullptr;
}

Certificate& Certificate::add(std::string desc, bool pass, std::string witness) {
    steps_.push_back({std::move(desc), pass, std::move(witness)});
    return *this;
}

Certificate& Certificate::absorb(const Certificate& sub, const std::string& prefix) {
    const std::string p = prefix.empty() ? sub.name() : prefix;
    for (const auto& s : sub.steps()) steps_.push_back({p + ": " + s.desc, s.pass, s.witness});
    if (sub.steps().empty()) steps_.push_back({p + ": empty chain", false, ""});
    return *this;
}

std::string Certificate::to_json(int indent) const {
    nlohmann::ordered_json j;
    j["name"] = name_;
    j["steps"] = nlohmann::ordered_json::array();
    for (const auto& s : steps_)
        j["steps"].push_back({{"desc", s.desc}, {"verdict", s.pass ? "pass" : "fail"}, {"witness", s.witness}});
    j["verdict"] = pass() ? "pass" : "fail";
    return j.dump(indent);
}

Certificate Certificate::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    Certificate c(j.at("name").get<std::string>());
    for (const auto& s : j.at("steps"))
        c.add(s.at("desc").get<std::string>(), s.at("verdict").get<std::string>() == "pass",
              s.at("witness").get<std::string>());
    return c;
}

}  // namespace blowup::exact
