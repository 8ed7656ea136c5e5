#pragma once

#include <string>
#include <vector>

namespace blowup::exact {

struct CertificateStep {
    std::string desc;
    bool pass = false;
    std::string witness;
};

// Record of an inequality chain. Passes iff every step passes; an empty chain fails.
class Certificate {
public:
    Certificate() = default;
    explicit Certificate(std::string name) : name_(std::move(name)) {}

    const std::string& name() const { return name_; }
    const std::vector<CertificateStep>& steps() const { return steps_; }
    bool pass() const;
    const CertificateStep* first_failure() const;

    Certificate& add(std::string desc, bool pass, std::string witness = {});
    // Appends the steps of a sub-certificate, prefixing descriptions with its name.
    Certificate& absorb(const Certificate& sub, const std::string& prefix = {});

    std::string to_json(int indent = 2) const;
    static Certificate from_json(const std::string& text);

private:
    std::string name_;
    std::vector<CertificateStep> steps_;
};

}  // namespace blowup::exact
