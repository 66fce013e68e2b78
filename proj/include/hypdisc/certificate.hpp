#pragma once

#include <optional>
#include <string>
#include <vector>

namespace hypdisc {

enum class InequalityId { lox_cw, elliptic_cw, nonelliptic_cw, sp_elliptic, sp_shimizu, sp_cao_parker };

enum class Verdict { consistent, violation_nondiscrete_or_elementary, violation_nondiscrete };

std::string to_string(InequalityId id);
std::string to_string(Verdict v);
/// Throws InputError on unknown names.
InequalityId inequality_from_string(const std::string& s);

struct PreconditionCheck {
    std::string name;
    bool passed = true;
    std::optional<double> value;
};

struct Certificate {
    InequalityId inequality_id = InequalityId::lox_cw;
    double lhs = 0.0;
    double rhs = 0.0;
    bool satisfied = true;
    std::string f_name = "f";
    std::string g_name = "g";
    std::vector<PreconditionCheck> preconditions;
    bool non_elementary = false;
    int distinct_limit_points = 0;
    std::optional<bool> fixes_o;
    Verdict verdict = Verdict::consistent;

    void record(std::string name, bool passed, std::optional<double> value = std::nullopt) {
        preconditions.push_back({std::move(name), passed, value});
    }
};

/// Sets satisfied (lhs >= rhs - eps_cert) and the verdict from the recorded evidence.
void finalize(Certificate& c);

}  // namespace hypdisc
