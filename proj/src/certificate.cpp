#include "hypdisc/certificate.hpp"

#include "hypdisc/errors.hpp"
#include "hypdisc/tolerances.hpp"

namespace hypdisc {

std::string to_string(InequalityId id) {
    switch (id) {
        case InequalityId::lox_cw: return "lox_cw";
        case InequalityId::elliptic_cw: return "elliptic_cw";
        case InequalityId::nonelliptic_cw: return "nonelliptic_cw";
        case InequalityId::sp_elliptic: return "sp_elliptic";
        case InequalityId::sp_shimizu: return "sp_shimizu";
        case InequalityId::sp_cao_parker: return "sp_cao_parker";
    }
    return "unknown";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::consistent: return "consistent";
        case Verdict::violation_nondiscrete_or_elementary: return "violation_nondiscrete_or_elementary";
        case Verdict::violation_nondiscrete: return "violation_nondiscrete";
    }
    return "unknown";
}

InequalityId inequality_from_string(const std::string& s) {
    for (InequalityId id : {InequalityId::lox_cw, InequalityId::elliptic_cw, InequalityId::nonelliptic_cw,
                            InequalityId::sp_elliptic, InequalityId::sp_shimizu, InequalityId::sp_cao_parker})
        if (s == to_string(id)) return id;
    if (s == "lox") return InequalityId::lox_cw;
    if (s == "elliptic") return InequalityId::elliptic_cw;
    if (s == "nonelliptic") return InequalityId::nonelliptic_cw;
    if (s == "shimizu") return InequalityId::sp_shimizu;
    if (s == "cao_parker") return InequalityId::sp_cao_parker;
    throw InputError("unknown inequality id: " + s);
}

void finalize(Certificate& c) {
    c.satisfied = c.lhs >= c.rhs - tol::kCert;
    if (c.satisfied) {
        c.verdict = Verdict::consistent;
    } else if (c.fixes_o.value_or(false)) {
        // The disjunction's other branch holds: the pair fixes o.
        c.verdict = Verdict::consistent;
    } else {
        c.verdict = c.non_elementary ? Verdict::violation_nondiscrete : Verdict::violation_nondiscrete_or_elementary;
    }
}

}  // namespace hypdisc
