#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hypdisc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class NotInvertible : public Error {
public:
    using Error::Error;
};

class DegenerateConfiguration : public Error {
public:
    using Error::Error;
};

class InvalidMatrix : public Error {
public:
    using Error::Error;
};

class NoBoundaryFixedPoint : public Error {
public:
    using Error::Error;
};

class InvalidTranslation : public Error {
public:
    using Error::Error;
};

class ReconstructionFailure : public Error {
public:
    using Error::Error;
};

class EigenSolverFailure : public Error {
public:
    using Error::Error;
};

/// Raised when a checker's hypothesis does not hold; `clause` names the failed check.
class PreconditionFailed : public Error {
public:
    PreconditionFailed(std::string clause, const std::string& detail)
        : Error("precondition failed: " + clause + (detail.empty() ? "" : " (" + detail + ")")),
          clause_(std::move(clause)) {}
    const std::string& clause() const noexcept { return clause_; }

private:
    std::string clause_;
};

/// The spectrum sits within tolerance of two classifications.
class AmbiguousClass : public Error {
public:
    AmbiguousClass(std::vector<std::string> candidates, const std::string& detail)
        : Error("ambiguous classification: " + join(candidates) + " (" + detail + ")"),
          candidates_(std::move(candidates)) {}
    const std::vector<std::string>& candidates() const noexcept { return candidates_; }

private:
    static std::string join(const std::vector<std::string>& v) {
        std::string out;
        for (const auto& s : v) {
            if (!out.empty()) out += " | ";
            out += s;
        }
        return out;
    }
    std::vector<std::string> candidates_;
};

/// Malformed external input (JSON files, CLI arguments).
class InputError : public Error {
public:
    using Error::Error;
};

}  // namespace hypdisc
