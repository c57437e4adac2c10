#pragma once

#include <stdexcept>
#include <string>

namespace heunpot {

enum class Errc {
    InvalidParams,
    InfeasibleCase,
    DomainError,
    ConvergenceError,
    SingularPoint,
    UnsupportedFamily,
    TruncationError,
    DivisionByZero,
    BetaMismatch,
    NoNontrivialSolution,
    NormalizationError,
    NodeSingularity,
    StepUnderflow,
    CutoffTooSmall,
    ConfigError,
};

const char* to_string(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline const char* to_string(Errc c) {
    switch (c) {
        case Errc::InvalidParams: return "InvalidParams";
        case Errc::InfeasibleCase: return "InfeasibleCase";
        case Errc::DomainError: return "DomainError";
        case Errc::ConvergenceError: return "ConvergenceError";
        case Errc::SingularPoint: return "SingularPoint";
        case Errc::UnsupportedFamily: return "UnsupportedFamily";
        case Errc::TruncationError: return "TruncationError";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::BetaMismatch: return "BetaMismatch";
        case Errc::NoNontrivialSolution: return "NoNontrivialSolution";
        case Errc::NormalizationError: return "NormalizationError";
        case Errc::NodeSingularity: return "NodeSingularity";
        case Errc::StepUnderflow: return "StepUnderflow";
        case Errc::CutoffTooSmall: return "CutoffTooSmall";
        case Errc::ConfigError: return "ConfigError";
    }
    return "UnknownError";
}

}  // namespace heunpot
