#pragma once

#include <stdexcept>
#include <string>

namespace unionvals {

// Stable failure codes for every rejected input. The C API maps these to
// its status codes; messages are for humans only.
enum class Errc {
    DuplicatePlayer,
    UnknownPlayer,
    UnknownPlayerInCoalition,
    MissingCoalition,
    NonzeroEmptyWorth,
    RosterTooLarge,
    SingletonSplit,
    EmptyRestriction,
    CoalitionOutsideBlock,
    WeightUndefined,
    InvalidSearchSpace,
    SyntaxError,
    ValidationError,
    UnknownIdentifier,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::DuplicatePlayer: return "DuplicatePlayer";
        case Errc::UnknownPlayer: return "UnknownPlayer";
        case Errc::UnknownPlayerInCoalition: return "UnknownPlayerInCoalition";
        case Errc::MissingCoalition: return "MissingCoalition";
        case Errc::NonzeroEmptyWorth: return "NonzeroEmptyWorth";
        case Errc::RosterTooLarge: return "RosterTooLarge";
        case Errc::SingletonSplit: return "SingletonSplit";
        case Errc::EmptyRestriction: return "EmptyRestriction";
        case Errc::CoalitionOutsideBlock: return "CoalitionOutsideBlock";
        case Errc::WeightUndefined: return "WeightUndefined";
        case Errc::InvalidSearchSpace: return "InvalidSearchSpace";
        case Errc::SyntaxError: return "SyntaxError";
        case Errc::ValidationError: return "ValidationError";
        case Errc::UnknownIdentifier: return "UnknownIdentifier";
    }
    return "?";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace unionvals
