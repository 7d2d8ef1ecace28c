#pragma once

#include <stdexcept>
#include <string>

namespace qpi {

enum class Errc {
    RaggedRows,
    UnknownCharacter,
    EmptyInput,
    BoxOutsideShape,
    BadRange,
    ShapeOverflow,
    InternalVerificationFailed,
    NotPrime,
    FormulaMismatch,
    BadEll,
    EvenEll,
    HypothesisViolated,
    GcdViolation,
    ZeroDim,
    NoRootOfUnity,
    TooLarge,
    BadSpec,
    SkewSymmetryViolated,
    Io,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace qpi
