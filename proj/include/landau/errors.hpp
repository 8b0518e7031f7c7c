#pragma once

#include <stdexcept>
#include <string>

namespace landau {

enum class Errc {
    MissingParameter,
    NonPositiveMassOrFrequency,
    OutOfDomain,
    UnsupportedKind,
    PreconditionViolation,
    DomainError,
    PoleError,
    DivergentSeries,
    UnsupportedInstance,
    ContourFailure,
    BlowUp,
    SingularParameter,
    GridTooShort,
    ZeroFrequencyParticular,
    ZeroFrequency,
    CutoffTooSmall,
    CutoffOverflow,
    CutoffMismatch,
    WrongFamily,
    ZeroF,
    NormalizationDiverges,
    PTooLarge,
    EtaOutOfDisk,
    UnsupportedFamily,
    QuadratureNonConvergent,
    StepUnderflow,
    IntegralNonConvergent,
};

const char* errc_name(Errc code);

// true for failures of a numerical method rather than of the inputs
bool is_numerical(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what);
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

} // namespace landau
