#include "landau/errors.hpp"

namespace landau {

const char* errc_name(Errc code)
{
    switch (code) {
    case Errc::MissingParameter: return "MissingParameter";
    case Errc::NonPositiveMassOrFrequency: return "NonPositiveMassOrFrequency";
    case Errc::OutOfDomain: return "OutOfDomain";
    case Errc::UnsupportedKind: return "UnsupportedKind";
    case Errc::PreconditionViolation: return "PreconditionViolation";
    case Errc::DomainError: return "DomainError";
    case Errc::PoleError: return "PoleError";
    case Errc::DivergentSeries: return "DivergentSeries";
    case Errc::UnsupportedInstance: return "UnsupportedInstance";
    case Errc::ContourFailure: return "ContourFailure";
    case Errc::BlowUp: return "BlowUp";
    case Errc::SingularParameter: return "SingularParameter";
    case Errc::GridTooShort: return "GridTooShort";
    case Errc::ZeroFrequencyParticular: return "ZeroFrequencyParticular";
    case Errc::ZeroFrequency: return "ZeroFrequency";
    case Errc::CutoffTooSmall: return "CutoffTooSmall";
    case Errc::CutoffOverflow: return "CutoffOverflow";
    case Errc::CutoffMismatch: return "CutoffMismatch";
    case Errc::WrongFamily: return "WrongFamily";
    case Errc::ZeroF: return "ZeroF";
    case Errc::NormalizationDiverges: return "NormalizationDiverges";
    case Errc::PTooLarge: return "PTooLarge";
    case Errc::EtaOutOfDisk: return "EtaOutOfDisk";
    case Errc::UnsupportedFamily: return "UnsupportedFamily";
    case Errc::QuadratureNonConvergent: return "QuadratureNonConvergent";
    case Errc::StepUnderflow: return "StepUnderflow";
    case Errc::IntegralNonConvergent: return "IntegralNonConvergent";
    }
    return "Unknown";
}

bool is_numerical(Errc code)
{
    switch (code) {
    case Errc::BlowUp:
    case Errc::ContourFailure:
    case Errc::DivergentSeries:
    case Errc::NormalizationDiverges:
    case Errc::QuadratureNonConvergent:
    case Errc::StepUnderflow:
    case Errc::IntegralNonConvergent:
        return true;
    default:
        return false;
    }
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
{
}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace landau
