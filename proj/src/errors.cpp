#include "kgbh/errors.hpp"

namespace kgbh {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::EmptyRange: return "EmptyRange";
    case Errc::PoleAtC: return "PoleAtC";
    case Errc::NoConverge: return "NoConverge";
    case Errc::PoleAtNonPositiveInteger: return "PoleAtNonPositiveInteger";
    case Errc::NoRoot: return "NoRoot";
    case Errc::NoClearance: return "NoClearance";
    case Errc::OutOfDomain: return "OutOfDomain";
    case Errc::SingularEndpoint: return "SingularEndpoint";
    case Errc::QuadratureFail: return "QuadratureFail";
    case Errc::GridTooCoarse: return "GridTooCoarse";
    case Errc::SupportHitBoundary: return "SupportHitBoundary";
    case Errc::Unstable: return "Unstable";
    case Errc::MissingTrajectorySamples: return "MissingTrajectorySamples";
    case Errc::SupportTouchesWindow: return "SupportTouchesWindow";
    case Errc::NoContraction: return "NoContraction";
    case Errc::DegenerateSeries: return "DegenerateSeries";
    case Errc::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

}  // namespace kgbh
