#pragma once

#include <stdexcept>
#include <string>

namespace kgbh {

enum class Errc {
  InvalidParams,
  EmptyRange,
  PoleAtC,
  NoConverge,
  PoleAtNonPositiveInteger,
  NoRoot,
  NoClearance,
  OutOfDomain,
  SingularEndpoint,
  QuadratureFail,
  GridTooCoarse,
  SupportHitBoundary,
  Unstable,
  MissingTrajectorySamples,
  SupportTouchesWindow,
  NoContraction,
  DegenerateSeries,
  ConfigError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace kgbh
