#pragma once

#include <stdexcept>
#include <string>

namespace ebie {

// Error taxonomy for the library. Each type names the precondition or
// invariant whose violation it reports; compute code throws these and the
// CLI layer maps them onto exit diagnostics.

struct DegenerateCurve : std::runtime_error {
  explicit DegenerateCurve(const std::string& what) : std::runtime_error(what) {}
};

struct SelfIntersectionRisk : std::runtime_error {
  explicit SelfIntersectionRisk(const std::string& what) : std::runtime_error(what) {}
};

struct OriginEvaluation : std::runtime_error {
  explicit OriginEvaluation(const std::string& what) : std::runtime_error(what) {}
};

struct OddNodeCount : std::runtime_error {
  explicit OddNodeCount(const std::string& what) : std::runtime_error(what) {}
};

struct TooCloseToBoundary : std::runtime_error {
  explicit TooCloseToBoundary(const std::string& what) : std::runtime_error(what) {}
};

struct SideMismatch : std::runtime_error {
  explicit SideMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct SingularSystem : std::runtime_error {
  explicit SingularSystem(const std::string& what) : std::runtime_error(what) {}
};

struct CurveDoesNotEncloseInclusion : std::runtime_error {
  explicit CurveDoesNotEncloseInclusion(const std::string& what) : std::runtime_error(what) {}
};

struct AsymmetricStrain : std::runtime_error {
  explicit AsymmetricStrain(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigInvalid : std::runtime_error {
  explicit ConfigInvalid(const std::string& what) : std::runtime_error(what) {}
};

struct ComputeFailure : std::runtime_error {
  explicit ComputeFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ebie
