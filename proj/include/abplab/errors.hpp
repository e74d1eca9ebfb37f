#pragma once

#include <stdexcept>
#include <string>

namespace abplab {

/// Failure categories surfaced by the library. The CLI exits with code 2 on ConfigError; any
/// other kind halts the running certificate and gives exit code 1.
enum class ErrorKind {
  Parameter,
  Geometry,
  Gauge,
  Mesh,
  Weight,
  Solver,
  Stability,
  Discretization,
  Hypothesis,
  Config,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define ABPLAB_DEFINE_ERROR(Name, Kind)                                      \
  class Name : public Error {                                                \
   public:                                                                   \
    explicit Name(const std::string& what) : Error(ErrorKind::Kind, what) {} \
  };

ABPLAB_DEFINE_ERROR(ParameterError, Parameter)
ABPLAB_DEFINE_ERROR(GeometryError, Geometry)
ABPLAB_DEFINE_ERROR(GaugeError, Gauge)
ABPLAB_DEFINE_ERROR(MeshError, Mesh)
ABPLAB_DEFINE_ERROR(WeightError, Weight)
ABPLAB_DEFINE_ERROR(SolverError, Solver)
ABPLAB_DEFINE_ERROR(StabilityError, Stability)
ABPLAB_DEFINE_ERROR(DiscretizationError, Discretization)
ABPLAB_DEFINE_ERROR(HypothesisError, Hypothesis)
ABPLAB_DEFINE_ERROR(ConfigError, Config)

#undef ABPLAB_DEFINE_ERROR

}  // namespace abplab
