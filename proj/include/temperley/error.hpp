#ifndef TEMPERLEY_ERROR_HPP
#define TEMPERLEY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace temperley {

enum class Errc {
  ParseError,
  NotConnected,
  RotationMismatch,
  EulerViolation,
  UnknownVertex,
  UnknownFace,
  RootMismatch,
  CycleDetected,
  NotIncident,
  TooLarge,
  Unreachable,
  DimensionMismatch,
  StructureMismatch,
  MissingCoordinates,
  CutTopologyUnsupported,
  NotOnTree,
  BadParameters,
};

const char* errc_name(Errc c);

struct Error : std::runtime_error {
  Errc code;
  Error(Errc c, const std::string& what)
      : std::runtime_error(std::string(errc_name(c)) + ": " + what), code(c) {}
};

}  // namespace temperley

#endif
