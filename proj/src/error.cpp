#include "temperley/error.hpp"

namespace temperley {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ParseError: return "ParseError";
    case Errc::NotConnected: return "NotConnected";
    case Errc::RotationMismatch: return "RotationMismatch";
    case Errc::EulerViolation: return "EulerViolation";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::UnknownFace: return "UnknownFace";
    case Errc::RootMismatch: return "RootMismatch";
    case Errc::CycleDetected: return "CycleDetected";
    case Errc::NotIncident: return "NotIncident";
    case Errc::TooLarge: return "TooLarge";
    case Errc::Unreachable: return "Unreachable";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::StructureMismatch: return "StructureMismatch";
    case Errc::MissingCoordinates: return "MissingCoordinates";
    case Errc::CutTopologyUnsupported: return "CutTopologyUnsupported";
    case Errc::NotOnTree: return "NotOnTree";
    case Errc::BadParameters: return "BadParameters";
  }
  return "Error";
}

}  // namespace temperley
