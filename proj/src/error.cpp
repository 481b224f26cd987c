#include "onemedian/error.hpp"

namespace onemedian {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::NegativeCost: return "NegativeCost";
    case Errc::NodeIdOutOfRange: return "NodeIdOutOfRange";
    case Errc::InvalidInstance: return "InvalidInstance";
    case Errc::Disconnected: return "Disconnected";
    case Errc::TargetUnreachable: return "TargetUnreachable";
    case Errc::SizeGuard: return "SizeGuard";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::Feasibility: return "FeasibilityError";
    case Errc::NonIntegerWeight: return "NonIntegerWeight";
    case Errc::Parse: return "ParseError";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::Io: return "IoError";
    case Errc::Config: return "ConfigError";
  }
  return "Unknown";
}

}  // namespace onemedian
