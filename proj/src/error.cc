#include "cartcoh/error.h"

#include <string>

namespace cartcoh {

std::string format_address(const Address& address) {
  if (address.empty()) return "root";
  std::string out;
  for (std::size_t i = 0; i < address.size(); ++i) {
    if (i > 0) out += '.';
    out += std::to_string(address[i]);
  }
  return out;
}

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kTypeMismatch: return "TypeMismatch";
    case Errc::kModeViolation: return "ModeViolation";
    case Errc::kPositionOutOfRange: return "PositionOutOfRange";
    case Errc::kArityMismatch: return "ArityMismatch";
    case Errc::kInvalidRedex: return "InvalidRedex";
    case Errc::kInternalError: return "InternalError";
    case Errc::kIncompatibleGraph: return "IncompatibleGraph";
    case Errc::kUnrealizable: return "Unrealizable";
    case Errc::kAlreadyEqual: return "AlreadyEqual";
    case Errc::kSyntax: return "SyntaxError";
    case Errc::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message, Address path)
    : std::runtime_error(message), code_(code), path_(std::move(path)) {}

}  // namespace cartcoh
