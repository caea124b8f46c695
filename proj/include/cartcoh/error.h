#ifndef CARTCOH_ERROR_H_
#define CARTCOH_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cartcoh {

// Address of a subterm occurrence: child indices from the root. Pair
// components are 0 and 1; Compose factors are indexed in application order.
using Address = std::vector<std::size_t>;

std::string format_address(const Address& address);

enum class Errc {
  kTypeMismatch,
  kModeViolation,
  kPositionOutOfRange,
  kArityMismatch,
  kInvalidRedex,
  kInternalError,
  kIncompatibleGraph,
  kUnrealizable,
  kAlreadyEqual,
  kSyntax,
  kInvalidArgument,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, Address path = {});

  Errc code() const noexcept { return code_; }
  // Offending subterm, when the error concerns a term.
  const Address& path() const noexcept { return path_; }

 private:
  Errc code_;
  Address path_;
};

}  // namespace cartcoh

#endif  // CARTCOH_ERROR_H_
