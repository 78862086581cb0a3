#pragma once

#include <stdexcept>
#include <string>

namespace prism {

/// Domain error carrying a stable name ("NotT0", "KeyMismatch", ...) that the
/// CLI prints verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

namespace errors {
inline constexpr const char* kNotT0 = "NotT0";
inline constexpr const char* kInvalidSpace = "InvalidSpace";
inline constexpr const char* kSchema = "SchemaError";
inline constexpr const char* kInconsistentHint = "InconsistentHint";
inline constexpr const char* kChecksFailed = "ChecksFailed";
inline constexpr const char* kKeyMismatch = "KeyMismatch";
inline constexpr const char* kDimTooLarge = "DimTooLarge";
inline constexpr const char* kNotInvariant = "NotInvariant";
inline constexpr const char* kInvalidAction = "InvalidAction";
inline constexpr const char* kNotDispersible = "NotDispersible";
inline constexpr const char* kNotEnumerable = "NotEnumerable";
inline constexpr const char* kTooLarge = "TooLarge";
inline constexpr const char* kUnknownPoint = "UnknownPoint";
inline constexpr const char* kInvalidGroup = "InvalidGroup";
inline constexpr const char* kIncompleteCandidate = "IncompleteCandidate";
}  // namespace errors

[[noreturn]] inline void fail(const char* name, const std::string& what) {
  throw Error(name, what);
}

}  // namespace prism
