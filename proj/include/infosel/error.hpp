#pragma once

#include <stdexcept>
#include <string>

namespace infosel {

// Exit status of the CLI doubles as the error category.
enum class ErrorCode : int {
  kUsage = 2,         // malformed command line or configuration
  kIo = 3,            // file could not be read or written
  kSchema = 4,        // input parsed but violates the expected layout
  kPrecondition = 5,  // operation called outside its domain
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool condition, const std::string& what) {
  if (!condition) fail(ErrorCode::kPrecondition, what);
}

}  // namespace infosel
