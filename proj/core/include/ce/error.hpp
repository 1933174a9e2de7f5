#pragma once

#include <stdexcept>
#include <string>

namespace ce {

// Domain error with a stable machine-readable code. The CLI maps these to
// exit status 1 and a {"error": code, "detail": text} report; anything else
// escaping to the top level is treated as an internal failure (status 2).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(detail), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& detail) {
  throw Error(code, detail);
}

inline void require(bool ok, const std::string& code, const std::string& detail) {
  if (!ok) fail(code, detail);
}

} // namespace ce
