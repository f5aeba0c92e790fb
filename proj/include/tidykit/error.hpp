#pragma once
#include <stdexcept>
#include <string>

namespace tidykit {

// Every failure in this library throws GroupError. `code` is a stable,
// machine-checkable token ("not_a_group", "not_normal", ...); the message is
// for humans and may carry witnesses (e.g. the violating triple).
class GroupError : public std::runtime_error {
public:
  GroupError(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
  throw GroupError(code, msg);
}

}  // namespace tidykit
