#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ppasym {

// Every library error carries the name of the module that raised it; what()
// renders as "<module>: <message>".
class Error : public std::runtime_error {
 public:
  Error(std::string_view module, const std::string& message)
      : std::runtime_error(std::string(module) + ": " + message), module_(module) {}

  const std::string& module() const noexcept { return module_; }

 private:
  std::string module_;
};

}  // namespace ppasym
