#pragma once

#include <stdexcept>
#include <string>

namespace negdep {

/// Error categories; the C API maps these one-to-one onto nd_status codes.
enum class Errc {
  invalid_argument = 1,
  parse = 2,
  dimension = 3,
  unsupported = 4,
  limit = 5,
  zero_probability = 6,
  internal = 7,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

inline void require(bool cond, Errc code, const std::string& msg) {
  if (!cond) throw Error(code, msg);
}

}  // namespace negdep
