#pragma once

#include <stdexcept>
#include <string>

namespace algconn {

enum class ErrorCode {
  invalid_argument,
  invalid_vertex,
  disconnected,
  parse_error,
  cap_exceeded,
  not_cut_vertex,
  not_a_tree,
  not_a_bridge,
  numerical,
  unknown_id,
  empty_class,
  internal,
};

// Every failure raised by the library carries one of the codes above so the
// C layer can translate it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace algconn
