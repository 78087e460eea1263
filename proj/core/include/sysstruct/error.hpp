#pragma once

#include <stdexcept>
#include <string>

namespace sysstruct {

enum class errc {
  zero_denominator,
  dimension_mismatch,
  singular_matrix,
  index_not_zero,
  no_manifest_outputs,
  inconsistent_component,
  algebraic_loop,
  singular_loop,
  bad_node,
  aux_self_loop,
  parse_error,
  not_applicable,
};

const char* errc_name(errc code) noexcept;

/// Domain error carrying a machine-checkable code next to the message.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw error(code, what); }

}  // namespace sysstruct
