#pragma once

#include <stdexcept>
#include <string>

namespace sfs {

// Error taxonomy, mirrored by the CLI exit codes:
//   parse_error        -> 1  (malformed input text/JSON)
//   precondition_error -> 2  (well-formed input outside a documented domain)
//   internal_error     -> 3  (a theorem-backed invariant failed; always a bug)

struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct precondition_error : std::runtime_error {
  explicit precondition_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct internal_error : std::logic_error {
  explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

inline void check_internal(bool ok, const std::string& msg) {
  if (!ok) throw internal_error(msg);
}

}  // namespace sfs
