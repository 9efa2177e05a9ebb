#pragma once

#include <stdexcept>
#include <string>

namespace twcanon {

/// Bad arguments: unknown vertices, x == y where distinct vertices are
/// required, malformed sets.
struct domain_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Input exceeds a configured size limit (exact-treewidth oracle,
/// permutation enumeration cap).
struct capacity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A precondition or a runtime-checked structural guarantee failed.
struct contract_error : std::logic_error {
  using std::logic_error::logic_error;
};

/// Malformed input file; message carries line/offset.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace twcanon
