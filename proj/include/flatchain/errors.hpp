#pragma once

#include <stdexcept>
#include <string>

namespace flatchain {

/// Base of every exception thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Comparing sets of different cardinality or ground size.
class invalid_comparison : public error {
 public:
  using error::error;
};

/// Parameter outside its legal range (rank, m, k, s, ...).
class range_error : public error {
 public:
  using error::error;
};

/// Family expected to be uniform but has members on several levels.
class level_error : public error {
 public:
  using error::error;
};

/// Input violates an operation's domain (not flat, not an FFA, length mismatch).
class domain_error : public error {
 public:
  using error::error;
};

class malformed_cascade : public error {
 public:
  using error::error;
};

/// Parameters outside the hypotheses of a characterization (k = 1, k = n).
class unsupported_parameter : public error {
 public:
  using error::error;
};

/// The last-set criterion was asked about an empty initial segment.
class empty_segment : public error {
 public:
  using error::error;
};

/// Work or materialization would exceed the configured cap.
class capacity_error : public error {
 public:
  using error::error;
};

}  // namespace flatchain
