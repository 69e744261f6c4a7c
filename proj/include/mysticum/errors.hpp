#pragma once

#include <stdexcept>
#include <string>

namespace mysticum {

// Recoverable degeneracy in the input domain (coincident points, bad
// parameter values, inexact division, ...). The CLI maps these to exit
// code 1.
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Violation of a classical incidence theorem on exact input. This is a
// bug, not a user error; it must never be caught as a degeneracy.
class theorem_violation : public std::logic_error {
 public:
  explicit theorem_violation(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const char* what) {
  if (!cond) throw domain_error(what);
}

inline void check_theorem(bool cond, const char* what) {
  if (!cond) throw theorem_violation(what);
}

}  // namespace mysticum
