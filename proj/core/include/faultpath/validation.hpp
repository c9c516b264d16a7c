#ifndef FAULTPATH_VALIDATION_HPP_
#define FAULTPATH_VALIDATION_HPP_

#include <stdexcept>
#include <string>

namespace faultpath {

struct ValidationError : std::logic_error {
  explicit ValidationError(const std::string& what) : std::logic_error(what) {}
};

// Runtime-switchable deep checks. When enabled, solvers verify the structural
// facts they rely on (shortcut-weight validity, subtree disjointness, unique
// crossing edges, ...) and throw ValidationError on violation.
bool validation_enabled();
void set_validation(bool on);

struct ScopedValidation {
  explicit ScopedValidation(bool on) : prev_(validation_enabled()) { set_validation(on); }
  ~ScopedValidation() { set_validation(prev_); }

 private:
  bool prev_;
};

inline void validate(bool cond, const char* what) {
  if (!cond) throw ValidationError(what);
}

}  // namespace faultpath

#endif  // FAULTPATH_VALIDATION_HPP_
