#ifndef PROPKIT_ERROR_HPP
#define PROPKIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace propkit {

// User-facing failures: bad input files, profile mismatches, degree errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] inline void fail(const std::string& what) { throw Error(what); }

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(what);
}

}  // namespace propkit

#endif
