#ifndef TRACKSIM_ERRORS_HPP
#define TRACKSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tracksim {

/// Bad input data or parameters: rejected before any state is touched.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem / stream failures, carrying the offending path in the message.
class IoError : public std::runtime_error {
public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Model fit did not converge to an acceptable residual.
class CalibrationError : public std::runtime_error {
public:
  explicit CalibrationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace tracksim

#endif // TRACKSIM_ERRORS_HPP
