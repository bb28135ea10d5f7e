#ifndef RDAVG_ERRORS_HPP
#define RDAVG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rdavg {

/// Invalid configuration or mismatched inputs (grids, schemas, parameters).
class config_error : public std::runtime_error {
  public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure during a run (blow-up, unconverged transient, ...).
class numerical_error : public std::runtime_error {
  public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

/// Integrator produced a non-finite state.
class blowup_error : public numerical_error {
  public:
    blowup_error(double time, const std::string& what)
        : numerical_error(what), time_(time) {}
    double time() const { return time_; }

  private:
    double time_;
};

/// Filesystem / serialization failure, including missing upstream artifacts.
class io_error : public std::runtime_error {
  public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rdavg

#endif
