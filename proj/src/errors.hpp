#pragma once

#include <stdexcept>
#include <string>

namespace splitpot {

enum class Errc {
  ok = 0,
  domain,                // argument outside the mathematical domain
  unsupported,           // order/configuration outside the implemented range
  ambiguous_projection,  // target too close to the medial axis
  nonconverged,          // iteration failed to converge
  accuracy,              // quadrature tolerance not met at the node cap
  inadmissible,          // coupling coefficients fail the ellipticity check
  integrity,             // internal consistency violation (e.g. imaginary residue)
  config,                // bad run configuration
  internal,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

// Accuracy failures carry the best estimate reached.
class AccuracyError : public Error {
public:
  AccuracyError(const std::string& what, double achieved_value, double achieved_error)
      : Error(Errc::accuracy, what), value(achieved_value), error(achieved_error) {}
  double value;
  double error;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace splitpot
