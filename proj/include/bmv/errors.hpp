#pragma once

#include <stdexcept>
#include <string>

namespace bmv {

// Base for every computation error raised by the simulator. The CLI maps
// these to exit code 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class NonFiniteAmplitude : public DomainError {
 public:
  using DomainError::DomainError;
};

class ZeroNorm : public Error {
 public:
  using Error::Error;
};

class NotNormalized : public Error {
 public:
  using Error::Error;
};

// arg<a|b> is undefined when the states are (numerically) orthogonal.
class OrthogonalStates : public Error {
 public:
  using Error::Error;
};

// Postselection on a port whose probability underflows.
class ImpossibleOutcome : public Error {
 public:
  using Error::Error;
};

class DegenerateState : public Error {
 public:
  using Error::Error;
};

// N_L1 == 0: the observed SNR has no finite value.
class NoFailures : public DomainError {
 public:
  using DomainError::DomainError;
};

class NoPostselections : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace bmv
