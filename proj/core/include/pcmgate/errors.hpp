#pragma once

#include <stdexcept>
#include <string>

namespace pcmgate {

/// Input outside the mathematical domain of an operation (nonpositive weight,
/// perturbation fraction >= 1, requirement outside a calibrated range, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller broke an API contract: mismatched lengths, wrong provenance,
/// an empty input where data is required.
class ContractError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed file content.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A request that would exceed a configured resource cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Filesystem failure; the message carries the offending path.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pcmgate
