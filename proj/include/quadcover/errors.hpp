#pragma once

#include <stdexcept>
#include <string>

namespace quadcover {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Invalid user input (bad vertices, unparsable files, schema violations).
class InputError : public Error {
public:
  using Error::Error;
};

/// Failure while computing a plan from valid inputs.
class ComputeError : public Error {
public:
  using Error::Error;
};

/// Filesystem failure (missing file, unwritable output).
class IoError : public Error {
public:
  using Error::Error;
};

// --- geometry ---
class DegenerateQuadError : public InputError {
public:
  using InputError::InputError;
};
class NonConvexError : public InputError {
public:
  using InputError::InputError;
};
class SelfIntersectingError : public InputError {
public:
  using InputError::InputError;
};

// --- homography ---
class DegenerateConfigurationError : public ComputeError {
public:
  using ComputeError::ComputeError;
};
class LineAtInfinityError : public ComputeError {
public:
  using ComputeError::ComputeError;
};

// --- conic ---
class NotAnEllipseError : public ComputeError {
public:
  using ComputeError::ComputeError;
};
class NotBoundedError : public ComputeError {
public:
  using ComputeError::ComputeError;
};

// --- packing ---
class UnsupportedCountError : public InputError {
public:
  using InputError::InputError;
};
class PackingParseError : public InputError {
public:
  using InputError::InputError;
};
class InvalidPackingError : public InputError {
public:
  using InputError::InputError;
};

// --- placement ---
class NoInteriorMinimumError : public ComputeError {
public:
  using ComputeError::ComputeError;
};

// --- scenario / cli ---
class ScenarioParseError : public InputError {
public:
  using InputError::InputError;
};

/// Plan-level failure; carries the index of the offending UAV (1-based, 0 if n/a).
class PlanningError : public ComputeError {
public:
  PlanningError(int uav_index, const std::string& what)
      : ComputeError("uav " + std::to_string(uav_index) + ": " + what),
        uav_index_(uav_index) {}
  int uav_index() const { return uav_index_; }

private:
  int uav_index_;
};

}  // namespace quadcover
