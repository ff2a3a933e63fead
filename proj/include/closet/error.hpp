#pragma once

#include <stdexcept>
#include <string>

namespace closet {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed fuzzy systems, bad parameters, unresolved variable/term references.
struct ConfigError : Error {
  using Error::Error;
};

/// Unreadable or undecodable images, degenerate edge maps.
struct ImageError : Error {
  using Error::Error;
};

/// A region of interest did not yield enough edge points for a feature.
struct InsufficientDataError : Error {
  InsufficientDataError(int roi_index, const std::string& what)
      : Error("ROI " + std::to_string(roi_index) + ": " + what), roi(roi_index) {}
  int roi;
};

struct ModelError : Error {
  using Error::Error;
};

struct TrainingError : Error {
  using Error::Error;
};

}  // namespace closet
