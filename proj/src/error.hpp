// Copyright 2026 The smwt Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SMWT_ERROR_HPP
#define SMWT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace smwt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not conform, or a shape is itself invalid.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A 1-based multi-index or flat index is out of range.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// Non-finite input, or an iterative kernel failed to converge.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A scalar argument lies outside the function's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed tensor file or CSV input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A file could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public NumericalError {
 public:
  SingularMatrixError(const std::string& what, std::size_t rank)
      : NumericalError(what), rank_(rank) {}
  std::size_t rank() const noexcept { return rank_; }

 private:
  std::size_t rank_;
};

/// Raised by tensor inversion; carries the numerical unfolding rank and the
/// smallest singular value so callers can tell "not applicable" from "bug".
class SingularTensorError : public NumericalError {
 public:
  SingularTensorError(const std::string& what, std::size_t rank, double sigma_min)
      : NumericalError(what), rank_(rank), sigma_min_(sigma_min) {}
  std::size_t rank() const noexcept { return rank_; }
  double sigma_min() const noexcept { return sigma_min_; }

 private:
  std::size_t rank_;
  double sigma_min_;
};

/// The capacitance tensor B⁻¹ + V⋆A⁻¹⋆U of the invertible update is singular.
class SingularCapacitanceError : public NumericalError {
 public:
  SingularCapacitanceError(const std::string& what, std::size_t rank)
      : NumericalError(what), rank_(rank) {}
  std::size_t rank() const noexcept { return rank_; }

 private:
  std::size_t rank_;
};

/// The unperturbed solution is zero, so the normalized error is undefined.
class DegenerateSolutionError : public Error {
 public:
  using Error::Error;
};

}  // namespace smwt

#endif  // SMWT_ERROR_HPP
