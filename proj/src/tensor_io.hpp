// Copyright 2026 The smwt Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SMWT_TENSOR_IO_HPP
#define SMWT_TENSOR_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sensitivity.hpp"
#include "tensor.hpp"

namespace smwt {

/// Tensor file:
///   {"row_dims": [..], "col_dims": [..], "entries": [[re, im], ...]}
/// with entries in row-major unfolded order. A top-level "comment" string
/// is accepted and ignored. Throws ParseError on anything else.
EinsteinTensor parse_tensor_json(std::string_view text);
EinsteinTensor load_tensor(const std::string& path);

/// Shortest decimal that reads back bit-identically; always carries a '.'
/// or exponent so that −0.0 survives.
std::string format_double(double v);

std::string to_tensor_json(const EinsteinTensor& t);
void save_tensor(const EinsteinTensor& t, const std::string& path);

/// Converts between the 4-mode (I1,I2|J1,J2) block display used in printed
/// examples and the tensor. Entry a_{i1 i2, j1 j2} sits at display row
/// i1 + I1(j1−1), column i2 + I2(j2−1) (1-based); the display is
/// (I1·J1) × (I2·J2).
EinsteinTensor from_block_display(const PairedShape& shape, const Matrix& display);
Matrix to_block_display(const EinsteinTensor& t);

inline constexpr std::string_view kSweepCsvHeader =
    "eps_A,eps_D,alpha,norm_A,norm_A_pinv,bound,measured_error";

void write_sweep_csv(std::ostream& out, const std::vector<BoundReport>& rows);

}  // namespace smwt

#endif  // SMWT_TENSOR_IO_HPP
