// Copyright 2026 The mptzx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "mptzx/zx_diagram.h"

namespace mptzx {

using Complex = std::complex<double>;

/// Row-major dense complex matrix.
struct DenseMatrix {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<Complex> data;

    DenseMatrix() = default;
    DenseMatrix(size_t r, size_t c) : rows(r), cols(c), data(r * c) {
    }
    Complex &at(size_t r, size_t c) {
        return data[r * cols + c];
    }
    const Complex &at(size_t r, size_t c) const {
        return data[r * cols + c];
    }
    double max_abs() const;
};

/// Linear map of the diagram as a 2^|outputs| x 2^|inputs| matrix, obtained
/// by contracting the spider tensors (Hadamard wires insert the 2x2
/// Hadamard). Qubit 0 is the most significant bit of the row and column
/// indices. Throws std::length_error if the open legs exceed `max_open_legs`
/// or an intermediate tensor grows past `max_tensor_legs`.
DenseMatrix evaluate_dense(const ZxDiagram &d, size_t max_open_legs = 12, size_t max_tensor_legs = 22);

/// Distance from proportionality: both matrices are divided by their entry at
/// the position of the largest magnitude in `a`, and the largest entrywise
/// difference is returned. Returns +inf when exactly one side vanishes there
/// and 0 when both matrices are zero.
double proportionality_error(const DenseMatrix &a, const DenseMatrix &b);

}  // namespace mptzx
