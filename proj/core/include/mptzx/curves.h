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

#include <cstddef>
#include <map>
#include <vector>

namespace mptzx {

/// One measured point of a curve: abscissa, mean and standard error.
struct CurvePoint {
    double x;
    double y;
    double err;
};

/// Curves keyed by system size N; each curve sorted by x.
using CurveSet = std::map<size_t, std::vector<CurvePoint>>;

}  // namespace mptzx
