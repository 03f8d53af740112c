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

#include "mptzx/zx_eval.h"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "mptzx/circuit.h"
#include "mptzx/oracle/circuit_operator.h"
#include "mptzx/zx_build.h"

using namespace mptzx;

namespace {

DenseMatrix matrix(size_t r, size_t c, std::vector<Complex> entries) {
    DenseMatrix m(r, c);
    m.data = std::move(entries);
    return m;
}

ZxDiagram single_spider(SpiderColor color, int phase) {
    ZxDiagram d;
    SpiderId in = d.add_boundary(BoundaryKind::kInput, {});
    SpiderId s = d.add_spider(color, phase, {});
    SpiderId out = d.add_boundary(BoundaryKind::kOutput, {});
    d.add_wire(in, s);
    d.add_wire(s, out);
    return d;
}

}  // namespace

TEST(EvaluateDense, ZSpiderIsIdentity) {
    EXPECT_LT(proportionality_error(matrix(2, 2, {1, 0, 0, 1}), evaluate_dense(single_spider(SpiderColor::kZ, 0))),
              1e-12);
}

TEST(EvaluateDense, XSpiderWithPiPhaseIsPauliX) {
    EXPECT_LT(proportionality_error(matrix(2, 2, {0, 1, 1, 0}), evaluate_dense(single_spider(SpiderColor::kX, 2))),
              1e-12);
    EXPECT_LT(proportionality_error(matrix(2, 2, {1, 0, 0, -1}), evaluate_dense(single_spider(SpiderColor::kZ, 2))),
              1e-12);
    Complex i(0, 1);
    EXPECT_LT(proportionality_error(matrix(2, 2, {1, 0, 0, i}), evaluate_dense(single_spider(SpiderColor::kZ, 1))),
              1e-12);
}

TEST(EvaluateDense, HadamardWire) {
    ZxDiagram d;
    SpiderId in = d.add_boundary(BoundaryKind::kInput, {});
    SpiderId out = d.add_boundary(BoundaryKind::kOutput, {});
    d.add_wire(in, out, EdgeType::kHadamard);
    EXPECT_LT(proportionality_error(matrix(2, 2, {1, 1, 1, -1}), evaluate_dense(d)), 1e-12);
}

TEST(EvaluateDense, CnotDiagram) {
    BrickworkCircuit c;
    c.n_qubits = 2;
    c.depth_layers = 1;
    c.bricks = {{0, 0, GateKind::kCnot, ControlSide::kLeft}};
    ZxDiagram d = diagram_from_circuit(c);
    // Qubit 0 is the most significant bit: CNOT with control 0.
    DenseMatrix cnot = matrix(4, 4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
    EXPECT_LT(proportionality_error(cnot, evaluate_dense(d)), 1e-12);
    EXPECT_LT(proportionality_error(cnot, oracle::circuit_operator(c)), 1e-12);
}

TEST(EvaluateDense, RefusesOversizedDiagrams) {
    ZxDiagram d;
    SpiderId hub = d.add_spider(SpiderColor::kZ, 0, {});
    for (int i = 0; i < 13; i++) {
        d.add_wire(hub, d.add_boundary(i < 7 ? BoundaryKind::kInput : BoundaryKind::kOutput, {}));
    }
    try {
        evaluate_dense(d);
        FAIL();
    } catch (const std::length_error &e) {
        EXPECT_NE(std::string(e.what()).find("7 inputs"), std::string::npos);
    }
}

TEST(ProportionalityError, Conventions) {
    DenseMatrix a = matrix(1, 2, {1, 2});
    DenseMatrix b = matrix(1, 2, {Complex(0, 3), Complex(0, 6)});
    EXPECT_LT(proportionality_error(a, b), 1e-12);
    DenseMatrix zero = matrix(1, 2, {0, 0});
    EXPECT_EQ(proportionality_error(zero, zero), 0.0);
    EXPECT_EQ(proportionality_error(a, zero), std::numeric_limits<double>::infinity());
    EXPECT_THROW(proportionality_error(a, matrix(2, 1, {1, 2})), std::invalid_argument);
}
