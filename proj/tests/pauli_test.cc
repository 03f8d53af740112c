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

#include "mptzx/pauli.h"

#include <gtest/gtest.h>

using namespace mptzx;

TEST(PauliRow, ParseAndPrintRoundTrip) {
    PauliRow p = PauliRow::from_string("-XZ_Y");
    EXPECT_TRUE(p.negative);
    EXPECT_EQ(p.num_qubits(), 4u);
    EXPECT_TRUE(p.x.get(0) && !p.z.get(0));
    EXPECT_TRUE(!p.x.get(1) && p.z.get(1));
    EXPECT_TRUE(!p.x.get(2) && !p.z.get(2));
    EXPECT_TRUE(p.x.get(3) && p.z.get(3));
    EXPECT_EQ(PauliRow::from_string(p.str()), p);
    EXPECT_EQ(PauliRow::from_string("IXI"), PauliRow::from_string("+_X_"));
}

TEST(PauliRow, BadCharacterThrows) {
    EXPECT_THROW(PauliRow::from_string("XQ"), std::invalid_argument);
}

TEST(PauliRow, Anticommutation) {
    EXPECT_TRUE(PauliRow::from_string("X").anticommutes(PauliRow::from_string("Z")));
    EXPECT_TRUE(PauliRow::from_string("Y").anticommutes(PauliRow::from_string("Z")));
    EXPECT_FALSE(PauliRow::from_string("XX").anticommutes(PauliRow::from_string("ZZ")));
    EXPECT_FALSE(PauliRow::from_string("X_").anticommutes(PauliRow::from_string("_Z")));
    EXPECT_THROW(PauliRow::from_string("X").anticommutes(PauliRow::from_string("XX")), std::invalid_argument);
}

TEST(PauliRow, ProductSigns) {
    // XX * ZZ = (XZ)(XZ) = (-iY)(-iY) = -YY
    PauliRow p = PauliRow::from_string("XX");
    p.multiply_commuting(PauliRow::from_string("ZZ"));
    EXPECT_EQ(p, PauliRow::from_string("-YY"));
    PauliRow q = PauliRow::from_string("-Z_");
    q.multiply_commuting(PauliRow::from_string("ZZ"));
    EXPECT_EQ(q, PauliRow::from_string("-_Z"));
    PauliRow r = PauliRow::from_string("X");
    EXPECT_THROW(r.multiply_commuting(PauliRow::from_string("Z")), std::invalid_argument);
}

TEST(PauliRow, SingleQubitProductPhase) {
    // X Z = -i Y, Z X = i Y
    EXPECT_EQ(pauli_product_phase(true, false, false, true), -1);
    EXPECT_EQ(pauli_product_phase(false, true, true, false), 1);
    EXPECT_EQ(pauli_product_phase(true, false, true, false), 0);
}
