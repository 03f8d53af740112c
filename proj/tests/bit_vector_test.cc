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

#include "mptzx/bit_vector.h"

#include <gtest/gtest.h>

using namespace mptzx;

TEST(BitVector, SetGetFlipAcrossWords) {
    BitVector v(130);
    EXPECT_FALSE(v.any());
    v.set(0, true);
    v.set(64, true);
    v.flip(129);
    EXPECT_TRUE(v.get(0));
    EXPECT_TRUE(v.get(64));
    EXPECT_TRUE(v.get(129));
    EXPECT_FALSE(v.get(1));
    EXPECT_EQ(v.popcount(), 3u);
    EXPECT_EQ(v.first_set(), 0u);
    v.set(0, false);
    EXPECT_EQ(v.first_set(), 64u);
    v.clear();
    EXPECT_FALSE(v.first_set().has_value());
}

TEST(BitVector, XorAndAnd) {
    BitVector a(70);
    BitVector b(70);
    a.set(3, true);
    a.set(69, true);
    b.set(3, true);
    b.set(10, true);
    BitVector c = a;
    c ^= b;
    EXPECT_EQ(c.str().size(), 70u);
    EXPECT_FALSE(c.get(3));
    EXPECT_TRUE(c.get(10));
    EXPECT_TRUE(c.get(69));
    a &= b;
    EXPECT_EQ(a.popcount(), 1u);
    EXPECT_TRUE(a.get(3));
}

TEST(BitVector, SizeMismatchThrows) {
    BitVector a(5);
    BitVector b(6);
    EXPECT_THROW(a ^= b, std::invalid_argument);
    EXPECT_THROW(a &= b, std::invalid_argument);
}

TEST(BitVector, StrIsLowBitFirst) {
    BitVector v(4);
    v.set(1, true);
    EXPECT_EQ(v.str(), "0100");
}
