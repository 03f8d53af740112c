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

#include "mptzx/tableau.h"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace mptzx {

namespace {

void set_bit(uint64_t *col, size_t row, bool value) {
    uint64_t m = uint64_t{1} << (row & 63);
    if (value) {
        col[row >> 6] |= m;
    } else {
        col[row >> 6] &= ~m;
    }
}

// Row-major GF(2) elimination helper. Each vector is `width` words. Returns the
// number of independent vectors; `vecs` is reduced in place.
size_t gf2_rank(std::vector<uint64_t> &vecs, size_t count, size_t width) {
    size_t rank = 0;
    for (size_t col = 0; col < width * 64 && rank < count; col++) {
        size_t word = col >> 6;
        uint64_t m = uint64_t{1} << (col & 63);
        size_t pivot = rank;
        while (pivot < count && !(vecs[pivot * width + word] & m)) {
            pivot++;
        }
        if (pivot == count) {
            continue;
        }
        if (pivot != rank) {
            for (size_t k = 0; k < width; k++) {
                std::swap(vecs[pivot * width + k], vecs[rank * width + k]);
            }
        }
        for (size_t r = rank + 1; r < count; r++) {
            if (vecs[r * width + word] & m) {
                for (size_t k = word; k < width; k++) {
                    vecs[r * width + k] ^= vecs[rank * width + k];
                }
            }
        }
        rank++;
    }
    return rank;
}

}  // namespace

StabilizerTableau::StabilizerTableau(size_t num_qubits)
    : n_(num_qubits),
      w_(BitVector::words_for(num_qubits)),
      x_(num_qubits * w_, 0),
      z_(num_qubits * w_, 0),
      sign_(w_, 0),
      scratch_(4 * w_, 0) {
}

StabilizerTableau StabilizerTableau::bell_pairs(size_t num_qubits) {
    if (num_qubits == 0 || num_qubits % 2 != 0) {
        throw std::invalid_argument("Bell-pair initial state needs a positive even qubit count, got " +
                                    std::to_string(num_qubits));
    }
    StabilizerTableau t(num_qubits);
    for (size_t k = 0; k < num_qubits; k += 2) {
        // row k: X_k X_{k+1}; row k+1: Z_k Z_{k+1}
        set_bit(t.xcol(k), k, true);
        set_bit(t.xcol(k + 1), k, true);
        set_bit(t.zcol(k), k + 1, true);
        set_bit(t.zcol(k + 1), k + 1, true);
    }
    return t;
}

StabilizerTableau StabilizerTableau::product_state(size_t num_qubits) {
    if (num_qubits == 0) {
        throw std::invalid_argument("product state needs at least one qubit");
    }
    StabilizerTableau t(num_qubits);
    for (size_t q = 0; q < num_qubits; q++) {
        set_bit(t.zcol(q), q, true);
    }
    return t;
}

StabilizerTableau StabilizerTableau::from_rows(const std::vector<PauliRow> &rows) {
    size_t n = rows.size();
    if (n == 0) {
        throw std::invalid_argument("tableau needs at least one row");
    }
    StabilizerTableau t(n);
    for (size_t i = 0; i < n; i++) {
        if (rows[i].num_qubits() != n) {
            throw std::invalid_argument("row " + std::to_string(i) + " has wrong length");
        }
        for (size_t q = 0; q < n; q++) {
            set_bit(t.xcol(q), i, rows[i].x.get(q));
            set_bit(t.zcol(q), i, rows[i].z.get(q));
        }
        set_bit(t.sign_.data(), i, rows[i].negative);
    }
    if (!t.is_valid()) {
        throw std::invalid_argument("rows do not form a maximal commuting independent set");
    }
    return t;
}

PauliRow StabilizerTableau::row(size_t index) const {
    if (index >= n_) {
        throw std::out_of_range("tableau row index out of range");
    }
    PauliRow out(n_);
    for (size_t q = 0; q < n_; q++) {
        out.x.set(q, bit(xcol(q), index));
        out.z.set(q, bit(zcol(q), index));
    }
    out.negative = bit(sign_.data(), index);
    return out;
}

std::vector<PauliRow> StabilizerTableau::rows() const {
    std::vector<PauliRow> out;
    out.reserve(n_);
    for (size_t i = 0; i < n_; i++) {
        out.push_back(row(i));
    }
    return out;
}

void StabilizerTableau::check_qubit(size_t q) const {
    if (q >= n_) {
        throw std::invalid_argument("qubit " + std::to_string(q) + " out of range for " + std::to_string(n_) +
                                    " qubits");
    }
}

void StabilizerTableau::debug_check() const {
#ifndef NDEBUG
    if (n_ <= 32) {
        assert(is_valid());
    }
#endif
}

void StabilizerTableau::apply_cnot(size_t control, size_t target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) {
        throw std::invalid_argument("CNOT control and target coincide");
    }
    uint64_t *xc = xcol(control), *xt = xcol(target), *zc = zcol(control), *zt = zcol(target);
    uint64_t *s = sign_.data();
    for (size_t k = 0; k < w_; k++) {
        s[k] ^= xc[k] & zt[k] & ~(xt[k] ^ zc[k]);
        xt[k] ^= xc[k];
        zc[k] ^= zt[k];
    }
    debug_check();
}

void StabilizerTableau::apply_swap(size_t a, size_t b) {
    check_qubit(a);
    check_qubit(b);
    if (a == b) {
        throw std::invalid_argument("SWAP on a single site");
    }
    uint64_t *xa = xcol(a), *xb = xcol(b), *za = zcol(a), *zb = zcol(b);
    for (size_t k = 0; k < w_; k++) {
        std::swap(xa[k], xb[k]);
        std::swap(za[k], zb[k]);
    }
}

std::optional<int> StabilizerTableau::collapse(std::span<const PauliTerm> terms, Rng &rng) {
    uint64_t *mask = scratch_.data();
    uint64_t *lo = mask + w_;
    uint64_t *hi = lo + w_;
    for (size_t k = 0; k < w_; k++) {
        mask[k] = 0;
    }
    for (const PauliTerm &t : terms) {
        check_qubit(t.qubit);
        if (t.x) {
            const uint64_t *zq = zcol(t.qubit);
            for (size_t k = 0; k < w_; k++) {
                mask[k] ^= zq[k];
            }
        }
        if (t.z) {
            const uint64_t *xq = xcol(t.qubit);
            for (size_t k = 0; k < w_; k++) {
                mask[k] ^= xq[k];
            }
        }
    }

    size_t pivot = n_;
    for (size_t k = 0; k < w_; k++) {
        if (mask[k]) {
            pivot = k * 64 + std::countr_zero(mask[k]);
            break;
        }
    }
    if (pivot == n_) {
        return std::nullopt;
    }
    mask[pivot >> 6] &= ~(uint64_t{1} << (pivot & 63));

    // Every other anticommuting row r becomes pivot_row * r. Phases are
    // accumulated per row as a 2-bit counter (lo, hi) of powers of i.
    for (size_t k = 0; k < w_; k++) {
        lo[k] = 0;
        hi[k] = 0;
    }
    for (size_t q = 0; q < n_; q++) {
        uint64_t *xq = xcol(q);
        uint64_t *zq = zcol(q);
        bool px = bit(xq, pivot);
        bool pz = bit(zq, pivot);
        if (!px && !pz) {
            continue;
        }
        for (size_t k = 0; k < w_; k++) {
            uint64_t m = mask[k];
            if (!m) {
                continue;
            }
            uint64_t x = xq[k], z = zq[k];
            uint64_t plus, minus;
            if (px && pz) {  // Y * (.)
                plus = ~x & z;
                minus = x & ~z;
            } else if (px) {  // X * (.)
                plus = x & z;
                minus = ~x & z;
            } else {  // Z * (.)
                plus = x & ~z;
                minus = x & z;
            }
            plus &= m;
            minus &= m;
            uint64_t carry = lo[k] & plus;
            lo[k] ^= plus;
            hi[k] ^= carry;
            uint64_t borrow = ~lo[k] & minus;
            lo[k] ^= minus;
            hi[k] ^= borrow;
            if (px) {
                xq[k] ^= m;
            }
            if (pz) {
                zq[k] ^= m;
            }
        }
    }
    bool pivot_negative = bit(sign_.data(), pivot);
    for (size_t k = 0; k < w_; k++) {
        assert((lo[k] & mask[k]) == 0);
        sign_[k] ^= (hi[k] & mask[k]) ^ (pivot_negative ? mask[k] : 0);
    }

    // Replace the pivot row by the measured observable with a random sign.
    for (size_t q = 0; q < n_; q++) {
        set_bit(xcol(q), pivot, false);
        set_bit(zcol(q), pivot, false);
    }
    for (const PauliTerm &t : terms) {
        if (t.x) {
            xcol(t.qubit)[pivot >> 6] ^= uint64_t{1} << (pivot & 63);
        }
        if (t.z) {
            zcol(t.qubit)[pivot >> 6] ^= uint64_t{1} << (pivot & 63);
        }
    }
    bool negative = rng.coin();
    set_bit(sign_.data(), pivot, negative);
    debug_check();
    return negative ? -1 : +1;
}

MeasurementResult StabilizerTableau::measure(const PauliRow &observable, Rng &rng) {
    if (observable.num_qubits() != n_) {
        throw std::invalid_argument("observable has " + std::to_string(observable.num_qubits()) +
                                    " qubits, tableau has " + std::to_string(n_));
    }
    std::vector<PauliTerm> terms;
    for (size_t q = 0; q < n_; q++) {
        bool x = observable.x.get(q), z = observable.z.get(q);
        if (x || z) {
            terms.push_back({static_cast<uint32_t>(q), x, z});
        }
    }
    int flip = observable.negative ? -1 : 1;
    if (auto outcome = collapse(terms, rng)) {
        return {*outcome * flip, true};
    }
    auto fixed = determined_outcome(observable);
    assert(fixed.has_value());
    return {*fixed, false};
}

BellOutcome StabilizerTableau::measure_bell_pair(size_t a, size_t b, Rng &rng) {
    check_qubit(a);
    check_qubit(b);
    if (a == b) {
        throw std::invalid_argument("Bell measurement needs two distinct sites");
    }
    uint32_t qa = static_cast<uint32_t>(a), qb = static_cast<uint32_t>(b);
    const PauliTerm xx[2] = {{qa, true, false}, {qb, true, false}};
    const PauliTerm zz[2] = {{qa, false, true}, {qb, false, true}};
    BellOutcome out;
    out.xx = collapse(xx, rng);
    out.zz = collapse(zz, rng);
    return out;
}

std::optional<int> StabilizerTableau::determined_outcome(const PauliRow &observable) const {
    if (observable.num_qubits() != n_) {
        throw std::invalid_argument("observable length mismatch");
    }
    std::vector<PauliRow> gens = rows();
    for (const PauliRow &g : gens) {
        if (g.anticommutes(observable)) {
            return std::nullopt;
        }
    }
    // Gaussian elimination on [x | z | combination] rows.
    size_t w2 = BitVector::words_for(2 * n_);
    size_t wc = BitVector::words_for(n_);
    size_t width = w2 + wc;
    std::vector<uint64_t> m(n_ * width, 0);
    for (size_t i = 0; i < n_; i++) {
        uint64_t *r = m.data() + i * width;
        for (size_t q = 0; q < n_; q++) {
            if (gens[i].x.get(q)) {
                r[q >> 6] |= uint64_t{1} << (q & 63);
            }
            if (gens[i].z.get(q)) {
                r[(n_ + q) >> 6] |= uint64_t{1} << ((n_ + q) & 63);
            }
        }
        r[w2 + (i >> 6)] |= uint64_t{1} << (i & 63);
    }
    std::vector<uint64_t> target(width, 0);
    for (size_t q = 0; q < n_; q++) {
        if (observable.x.get(q)) {
            target[q >> 6] |= uint64_t{1} << (q & 63);
        }
        if (observable.z.get(q)) {
            target[(n_ + q) >> 6] |= uint64_t{1} << ((n_ + q) & 63);
        }
    }
    size_t rank = 0;
    for (size_t col = 0; col < 2 * n_ && rank < n_; col++) {
        size_t word = col >> 6;
        uint64_t bitm = uint64_t{1} << (col & 63);
        size_t p = rank;
        while (p < n_ && !(m[p * width + word] & bitm)) {
            p++;
        }
        if (p == n_) {
            continue;
        }
        for (size_t k = 0; k < width; k++) {
            std::swap(m[p * width + k], m[rank * width + k]);
        }
        for (size_t r = 0; r < n_; r++) {
            if (r != rank && (m[r * width + word] & bitm)) {
                for (size_t k = 0; k < width; k++) {
                    m[r * width + k] ^= m[rank * width + k];
                }
            }
        }
        if (target[word] & bitm) {
            for (size_t k = 0; k < width; k++) {
                target[k] ^= m[rank * width + k];
            }
        }
        rank++;
    }
    for (size_t k = 0; k < w2; k++) {
        if (target[k]) {
            return std::nullopt;
        }
    }
    PauliRow product(n_);
    for (size_t i = 0; i < n_; i++) {
        if ((target[w2 + (i >> 6)] >> (i & 63)) & 1) {
            product.multiply_commuting(gens[i]);
        }
    }
    return product.negative == observable.negative ? +1 : -1;
}

size_t StabilizerTableau::rank_of_columns(std::span<const size_t> qubits) const {
    size_t count = 2 * qubits.size();
    std::vector<uint64_t> vecs(count * w_);
    for (size_t j = 0; j < qubits.size(); j++) {
        check_qubit(qubits[j]);
        const uint64_t *xq = xcol(qubits[j]);
        const uint64_t *zq = zcol(qubits[j]);
        for (size_t k = 0; k < w_; k++) {
            vecs[(2 * j) * w_ + k] = xq[k];
            vecs[(2 * j + 1) * w_ + k] = zq[k];
        }
    }
    return gf2_rank(vecs, count, w_);
}

size_t StabilizerTableau::entanglement_entropy(std::span<const size_t> region) const {
    if (region.empty()) {
        return 0;
    }
    // Column rank of the generators restricted to the region minus |region|.
    return rank_of_columns(region) - region.size();
}

size_t StabilizerTableau::interval_entropy(size_t begin, size_t end) const {
    if (begin > end || end > n_) {
        throw std::invalid_argument("bad interval");
    }
    std::vector<size_t> region(end - begin);
    for (size_t q = begin; q < end; q++) {
        region[q - begin] = q;
    }
    return entanglement_entropy(region);
}

int StabilizerTableau::mutual_information_i2() const {
    if (n_ % 3 != 0) {
        throw std::invalid_argument("mutual information needs N divisible by 3, got " + std::to_string(n_));
    }
    size_t third = n_ / 3;
    int sa = static_cast<int>(interval_entropy(0, third));
    int sb = static_cast<int>(interval_entropy(third, 2 * third));
    int sc = static_cast<int>(interval_entropy(2 * third, n_));
    return sa + sc - sb;
}

bool StabilizerTableau::is_valid() const {
    std::vector<PauliRow> gens = rows();
    for (size_t i = 0; i < n_; i++) {
        for (size_t j = i + 1; j < n_; j++) {
            if (gens[i].anticommutes(gens[j])) {
                return false;
            }
        }
    }
    size_t width = BitVector::words_for(2 * n_);
    std::vector<uint64_t> vecs(n_ * width, 0);
    for (size_t i = 0; i < n_; i++) {
        for (size_t q = 0; q < n_; q++) {
            if (gens[i].x.get(q)) {
                vecs[i * width + (q >> 6)] |= uint64_t{1} << (q & 63);
            }
            if (gens[i].z.get(q)) {
                vecs[i * width + ((n_ + q) >> 6)] |= uint64_t{1} << ((n_ + q) & 63);
            }
        }
    }
    return gf2_rank(vecs, n_, width) == n_;
}

std::string StabilizerTableau::str() const {
    std::string out;
    for (size_t i = 0; i < n_; i++) {
        out += row(i).str();
        out.push_back('\n');
    }
    return out;
}

}  // namespace mptzx
