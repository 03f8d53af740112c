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

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace mptzx {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

/// Tensor over binary legs. Entry index bit k (LSB first) is leg labels[k].
struct Tensor {
    std::vector<uint32_t> labels;
    std::vector<Complex> data;
};

Complex phase_factor(int quarter_turns) {
    static const Complex table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[normalize_phase(quarter_turns)];
}

Tensor spider_tensor(SpiderColor color, int phase, std::vector<uint32_t> labels) {
    size_t k = labels.size();
    Tensor t;
    t.labels = std::move(labels);
    t.data.assign(size_t{1} << k, Complex{0, 0});
    Complex e = phase_factor(phase);
    if (color == SpiderColor::kZ) {
        t.data[0] += 1.0;
        t.data[(size_t{1} << k) - 1] += e;
    } else {
        // |+...+><+...+| + e |-...-><-...-| in the computational basis.
        double norm = std::pow(kInvSqrt2, static_cast<double>(k));
        for (size_t idx = 0; idx < t.data.size(); idx++) {
            bool odd = std::popcount(idx) % 2 == 1;
            t.data[idx] = norm * (1.0 + (odd ? -e : e));
        }
    }
    return t;
}

Tensor contract(const Tensor &a, const Tensor &b) {
    std::vector<uint32_t> shared, out;
    for (uint32_t l : a.labels) {
        (std::find(b.labels.begin(), b.labels.end(), l) != b.labels.end() ? shared : out).push_back(l);
    }
    for (uint32_t l : b.labels) {
        if (std::find(shared.begin(), shared.end(), l) == shared.end()) {
            out.push_back(l);
        }
    }
    // Bit masks: for each output / shared leg, its stride in a and b.
    auto stride_of = [](const Tensor &t, uint32_t label) -> size_t {
        for (size_t k = 0; k < t.labels.size(); k++) {
            if (t.labels[k] == label) {
                return size_t{1} << k;
            }
        }
        return 0;
    };
    std::vector<size_t> out_a, out_b, sh_a, sh_b;
    for (uint32_t l : out) {
        out_a.push_back(stride_of(a, l));
        out_b.push_back(stride_of(b, l));
    }
    for (uint32_t l : shared) {
        sh_a.push_back(stride_of(a, l));
        sh_b.push_back(stride_of(b, l));
    }
    size_t n_sh = size_t{1} << shared.size();
    std::vector<size_t> sh_off_a(n_sh), sh_off_b(n_sh);
    for (size_t s = 0; s < n_sh; s++) {
        for (size_t k = 0; k < shared.size(); k++) {
            if ((s >> k) & 1) {
                sh_off_a[s] += sh_a[k];
                sh_off_b[s] += sh_b[k];
            }
        }
    }
    Tensor r;
    r.labels = out;
    r.data.assign(size_t{1} << out.size(), Complex{0, 0});
    for (size_t o = 0; o < r.data.size(); o++) {
        size_t base_a = 0, base_b = 0;
        for (size_t k = 0; k < out.size(); k++) {
            if ((o >> k) & 1) {
                base_a += out_a[k];
                base_b += out_b[k];
            }
        }
        Complex acc{0, 0};
        for (size_t s = 0; s < n_sh; s++) {
            acc += a.data[base_a + sh_off_a[s]] * b.data[base_b + sh_off_b[s]];
        }
        r.data[o] = acc;
    }
    return r;
}

size_t shared_count(const Tensor &a, const Tensor &b) {
    size_t n = 0;
    for (uint32_t l : a.labels) {
        n += std::find(b.labels.begin(), b.labels.end(), l) != b.labels.end();
    }
    return n;
}

}  // namespace

double DenseMatrix::max_abs() const {
    double m = 0;
    for (const Complex &c : data) {
        m = std::max(m, std::abs(c));
    }
    return m;
}

DenseMatrix evaluate_dense(const ZxDiagram &d, size_t max_open_legs, size_t max_tensor_legs) {
    size_t n_in = d.inputs().size();
    size_t n_out = d.outputs().size();
    if (n_in + n_out > max_open_legs) {
        throw std::length_error("evaluate_dense: " + std::to_string(n_in) + " inputs + " + std::to_string(n_out) +
                                " outputs exceed the cap of " + std::to_string(max_open_legs) + " open legs");
    }

    uint32_t next_label = 0;
    // Open legs get the first labels: outputs then inputs.
    std::unordered_map<SpiderId, uint32_t> open_label;
    for (SpiderId o : d.outputs()) {
        open_label[o] = next_label++;
    }
    for (SpiderId i : d.inputs()) {
        open_label[i] = next_label++;
    }

    std::vector<std::vector<uint32_t>> legs(d.id_bound());
    std::vector<Tensor> tensors;
    for (const Wire &w : d.wires()) {
        if (w.a == w.b) {
            continue;  // self-loops are folded into the spider below
        }
        uint32_t la = next_label++;
        legs[w.a].push_back(la);
        if (w.type == EdgeType::kPlain) {
            legs[w.b].push_back(la);
        } else {
            uint32_t lb = next_label++;
            legs[w.b].push_back(lb);
            tensors.push_back(Tensor{{la, lb}, {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2}});
        }
    }
    for (SpiderId v : d.live_spiders()) {
        const Spider &s = d.spider(v);
        std::vector<uint32_t> l = legs[v];
        int phase = s.phase + 2 * static_cast<int>(d.self_loops(v).hadamard % 2);
        auto it = open_label.find(v);
        if (it != open_label.end()) {
            l.push_back(it->second);
        }
        if (l.size() > max_tensor_legs) {
            throw std::length_error("evaluate_dense: spider " + std::to_string(v) + " has too many legs");
        }
        tensors.push_back(spider_tensor(s.color, phase, std::move(l)));
    }

    while (tensors.size() > 1) {
        size_t best_i = 0, best_j = 1;
        size_t best_size = std::numeric_limits<size_t>::max();
        bool best_shares = false;
        for (size_t i = 0; i < tensors.size(); i++) {
            for (size_t j = i + 1; j < tensors.size(); j++) {
                size_t sh = shared_count(tensors[i], tensors[j]);
                size_t size = tensors[i].labels.size() + tensors[j].labels.size() - 2 * sh;
                bool shares = sh > 0;
                if ((shares && !best_shares) || (shares == best_shares && size < best_size)) {
                    best_i = i;
                    best_j = j;
                    best_size = size;
                    best_shares = shares;
                }
            }
        }
        if (best_size > max_tensor_legs) {
            throw std::length_error("evaluate_dense: intermediate tensor would have " + std::to_string(best_size) +
                                    " legs");
        }
        Tensor merged = contract(tensors[best_i], tensors[best_j]);
        tensors[best_i] = std::move(merged);
        tensors.erase(tensors.begin() + static_cast<std::ptrdiff_t>(best_j));
    }

    DenseMatrix m(size_t{1} << n_out, size_t{1} << n_in);
    if (tensors.empty()) {
        m.data.assign(1, Complex{1, 0});
        return m;
    }
    const Tensor &t = tensors.front();
    std::vector<size_t> stride(n_out + n_in, 0);
    for (size_t k = 0; k < t.labels.size(); k++) {
        stride[t.labels[k]] = size_t{1} << k;
    }
    for (size_t row = 0; row < m.rows; row++) {
        for (size_t col = 0; col < m.cols; col++) {
            size_t idx = 0;
            for (size_t q = 0; q < n_out; q++) {
                if ((row >> (n_out - 1 - q)) & 1) {
                    idx += stride[q];
                }
            }
            for (size_t q = 0; q < n_in; q++) {
                if ((col >> (n_in - 1 - q)) & 1) {
                    idx += stride[n_out + q];
                }
            }
            m.at(row, col) = t.data[idx];
        }
    }
    return m;
}

double proportionality_error(const DenseMatrix &a, const DenseMatrix &b) {
    if (a.rows != b.rows || a.cols != b.cols) {
        throw std::invalid_argument("proportionality_error: shape mismatch");
    }
    size_t pivot = 0;
    double best = -1;
    for (size_t k = 0; k < a.data.size(); k++) {
        double m = std::abs(a.data[k]);
        if (m > best) {
            best = m;
            pivot = k;
        }
    }
    double scale_b = std::abs(b.data[pivot]);
    double tiny = 1e-300;
    if (best <= tiny && b.max_abs() <= tiny) {
        return 0;
    }
    if (best <= tiny || scale_b <= 1e-12 * b.max_abs() || scale_b <= tiny) {
        return std::numeric_limits<double>::infinity();
    }
    Complex na = a.data[pivot];
    Complex nb = b.data[pivot];
    double err = 0;
    for (size_t k = 0; k < a.data.size(); k++) {
        err = std::max(err, std::abs(a.data[k] / na - b.data[k] / nb));
    }
    return err;
}

}  // namespace mptzx
