// Copyright 2026 The holochannel Authors
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

#ifndef HOLO_DENSE_SPECTRUM_H
#define HOLO_DENSE_SPECTRUM_H

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "holo/dense/kraus_channel.h"
#include "holo/dense/sector.h"
#include "json.hpp"

namespace holo {

/// Matrix-free action of a channel on vectorized operators, vec(X)[r + d c] = X(r, c).
/// Stages with small joint support are turned into local superoperators on 2k bits.
class SuperOperator {
   public:
    explicit SuperOperator(const KrausChannel &c);

    size_t num_qubits() const { return n_; }
    size_t dim() const { return (size_t)1 << (2 * n_); }
    void apply(const cd *in, cd *out) const;
    Vec apply(const Vec &v) const;

   private:
    struct Step {
        std::vector<size_t> bits;
        Mat local;
        const ChannelStage *fallback = nullptr;
    };
    size_t n_;
    std::vector<Step> steps_;
};

constexpr size_t kDefaultSuperopBudget = size_t{2} << 30;

/// Explicit 4^n x 4^n superoperator. Throws std::length_error beyond the memory budget.
Mat build_superoperator(const KrausChannel &c, size_t budget_bytes = kDefaultSuperopBudget);

struct KrylovResult {
    std::vector<cd> values;
    std::vector<double> residuals;
    bool converged = false;
    size_t applications = 0;
    size_t cycles = 0;
};

/// Restarted block Krylov iteration with Rayleigh-Ritz extraction for the k
/// largest-magnitude eigenvalues of a linear map on C^dim. Subspace size is
/// max(4k, 60); convergence is decided on Ritz residuals ||A x - θ x|| <= tol * scale.
/// Ritz values below tail_floor * scale only need residual <= sqrt(tol) * scale.
KrylovResult block_krylov(const std::function<void(const cd *, cd *)> &op, size_t dim, size_t k, double tol,
                          size_t max_cycles, uint64_t seed, double tail_floor = 1e-3);

struct SpectrumOptions {
    enum class Method { Auto, Explicit, Krylov };
    size_t k = 8;
    double tol = 1e-10;
    double eps_deg = 1e-8;
    SectorSpec sectors;
    Method method = Method::Auto;
    size_t budget_bytes = kDefaultSuperopBudget;
    /// Blocks up to this size are always diagonalized explicitly.
    size_t explicit_block_limit = 128;
    /// Relative magnitude below which Krylov Ritz values use the looser sqrt(tol) residual test.
    double tail_floor = 1e-3;
    size_t max_cycles = 2000;
    /// Divide magnitudes by the largest one (for maps that are not trace preserving).
    bool normalize = false;
    uint64_t seed = 12345;
};

struct SpectrumReport {
    std::vector<cd> eigenvalues;
    std::vector<double> magnitudes;
    std::vector<std::string> sectors;
    size_t degeneracy = 0;
    double gap = 0;
    double epsilon_deg = 0;
    /// Largest residual per block (0 for explicit blocks).
    std::vector<double> residuals;
    bool converged = true;
    std::string method;
    /// Leading magnitude used for normalization (1 when not normalized).
    double scale = 1;

    /// 1 - |λ_2| / |λ_1| among eigenvalues whose sector label starts with `prefix`.
    double sector_gap(const std::string &prefix) const;
    nlohmann::json to_json() const;
};

/// The k largest-magnitude eigenvalues of every symmetry block of the channel's
/// superoperator, merged and sorted by magnitude.
SpectrumReport leading_spectrum(const KrausChannel &c, const SpectrumOptions &opt = {});

}  // namespace holo

#endif
