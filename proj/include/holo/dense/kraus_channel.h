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

#ifndef HOLO_DENSE_KRAUS_CHANNEL_H
#define HOLO_DENSE_KRAUS_CHANNEL_H

#include <optional>
#include <string>
#include <vector>

#include "holo/dense/linalg.h"
#include "holo/pauli/pauli_string.h"

namespace holo {

/// One Kraus operator. Either a local matrix on `sites`, or coeff * pauli on the whole register.
struct KrausOp {
    std::vector<size_t> sites;
    Mat local;
    std::optional<PauliString> pauli;
    cd coeff{1.0, 0.0};

    static KrausOp from_local(std::vector<size_t> sites, Mat m);
    static KrausOp from_pauli(PauliString p, cd coeff);

    /// Full 2^n matrix (for checks on small registers).
    Mat full_matrix(size_t n) const;
    Mat left(const Mat &m) const;
    Vec apply(const Vec &psi) const;
};

/// rho -> sum_k K_k rho K_k†.
struct ChannelStage {
    std::vector<KrausOp> ops;
};

/// Composition of stages, applied in order. The Kraus set of the channel is the
/// set of products of one operator per stage.
class KrausChannel {
   public:
    KrausChannel() = default;
    KrausChannel(size_t n, std::string name, bool cptp = true) : n_(n), name_(std::move(name)), cptp_(cptp) {}

    size_t num_qubits() const { return n_; }
    const std::string &name() const { return name_; }
    bool cptp() const { return cptp_; }
    void set_cptp(bool v) { cptp_ = v; }
    const std::vector<ChannelStage> &stages() const { return stages_; }

    void add_stage(ChannelStage s);
    /// rho -> (1-p) rho + p P rho P.
    void add_pauli_noise(const PauliString &p, double prob);
    /// Appends all stages of another channel.
    void append(const KrausChannel &other);
    /// Repeats the current stage list `times` times in total.
    KrausChannel repeated(size_t times) const;

    /// Largest entry of |sum K†K - I| over stages (zero for a CPTP channel).
    double cptp_defect() const;
    /// Largest ||[K, S]|| over all stage operators, for a symmetry unitary S.
    double strong_symmetry_residual(const Mat &s) const;
    double strong_symmetry_residual(const PauliString &s) const;

   private:
    size_t n_ = 0;
    std::string name_;
    bool cptp_ = true;
    std::vector<ChannelStage> stages_;
};

/// Applies the channel to any operator (not necessarily Hermitian).
Mat apply_channel(const KrausChannel &c, const Mat &rho);
/// Applies one stage.
Mat apply_stage(const ChannelStage &s, const Mat &rho);
/// Identity channel on n qubits.
KrausChannel identity_channel(size_t n);

}  // namespace holo

#endif
