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

#include "holo/isotns/transfer.h"

#include <cmath>
#include <stdexcept>

#include "holo/dense/dense_operator.h"
#include "holo/dense/spectrum.h"

namespace holo {

namespace {

TransferOperator assemble(const PlumbedTensor &t, size_t L, std::array<double, 2> weights, std::string name) {
    if (L < 2 || L > 14) {
        throw std::invalid_argument("ring size must be in [2, 14]");
    }
    TransferOperator op;
    op.L = L;
    op.weights = weights;
    std::array<Mat, 4> kraus;
    for (int sg = 0; sg < 2; sg++) {
        for (int gm = 0; gm < 2; gm++) {
            kraus[2 * sg + gm] = t.kraus[2 * sg + gm] * (weights[sg] * weights[gm]);
        }
    }
    op.channel = KrausChannel(L, std::move(name), true);
    for (size_t k = 0; k < L; k++) {
        std::pair<size_t, size_t> bond{k, (k + 1) % L};
        op.bonds.push_back(bond);
        ChannelStage s;
        for (const Mat &m : kraus) {
            s.ops.push_back(KrausOp::from_local({bond.first, bond.second}, m));
        }
        op.channel.add_stage(std::move(s));
    }
    op.cptp = op.channel.cptp_defect() < 1e-10;
    op.channel.set_cptp(op.cptp);

    Mat zz = Mat::Zero(4, 4), num = Mat::Zero(4, 4), xx = Mat::Zero(4, 4);
    for (int l = 0; l < 4; l++) {
        zz(l, l) = ((l == 1 || l == 2) ? -1.0 : 1.0);
        num(l, l) = (double)((l & 1) + (l >> 1));
        xx(3 - l, l) = 1;
    }
    double z2 = 0, u1 = 0;
    for (const Mat &m : kraus) {
        z2 = std::max(z2, (m * zz - zz * m).cwiseAbs().maxCoeff());
        u1 = std::max(u1, (m * num - num * m).cwiseAbs().maxCoeff());
    }
    op.z2_symmetric = z2 < 1e-12;
    op.u1_symmetric = u1 < 1e-12;
    // Conjugating every Kraus by X⊗X permutes the Kraus set (σγ -> flipped σγ) when the weights allow it.
    double flip = 0;
    for (int sg = 0; sg < 2; sg++) {
        for (int gm = 0; gm < 2; gm++) {
            flip = std::max(flip, (xx * kraus[2 * sg + gm] * xx - kraus[2 * (1 - sg) + (1 - gm)]).cwiseAbs().maxCoeff());
        }
    }
    op.flip_symmetric = flip < 1e-12;
    return op;
}

}  // namespace

nlohmann::json TransferOperator::metadata() const {
    nlohmann::json j;
    j["L"] = L;
    j["g"] = g;
    j["cptp"] = cptp;
    j["ordering"] = ordering;
    j["beta"] = beta;
    return j;
}

SectorSpec TransferOperator::sectors() const {
    SectorSpec s;
    uint64_t all = (uint64_t{1} << L) - 1;
    if (u1_symmetric) {
        s.charges.push_back(DiagonalCharge::number(L));
    } else if (z2_symmetric) {
        s.charges.push_back(DiagonalCharge::parity(L, all));
    }
    if (flip_symmetric) {
        s.flip_mask = all;
    }
    return s;
}

TransferOperator ring_transfer_channel(const WTensor &w, size_t L) {
    TransferOperator op = assemble(plumb(w), L, {1.0, 1.0}, "w_ring");
    op.g = w.g;
    return op;
}

TransferOperator deformed_tc_transfer(double g, size_t L) {
    if (!(g > 0 && g <= 1)) {
        throw std::domain_error("deformed_tc_transfer needs g in (0, 1]");
    }
    TransferOperator op = assemble(plumb(w_tensor(1.0)), L, {1.0, g}, "deformed_tc");
    op.g = g;
    op.beta = -std::log(g);
    return op;
}

Mat boundary_rdm(const TransferOperator &t, std::optional<int> sector, const BoundaryRdmOptions &opt) {
    size_t L = t.L;
    size_t d = (size_t)1 << L;
    PauliString zall = PauliString::from_sites(L, 'Z', [&] {
        std::vector<size_t> v;
        for (size_t q = 0; q < L; q++) {
            v.push_back(q);
        }
        return v;
    }());
    if (sector && *sector != 1 && *sector != -1) {
        throw std::invalid_argument("sector must be +1 or -1");
    }
    if (!sector && t.z2_symmetric) {
        if (t.cptp) {
            throw std::runtime_error("boundary_rdm: steady state is degenerate across prod Z sectors; pass a sector");
        }
        SpectrumOptions so;
        so.k = 2;
        so.sectors.charges.push_back(DiagonalCharge::parity(L, d - 1));
        so.normalize = true;
        SpectrumReport rep = leading_spectrum(t.channel, so);
        if (rep.magnitudes.size() >= 2 && rep.sectors[0] != rep.sectors[1] && rep.magnitudes[1] > 1 - 1e-8) {
            throw std::runtime_error("boundary_rdm: leading magnitude is degenerate across sectors; pass a sector");
        }
        sector = rep.sectors[0].find("ket[Z2=1]") == 0 ? -1 : 1;
    }
    Mat rho0 = Mat::Identity(d, d) / (double)d;
    if (sector) {
        rho0 = sector_project(rho0, zall, *sector);
    }
    FixedPointOptions fo;
    fo.tol = opt.tol;
    fo.max_iter = opt.max_iter;
    fo.renormalize = !t.cptp;
    fo.hermitize = !t.cptp;
    FixedPointResult fp = iterate_to_fixed_point(t.channel, rho0, fo);
    if (!fp.converged) {
        throw std::runtime_error("boundary_rdm: iteration did not converge (residual " + std::to_string(fp.residual) +
                                 ")");
    }
    Mat rho = (fp.rho + fp.rho.adjoint()) * 0.5;
    if (t.weights[0] != 1.0 || t.weights[1] != 1.0) {
        Eigen::VectorXd gdiag(d);
        for (size_t b = 0; b < d; b++) {
            double w = 1;
            for (size_t q = 0; q < L; q++) {
                w *= t.weights[(b >> q) & 1];
            }
            gdiag[b] = w;
        }
        rho = gdiag.asDiagonal() * rho * gdiag.asDiagonal();
    }
    return rho / rho.trace();
}

}  // namespace holo
