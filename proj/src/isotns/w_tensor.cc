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

#include "holo/isotns/w_tensor.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace holo {

double w_normalization(double g) { return g >= 0 ? 1 / std::sqrt(1 + g * g) : 1 / std::sqrt(1 + 3 * g * g); }

WTensor w_tensor(double g) {
    if (!(g >= -1 && g <= 1)) {
        throw std::domain_error("w_tensor needs g in [-1, 1]");
    }
    double f = g >= 0 ? 0 : std::abs(g);
    double a = std::sqrt((1 + g * g) / 2);
    double ag = std::abs(g);
    WTensor w;
    w.g = g;
    w.entries << 1, f, f, ag,  //
        f, a, a, f,            //
        f, a, a, f,            //
        ag, f, f, 1;
    w.normalization = w_normalization(g);
    w.entries *= w.normalization;
    for (int r = 0; r < 4; r++) {
        double nrm = w.entries.row(r).norm();
        if (std::abs(nrm - 1) > 1e-12) {
            throw std::logic_error("W row " + std::to_string(r) + " has norm " + std::to_string(nrm));
        }
    }
    return w;
}

nlohmann::json WTensor::to_json() const {
    nlohmann::json j;
    j["g"] = g;
    std::vector<double> flat;
    for (int r = 0; r < 4; r++) {
        for (int c = 0; c < 4; c++) {
            flat.push_back(entries(r, c));
        }
    }
    j["entries"] = flat;
    j["normalization"] = normalization;
    return j;
}

double PlumbedTensor::entry(int sigma, int gamma, int i, int j, int m, int n) const {
    return (gamma == i && sigma == j) ? w.entry(i, j, m, n) : 0.0;
}

double PlumbedTensor::isometry_defect() const {
    double worst = 0;
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            for (int ip = 0; ip < 2; ip++) {
                for (int jp = 0; jp < 2; jp++) {
                    double s = 0;
                    for (int sg = 0; sg < 2; sg++) {
                        for (int gm = 0; gm < 2; gm++) {
                            for (int m = 0; m < 2; m++) {
                                for (int n = 0; n < 2; n++) {
                                    s += entry(sg, gm, i, j, m, n) * entry(sg, gm, ip, jp, m, n);
                                }
                            }
                        }
                    }
                    double target = (i == ip && j == jp) ? 1.0 : 0.0;
                    worst = std::max(worst, std::abs(s - target));
                }
            }
        }
    }
    return worst;
}

PlumbedTensor plumb(const WTensor &w, double tol) {
    PlumbedTensor t;
    t.w = w;
    for (int sg = 0; sg < 2; sg++) {
        for (int gm = 0; gm < 2; gm++) {
            Mat k = Mat::Zero(4, 4);
            for (int i = 0; i < 2; i++) {
                for (int j = 0; j < 2; j++) {
                    for (int m = 0; m < 2; m++) {
                        for (int n = 0; n < 2; n++) {
                            k(m + 2 * n, i + 2 * j) = t.entry(sg, gm, i, j, m, n);
                        }
                    }
                }
            }
            t.kraus[2 * sg + gm] = k;
        }
    }
    double defect = t.isometry_defect();
    if (defect > tol) {
        throw std::domain_error("plumbed tensor violates the isometry condition by " + std::to_string(defect));
    }
    return t;
}

}  // namespace holo
