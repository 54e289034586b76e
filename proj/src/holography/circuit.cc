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

#include "holo/holography/circuit.h"

#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

namespace holo {

namespace {

std::string sparse_pauli(const PauliString &p) {
    std::string s = p.sign() > 0 ? "+" : "-";
    bool first = true;
    for (size_t q : p.support()) {
        if (!first) {
            s += ",";
        }
        first = false;
        s += p.letter(q);
        s += std::to_string(q);
    }
    return s;
}

PauliString parse_sparse_pauli(size_t n, const std::string &text) {
    if (text.empty() || (text[0] != '+' && text[0] != '-')) {
        throw std::invalid_argument("sparse Pauli must start with a sign: '" + text + "'");
    }
    PauliString p(n);
    std::stringstream ss(text.substr(1));
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.size() < 2) {
            throw std::invalid_argument("bad sparse Pauli item '" + item + "'");
        }
        size_t q = std::stoul(item.substr(1));
        if (q >= n || p.letter(q) != 'I') {
            throw std::invalid_argument("bad sparse Pauli site in '" + text + "'");
        }
        p.set_letter(q, item[0]);
    }
    if (text[0] == '-') {
        p.set_phase(2);
    }
    return p;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

bool SequentialCircuit::is_system(size_t q) const {
    for (size_t s : system_qubits) {
        if (s == q) {
            return true;
        }
    }
    return false;
}

void SequentialCircuit::validate() const {
    lattice.validate();
    size_t n = num_qubits();
    std::vector<int> role(n, 0);
    for (size_t q : system_qubits) {
        if (q >= n || role[q]) {
            throw std::logic_error("system qubit list invalid");
        }
        role[q] = 1;
    }
    for (const auto &[q, spec] : ancillas) {
        if (q >= n || role[q]) {
            throw std::logic_error("ancilla " + std::to_string(q) + " overlaps the system or is out of range");
        }
        if (!(spec.apply_prob >= 0 && spec.apply_prob <= 1)) {
            throw std::logic_error("ancilla probability outside [0, 1]");
        }
        role[q] = 2;
    }
    for (size_t q = 0; q < n; q++) {
        if (!role[q]) {
            throw std::logic_error("qubit " + lattice.label(q) + " is neither system nor ancilla");
        }
    }
    std::vector<long> used_in(n, -1);
    for (size_t s = 0; s < slices.size(); s++) {
        std::set<size_t> touched;
        for (const auto &g : slices[s].gates) {
            if (g.num_qubits() != n) {
                throw std::logic_error("gate register size mismatch");
            }
            for (size_t q : g.qubits()) {
                if (!touched.insert(q).second) {
                    throw std::logic_error("slice '" + slices[s].tag + "' has overlapping gates");
                }
                if (role[q] == 2) {
                    if (used_in[q] >= 0 && used_in[q] != (long)s) {
                        throw std::logic_error("ancilla " + lattice.label(q) + " reused across slices");
                    }
                    used_in[q] = (long)s;
                }
            }
        }
    }
    for (const auto &p : input_stabilizers) {
        if (p.num_qubits() != n) {
            throw std::logic_error("input stabilizer size mismatch");
        }
        for (size_t q : p.support()) {
            if (role[q] != 1) {
                throw std::logic_error("input stabilizer touches an ancilla");
            }
        }
    }
}

std::string SequentialCircuit::to_text() const {
    std::ostringstream out;
    out << "holochannel-circuit 1\n";
    out << "lattice " << lattice.kind_name() << " " << lattice.lx() << " " << lattice.ly() << " " << lattice.lz()
        << "\n";
    for (size_t q = 0; q < num_qubits(); q++) {
        out << "qubit " << q << " " << lattice.label(q);
        auto it = ancillas.find(q);
        if (it == ancillas.end()) {
            out << " system\n";
        } else {
            out << " ancilla " << (it->second.init == AncillaInit::Zero ? "zero " : "plus ")
                << fmt(it->second.apply_prob) << "\n";
        }
    }
    out << "system";
    for (size_t q : system_qubits) {
        out << " " << q;
    }
    out << "\ntop";
    for (size_t q : lattice.top) {
        out << " " << q;
    }
    out << "\nbottom";
    for (size_t q : lattice.bottom) {
        out << " " << q;
    }
    out << "\n";
    for (const auto &p : input_stabilizers) {
        out << "input " << sparse_pauli(p) << "\n";
    }
    for (const auto &s : slices) {
        out << "slice " << s.tag << "\n";
        for (const auto &g : s.gates) {
            out << "gate " << g.str() << "\n";
        }
    }
    out << "end\n";
    return out.str();
}

SequentialCircuit SequentialCircuit::from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    SequentialCircuit c;
    bool header = false, done = false;
    std::vector<std::string> labels;
    std::map<size_t, AncillaSpec> ancillas;
    std::vector<std::string> input_lines;
    std::vector<std::pair<std::string, std::vector<std::string>>> slice_lines;
    std::vector<size_t> system, top, bottom;
    auto read_ids = [](std::istringstream &ls) {
        std::vector<size_t> ids;
        size_t q;
        while (ls >> q) {
            ids.push_back(q);
        }
        return ids;
    };
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (!header) {
            int version = 0;
            ls >> version;
            if (key != "holochannel-circuit" || version != 1) {
                throw std::invalid_argument("not a circuit file");
            }
            header = true;
        } else if (key == "lattice") {
            std::string kind;
            size_t lx, ly, lz;
            ls >> kind >> lx >> ly >> lz;
            c.lattice = Lattice(Lattice::kind_from_name(kind), lx, ly, lz);
        } else if (key == "qubit") {
            size_t q;
            std::string label, role;
            ls >> q >> label >> role;
            if (q != labels.size()) {
                throw std::invalid_argument("qubit ids must be consecutive");
            }
            labels.push_back(label);
            if (role == "ancilla") {
                std::string init;
                double prob;
                ls >> init >> prob;
                if (init != "zero" && init != "plus") {
                    throw std::invalid_argument("bad ancilla init '" + init + "'");
                }
                ancillas[q] = AncillaSpec{init == "zero" ? AncillaInit::Zero : AncillaInit::Plus, prob};
            } else if (role != "system") {
                throw std::invalid_argument("bad qubit role '" + role + "'");
            }
        } else if (key == "system") {
            system = read_ids(ls);
        } else if (key == "top") {
            top = read_ids(ls);
        } else if (key == "bottom") {
            bottom = read_ids(ls);
        } else if (key == "input") {
            std::string p;
            ls >> p;
            input_lines.push_back(p);
        } else if (key == "slice") {
            std::string tag;
            ls >> tag;
            slice_lines.push_back({tag, {}});
        } else if (key == "gate") {
            if (slice_lines.empty()) {
                throw std::invalid_argument("gate before any slice");
            }
            slice_lines.back().second.push_back(line.substr(5));
        } else if (key == "end") {
            done = true;
            break;
        } else {
            throw std::invalid_argument("unknown circuit line '" + line + "'");
        }
    }
    if (!done) {
        throw std::invalid_argument("circuit text truncated");
    }
    for (const auto &l : labels) {
        c.lattice.add(l);
    }
    size_t n = labels.size();
    c.lattice.top = top;
    c.lattice.bottom = bottom;
    c.system_qubits = system;
    c.ancillas = ancillas;
    for (const auto &p : input_lines) {
        c.input_stabilizers.push_back(parse_sparse_pauli(n, p));
    }
    for (const auto &[tag, gates] : slice_lines) {
        CircuitSlice s{tag, {}};
        for (const auto &g : gates) {
            std::istringstream gs(g);
            std::string kind;
            size_t control;
            gs >> kind >> control;
            if (kind == "H") {
                s.gates.push_back(CliffordGate::hadamard(n, control));
            } else if (kind == "CP") {
                std::string basis, target;
                gs >> basis >> target;
                s.gates.push_back(CliffordGate::controlled_pauli(
                    control, basis == "X" ? ControlBasis::X : ControlBasis::Z, parse_sparse_pauli(n, target)));
            } else {
                throw std::invalid_argument("bad gate '" + g + "'");
            }
        }
        c.slices.push_back(std::move(s));
    }
    c.validate();
    return c;
}

std::vector<CircuitSlice> pack_gates(const std::string &tag, const std::vector<CliffordGate> &gates) {
    std::vector<CircuitSlice> out;
    std::vector<std::set<size_t>> busy;
    for (const auto &g : gates) {
        auto qs = g.qubits();
        size_t level = 0;
        for (size_t s = busy.size(); s-- > 0;) {
            bool hit = false;
            for (size_t q : qs) {
                hit |= busy[s].count(q) > 0;
            }
            if (hit) {
                level = s + 1;
                break;
            }
        }
        if (level == out.size()) {
            out.push_back(CircuitSlice{tag + "." + std::to_string(level), {}});
            busy.emplace_back();
        }
        out[level].gates.push_back(g);
        busy[level].insert(qs.begin(), qs.end());
    }
    if (out.size() == 1) {
        out[0].tag = tag;
    }
    return out;
}

}  // namespace holo
