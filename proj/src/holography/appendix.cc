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

#include "holo/holography/appendix.h"

#include <sstream>
#include <stdexcept>

#include "holo/holography/constructions.h"
#include "holo/holography/stabilizer_flow.h"

namespace holo {

bool VerificationReport::all_passed() const {
    for (const auto &c : checks) {
        if (!c.passed) {
            return false;
        }
    }
    return !checks.empty();
}

std::string VerificationReport::transcript() const {
    std::ostringstream out;
    out << "== " << construction << "\n";
    for (const auto &c : checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) {
            out << " : " << c.detail;
        }
        out << "\n";
    }
    return out.str();
}

namespace {

using Term = std::pair<char, std::string>;

class Checker {
   public:
    Checker(const SequentialCircuit &c, VerificationReport &r) : c_(c), r_(r), n_(c.num_qubits()) {}

    PauliString op(const std::vector<Term> &terms) const {
        PauliString p(n_);
        for (const auto &[letter, label] : terms) {
            p *= PauliString::from_sites(n_, letter, {c_.lattice.id(label)});
        }
        return p;
    }

    std::string show(const PauliString &p) const {
        std::string s = p.sign() > 0 ? "+" : "-";
        for (size_t q : p.support()) {
            s += " ";
            s += p.letter(q);
            s += c_.lattice.label(q);
        }
        return s;
    }

    /// Pushes `initial` through the circuit and compares with `expected` exactly.
    void maps(const std::string &name, const PauliString &initial, const PauliString &expected) {
        PauliString got = push_through(c_, initial);
        VerificationCheck chk{name, got == expected, ""};
        if (!chk.passed) {
            chk.detail = got.same_letters(expected) ? "sign mismatch: got " + show(got)
                                                    : "got " + show(got) + " expected " + show(expected);
        }
        r_.checks.push_back(chk);
    }

    void holds(const std::string &name, bool ok, const std::string &detail = "") {
        r_.checks.push_back({name, ok, detail});
    }

    void member(const StabilizerGroup &g, const std::string &name, const PauliString &p) {
        if (g.contains(p)) {
            holds(name, true);
        } else if (g.contains_up_to_sign(p)) {
            holds(name, false, "present with opposite sign: " + show(p));
        } else {
            holds(name, false, "not in group: " + show(p));
        }
    }

    /// Rank, purity and commutation of the evolved group.
    StabilizerGroup group_checks() {
        try {
            StabilizerGroup g = evolve_initial_stabilizers(c_);
            holds("evolved generators commute and are independent", true, "rank " + std::to_string(g.rank()));
            holds("evolved state is pure", g.rank() == n_,
                  "rank " + std::to_string(g.rank()) + " of " + std::to_string(n_));
            return g;
        } catch (const std::exception &e) {
            holds("evolved generators commute and are independent", false, e.what());
            throw;
        }
    }

   private:
    const SequentialCircuit &c_;
    VerificationReport &r_;
    size_t n_;
};

std::string lbl(const std::string &name, long a, long time = -1) { return site_label(name, {a}, time); }

std::string edge_lbl(const std::string &name, const Torus &t, size_t e, long time = -1) {
    size_t v = e % t.num_vertices();
    return site_label(name + (e < t.num_vertices() ? "x" : "y"), {(long)(v % t.Lx), (long)(v / t.Lx)}, time);
}

std::string vert_lbl(const std::string &name, const Torus &t, size_t v, long time = -1) {
    return site_label(name, {(long)(v % t.Lx), (long)(v / t.Lx)}, time);
}

void fresh_ancilla_check(Checker &chk, const SequentialCircuit &c) {
    try {
        c.validate();
        chk.holds("fresh-ancilla property and disjoint slices", true, std::to_string(c.slices.size()) + " slices");
    } catch (const std::exception &e) {
        chk.holds("fresh-ancilla property and disjoint slices", false, e.what());
    }
}

}  // namespace

VerificationReport verify_ring_bulk(size_t L, size_t depth) {
    if (depth < 2) {
        throw std::invalid_argument("ring bulk verification needs depth >= 2");
    }
    VerificationReport r{"ring L=" + std::to_string(L) + " depth=" + std::to_string(depth), {}};
    SequentialCircuit c = build_1d_channel_circuit(L, depth, 0.5, 0.5);
    Checker chk(c, r);
    fresh_ancilla_check(chk, c);
    long N = (long)depth, Ll = (long)L;
    for (long k = 1; k < N; k++) {
        for (long s = 0; s < Ll; s++) {
            long sm = (s - 1 + Ll) % Ll, sp = (s + 1) % Ll;
            chk.maps("XX on y-links " + lbl("g", s, k) + "," + lbl("g", s, k + 1) + " -> star",
                     chk.op({{'X', lbl("g", s, k)}, {'X', lbl("g", s, k + 1)}}),
                     chk.op({{'X', lbl("g", s, k)},
                             {'X', lbl("b", sm, k)},
                             {'X', lbl("b", s, k)},
                             {'X', lbl("g", s, k + 1)}}));
            chk.maps("ZZ on x-links " + lbl("b", s, k) + "," + lbl("b", s, k + 1) + " -> plaquette",
                     chk.op({{'Z', lbl("b", s, k)}, {'Z', lbl("b", s, k + 1)}}),
                     chk.op({{'Z', lbl("b", s, k)},
                             {'Z', lbl("g", s, k + 1)},
                             {'Z', lbl("g", sp, k + 1)},
                             {'Z', lbl("b", s, k + 1)}}));
        }
    }
    for (long s = 0; s < Ll; s++) {
        long sp = (s + 1) % Ll;
        chk.maps("top boundary " + lbl("b", s, N) + " -> ZZZ",
                 chk.op({{'Z', lbl("b", s, N)}}),
                 chk.op({{'Z', lbl("r", s)}, {'Z', lbl("b", s, N)}, {'Z', lbl("r", sp)}}));
    }
    PauliString all_x(c.num_qubits());
    for (size_t q : c.system_qubits) {
        all_x *= PauliString::from_sites(c.num_qubits(), 'X', {q});
    }
    chk.maps("top-row X product is preserved", all_x, all_x);
    StabilizerGroup g = chk.group_checks();
    chk.member(g, "top-row X product in group", all_x);

    auto bs = extract_boundary_structure(g, c.lattice, {{c.system_qubits[0], c.system_qubits[L / 2]}});
    bool z_only = true;
    for (size_t q : bs.string_generators[0].support()) {
        z_only &= bs.string_generators[0].letter(q) == 'Z';
    }
    chk.holds("open string ending on two top sites exists and is Z-type", z_only,
              chk.show(bs.string_generators[0]));
    chk.holds("bulk and boundary generators account for the full group",
              bs.bulk_generators.size() + bs.top_boundary_generators.size() == g.rank(),
              std::to_string(bs.bulk_generators.size()) + " bulk, " +
                  std::to_string(bs.top_boundary_generators.size()) + " boundary");

    // Two explicit paths between the same top sites: along the top row, and dipping one row down.
    std::vector<Term> straight, dipped;
    straight.push_back({'Z', lbl("r", 0)});
    straight.push_back({'Z', lbl("r", Ll / 2)});
    dipped = straight;
    for (long s = 0; s < Ll / 2; s++) {
        straight.push_back({'Z', lbl("b", s, N)});
        dipped.push_back({'Z', lbl("b", s, N - 1)});
    }
    dipped.push_back({'Z', lbl("g", 0, N)});
    dipped.push_back({'Z', lbl("g", Ll / 2, N)});
    PauliString sa = chk.op(straight), sb = chk.op(dipped);
    chk.member(g, "straight top string in group", sa);
    chk.member(g, "deformed string in group", sb);
    bool bulk_only = true;
    for (size_t q : (sa * sb).support()) {
        bulk_only &= !c.is_system(q);
    }
    chk.holds("homotopic strings differ by bulk generators", bulk_only && g.contains(sa * sb));

    SequentialCircuit alt = build_1d_channel_circuit(L, depth, 0.5, 0.5, LayerOrder::ZFirst);
    StabilizerGroup ga = evolve_initial_stabilizers(alt);
    Checker alt_chk(alt, r);
    bool alt_has_zzz = ga.contains(alt_chk.op({{'Z', lbl("r", 0)}, {'Z', lbl("b", 0, N)}, {'Z', lbl("r", 1)}}));
    chk.holds("layer order: X layer first yields the ZZZ top boundary, Z layer first does not", !alt_has_zzz,
              alt_has_zzz ? "both orders give ZZZ" : "X-first reproduces the ZZZ boundary");
    return r;
}

VerificationReport verify_zero_form_bulk(size_t Lx, size_t Ly, size_t depth) {
    if (depth < 2) {
        throw std::invalid_argument("verification needs depth >= 2");
    }
    VerificationReport r{"zero_form " + std::to_string(Lx) + "x" + std::to_string(Ly) +
                             " depth=" + std::to_string(depth),
                         {}};
    SequentialCircuit c = build_2d_zero_form_circuit(Lx, Ly, depth, 0.5, 0.5);
    Checker chk(c, r);
    fresh_ancilla_check(chk, c);
    Torus t{Lx, Ly};
    long N = (long)depth;
    for (long k = 1; k < N; k++) {
        for (size_t v = 0; v < t.num_vertices(); v++) {
            long x = (long)(v % Lx), y = (long)(v / Lx);
            std::vector<Term> star = {{'X', vert_lbl("g", t, v, k)}, {'X', vert_lbl("g", t, v, k + 1)}};
            for (size_t e : t.star(x, y)) {
                star.push_back({'X', edge_lbl("b", t, e, k)});
            }
            chk.maps("XX on z-links at " + vert_lbl("v", t, v, k) + " -> X^6 vertex",
                     chk.op({{'X', vert_lbl("g", t, v, k)}, {'X', vert_lbl("g", t, v, k + 1)}}), chk.op(star));
            for (size_t e : {t.xlink(x, y), t.ylink(x, y)}) {
                auto ends = t.endpoints(e);
                chk.maps("ZZ on stacked " + edge_lbl("b", t, e) + " -> vertical Z^4",
                         chk.op({{'Z', edge_lbl("b", t, e, k)}, {'Z', edge_lbl("b", t, e, k + 1)}}),
                         chk.op({{'Z', edge_lbl("b", t, e, k)},
                                 {'Z', vert_lbl("g", t, ends[0], k + 1)},
                                 {'Z', vert_lbl("g", t, ends[1], k + 1)},
                                 {'Z', edge_lbl("b", t, e, k + 1)}}));
            }
        }
    }
    for (long k = 1; k <= N; k++) {
        for (size_t v = 0; v < t.num_vertices(); v++) {
            std::vector<Term> plaq;
            for (size_t e : t.plaquette_edges((long)(v % Lx), (long)(v / Lx))) {
                plaq.push_back({'Z', edge_lbl("b", t, e, k)});
            }
            chk.maps("in-plane Z^4 at " + vert_lbl("p", t, v, k) + " is invariant", chk.op(plaq), chk.op(plaq));
        }
    }
    for (size_t e = 0; e < t.num_edges(); e++) {
        auto ends = t.endpoints(e);
        chk.maps("top boundary " + edge_lbl("b", t, e, N) + " -> ZZZ",
                 chk.op({{'Z', edge_lbl("b", t, e, N)}}),
                 chk.op({{'Z', vert_lbl("r", t, ends[0])},
                         {'Z', edge_lbl("b", t, e, N)},
                         {'Z', vert_lbl("r", t, ends[1])}}));
    }
    StabilizerGroup g = chk.group_checks();
    std::vector<Term> membrane;
    for (size_t v = 0; v < t.num_vertices(); v++) {
        membrane.push_back({'X', vert_lbl("r", t, v)});
    }
    chk.member(g, "top X membrane in group", chk.op(membrane));
    auto bs = extract_boundary_structure(g, c.lattice, {{c.system_qubits[0], c.system_qubits.back()}});
    chk.holds("open string between distant top sites exists", true, chk.show(bs.string_generators[0]));
    return r;
}

VerificationReport verify_one_form_bulk(size_t Lx, size_t Ly, size_t depth) {
    if (depth < 2) {
        throw std::invalid_argument("verification needs depth >= 2");
    }
    VerificationReport r{"one_form " + std::to_string(Lx) + "x" + std::to_string(Ly) +
                             " depth=" + std::to_string(depth),
                         {}};
    SequentialCircuit c = build_one_form_circuit(Lx, Ly, depth, 0.5, 0.5);
    Checker chk(c, r);
    fresh_ancilla_check(chk, c);
    Torus t{Lx, Ly};
    long N = (long)depth;
    for (long k = 1; k < N; k++) {
        for (size_t v = 0; v < t.num_vertices(); v++) {
            long x = (long)(v % Lx), y = (long)(v / Lx);
            std::vector<Term> vz = {{'Z', vert_lbl("g", t, v, k)}, {'Z', vert_lbl("g", t, v, k + 1)}};
            for (size_t e : t.star(x, y)) {
                vz.push_back({'Z', edge_lbl("b", t, e, k + 1)});
            }
            chk.maps("ZZ on stacked " + vert_lbl("g", t, v) + " -> Z^6 vertex",
                     chk.op({{'Z', vert_lbl("g", t, v, k)}, {'Z', vert_lbl("g", t, v, k + 1)}}), chk.op(vz));
        }
        for (size_t e = 0; e < t.num_edges(); e++) {
            auto ends = t.endpoints(e);
            chk.maps("XX on stacked " + edge_lbl("b", t, e) + " -> vertical X^4",
                     chk.op({{'X', edge_lbl("b", t, e, k)}, {'X', edge_lbl("b", t, e, k + 1)}}),
                     chk.op({{'X', edge_lbl("b", t, e, k)},
                             {'X', vert_lbl("g", t, ends[0], k)},
                             {'X', vert_lbl("g", t, ends[1], k)},
                             {'X', edge_lbl("b", t, e, k + 1)}}));
        }
    }
    for (size_t v = 0; v < t.num_vertices(); v++) {
        long x = (long)(v % Lx), y = (long)(v / Lx);
        std::vector<Term> bx, bp;
        for (size_t e : t.plaquette_edges(x, y)) {
            bx.push_back({'X', edge_lbl("b", t, e, 1)});
            bp.push_back({'X', edge_lbl("r", t, e)});
        }
        std::vector<Term> both = bx;
        both.insert(both.end(), bp.begin(), bp.end());
        chk.maps("in-plane X^4 at " + vert_lbl("p", t, v) + " -> X^4 times B_p", chk.op(bx), chk.op(both));
        std::vector<Term> top = {{'Z', vert_lbl("g", t, v, N)}};
        for (size_t e : t.star(x, y)) {
            top.push_back({'Z', edge_lbl("r", t, e)});
        }
        chk.maps("top " + vert_lbl("g", t, v, N) + " -> truncated vertex Z A_v",
                 chk.op({{'Z', vert_lbl("g", t, v, N)}}), chk.op(top));
    }
    StabilizerGroup g = chk.group_checks();
    std::vector<Term> bx, bp;
    for (size_t e : t.plaquette_edges(0, 0)) {
        bx.push_back({'X', edge_lbl("b", t, e, 1)});
        bp.push_back({'X', edge_lbl("r", t, e)});
    }
    chk.member(g, "B_p on the top surface in group", chk.op(bp));
    chk.member(g, "in-plane X^4 in group when the input has B_p = +1", chk.op(bx));

    SequentialCircuit z_input = c;
    z_input.input_stabilizers.clear();
    for (size_t q : c.system_qubits) {
        z_input.input_stabilizers.push_back(PauliString::from_sites(c.num_qubits(), 'Z', {q}));
    }
    StabilizerGroup gz = evolve_initial_stabilizers(z_input);
    chk.holds("in-plane X^4 absent when the input breaks B_p", !gz.contains_up_to_sign(chk.op(bx)));
    return r;
}

VerificationReport verify_fermionic_bulk(size_t Lx, size_t Ly, size_t depth) {
    if (depth < 2) {
        throw std::invalid_argument("verification needs depth >= 2");
    }
    VerificationReport r{"fermionic " + std::to_string(Lx) + "x" + std::to_string(Ly) +
                             " depth=" + std::to_string(depth),
                         {}};
    SequentialCircuit c = build_fermionic_circuit(Lx, Ly, depth, 0.5, 0.5);
    Checker chk(c, r);
    fresh_ancilla_check(chk, c);
    Torus t{Lx, Ly};
    long N = (long)depth;
    for (long k = 1; k < N; k++) {
        for (size_t v = 0; v < t.num_vertices(); v++) {
            long x = (long)(v % Lx), y = (long)(v / Lx);
            std::vector<Term> vz = {{'Z', vert_lbl("g", t, v, k)}, {'Z', vert_lbl("g", t, v, k + 1)}};
            for (size_t e : t.star(x, y)) {
                vz.push_back({'Z', edge_lbl("b", t, e, k + 1)});
            }
            chk.maps("ZZ on stacked " + vert_lbl("g", t, v) + " -> Z^6 vertex",
                     chk.op({{'Z', vert_lbl("g", t, v, k)}, {'Z', vert_lbl("g", t, v, k + 1)}}), chk.op(vz));

            size_t ex = t.xlink(x, y), ey = t.ylink(x, y);
            auto xe = t.endpoints(ex);
            chk.maps("XX on stacked " + edge_lbl("b", t, ex) + " -> decorated vertical plaquette",
                     chk.op({{'X', edge_lbl("b", t, ex, k)}, {'X', edge_lbl("b", t, ex, k + 1)}}),
                     chk.op({{'X', edge_lbl("b", t, ex, k)},
                             {'Z', edge_lbl("b", t, t.ylink(x, y), k)},
                             {'Z', edge_lbl("b", t, t.fermion_partner(ex), k)},
                             {'X', vert_lbl("g", t, xe[0], k)},
                             {'X', vert_lbl("g", t, xe[1], k)},
                             {'X', edge_lbl("b", t, ex, k + 1)}}));
            auto ye = t.endpoints(ey);
            chk.maps("XX on stacked " + edge_lbl("b", t, ey) + " -> decorated vertical plaquette",
                     chk.op({{'X', edge_lbl("b", t, ey, k)}, {'X', edge_lbl("b", t, ey, k + 1)}}),
                     chk.op({{'X', edge_lbl("b", t, ey, k)},
                             {'X', vert_lbl("g", t, ye[0], k)},
                             {'X', vert_lbl("g", t, ye[1], k)},
                             {'X', edge_lbl("b", t, ey, k + 1)},
                             {'Z', edge_lbl("b", t, t.xlink(x - 1, y + 1), k + 1)},
                             {'Z', edge_lbl("b", t, t.fermion_partner(ey), k + 1)}}));
        }
    }
    StabilizerGroup g = chk.group_checks();
    for (size_t v = 0; v < t.num_vertices(); v++) {
        long x = (long)(v % Lx), y = (long)(v / Lx);
        auto pv = t.fermion_plaquette(x, y);
        std::vector<Term> sym, top = {{'Z', vert_lbl("g", t, v, N)}};
        for (size_t e : t.star(x, y)) {
            sym.push_back({'Z', edge_lbl("r", t, e)});
            top.push_back({'Z', edge_lbl("r", t, e)});
        }
        for (size_t e : t.plaquette_edges(pv[0], pv[1])) {
            sym.push_back({'X', edge_lbl("r", t, e)});
        }
        chk.member(g, "top-surface A_v B_p(v) at " + vert_lbl("v", t, v) + " in group", chk.op(sym));
        chk.maps("top " + vert_lbl("g", t, v, N) + " -> truncated vertex Z A_v",
                 chk.op({{'Z', vert_lbl("g", t, v, N)}}), chk.op(top));
    }
    return r;
}

VerificationReport verify_subsystem_bulk(size_t Lx, size_t Ly, size_t depth) {
    if (depth < 2) {
        throw std::invalid_argument("verification needs depth >= 2");
    }
    VerificationReport r{"subsystem " + std::to_string(Lx) + "x" + std::to_string(Ly) +
                             " depth=" + std::to_string(depth),
                         {}};
    SequentialCircuit c = build_subsystem_circuit(Lx, Ly, depth, 0.5, 0.5);
    Checker chk(c, r);
    fresh_ancilla_check(chk, c);
    Torus t{Lx, Ly};
    long N = (long)depth;
    for (long k = 1; k < N; k++) {
        for (size_t v = 0; v < t.num_vertices(); v++) {
            long x = (long)(v % Lx), y = (long)(v / Lx);
            std::vector<Term> av = {{'X', vert_lbl("g", t, v, k)}, {'X', vert_lbl("g", t, v, k + 1)}};
            for (auto [dx, dy] : {std::pair{-1, -1}, {-1, 0}, {0, -1}, {0, 0}}) {
                av.push_back({'X', vert_lbl("q", t, t.vertex(x + dx, y + dy), k)});
            }
            chk.maps("XX on stacked " + vert_lbl("g", t, v) + " -> A_v",
                     chk.op({{'X', vert_lbl("g", t, v, k)}, {'X', vert_lbl("g", t, v, k + 1)}}), chk.op(av));
            std::vector<Term> bc = {{'Z', vert_lbl("q", t, v, k)}, {'Z', vert_lbl("q", t, v, k + 1)}};
            for (size_t u : t.plaquette_corners(x, y)) {
                bc.push_back({'Z', vert_lbl("g", t, u, k + 1)});
            }
            chk.maps("ZZ on stacked " + vert_lbl("q", t, v) + " -> B_c",
                     chk.op({{'Z', vert_lbl("q", t, v, k)}, {'Z', vert_lbl("q", t, v, k + 1)}}), chk.op(bc));
        }
    }
    for (size_t v = 0; v < t.num_vertices(); v++) {
        std::vector<Term> top = {{'Z', vert_lbl("q", t, v, N)}};
        for (size_t u : t.plaquette_corners((long)(v % Lx), (long)(v / Lx))) {
            top.push_back({'Z', vert_lbl("r", t, u)});
        }
        chk.maps("top " + vert_lbl("q", t, v, N) + " -> truncated cube", chk.op({{'Z', vert_lbl("q", t, v, N)}}),
                 chk.op(top));
    }
    StabilizerGroup g = chk.group_checks();
    for (size_t x = 0; x < Lx; x++) {
        std::vector<Term> col;
        for (size_t y = 0; y < Ly; y++) {
            col.push_back({'X', vert_lbl("r", t, t.vertex((long)x, (long)y))});
        }
        chk.member(g, "column X line U_x(" + std::to_string(x) + ") in group", chk.op(col));
    }
    for (size_t y = 0; y < Ly; y++) {
        std::vector<Term> row;
        for (size_t x = 0; x < Lx; x++) {
            row.push_back({'X', vert_lbl("r", t, t.vertex((long)x, (long)y))});
        }
        chk.member(g, "row X line U_y(" + std::to_string(y) + ") in group", chk.op(row));
    }
    return r;
}

std::vector<VerificationReport> verify_constructions(const std::string &which) {
    std::vector<VerificationReport> out;
    bool all = which == "all";
    bool known = false;
    if (all || which == "ring") {
        out.push_back(verify_ring_bulk());
        known = true;
    }
    if (all || which == "zero_form") {
        out.push_back(verify_zero_form_bulk());
        known = true;
    }
    if (all || which == "one_form") {
        out.push_back(verify_one_form_bulk());
        known = true;
    }
    if (all || which == "fermionic") {
        out.push_back(verify_fermionic_bulk());
        known = true;
    }
    if (all || which == "subsystem") {
        out.push_back(verify_subsystem_bulk());
        known = true;
    }
    if (!known) {
        throw std::invalid_argument("unknown construction '" + which + "'");
    }
    return out;
}

}  // namespace holo
