#pragma once

// Instantaneous stabilizer group under the period-3 check schedule, logical
// qubit count, exact minimum logical weight, and assembled code parameters.

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "hypfloquet/coloring.hpp"
#include "hypfloquet/derive.hpp"
#include "hypfloquet/error.hpp"
#include "hypfloquet/geodist.hpp"
#include "hypfloquet/pauli.hpp"
#include "hypfloquet/surface.hpp"

namespace hypfloquet {

struct ScheduleTrajectory {
    size_t num_qubits = 0;
    std::vector<StabilizerGroup> isg;  // isg[r] is the group after round r
    /// First round r of the periodic regime (isg[r] == isg[r + 3] and onwards).
    std::optional<int> steady_round;

    std::vector<size_t> ranks() const {
        std::vector<size_t> out;
        for (const auto &g : isg) {
            out.push_back(g.rank());
        }
        return out;
    }
    /// The three steady groups, in round order starting at steady_round.
    std::array<const StabilizerGroup *, 3> steady_phases() const {
        if (!steady_round) {
            throw DomainError("floquet", "schedule has not reached a steady state");
        }
        int s = *steady_round;
        return {&isg[s], &isg[s + 1], &isg[s + 2]};
    }
    /// Round index (mod 3) measured last before each steady phase.
    int phase_round(int phase) const {
        return *steady_round + phase;
    }
};

/// Measures checks_for_round(assign, r) for r = 0..rounds-1 starting from the
/// trivial group. The groups are compared as RREF row sets; the first r with
/// isg[r] == isg[r-3] marks the periodic regime, which began at r - 3.
inline ScheduleTrajectory run_schedule(const ColorAssignment &assign, int rounds) {
    if (rounds < 6) {
        throw DomainError("floquet", "need at least 6 rounds (got " + std::to_string(rounds) + ")");
    }
    ScheduleTrajectory out;
    out.num_qubits = assign.num_qubits;
    StabilizerGroup g(assign.num_qubits);
    for (int r = 0; r < rounds; r++) {
        for (const auto &ch : checks_for_round(assign, r)) {
            size_t before = g.rank();
            g.measure(check_operator(assign, ch));
            if (g.rank() < before) {
                throw std::logic_error("floquet: measurement lowered the stabilizer rank");
            }
        }
        out.isg.push_back(g);
        if (!out.steady_round && r >= 3 && out.isg[r] == out.isg[r - 3]) {
            out.steady_round = r - 3;
        }
    }
    return out;
}

inline size_t logical_count(const StabilizerGroup &isg) {
    return isg.num_qubits() - isg.rank();
}

struct LogicalSearchOptions {
    size_t max_qubits = 40;
    int max_weight = 6;
    unsigned threads = 0;  // 0 = hardware concurrency
};

struct LogicalWitness {
    int weight = 0;
    PauliOperator op;
    int phase = -1;
};

namespace detail {

// Searches weight-w Paulis whose support is connected in the interaction graph
// of `local` (a generating set of `isg`), commutes with `local`, and lies
// outside `isg`. Supports come from ESU enumeration rooted at their smallest
// qubit; roots are processed in parallel and the lowest hitting root wins, so
// the witness is deterministic.
class WeightSearch {
   public:
    WeightSearch(const StabilizerGroup &isg, const std::vector<PauliOperator> &local, unsigned threads)
        : isg_(isg), n_(isg.num_qubits()), threads_(threads) {
        if (n_ > 64) {
            throw DistanceBoundExceeded("exact search supports at most 64 qubits (got " + std::to_string(n_) + ")");
        }
        adj_.assign(n_, 0);
        words_ = (local.size() + 63) / 64;
        masks_.assign(n_ * 3 * std::max<size_t>(words_, 1), 0);
        for (size_t j = 0; j < local.size(); j++) {
            const auto &g = local[j];
            uint64_t supp = 0;
            for (size_t q = 0; q < n_; q++) {
                char t = g.get(q);
                if (t == 'I') {
                    continue;
                }
                supp |= uint64_t{1} << q;
                // Label L anticommutes with t iff both are non-identity and differ.
                for (int L = 0; L < 3; L++) {
                    if ("XYZ"[L] != t) {
                        masks_[(q * 3 + L) * words_ + j / 64] |= uint64_t{1} << (j % 64);
                    }
                }
            }
            for (size_t q = 0; q < n_; q++) {
                if (supp >> q & 1) {
                    adj_[q] |= supp & ~(uint64_t{1} << q);
                }
            }
        }
    }

    std::optional<PauliOperator> search(int w) const {
        std::atomic<size_t> next{0};
        std::atomic<size_t> best_root{n_};
        std::vector<std::optional<PauliOperator>> found(n_);
        unsigned t = threads_ ? threads_ : std::max(1u, std::thread::hardware_concurrency());
        t = std::min<unsigned>(t, static_cast<unsigned>(std::max<size_t>(n_, 1)));
        auto worker = [&]() {
            while (true) {
                size_t root = next.fetch_add(1);
                if (root >= n_ || root > best_root.load()) {
                    return;
                }
                auto hit = search_root(root, w);
                if (hit) {
                    found[root] = hit;
                    size_t cur = best_root.load();
                    while (root < cur && !best_root.compare_exchange_weak(cur, root)) {
                    }
                }
            }
        };
        if (t <= 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (unsigned i = 0; i < t; i++) {
                pool.emplace_back(worker);
            }
            for (auto &th : pool) {
                th.join();
            }
        }
        size_t r = best_root.load();
        if (r < n_) {
            return found[r];
        }
        return std::nullopt;
    }

   private:
    struct State {
        int w;
        std::vector<int> qubits;
        std::vector<uint64_t> acc;  // (w + 1) * words
        std::vector<int> labels;
        std::optional<PauliOperator> hit;
    };

    std::optional<PauliOperator> search_root(size_t root, int w) const {
        State st;
        st.w = w;
        st.acc.assign((w + 1) * std::max<size_t>(words_, 1), 0);
        st.labels.assign(w, 0);
        uint64_t above = root + 1 >= 64 ? 0 : ~uint64_t{0} << (root + 1);
        uint64_t sub = uint64_t{1} << root;
        extend(st, sub, adj_[root] & above, sub | adj_[root], above);
        return st.hit;
    }

    bool extend(State &st, uint64_t sub, uint64_t ext, uint64_t closed, uint64_t above) const {
        if (std::popcount(sub) == st.w) {
            return try_labelings(st, sub);
        }
        while (ext) {
            int v = std::countr_zero(ext);
            ext &= ext - 1;
            uint64_t bit = uint64_t{1} << v;
            uint64_t grow = adj_[v] & ~closed & above;
            if (extend(st, sub | bit, ext | grow, closed | adj_[v] | bit, above)) {
                return true;
            }
        }
        return false;
    }

    bool try_labelings(State &st, uint64_t sub) const {
        st.qubits.clear();
        for (uint64_t s = sub; s; s &= s - 1) {
            st.qubits.push_back(std::countr_zero(s));
        }
        return label(st, 0);
    }

    bool label(State &st, int depth) const {
        size_t W = std::max<size_t>(words_, 1);
        const uint64_t *cur = &st.acc[depth * W];
        int q = st.qubits[depth];
        for (int L = 0; L < 3; L++) {
            const uint64_t *m = &masks_[(q * 3 + L) * W];
            uint64_t *nxt = &st.acc[(depth + 1) * W];
            bool zero = true;
            for (size_t k = 0; k < W; k++) {
                nxt[k] = cur[k] ^ m[k];
                zero = zero && nxt[k] == 0;
            }
            st.labels[depth] = L;
            if (depth + 1 == st.w) {
                if (zero && accept(st)) {
                    return true;
                }
            } else if (label(st, depth + 1)) {
                return true;
            }
        }
        return false;
    }

    bool accept(State &st) const {
        PauliOperator p(n_);
        for (int i = 0; i < st.w; i++) {
            p.set(st.qubits[i], "XYZ"[st.labels[i]]);
        }
        if (isg_.contains(p)) {
            return false;
        }
        st.hit = p;
        return true;
    }

    const StabilizerGroup &isg_;
    size_t n_;
    unsigned threads_;
    size_t words_ = 0;
    std::vector<uint64_t> adj_;
    std::vector<uint64_t> masks_;
};

}  // namespace detail

/// Minimum weight (up to max_weight) of a Pauli commuting with `isg` but not in
/// it. `local` must generate `isg`; its interaction graph restricts supports to
/// connected sets, which loses nothing: each connected piece of a logical
/// commutes with `local` on its own, and not every piece can be a stabilizer.
inline std::optional<LogicalWitness> min_logical_weight(const StabilizerGroup &isg,
                                                        const std::vector<PauliOperator> &local, int max_weight,
                                                        unsigned threads = 0) {
    StabilizerGroup span(isg.num_qubits());
    for (const auto &p : local) {
        span.add(p);
    }
    if (!(span == isg)) {
        throw std::invalid_argument("floquet: local generators do not generate the group");
    }
    detail::WeightSearch search(isg, local, threads);
    for (int w = 1; w <= max_weight; w++) {
        if (auto hit = search.search(w)) {
            return LogicalWitness{w, *hit, 0};
        }
    }
    return std::nullopt;
}

/// Local generating set of a steady phase: the face stabilizers together with
/// the checks measured in the phase's round. Falls back to the RREF rows when
/// these do not generate the group.
inline std::vector<PauliOperator> local_generators(const SurfaceComplex &c, const ColorAssignment &assign,
                                                   const StabilizerGroup &isg, int round) {
    std::vector<PauliOperator> out;
    for (int f = 0; f < c.num_faces(); f++) {
        out.push_back(face_stabilizer(c, assign, f));
    }
    for (const auto &ch : checks_for_round(assign, round)) {
        out.push_back(check_operator(assign, ch));
    }
    StabilizerGroup span(isg.num_qubits());
    bool inside = true;
    for (const auto &p : out) {
        inside = inside && isg.contains(p);
        span.add(p);
    }
    if (inside && span == isg) {
        return out;
    }
    return isg.generators();
}

/// Minimum over the three steady phases of the minimum logical weight. Throws
/// DistanceBoundExceeded past the qubit bound or when nothing is found up to
/// the weight cap.
inline LogicalWitness exact_distance(const SurfaceComplex &c, const ColorAssignment &assign,
                                     const ScheduleTrajectory &traj, const LogicalSearchOptions &opt = {}) {
    size_t n = assign.num_qubits;
    if (n > opt.max_qubits) {
        throw DistanceBoundExceeded("exact distance limited to n <= " + std::to_string(opt.max_qubits) + " (n = " +
                                    std::to_string(n) + ")");
    }
    auto phases = traj.steady_phases();
    std::array<std::vector<PauliOperator>, 3> local;
    std::vector<detail::WeightSearch> searches;
    for (int ph = 0; ph < 3; ph++) {
        if (logical_count(*phases[ph]) == 0) {
            throw DomainError("floquet", "code encodes no logical qubits");
        }
        local[ph] = local_generators(c, assign, *phases[ph], traj.phase_round(ph));
        searches.emplace_back(*phases[ph], local[ph], opt.threads);
    }
    for (int w = 1; w <= opt.max_weight; w++) {
        for (int ph = 0; ph < 3; ph++) {
            if (auto hit = searches[ph].search(w)) {
                return LogicalWitness{w, *hit, ph};
            }
        }
    }
    throw DistanceBoundExceeded("no logical operator of weight <= " + std::to_string(opt.max_weight));
}

enum class DistanceMode { exact, geometric, automatic };

struct CodeParams {
    int64_t n = 0;
    int64_t k = 0;
    int64_t d = 0;
    std::string d_source;  // "exact" or "geometric"
    std::string provenance;

    double k_n() const {
        return static_cast<double>(k) / static_cast<double>(n);
    }
    double kd2_n() const {
        return static_cast<double>(k * d * d) / static_cast<double>(n);
    }
    double d_n() const {
        return static_cast<double>(d) / static_cast<double>(n);
    }
};

/// k = 2g on orientable surfaces and g on non-orientable ones.
inline int64_t k_rule(int genus, bool orientable) {
    return orientable ? 2 * genus : genus;
}

struct CodeParamsOptions {
    LogicalSearchOptions search;
    SystoleConvention systole;
    int rounds = 12;
};

/// [[n,k,d]] for a signature on a surface. n comes from counting, k from the
/// genus rule (checked against the ISG rank whenever an explicit complex
/// exists), d from the exact search or the geometric estimate.
inline CodeParams code_params(const SemiRegularSig &sig, int genus, bool orientable, DistanceMode mode,
                              const CodeParamsOptions &opt = {}) {
    require_hyperbolic_genus("floquet", genus, orientable);
    int chi = euler_characteristic(genus, orientable);
    auto counts = semiregular_counts_direct(sig, chi);
    if (!counts) {
        throw DomainError("floquet", sig.str() + " is not admissible on " + surface_name(genus, orientable));
    }
    CodeParams out;
    out.n = counts->n_v;
    out.k = k_rule(genus, orientable);

    std::optional<SurfaceComplex> cx;
    if (mode != DistanceMode::geometric) {
        cx = explicit_complex(sig, genus, orientable);
    }
    bool use_exact = cx && (mode == DistanceMode::exact || static_cast<size_t>(out.n) <= opt.search.max_qubits);
    if (mode == DistanceMode::exact && !cx) {
        throw DistanceBoundExceeded("no explicit complex for " + sig.str() + " on " + surface_name(genus, orientable));
    }
    if (use_exact) {
        auto assign = three_color(*cx);
        auto traj = run_schedule(assign, opt.rounds);
        auto phases = traj.steady_phases();
        auto k_inst = static_cast<int64_t>(logical_count(*phases[0]));
        if (k_inst != out.k) {
            throw DomainError("floquet", "ISG rank gives k = " + std::to_string(k_inst) + " but the genus rule gives " +
                                             std::to_string(out.k) + " for " + sig.str());
        }
        out.d = exact_distance(*cx, assign, traj, opt.search).weight;
        out.d_source = "exact";
        out.provenance = "incenter(fundamental polygon)";
    } else {
        auto est = estimate_distance(sig, genus, orientable, opt.systole);
        out.d = est.d;
        out.d_source = "geometric";
        out.provenance = est.convention_tag;
    }
    return out;
}

}  // namespace hypfloquet
