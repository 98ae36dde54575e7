#pragma once

// Admissible signatures per surface, [[n,k,d]] tables, the orientable /
// non-orientable equivalence report and the rate formulas.

#include <algorithm>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypfloquet/derive.hpp"
#include "hypfloquet/floquet.hpp"
#include "hypfloquet/geodist.hpp"
#include "hypfloquet/hypgeo.hpp"
#include "hypfloquet/rational.hpp"

namespace hypfloquet {

/// Which face counts must be integral for a signature to be listed.
/// color: n/m_i for every entry (each color class covers every vertex once).
/// multiplicity: mult(m) n/m for every distinct size m.
enum class FaceRule { color, multiplicity };

/// Largest face size that can appear on a surface with Euler characteristic chi:
/// n <= 84|chi| for even trivalent signatures, and every m_i <= n.
inline int default_m_max(int chi) {
    return 84 * std::abs(chi);
}

/// Sorted even hyperbolic triples [m1 <= m2 <= m3] with m3 <= m_max whose counts
/// are integral on the surface, in lexicographic order.
inline std::vector<SemiRegularSig> enumerate_signatures(int genus, bool orientable, int m_max,
                                                        FaceRule rule = FaceRule::color) {
    require_hyperbolic_genus("catalog", genus, orientable);
    if (m_max < 4) {
        throw DomainError("catalog", "m_max must be at least 4");
    }
    int chi = euler_characteristic(genus, orientable);
    std::vector<SemiRegularSig> out;
    for (int a = 4; a <= m_max; a += 2) {
        for (int b = a; b <= m_max; b += 2) {
            // 1/a + 1/b >= 1/2 leaves no room for a third face.
            if (2 * (a + b) >= a * b) {
                continue;
            }
            for (int c = b; c <= m_max; c += 2) {
                // n = 2abc chi / (2(ab + bc + ca) - abc); cheap integrality filter first
                int64_t den = 2 * (int64_t{a} * b + int64_t{b} * c + int64_t{c} * a) - int64_t{a} * b * c;
                if (den >= 0 || (2 * int64_t{a} * b * c * chi) % den != 0) {
                    continue;
                }
                std::array<int, 3> m{a, b, c};
                SemiRegularSig sig(m);
                auto counts = semiregular_counts_direct(sig, chi);
                if (!counts || (rule == FaceRule::color && !counts->color_class_integral)) {
                    continue;
                }
                out.push_back(sig);
            }
        }
    }
    return out;
}

struct TableRow {
    int genus = 0;
    bool orientable = true;
    SemiRegularSig signature{4, 6, 14};
    CodeParams params;
};

struct TableOptions {
    DistanceMode mode = DistanceMode::automatic;
    FaceRule rule = FaceRule::color;
    std::optional<int> m_max;
    CodeParamsOptions params;
};

/// One row per admissible signature and genus, ordered by genus then signature.
inline std::vector<TableRow> build_table(int genus_lo, int genus_hi, bool orientable, const TableOptions &opt = {}) {
    if (genus_lo > genus_hi) {
        throw DomainError("catalog", "empty genus range " + std::to_string(genus_lo) + ".." + std::to_string(genus_hi));
    }
    std::vector<TableRow> rows;
    for (int g = genus_lo; g <= genus_hi; g++) {
        int chi = euler_characteristic(g, orientable);
        for (const auto &sig : enumerate_signatures(g, orientable, opt.m_max.value_or(default_m_max(chi)), opt.rule)) {
            rows.push_back({g, orientable, sig, code_params(sig, g, orientable, opt.mode, opt.params)});
        }
    }
    return rows;
}

namespace detail {
inline std::string fixed(double x, int digits = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    return buf;
}
}  // namespace detail

inline std::string table_csv(const std::vector<TableRow> &rows) {
    std::ostringstream out;
    out << "genus,orientable,signature,n,k,d,d_source,k_n,kd2_n,d_n\n";
    for (const auto &r : rows) {
        const auto &p = r.params;
        out << r.genus << ',' << (r.orientable ? "true" : "false") << ",\"" << r.signature.str() << "\"," << p.n << ','
            << p.k << ',' << p.d << ',' << p.d_source << ',' << detail::fixed(p.k_n()) << ','
            << detail::fixed(p.kd2_n()) << ',' << detail::fixed(p.d_n()) << '\n';
    }
    return out.str();
}

inline nlohmann::json table_json(const std::vector<TableRow> &rows) {
    auto out = nlohmann::json::array();
    for (const auto &r : rows) {
        const auto &p = r.params;
        out.push_back({{"genus", r.genus},
                       {"orientable", r.orientable},
                       {"signature", r.signature.m()},
                       {"n", p.n},
                       {"k", p.k},
                       {"d", p.d},
                       {"d_source", p.d_source},
                       {"provenance", p.provenance},
                       {"k_n", p.k_n()},
                       {"kd2_n", p.kd2_n()},
                       {"d_n", p.d_n()}});
    }
    return out;
}

struct EquivalenceEntry {
    SemiRegularSig signature{4, 6, 14};
    CodeParams orientable;
    CodeParams non_orientable;
    bool nk_match = false;
    bool d_match = false;
};

struct EquivalenceReport {
    int h = 0;
    double systole_orientable = 0;
    double systole_non_orientable = 0;
    bool signature_sets_match = false;
    std::vector<EquivalenceEntry> entries;

    bool ok() const {
        if (!signature_sets_match || std::abs(systole_orientable - systole_non_orientable) > 1e-12) {
            return false;
        }
        for (const auto &e : entries) {
            if (!e.nk_match || !e.d_match) {
                return false;
            }
        }
        return true;
    }
};

/// Orientable genus h against non-orientable genus 2h (equal Euler
/// characteristic): same signatures, same (n,k), and same d where both sides
/// compute it the same way.
inline EquivalenceReport equivalence_check(int h, DistanceMode mode = DistanceMode::geometric,
                                           const TableOptions &opt = {}) {
    if (h < 2) {
        throw DomainError("catalog", "equivalence check needs orientable genus >= 2");
    }
    EquivalenceReport rep;
    rep.h = h;
    rep.systole_orientable = systole(h, true, opt.params.systole);
    rep.systole_non_orientable = systole(2 * h, false, opt.params.systole);
    int m_max = opt.m_max.value_or(default_m_max(euler_characteristic(h, true)));
    auto so = enumerate_signatures(h, true, m_max, opt.rule);
    auto sn = enumerate_signatures(2 * h, false, m_max, opt.rule);
    rep.signature_sets_match = so == sn;
    for (const auto &sig : so) {
        EquivalenceEntry e;
        e.signature = sig;
        e.orientable = code_params(sig, h, true, mode, opt.params);
        e.non_orientable = code_params(sig, 2 * h, false, mode, opt.params);
        e.nk_match = e.orientable.n == e.non_orientable.n && e.orientable.k == e.non_orientable.k;
        e.d_match = e.orientable.d_source != e.non_orientable.d_source || e.orientable.d == e.non_orientable.d;
        rep.entries.push_back(e);
    }
    return rep;
}

inline nlohmann::json equivalence_json(const EquivalenceReport &rep) {
    nlohmann::json out;
    out["h"] = rep.h;
    out["non_orientable_genus"] = 2 * rep.h;
    out["systole_orientable"] = rep.systole_orientable;
    out["systole_non_orientable"] = rep.systole_non_orientable;
    out["signature_sets_match"] = rep.signature_sets_match;
    out["ok"] = rep.ok();
    auto rows = nlohmann::json::array();
    for (const auto &e : rep.entries) {
        rows.push_back({{"signature", e.signature.m()},
                        {"orientable", {e.orientable.n, e.orientable.k, e.orientable.d}},
                        {"non_orientable", {e.non_orientable.n, e.non_orientable.k, e.non_orientable.d}},
                        {"nk_match", e.nk_match},
                        {"d_match", e.d_match}});
    }
    out["entries"] = rows;
    return out;
}

/// Exact k/n of a signature on a surface, from counting and the k rule.
inline std::optional<Rational> rate(const SemiRegularSig &sig, int genus, bool orientable) {
    auto counts = semiregular_counts_direct(sig, euler_characteristic(genus, orientable));
    if (!counts) {
        return std::nullopt;
    }
    return Rational{k_rule(genus, orientable), counts->n_v};
}

/// k/n of [6,6,p] on the orientable genus-g surface as a closed form in g and p,
/// valid for any even p >= 8 without integrality: (g/(g-1)) (p-6)/(6p).
inline Rational rate_66p(int genus, int p) {
    return Rational{genus, genus - 1} * Rational{p - 6, 6 * p};
}

/// k/n of [2p,2p,2q] on the orientable genus-g surface: (g/(g-1)) (pq-p-2q)/(2pq).
inline Rational rate_2p2p2q(int genus, int p, int q) {
    return Rational{genus, genus - 1} * Rational{int64_t{p} * q - p - 2 * q, 2 * int64_t{p} * q};
}

/// The same two rates as 2g / n with n taken from the counting formula
/// n = chi / (sum 1/m_i - 1/2) evaluated as an exact rational.
inline Rational counted_rate(const SemiRegularSig &sig, int genus) {
    Rational n = Rational{euler_characteristic(genus, true)} / (reciprocal_sum(sig.m()) - Rational{1, 2});
    return Rational{2 * genus} / n;
}

}  // namespace hypfloquet
