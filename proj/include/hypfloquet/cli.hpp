#pragma once

// Batch command-line front end. Exit codes: 0 success, 1 domain error,
// 2 usage error.

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hypfloquet/catalog.hpp"
#include "hypfloquet/coloring.hpp"
#include "hypfloquet/derive.hpp"
#include "hypfloquet/floquet.hpp"
#include "hypfloquet/geodist.hpp"
#include "hypfloquet/hypgeo.hpp"
#include "hypfloquet/surface.hpp"
#include "hypfloquet/surface_json.hpp"

namespace hypfloquet::cli {

/// Thrown for malformed arguments that CLI11 itself accepts.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// "{p,q}" or "[m1,m2,m3]" (spaces allowed).
inline std::variant<RegularSig, SemiRegularSig> parse_signature(const std::string &text) {
    static const std::regex regular(R"(\s*\{\s*(\d+)\s*,\s*(\d+)\s*\}\s*)");
    static const std::regex semi(R"(\s*\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]\s*)");
    std::smatch m;
    if (std::regex_match(text, m, regular)) {
        return RegularSig(std::stoi(m[1]), std::stoi(m[2]));
    }
    if (std::regex_match(text, m, semi)) {
        return SemiRegularSig(std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]));
    }
    throw UsageError("cannot parse signature '" + text + "' (expected {p,q} or [m1,m2,m3])");
}

/// "A..B" or "A".
inline std::pair<int, int> parse_genus_range(const std::string &text) {
    static const std::regex range(R"(\s*(\d+)\s*(?:\.\.\s*(\d+))?\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, range)) {
        throw UsageError("cannot parse genus range '" + text + "' (expected A..B)");
    }
    int lo = std::stoi(m[1]);
    int hi = m[2].matched ? std::stoi(m[2]) : lo;
    return {lo, hi};
}

inline SurfaceComplex read_complex(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw DomainError("cli", "cannot open " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return deserialize(buf.str());
}

/// Signature of a trivalent vertex-uniform complex, from the face sizes around
/// each vertex (sorted).
inline SemiRegularSig infer_signature(const SurfaceComplex &c) {
    std::vector<std::vector<int>> around(c.num_vertices());
    for (const auto &face : c.faces()) {
        for (const auto &s : face) {
            around[c.head(s)].push_back(static_cast<int>(face.size()));
        }
    }
    std::optional<std::array<int, 3>> sig;
    for (size_t v = 0; v < around.size(); v++) {
        auto &sizes = around[v];
        if (sizes.size() != 3) {
            throw DomainError("cli", "vertex " + std::to_string(c.vertex_ids()[v]) + " is not trivalent");
        }
        std::sort(sizes.begin(), sizes.end());
        std::array<int, 3> t{sizes[0], sizes[1], sizes[2]};
        if (sig && *sig != t) {
            throw DomainError("cli", "complex is not vertex-uniform (no single [m1,m2,m3] signature)");
        }
        sig = t;
    }
    if (!sig) {
        throw DomainError("cli", "complex has no vertices");
    }
    return SemiRegularSig(*sig);
}

inline nlohmann::json geom_json(const std::variant<RegularSig, SemiRegularSig> &sig) {
    nlohmann::json out;
    if (const auto *r = std::get_if<RegularSig>(&sig)) {
        auto ac = regular_apothem_circumradius(*r);
        out["kind"] = "regular";
        out["p"] = r->p();
        out["q"] = r->q();
        out["edge_length"] = regular_edge_length(*r);
        out["apothem"] = ac.apothem;
        out["circumradius"] = ac.circumradius;
        out["polygon_area"] = polygon_area(*r);
    } else {
        const auto &s = std::get<SemiRegularSig>(sig);
        auto prof = semiregular_profile(s);
        out["kind"] = "semiregular";
        out["m"] = s.m();
        out["edge_length"] = prof.edge_length;
        out["residual"] = semiregular_residual(s, prof.edge_length);
        out["apothem"] = prof.apothem;
        out["circumradius"] = prof.circumradius;
        out["incenter_gap"] = prof.incenter_gap;
    }
    return out;
}

inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Hyperbolic Floquet codes from semi-regular tessellations", "hypfloquet"};
    app.require_subcommand(1);

    std::string sig_text;
    auto *geom = app.add_subcommand("geom", "Metric profile of {p,q} or [m1,m2,m3] as JSON");
    geom->add_option("--sig", sig_text, "Signature, {p,q} or [m1,m2,m3]")->required();

    auto *complex_cmd = app.add_subcommand("complex", "Explicit surface complexes");
    complex_cmd->require_subcommand(1);
    int genus = 0;
    bool orientable = true;
    std::string derive_kind;
    auto *build = complex_cmd->add_subcommand("build", "Fundamental polygon complex, optionally derived, as JSON");
    build->add_option("--genus", genus, "Surface genus")->required();
    build->add_option("--orientable", orientable, "true or false")->required();
    build->add_option("--derive", derive_kind, "Derivation to apply")->check(CLI::IsMember({"clip", "incenter"}));

    std::string in_path;
    auto *color = app.add_subcommand("color", "Check list JSON of a 3-colorable complex");
    color->add_option("--in", in_path, "Complex JSON file")->required();

    int rounds = 12;
    auto *isg = app.add_subcommand("isg", "ISG rank trajectory and logical count");
    isg->add_option("--in", in_path, "Complex JSON file")->required();
    isg->add_option("--rounds", rounds, "Number of measurement rounds (>= 6)")->capture_default_str();

    std::string mode = "exact";
    int max_weight = 6;
    size_t max_qubits = 40;
    auto *distance = app.add_subcommand("distance", "Code distance of a complex, exact or estimated");
    distance->add_option("--in", in_path, "Complex JSON file")->required();
    distance->add_option("--mode", mode, "exact or geo")->check(CLI::IsMember({"exact", "geo"}))->capture_default_str();
    distance->add_option("--max-weight", max_weight, "Weight cap for the exact search")->capture_default_str();
    distance->add_option("--max-qubits", max_qubits, "Qubit bound for the exact search")->capture_default_str();

    std::string genus_range;
    std::string format = "csv";
    std::string face_rule = "color";
    int m_max = 0;
    auto *table = app.add_subcommand("table", "[[n,k,d]] table over a genus range");
    table->add_option("--genus", genus_range, "Genus range A..B")->required();
    table->add_option("--orientable", orientable, "true or false")->required();
    table->add_option("--mode", mode, "exact, geo or auto")->check(CLI::IsMember({"exact", "geo", "auto"}))->required();
    table->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    table->add_option("--face-rule", face_rule, "Integrality rule for listing signatures: color or multiplicity")
        ->check(CLI::IsMember({"color", "multiplicity"}))
        ->capture_default_str();
    table->add_option("--m-max", m_max, "Largest face size to enumerate (default 84|chi|)");

    int h = 0;
    std::string equiv_mode = "geo";
    auto *equiv = app.add_subcommand("equiv", "Orientable genus H against non-orientable genus 2H");
    equiv->add_option("--genus", h, "Orientable genus H")->required();
    equiv->add_option("--mode", equiv_mode, "geo or auto")->check(CLI::IsMember({"geo", "auto"}))->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::CallForAllHelp &e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (*geom) {
            out << geom_json(parse_signature(sig_text)).dump(2) << '\n';
        } else if (*build) {
            SurfaceComplex c = fundamental_polygon(genus, orientable);
            int p = static_cast<int>(c.faces()[0].size());
            if (derive_kind == "clip") {
                c = clip_complex(c, p, p);
            } else if (derive_kind == "incenter") {
                c = incenter_complex(c, p, p);
            }
            out << serialize(c, 2) << '\n';
        } else if (*color) {
            SurfaceComplex c = read_complex(in_path);
            auto diag = is_color_code_tiling(c);
            if (!diag.ok) {
                err << "coloring: not a color-code tiling: " << diag.reason << '\n';
                return 1;
            }
            out << checks_to_json(c, three_color(c)).dump(2) << '\n';
        } else if (*isg) {
            SurfaceComplex c = read_complex(in_path);
            auto traj = run_schedule(three_color(c), rounds);
            nlohmann::json j;
            j["n"] = traj.num_qubits;
            j["ranks"] = traj.ranks();
            if (traj.steady_round) {
                j["steady_round"] = *traj.steady_round;
                j["k"] = logical_count(*traj.steady_phases()[0]);
            } else {
                j["steady_round"] = nullptr;
                j["k"] = nullptr;
            }
            out << j.dump(2) << '\n';
        } else if (*distance) {
            SurfaceComplex c = read_complex(in_path);
            nlohmann::json j;
            if (mode == "exact") {
                auto assign = three_color(c);
                auto traj = run_schedule(assign, 12);
                LogicalSearchOptions opt;
                opt.max_weight = max_weight;
                opt.max_qubits = max_qubits;
                auto w = exact_distance(c, assign, traj, opt);
                j["d"] = w.weight;
                j["d_source"] = "exact";
                j["phase"] = w.phase;
                j["witness"] = w.op.str();
            } else {
                auto sig = infer_signature(c);
                auto est = estimate_distance(sig, c.genus(), c.orientable());
                j["d"] = est.d;
                j["d_source"] = "geometric";
                j["signature"] = sig.m();
                j["d_X"] = est.d_X;
                j["d_Z"] = est.d_Z;
                j["systole"] = est.systole_used;
                j["convention"] = est.convention_tag;
            }
            out << j.dump(2) << '\n';
        } else if (*table) {
            auto [lo, hi] = parse_genus_range(genus_range);
            TableOptions opt;
            opt.mode = mode == "exact" ? DistanceMode::exact
                                       : (mode == "geo" ? DistanceMode::geometric : DistanceMode::automatic);
            opt.rule = face_rule == "color" ? FaceRule::color : FaceRule::multiplicity;
            if (m_max > 0) {
                opt.m_max = m_max;
            }
            auto rows = build_table(lo, hi, orientable, opt);
            if (format == "csv") {
                out << table_csv(rows);
            } else {
                out << table_json(rows).dump(2) << '\n';
            }
        } else if (*equiv) {
            auto rep = equivalence_check(h, equiv_mode == "geo" ? DistanceMode::geometric : DistanceMode::automatic);
            out << equivalence_json(rep).dump(2) << '\n';
            return rep.ok() ? 0 : 1;
        }
    } catch (const UsageError &e) {
        err << "usage: " << e.what() << '\n';
        return 2;
    } catch (const DomainError &e) {
        err << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace hypfloquet::cli
