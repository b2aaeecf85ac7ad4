// scarmat: exact vs semiclassical propagator matrix elements in the scar basis
// of the quantized cat map.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scarmat/cat_map.hpp"
#include "scarmat/errors.hpp"
#include "scarmat/exact_oracle.hpp"
#include "scarmat/props.hpp"
#include "scarmat/report.hpp"
#include "scarmat/sc_engine.hpp"

using namespace scarmat;

namespace {

const PhasePoint kX1{0.0, 0.0};
const PhasePoint kX2{0.5, 0.5};

TConvention parse_convention(const std::string& s) {
    if (s == "logN") return TConvention::LogN;
    if (s == "logN-over-lambda") return TConvention::LogNOverLambda;
    if (s == "log-inv-hbar") return TConvention::LogInvHbar;
    throw CLI::ValidationError("--T-convention", "unknown convention: " + s);
}

ScMode parse_mode(const std::string& s) {
    if (s == "exactW") return ScMode::ExactW;
    if (s == "paperA") return ScMode::PaperA;
    throw CLI::ValidationError("--mode", "unknown mode: " + s);
}

ScarParams scar_params_for(const TorusHilbert& h, const CatMapSpec& cat, PhasePoint X,
                           const RunConfig& cfg, double phi) {
    ScarParams p = make_scar_params(h, cat.frame.lambda, X, cfg.t_convention, phi, cfg.normalize);
    if (cfg.cutoff > 0) p.cutoff = cfg.cutoff;
    return p;
}

ComparisonRecord table_cell(const CatMapSpec& cat, const RunConfig& cfg, int N, int t) {
    TorusHilbert h(N);
    PropagatorPowers powers(cat_propagator(h));
    ScarParams p1 = scar_params_for(h, cat, kX1, cfg, cfg.phi1);
    ScarParams p2 = scar_params_for(h, cat, kX2, cfg, cfg.phi2);

    ComparisonRecord rec;
    rec.N = N;
    rec.t = t;
    rec.X1 = kX1;
    rec.X2 = kX2;
    rec.phi1 = cfg.phi1;
    rec.phi2 = cfg.phi2;
    rec.T = p1.T;
    rec.mode = to_string(cfg.mode);
    rec.exact = scar_element_exact(h, powers, p1, p2, t);
    rec.sc = scar_sc_element(h, cat, p1, p2, t, cfg.mode).value;
    rec.finalize();
    return rec;
}

int cmd_table(const RunConfig& cfg) {
    CatMapSpec cat = default_cat();
    Report rep;
    rep.config = cfg;
    for (int N : cfg.N_list)
        for (int t : cfg.t_list) rep.records.push_back(table_cell(cat, cfg, N, t));
    emit_report(rep);
    return 0;
}

int cmd_coherent(const RunConfig& cfg) {
    CatMapSpec cat = default_cat();
    Report rep;
    rep.config = cfg;
    double S2 = fixed_point_action(cat, kX2);
    for (int N : cfg.N_list) {
        TorusHilbert h(N);
        double n1 = std::sqrt(sc_coherent_norm2(h, cat, kX1));
        double n2 = std::sqrt(sc_coherent_norm2(h, cat, kX2));
        for (int t : cfg.t_list) {
            ComparisonRecord rec;
            rec.N = N;
            rec.t = t;
            rec.X1 = kX1;
            rec.X2 = kX2;
            rec.T = 0;
            rec.mode = "coherent";
            rec.exact = coherent_element_exact(h, kX1, kX2, t);
            rec.sc = sc_coherent_torus(h, cat, t, kX1, kX2, S2) / (n1 * n2);
            rec.finalize();
            rep.records.push_back(rec);
        }
    }
    emit_report(rep);
    return 0;
}

int cmd_scar(const RunConfig& cfg, bool breakdown) {
    CatMapSpec cat = default_cat();
    Report rep;
    rep.config = cfg;
    std::ostringstream extra;
    for (int N : cfg.N_list) {
        TorusHilbert h(N);
        PropagatorPowers powers(cat_propagator(h));
        ScarParams p1 = scar_params_for(h, cat, kX1, cfg, cfg.phi1);
        ScarParams p2 = scar_params_for(h, cat, kX2, cfg, cfg.phi2);
        for (int t : cfg.t_list) {
            auto rW = scar_sc_element(h, cat, p1, p2, t, ScMode::ExactW);
            auto rA = scar_sc_element(h, cat, p1, p2, t, ScMode::PaperA);
            cplx exact = scar_element_exact(h, powers, p1, p2, t);

            ComparisonRecord recW;
            recW.N = N;
            recW.t = t;
            recW.X1 = kX1;
            recW.X2 = kX2;
            recW.phi1 = cfg.phi1;
            recW.phi2 = cfg.phi2;
            recW.T = p1.T;
            recW.mode = "exactW";
            recW.exact = exact;
            recW.sc = rW.value;
            recW.finalize();
            rep.records.push_back(recW);

            ComparisonRecord recA = recW;
            recA.mode = "paperA";
            recA.sc = rA.value;
            recA.finalize();
            rep.records.push_back(recA);

            extra.precision(9);
            extra << "N=" << N << " t=" << t
                  << " |paperA-exactW|/|exactW| = " << std::abs(rA.value - rW.value) / std::abs(rW.value)
                  << "\n";
            if (breakdown) {
                extra << "breakdown N=" << N << " t=" << t << " (exactW), sqrt(N/2) prefactor "
                      << std::sqrt(0.5 * N) << ":\n";
                extra << "  t'   delta_u      delta_s      |detV|    eps        action     "
                         "gauss_damp  n_img  weight                    term\n";
                for (auto& r : rW.breakdown) {
                    char line[256];
                    std::snprintf(line, sizeof line,
                                  "  %-4d %-12.5g %-12.5g %-9.6f %-10.6f %-10.6g %-11.5g %-6d "
                                  "%-12.5g %+12.5gi  %.6g %+.6gi",
                                  r.tprime, r.delta.u, r.delta.s, r.chain.detV_mod,
                                  r.chain.epsilon, r.action_mid, r.gauss_damp, r.n_images,
                                  r.weight.real(), r.weight.imag(), r.term.real(), r.term.imag());
                    extra << line << "\n";
                }
            }
        }
    }
    emit_report(rep);
    if (cfg.output.empty() && cfg.format == "pretty") std::cout << extra.str();
    return 0;
}

int cmd_props(const RunConfig& cfg, bool skip_weyl) {
    Report rep;
    rep.config = cfg;
    for (int N : cfg.N_list) {
        bool weyl = !skip_weyl && N % 2 == 1;
        for (auto& s : run_all_props(N, cfg.seed, weyl)) rep.suite_results.push_back(s);
    }
    emit_report(rep);
    return rep.all_pass() ? 0 : 1;
}

int cmd_weyl(const RunConfig& cfg) {
    CatMapSpec cat = default_cat();
    Report rep;
    rep.config = cfg;
    for (int N : cfg.N_list) {
        TorusHilbert h(N);
        CMatrix U = cat_propagator(h);
        auto W = weyl_symbol(h, U);
        auto Wm = weyl_symbol(h, U.adjoint());
        double rform = 0, rsym = 0;
        for (long a = 0; a < N; ++a) {
            for (long b = 0; b < N; ++b) {
                cplx direct = cat_weyl_formula(h, cat, a, b);
                rform = std::fmax(rform, std::abs(direct - W[size_t(a) * N + b]));
                cplx w = W[size_t(a) * N + b];
                cplx wp = W[size_t((N - a) % N) * N + b];
                rsym = std::fmax(rsym, std::abs(w - wp));
                rsym = std::fmax(rsym, std::abs(std::conj(wp) - Wm[size_t(a) * N + b]));
            }
        }
        rep.suite_results.push_back(
            {"winding formula vs Tr[R U], N=" + std::to_string(N), rform, 1e-9, rform <= 1e-9});
        rep.suite_results.push_back(
            {"symbol symmetry, N=" + std::to_string(N), rsym, 1e-12, rsym <= 1e-12});
        CMatrix back = weyl_reconstruct(h, W);
        double rrec = dense::max_abs_diff(back, U);
        rep.suite_results.push_back(
            {"symbol round trip, N=" + std::to_string(N), rrec, 1e-10, rrec <= 1e-10});
    }
    emit_report(rep);
    return rep.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"scar-basis matrix elements for the quantized cat map"};
    app.require_subcommand(1);
    app.set_config("--config", "", "flat key=value config file; flags take precedence");

    RunConfig cfg;
    std::string conv = "logN-over-lambda", mode = "exactW";
    bool no_normalize = false, breakdown = false, skip_weyl = false;

    auto add_common = [&](CLI::App* sub, std::vector<int> defN, std::vector<int> defT) {
        cfg.N_list = defN;
        cfg.t_list = defT;
        sub->add_option("--N", cfg.N_list, "Hilbert space dimensions")->delimiter(',');
        sub->add_option("--t", cfg.t_list, "propagator steps")->delimiter(',');
        sub->add_option("--phi1", cfg.phi1, "scar phase of the bra state");
        sub->add_option("--phi2", cfg.phi2, "scar phase of the ket state");
        sub->add_option("--T-convention", conv, "logN | logN-over-lambda | log-inv-hbar");
        sub->add_option("--mode", mode, "exactW | paperA");
        sub->add_flag("--no-normalize", no_normalize, "report raw (unnormalized) elements");
        sub->add_option("--kmax", cfg.kmax, "periodization box; <=0 selects images adaptively");
        sub->add_option("--cutoff", cfg.cutoff, "scar time cutoff; <=0 uses ceil(T/2)+2");
        sub->add_option("--format", cfg.format, "json | csv | pretty");
        sub->add_option("--out", cfg.output, "output path (default stdout)");
        sub->add_option("--seed", cfg.seed, "seed for randomized property suites");
    };

    CLI::App* table = app.add_subcommand("table", "reproduce the exact-vs-SC comparison table");
    add_common(table, {100, 101, 104, 200}, {0, 1});

    CLI::App* coherent = app.add_subcommand("coherent", "coherent-state propagator elements");
    add_common(coherent, {100}, {1});

    CLI::App* scar = app.add_subcommand("scar", "scar-basis elements with per-term breakdown");
    add_common(scar, {100}, {1});
    scar->add_flag("--breakdown", breakdown, "emit the per-t' term records");

    CLI::App* props = app.add_subcommand("props", "run the invariant suites");
    add_common(props, {7}, {});
    props->add_flag("--skip-weyl", skip_weyl, "skip the reflection/Weyl items");

    CLI::App* weyl = app.add_subcommand("weyl", "Weyl symbol checks");
    add_common(weyl, {7}, {});

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.t_convention = parse_convention(conv);
        cfg.mode = parse_mode(mode);
        cfg.normalize = !no_normalize;
        for (int N : cfg.N_list)
            if (N < 2) throw scarmat::Error("N must be >= 2");

        if (table->parsed()) {
            cfg.command = "table";
            return cmd_table(cfg);
        }
        if (coherent->parsed()) {
            cfg.command = "coherent";
            return cmd_coherent(cfg);
        }
        if (scar->parsed()) {
            cfg.command = "scar";
            return cmd_scar(cfg, breakdown);
        }
        if (props->parsed()) {
            cfg.command = "props";
            return cmd_props(cfg, skip_weyl);
        }
        if (weyl->parsed()) {
            cfg.command = "weyl";
            return cmd_weyl(cfg);
        }
    } catch (const std::exception& e) {
        std::cerr << "scarmat: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
