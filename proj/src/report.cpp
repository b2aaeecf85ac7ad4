#include "scarmat/report.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "scarmat/errors.hpp"

namespace scarmat {

using nlohmann::json;

namespace {

json cplx_json(cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

std::string fmt_g(double x, int sig) {
    std::ostringstream os;
    os.precision(sig);
    os << x;
    return os.str();
}

// "a+bi" with 9 significant digits (one beyond Table 1's 8)
std::string fmt_c9(cplx z) {
    std::ostringstream os;
    os.precision(9);
    os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::fabs(z.imag()) << "i";
    return os.str();
}

} // namespace

bool Report::all_pass() const {
    for (auto& s : suite_results)
        if (!s.pass) return false;
    return true;
}

std::string to_json(const Report& r) {
    json cfg{
        {"command", r.config.command},
        {"N", r.config.N_list},
        {"t", r.config.t_list},
        {"phi1", r.config.phi1},
        {"phi2", r.config.phi2},
        {"T_convention", to_string(r.config.t_convention)},
        {"normalize", r.config.normalize},
        {"kmax", r.config.kmax},
        {"cutoff", r.config.cutoff},
        {"mode", to_string(r.config.mode)},
        {"format", r.config.format},
        {"seed", r.config.seed},
    };
    json records = json::array();
    for (auto& rec : r.records) {
        records.push_back(json{
            {"N", rec.N},
            {"t", rec.t},
            {"X1", {rec.X1.p, rec.X1.q}},
            {"X2", {rec.X2.p, rec.X2.q}},
            {"phi1", rec.phi1},
            {"phi2", rec.phi2},
            {"T", rec.T},
            {"exact", cplx_json(rec.exact)},
            {"sc", cplx_json(rec.sc)},
            {"abs_err", rec.abs_err},
            {"rel_err", rec.rel_err},
            {"mode", rec.mode},
        });
    }
    json suites = json::array();
    for (auto& s : r.suite_results) {
        suites.push_back(json{{"name", s.name},
                              {"residual", s.residual},
                              {"tolerance", s.tolerance},
                              {"pass", s.pass}});
    }
    json top{{"config", cfg}, {"records", records}, {"suite_results", suites}};
    return top.dump(2);
}

std::string to_csv(const Report& r) {
    std::ostringstream os;
    os.precision(15);
    os << "N,t,X1p,X1q,X2p,X2q,phi1,phi2,T,exact_re,exact_im,sc_re,sc_im,abs_err,rel_err,mode\n";
    for (auto& rec : r.records) {
        os << rec.N << ',' << rec.t << ',' << rec.X1.p << ',' << rec.X1.q << ',' << rec.X2.p
           << ',' << rec.X2.q << ',' << rec.phi1 << ',' << rec.phi2 << ',' << rec.T << ','
           << rec.exact.real() << ',' << rec.exact.imag() << ',' << rec.sc.real() << ','
           << rec.sc.imag() << ',' << rec.abs_err << ',' << rec.rel_err << ',' << rec.mode
           << '\n';
    }
    if (!r.suite_results.empty()) {
        os << "suite,residual,tolerance,pass\n";
        for (auto& s : r.suite_results)
            os << s.name << ',' << s.residual << ',' << s.tolerance << ',' << (s.pass ? 1 : 0)
               << '\n';
    }
    return os.str();
}

std::string to_pretty(const Report& r) {
    std::ostringstream os;
    if (r.config.command == "table" && !r.records.empty()) {
        // five columns mirroring the published comparison table
        std::map<int, std::map<int, const ComparisonRecord*>> byN;
        for (auto& rec : r.records) byN[rec.N][rec.t] = &rec;
        os << "N      <s1|s2>                    <s1|s2>_SC                 "
              "<s1|U|s2>                  <s1|U|s2>_SC\n";
        for (auto& [N, row] : byN) {
            os << N;
            for (int pad = int(std::to_string(N).size()); pad < 7; ++pad) os << ' ';
            for (int t : {0, 1}) {
                auto it = row.find(t);
                std::string ex = it != row.end() ? fmt_c9(it->second->exact) : "-";
                std::string sc = it != row.end() ? fmt_c9(it->second->sc) : "-";
                ex.resize(std::max<size_t>(ex.size(), 26), ' ');
                sc.resize(std::max<size_t>(sc.size(), 26), ' ');
                os << ex << ' ' << sc << ' ';
            }
            os << '\n';
        }
        os << '\n';
        for (auto& rec : r.records) {
            os << "N=" << rec.N << " t=" << rec.t << " mode=" << rec.mode
               << " T=" << fmt_g(rec.T, 6) << " abs_err=" << fmt_g(rec.abs_err, 3)
               << " rel_err=" << fmt_g(rec.rel_err, 3) << '\n';
        }
    } else {
        for (auto& rec : r.records) {
            os << "N=" << rec.N << " t=" << rec.t << " exact=" << fmt_c9(rec.exact)
               << " sc=" << fmt_c9(rec.sc) << " abs_err=" << fmt_g(rec.abs_err, 3)
               << " rel_err=" << fmt_g(rec.rel_err, 3) << " mode=" << rec.mode << '\n';
        }
    }
    for (auto& s : r.suite_results) {
        os << (s.pass ? "[PASS] " : "[FAIL] ") << s.name << "  residual=" << fmt_g(s.residual, 3)
           << " tol=" << fmt_g(s.tolerance, 3) << '\n';
    }
    return os.str();
}

std::string format_report(const Report& r, const std::string& format) {
    if (format == "json") return to_json(r);
    if (format == "csv") return to_csv(r);
    return to_pretty(r);
}

void emit_report(const Report& r) {
    std::string text = format_report(r, r.config.format);
    if (r.config.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(r.config.output);
    if (!f) throw Error("cannot open output file: " + r.config.output);
    f << text;
    if (!f) throw Error("write failed: " + r.config.output);
}

} // namespace scarmat
