#pragma once

#include <string>
#include <vector>

#include "scarmat/exact_oracle.hpp"
#include "scarmat/scar_states.hpp"
#include "scarmat/sc_engine.hpp"

namespace scarmat {

// One property/invariant check with its measured residual.
struct SuiteResult {
    std::string name;
    double residual = 0;
    double tolerance = 0;
    bool pass = false;
};

struct RunConfig {
    std::string command;
    std::vector<int> N_list;
    std::vector<int> t_list;
    double phi1 = 0.0, phi2 = 0.0;
    TConvention t_convention = TConvention::LogNOverLambda;
    bool normalize = true;
    int kmax = 0; // <= 0: adaptive image selection
    int cutoff = 0; // <= 0: default from T
    ScMode mode = ScMode::ExactW;
    std::string output;      // empty: stdout
    std::string format = "pretty";
    unsigned seed = 12345;
};

struct Report {
    RunConfig config;
    std::vector<ComparisonRecord> records;
    std::vector<SuiteResult> suite_results;

    bool all_pass() const;
};

// {config, records[], suite_results[]}; complex numbers as {re, im}.
std::string to_json(const Report& r);
std::string to_csv(const Report& r);
// Table-1 style five-column layout for the table command, plain listing otherwise.
std::string to_pretty(const Report& r);

std::string format_report(const Report& r, const std::string& format);

// write to cfg.output or stdout; throws on I/O failure
void emit_report(const Report& r);

} // namespace scarmat
