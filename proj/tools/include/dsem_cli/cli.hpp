#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "dsem/catalog.hpp"
#include "dsem/connectivity.hpp"
#include "dsem/generators.hpp"
#include "dsem/hamiltonian.hpp"

namespace dsem::cli {

using nlohmann::json;

enum Exit { kOk = 0, kRejected = 2, kVerifyFailed = 3, kDefect = 4 };

json catalog_json();

json map_to_json(const SurfaceMap& m, const std::vector<std::string>& labels);
SurfaceMap map_from_json(const json& j, std::vector<std::string>* labels = nullptr);

json layout_to_json(const Layout& l);
Layout layout_from_json(const json& j);

json cycle_to_json(const Cycle& c);
Cycle cycle_from_json(const json& j);

class MismatchedInputs : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unrolled strip with seam markers; the cycle, if any, as thick segments.
std::string render_svg(const SurfaceMap& m, const Layout& l, const Cycle* cycle = nullptr);

struct SweepRow {
    std::string type;
    int i = 0, j = 0, k = 0;
    long long n = 0;
    bool generated = false;
    bool count_ok = false;
    bool closed_ok = false;  // every edge on exactly two faces
    bool dsem_ok = false;
    bool euler_ok = false;
    bool curvature_ok = false;
    int kappa = -1;
    int mindeg = -1;
    bool ham_constructed = false;
    bool ham_verified = false;
    std::string oracle = "skipped";  // Found, NotFound, BudgetExhausted or skipped
    bool oracle_agrees = true;
    std::optional<WindingPair> winding;
    bool rows_noncontractible = false;
    bool cutting_noncontractible = false;
    std::string error;

    bool pass() const;
};

struct SweepReport {
    std::vector<SweepRow> rows;
    int passed = 0;
    int failed = 0;
    bool all_pass() const { return failed == 0; }
};

struct SweepOptions {
    std::vector<std::string> types;  // empty means all
    int max_vertices = 48;
    int oracle_cutoff = 42;
    long long oracle_budget = kDefaultOracleBudget;
    bool connectivity = true;
};

SweepRow sweep_instance(const ReprParams& p, const SweepOptions& opt);
SweepReport run_sweep(const SweepOptions& opt);
json to_json(const SweepRow& r);
json to_json(const SweepReport& r);

/// Entry point of the dsem executable.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace dsem::cli
