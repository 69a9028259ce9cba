#ifndef BCSPH_REPORT_HPP
#define BCSPH_REPORT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bcsph/cherednik.hpp"
#include "bcsph/multipoly.hpp"
#include "bcsph/rational.hpp"

namespace bcsph {

using Json = nlohmann::ordered_json;

/// 17 significant digits; round-trips every double.
std::string float17(double v);

/// Full parameter set of a run; embedded verbatim in every output so results
/// are reproducible from the report alone. Rationals travel as "p/q" strings.
struct RunConfig {
    std::string command;
    int r = 1;
    std::string a = "1", b = "1", iota = "1";
    std::string nu = "4";
    std::string delta;
    int max_weight = 3;
    int order = 60;
    int spectral_order = 160;
    double cutoff = 0.0; // 0: choose from the tail budget
    std::string c_kind = "corrected";
    std::optional<double> constant_override;
    std::string format = "json";
    std::string out_path;
    std::map<std::string, double> tolerances;

    Json to_json() const;
};

/// Parses "key=value" lines; '#' starts a comment. Unknown keys are errors.
void apply_config_file(RunConfig& cfg, const std::string& path);
void apply_config_line(RunConfig& cfg, const std::string& key, const std::string& value);

struct VerificationReport {
    std::string item;
    std::string status = "pass"; // pass | fail | warn
    Json residuals = Json::object();
    Json metadata = Json::object();
    Json timings = Json::object(); // kept separate: excluded from determinism

    Json to_json(const RunConfig& cfg) const;
};

/// Writes to cfg.out_path (or stdout when empty).
void emit_report(const VerificationReport& report, const RunConfig& cfg);

/// Polynomial serialization: list of {exponents, coeff} in canonical term order.
Json poly_to_json(const MultiPoly& p);
/// Symmetric/spectral polynomial: list of {partition, coeff} in canonical order.
Json symmetric_to_json(const SymmetricPoly& s);
Json spectral_to_json(const SpectralPolynomial& s);

/// Partition-labelled CSV of an exact matrix.
std::string transition_to_csv(const TransitionMatrix& M);
Json transition_to_json(const TransitionMatrix& M);

} // namespace bcsph

#endif
