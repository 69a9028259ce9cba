#include "bcsph/report.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include "bcsph/errors.hpp"

namespace bcsph {

std::string float17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Json RunConfig::to_json() const {
    Json j;
    j["command"] = command;
    j["r"] = r;
    j["a"] = a;
    j["b"] = b;
    j["iota"] = iota;
    j["nu"] = nu;
    j["delta"] = delta;
    j["max_weight"] = max_weight;
    j["order"] = order;
    j["spectral_order"] = spectral_order;
    j["cutoff"] = float17(cutoff);
    j["c_kind"] = c_kind;
    if (constant_override)
        j["constant_override"] = float17(*constant_override);
    j["format"] = format;
    Json tol = Json::object();
    for (const auto& [k, v] : tolerances) tol[k] = float17(v);
    j["tolerances"] = tol;
    return j;
}

void apply_config_line(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "command") cfg.command = value;
    else if (key == "r") cfg.r = std::stoi(value);
    else if (key == "a") cfg.a = value;
    else if (key == "b") cfg.b = value;
    else if (key == "iota") cfg.iota = value;
    else if (key == "nu") cfg.nu = value;
    else if (key == "delta") cfg.delta = value;
    else if (key == "max_weight") cfg.max_weight = std::stoi(value);
    else if (key == "order") cfg.order = std::stoi(value);
    else if (key == "spectral_order") cfg.spectral_order = std::stoi(value);
    else if (key == "cutoff") cfg.cutoff = std::stod(value);
    else if (key == "c_kind") cfg.c_kind = value;
    else if (key == "constant_override") cfg.constant_override = std::stod(value);
    else if (key == "format") cfg.format = value;
    else if (key == "out") cfg.out_path = value;
    else if (key.rfind("tol.", 0) == 0) cfg.tolerances[key.substr(4)] = std::stod(value);
    else throw ParameterError("unknown config key '" + key + "'");
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open config file " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParameterError(path + ":" + std::to_string(lineno) +
                                 ": expected key=value");
        auto strip = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        try {
            apply_config_line(cfg, strip(line.substr(0, eq)), strip(line.substr(eq + 1)));
        } catch (const std::exception& e) {
            throw ParameterError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
}

Json VerificationReport::to_json(const RunConfig& cfg) const {
    Json j;
    j["item"] = item;
    j["status"] = status;
    j["residuals"] = residuals;
    j["config"] = cfg.to_json();
    j["metadata"] = metadata;
    j["timings"] = timings;
    return j;
}

void emit_report(const VerificationReport& report, const RunConfig& cfg) {
    std::string body = report.to_json(cfg).dump(2) + "\n";
    if (cfg.out_path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(cfg.out_path);
    if (!out) throw Error("cannot write " + cfg.out_path);
    out << body;
}

Json poly_to_json(const MultiPoly& p) {
    Json arr = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json t;
        t["exponents"] = e;
        t["coeff"] = c.str();
        arr.push_back(std::move(t));
    }
    return arr;
}

Json symmetric_to_json(const SymmetricPoly& s) {
    Json arr = Json::array();
    for (const auto& [eta, c] : s.coeffs()) {
        Json t;
        t["partition"] = eta.parts;
        t["coeff"] = c.str();
        arr.push_back(std::move(t));
    }
    return arr;
}

Json spectral_to_json(const SpectralPolynomial& s) {
    Json arr = Json::array();
    for (const auto& [eta, c] : s.coeffs()) {
        Json t;
        t["partition"] = eta.parts;
        t["coeff"] = c.str();
        arr.push_back(std::move(t));
    }
    return arr;
}

std::string transition_to_csv(const TransitionMatrix& M) {
    std::string csv = "row\\col";
    for (const Partition& p : M.order) csv += "," + p.str();
    csv += "\n";
    for (size_t i = 0; i < M.order.size(); ++i) {
        csv += M.order[i].str();
        for (size_t j = 0; j < M.order.size(); ++j) csv += "," + M.entries[i][j].str();
        csv += "\n";
    }
    return csv;
}

Json transition_to_json(const TransitionMatrix& M) {
    Json j;
    Json order = Json::array();
    for (const Partition& p : M.order) order.push_back(p.parts);
    j["order"] = order;
    Json rows = Json::array();
    for (const auto& row : M.entries) {
        Json r = Json::array();
        for (const Rational& v : row) r.push_back(v.str());
        rows.push_back(std::move(r));
    }
    j["entries"] = rows;
    return j;
}

} // namespace bcsph
