#include "vf21/report.hpp"

#include <cinttypes>
#include <cstdio>
#include <set>

#include <json.hpp>

namespace vf21 {

namespace {

std::string dbl(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

std::string render_json(const SuiteConfig& cfg, const std::vector<CheckReport>& reports) {
    std::string out;
    out += "{\n  \"config\": {";
    char head[512];
    std::snprintf(head, sizeof head,
                  "\"seed\": %" PRIu64
                  ", \"rel_tol\": %s, \"samples\": %d, \"e_max\": %d, "
                  "\"series_order\": %d, \"k_max\": %d",
                  cfg.seed, dbl(cfg.rel_tol).c_str(), cfg.samples, cfg.e_max,
                  cfg.series_order, cfg.k_max);
    out += head;
    out += ", \"xs\": [";
    for (size_t i = 0; i < cfg.xs.size(); ++i) out += (i ? ", " : "") + dbl(cfg.xs[i]);
    out += "], \"rs\": [";
    for (size_t i = 0; i < cfg.rs.size(); ++i) out += (i ? ", " : "") + dbl(cfg.rs[i]);
    out += "]},\n  \"results\": [\n";
    for (size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        nlohmann::json esc_params = r.params;  // string escaping
        nlohmann::json esc_notes = r.notes;
        out += "    {\"check_id\": \"" + r.check_id + "\", \"sample\": " +
               std::to_string(r.sample_index) + ", \"params\": " + esc_params.dump() +
               ", \"residual\": " + dbl(r.residual) + ", \"tolerance\": " + dbl(r.tolerance) +
               ", \"pass\": " + (r.pass ? "true" : "false") +
               ", \"gating\": " + (r.gating ? "true" : "false") +
               ", \"notes\": " + esc_notes.dump() + "}";
        out += (i + 1 < reports.size()) ? ",\n" : "\n";
    }
    const SuiteSummary s = summarize(reports);
    out += "  ],\n  \"summary\": {\"total\": " + std::to_string(s.total) +
           ", \"passed\": " + std::to_string(s.passed) +
           ", \"gating_failures\": " + std::to_string(s.gating_failures) +
           ", \"informational\": " + std::to_string(s.informational) + "}\n}\n";
    return out;
}

std::string render_csv(const std::vector<CheckReport>& reports) {
    std::string out = "check_id,sample,params,residual,tolerance,pass,gating\n";
    for (const auto& r : reports) {
        std::string params = r.params;
        for (auto& ch : params)
            if (ch == ',') ch = ';';
        out += r.check_id + "," + std::to_string(r.sample_index) + "," + params + "," +
               dbl(r.residual) + "," + dbl(r.tolerance) + "," + (r.pass ? "1" : "0") + "," +
               (r.gating ? "1" : "0") + "\n";
    }
    return out;
}

SuiteSummary summarize(const std::vector<CheckReport>& reports) {
    SuiteSummary s;
    for (const auto& r : reports) {
        ++s.total;
        if (r.pass) ++s.passed;
        if (!r.gating)
            ++s.informational;
        else if (!r.pass)
            ++s.gating_failures;
    }
    return s;
}

SuiteConfig parse_config(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    static const std::set<std::string> known{"seed",    "rel_tol",      "samples", "e_max",
                                             "series_order", "k_max",   "threads", "xs",
                                             "rs",      "only"};
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!known.count(it.key()))
            throw domain_error("config: unknown field '" + it.key() + "'");
    SuiteConfig cfg;
    if (j.contains("seed")) cfg.seed = j["seed"].get<uint64_t>();
    if (j.contains("rel_tol")) cfg.rel_tol = j["rel_tol"].get<double>();
    if (j.contains("samples")) cfg.samples = j["samples"].get<int>();
    if (j.contains("e_max")) cfg.e_max = j["e_max"].get<int>();
    if (j.contains("series_order")) cfg.series_order = j["series_order"].get<int>();
    if (j.contains("k_max")) cfg.k_max = j["k_max"].get<int>();
    if (j.contains("threads")) cfg.threads = j["threads"].get<int>();
    if (j.contains("xs")) cfg.xs = j["xs"].get<std::vector<double>>();
    if (j.contains("rs")) cfg.rs = j["rs"].get<std::vector<double>>();
    if (j.contains("only")) cfg.only = j["only"].get<std::vector<std::string>>();
    if (cfg.samples <= 0 || cfg.e_max < 0 || cfg.series_order < 1 || cfg.k_max < 2 ||
        cfg.xs.empty() || cfg.rs.empty())
        throw domain_error("config: invalid values");
    for (double x : cfg.xs)
        if (!(x > 0.0 && x < 1.0)) throw domain_error("config: x out of range");
    for (double r : cfg.rs)
        if (!(r > 2.0)) throw domain_error("config: r out of range");
    return cfg;
}

} // namespace vf21
