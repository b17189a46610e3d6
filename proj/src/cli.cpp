#include "rqi/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rqi/bellcorr.hpp"
#include "rqi/constants.hpp"
#include "rqi/entanglement.hpp"

namespace rqi {

using nlohmann::json;

std::string format_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("read_text_file: cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("write_text_file: cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw IoError("write_text_file: write to '" + path + "' failed");
}

// ---- shared helpers ----

namespace {

const std::set<std::string> ANGLE_NAMES = {"alpha", "beta", "theta", "phi", "delta"};

double deg2rad(double x) { return x * PI / 180.0; }

double get_number(const json& j, const std::string& key) {
    const auto it = j.find(key);
    if (it == j.end()) throw ConfigError("config: missing field '" + key + "'");
    if (!it->is_number()) throw ConfigError("config: field '" + key + "' must be a number");
    return it->get<double>();
}

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (const auto& item : j.items())
        if (allowed.find(item.key()) == allowed.end())
            throw ConfigError("config: unknown field '" + item.key() + "' in " + where);
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: JSON parse failure: ") + e.what());
    }
}

Partition partition_from_tag(const std::string& tag) {
    if (tag == "four_qubits") return Partition::four_qubits();
    if (tag == "spin_momentum") return Partition::spin_vs_momentum();
    if (tag == "alice_bob") return Partition::alice_bob();
    if (tag == "cross_pair") return Partition::cross_pair();
    throw ConfigError("config: unknown partition '" + tag + "'");
}

void check_speed_range(const std::string& name, double value) {
    if (value < 0.0 || value >= 1.0)
        throw ConfigError("config: '" + name + "' must lie in [0, 1), got " + format_g17(value));
}

} // namespace

// ---- sweep specs ----

SweepSpec preset_sweep(const std::string& name) {
    SweepSpec s;
    if (name == "fig1") {
        s.family = "wigner_angle";
        s.axes = {{"v", 0.0, 0.999, 51}, {"w", 0.0, 0.999, 51}};
        s.out = "fig1.csv";
    } else if (name == "fig2") {
        s.family = "bell";
        s.axes = {{"alpha", 0.0, PI, 49}, {"beta", 0.0, PI, 49}};
        s.fixed = {{"delta", PI / 2.0}};
        s.partitions = {"four_qubits"};
        s.out = "fig2.csv";
    } else if (name == "fig3") {
        s.family = "bell";
        s.axes = {{"alpha", 0.0, PI, 49}, {"beta", 0.0, PI, 49}};
        s.fixed = {{"delta", PI / 4.0}};
        s.partitions = {"spin_momentum"};
        s.out = "fig3.csv";
    } else if (name == "fig4") {
        s.family = "triplet";
        s.axes = {{"theta", 0.0, 2.0 * PI, 49}, {"phi", 0.0, 2.0 * PI, 49}};
        s.fixed = {{"alpha", PI / 4.0}, {"delta", PI / 4.0}};
        s.partitions = {"spin_momentum"};
        s.out = "fig4.csv";
    } else {
        throw ConfigError("preset_sweep: unknown preset '" + name +
                          "' (expected fig1, fig2, fig3 or fig4)");
    }
    return s;
}

SweepSpec sweep_from_json(const std::string& json_text, bool degrees) {
    const json j = parse_json(json_text);
    if (!j.is_object()) throw ConfigError("config: sweep spec must be a JSON object");
    reject_unknown_keys(j, {"family", "sweep", "fixed", "partitions", "out"}, "sweep spec");

    SweepSpec s;
    if (!j.contains("family") || !j["family"].is_string())
        throw ConfigError("config: sweep spec needs a string 'family'");
    s.family = j["family"].get<std::string>();

    if (!j.contains("sweep") || !j["sweep"].is_array() || j["sweep"].empty())
        throw ConfigError("config: 'sweep' must be a non-empty array of axes");
    for (const json& ja : j["sweep"]) {
        if (!ja.is_object()) throw ConfigError("config: each sweep axis must be an object");
        reject_unknown_keys(ja, {"name", "min", "max", "steps"}, "sweep axis");
        if (!ja.contains("name") || !ja["name"].is_string())
            throw ConfigError("config: sweep axis needs a string 'name'");
        SweepAxis axis;
        axis.name = ja["name"].get<std::string>();
        axis.min = get_number(ja, "min");
        axis.max = get_number(ja, "max");
        const double steps = get_number(ja, "steps");
        axis.steps = static_cast<int>(steps);
        if (axis.steps < 2 || static_cast<double>(axis.steps) != steps)
            throw ConfigError("config: axis '" + axis.name + "' steps must be an integer >= 2");
        if (degrees && ANGLE_NAMES.count(axis.name)) {
            axis.min = deg2rad(axis.min);
            axis.max = deg2rad(axis.max);
        }
        s.axes.push_back(axis);
    }

    if (j.contains("fixed")) {
        if (!j["fixed"].is_object()) throw ConfigError("config: 'fixed' must be an object");
        for (const auto& item : j["fixed"].items()) {
            if (!item.value().is_number())
                throw ConfigError("config: fixed '" + item.key() + "' must be a number");
            double v = item.value().get<double>();
            if (degrees && ANGLE_NAMES.count(item.key())) v = deg2rad(v);
            s.fixed[item.key()] = v;
        }
    }

    if (j.contains("partitions")) {
        if (!j["partitions"].is_array())
            throw ConfigError("config: 'partitions' must be an array of strings");
        for (const json& jp : j["partitions"]) {
            if (!jp.is_string()) throw ConfigError("config: partition entries must be strings");
            s.partitions.push_back(jp.get<std::string>());
        }
    }

    if (j.contains("out")) {
        if (!j["out"].is_string()) throw ConfigError("config: 'out' must be a string");
        s.out = j["out"].get<std::string>();
    }
    return s;
}

// ---- sweep engine ----

namespace {

std::vector<double> axis_values(const SweepAxis& axis) {
    std::vector<double> v(static_cast<std::size_t>(axis.steps));
    if (axis.steps == 1) {
        v[0] = axis.min;
        return v;
    }
    for (int i = 0; i < axis.steps; ++i)
        v[static_cast<std::size_t>(i)] =
            axis.min + (axis.max - axis.min) * static_cast<double>(i) /
                           static_cast<double>(axis.steps - 1);
    return v;
}

struct SweepPlan {
    bool speeds = false;                  // delta derived from (v, w)
    std::vector<std::string> echo;        // parameter columns after the axes
    std::vector<std::string> partitions;  // validated tags
    std::vector<std::string> columns;     // full header
};

SweepPlan plan_sweep(const SweepSpec& spec) {
    if (spec.axes.empty() || spec.axes.size() > 2)
        throw ConfigError("run_sweep: expected 1 or 2 sweep axes");

    std::set<std::string> names;
    for (const SweepAxis& a : spec.axes) {
        if (a.steps < 2) throw ConfigError("run_sweep: axis steps must be >= 2");
        if (!names.insert(a.name).second)
            throw ConfigError("run_sweep: duplicate axis '" + a.name + "'");
    }
    for (const auto& kv : spec.fixed)
        if (!names.insert(kv.first).second)
            throw ConfigError("run_sweep: parameter '" + kv.first + "' given twice");

    auto has = [&names](const std::string& n) { return names.count(n) > 0; };

    SweepPlan plan;
    std::set<std::string> required;
    if (spec.family == "wigner_angle") {
        required = {"v", "w"};
        if (!spec.partitions.empty())
            throw ConfigError("run_sweep: partitions do not apply to a wigner_angle sweep");
    } else if (spec.family == "bell" || spec.family == "triplet") {
        required = (spec.family == "bell") ? std::set<std::string>{"alpha", "beta"}
                                           : std::set<std::string>{"alpha", "theta", "phi"};
        const bool has_delta = has("delta");
        const bool has_speeds = has("v") || has("w");
        if (has_delta && has_speeds)
            throw ConfigError("run_sweep: give either 'delta' or the pair 'v','w', not both");
        if (has_delta) {
            required.insert("delta");
        } else {
            required.insert("v");
            required.insert("w");
            plan.speeds = true;
        }
    } else {
        throw ConfigError("run_sweep: unknown family '" + spec.family +
                          "' (expected wigner_angle, bell or triplet)");
    }

    for (const std::string& r : required)
        if (!has(r)) throw ConfigError("run_sweep: family '" + spec.family +
                                       "' needs parameter '" + r + "'");
    for (const std::string& n : names)
        if (!required.count(n))
            throw ConfigError("run_sweep: parameter '" + n + "' does not belong to family '" +
                              spec.family + "'");

    // Check speed ranges over the whole grid up front, so the parallel loop
    // below cannot throw.
    for (const SweepAxis& a : spec.axes)
        if (a.name == "v" || a.name == "w") {
            check_speed_range(a.name, a.min);
            check_speed_range(a.name, a.max);
        }
    for (const auto& kv : spec.fixed)
        if (kv.first == "v" || kv.first == "w") check_speed_range(kv.first, kv.second);

    plan.partitions = spec.partitions;
    if (spec.family != "wigner_angle") {
        if (plan.partitions.empty())
            plan.partitions = {"four_qubits", "spin_momentum", "alice_bob", "cross_pair"};
        for (const std::string& tag : plan.partitions) partition_from_tag(tag); // validate
    }

    // Columns: axes first, remaining parameters echoed in canonical order,
    // delta always present, then the numeric and closed-form quantities.
    std::vector<std::string> canonical;
    if (spec.family == "wigner_angle") canonical = {"v", "w"};
    else if (spec.family == "bell") canonical = {"alpha", "beta"};
    else canonical = {"alpha", "theta", "phi"};
    if (plan.speeds) {
        canonical.push_back("v");
        canonical.push_back("w");
    }

    std::set<std::string> axis_names;
    for (const SweepAxis& a : spec.axes) {
        plan.columns.push_back(a.name);
        axis_names.insert(a.name);
    }
    for (const std::string& c : canonical)
        if (!axis_names.count(c)) plan.echo.push_back(c);
    for (const std::string& c : plan.echo) plan.columns.push_back(c);
    if (!axis_names.count("delta")) plan.columns.push_back("delta");

    if (spec.family != "wigner_angle") {
        for (const std::string& tag : plan.partitions) {
            plan.columns.push_back("E_initial_" + tag);
            plan.columns.push_back("E_boosted_" + tag);
            plan.columns.push_back("E_diff_" + tag);
        }
        if (spec.family == "bell")
            for (const char* n : {"cf_e_4q_initial", "cf_e_4q_boosted", "cf_e_4q_diff",
                                  "cf_e_spinmom_boosted", "cf_e_alice_bob"})
                plan.columns.push_back(n);
        else
            for (const char* n : {"cf_e_4q_diff", "cf_e_spinmom_boosted", "cf_e_alice_bob"})
                plan.columns.push_back(n);
    }
    return plan;
}

std::string sweep_row(const SweepSpec& spec, const SweepPlan& plan,
                      const std::map<std::string, double>& point) {
    auto at = [&point](const std::string& n) { return point.at(n); };
    const double delta = plan.speeds || spec.family == "wigner_angle"
                             ? wigner_angle_perpendicular(at("v"), at("w"))
                             : at("delta");

    std::vector<double> values;
    for (const SweepAxis& a : spec.axes) values.push_back(at(a.name));
    for (const std::string& c : plan.echo) values.push_back(c == "delta" ? delta : at(c));
    bool axis_delta = false;
    for (const SweepAxis& a : spec.axes) axis_delta = axis_delta || a.name == "delta";
    if (!axis_delta) {
        bool echoed = std::find(plan.echo.begin(), plan.echo.end(), "delta") != plan.echo.end();
        if (!echoed) values.push_back(delta);
    }

    if (spec.family != "wigner_angle") {
        ScenarioParams params =
            spec.family == "bell"
                ? ScenarioParams::bell_family_delta(at("alpha"), at("beta"), delta)
                : ScenarioParams::triplet_family_delta(at("alpha"), at("theta"), at("phi"),
                                                       delta);
        const auto [initial, boosted] = boost_scenario(params);
        for (const std::string& tag : plan.partitions) {
            const Partition p = partition_from_tag(tag);
            const double e0 = partition_entanglement(initial, p).total;
            const double e1 = partition_entanglement(boosted, p).total;
            values.push_back(e0);
            values.push_back(e1);
            values.push_back(e1 - e0);
        }
        if (spec.family == "bell") {
            const BellClosedForms cf = closed_forms_bell(at("alpha"), at("beta"), delta);
            values.insert(values.end(), {cf.e_4q_initial, cf.e_4q_boosted, cf.e_4q_diff,
                                         cf.e_spinmom_boosted, cf.e_alice_bob});
        } else {
            const TripletClosedForms cf =
                closed_forms_triplet(at("alpha"), at("theta"), at("phi"), delta);
            values.insert(values.end(), {cf.e_4q_diff, cf.e_spinmom_boosted, cf.e_alice_bob});
        }
    }

    std::string row;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) row += ',';
        row += format_g17(values[i]);
    }
    return row;
}

} // namespace

std::string run_sweep(const SweepSpec& spec, bool parallel) {
    const SweepPlan plan = plan_sweep(spec);

    const std::vector<double> outer = axis_values(spec.axes[0]);
    const std::vector<double> inner =
        spec.axes.size() == 2 ? axis_values(spec.axes[1]) : std::vector<double>{0.0};
    const long n_outer = static_cast<long>(outer.size());
    const long n_inner = static_cast<long>(inner.size());
    const long total = n_outer * n_inner;

    std::vector<std::string> rows(static_cast<std::size_t>(total));
    // Grid points are independent; each writes its own slot and the join below
    // walks the slots in order, so output bytes are schedule-independent.
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
    for (long idx = 0; idx < total; ++idx) {
        std::map<std::string, double> point = spec.fixed;
        point[spec.axes[0].name] = outer[static_cast<std::size_t>(idx / n_inner)];
        if (spec.axes.size() == 2)
            point[spec.axes[1].name] = inner[static_cast<std::size_t>(idx % n_inner)];
        rows[static_cast<std::size_t>(idx)] = sweep_row(spec, plan, point);
    }
    (void)parallel;

    std::string csv;
    for (std::size_t i = 0; i < plan.columns.size(); ++i) {
        if (i) csv += ',';
        csv += plan.columns[i];
    }
    csv += '\n';
    for (const std::string& r : rows) {
        csv += r;
        csv += '\n';
    }
    return csv;
}

// ---- scenario ----

ScenarioConfig scenario_from_json(const std::string& json_text, bool degrees) {
    const json j = parse_json(json_text);
    if (!j.is_object()) throw ConfigError("config: scenario must be a JSON object");
    reject_unknown_keys(j, {"family", "alpha", "beta", "theta", "phi", "v", "w", "delta"},
                        "scenario");

    if (!j.contains("family") || !j["family"].is_string())
        throw ConfigError("config: scenario needs a string 'family'");
    const std::string family = j["family"].get<std::string>();
    if (family != "bell" && family != "triplet")
        throw ConfigError("config: family must be 'bell' or 'triplet', got '" + family + "'");

    auto angle = [&](const std::string& key) {
        const double raw = get_number(j, key);
        return degrees ? deg2rad(raw) : raw;
    };

    const bool has_delta = j.contains("delta");
    const bool has_speeds = j.contains("v") || j.contains("w");
    if (has_delta && has_speeds)
        throw ConfigError("config: give either 'delta' or the pair 'v','w', not both");
    if (!has_delta && !(j.contains("v") && j.contains("w")))
        throw ConfigError("config: scenario needs 'delta' or both 'v' and 'w'");

    const double alpha = angle("alpha");
    double v = 0.0, w = 0.0, delta = 0.0;
    if (has_delta) {
        delta = angle("delta");
    } else {
        v = get_number(j, "v");
        w = get_number(j, "w");
        check_speed_range("v", v);
        check_speed_range("w", w);
    }

    ScenarioConfig config;
    config.from_speeds = !has_delta;
    if (family == "bell") {
        if (j.contains("theta") || j.contains("phi"))
            throw ConfigError("config: 'theta'/'phi' do not apply to the bell family");
        const double beta = angle("beta");
        config.params = has_delta ? ScenarioParams::bell_family_delta(alpha, beta, delta)
                                  : ScenarioParams::bell_family(alpha, beta, v, w);
    } else {
        if (j.contains("beta"))
            throw ConfigError("config: 'beta' does not apply to the triplet family");
        const double theta = angle("theta"), phi = angle("phi");
        config.params = has_delta
                            ? ScenarioParams::triplet_family_delta(alpha, theta, phi, delta)
                            : ScenarioParams::triplet_family(alpha, theta, phi, v, w);
    }
    return config;
}

ScenarioOutcome run_scenario(const ScenarioConfig& config) {
    const ScenarioParams& p = config.params;
    const auto [initial, boosted] = boost_scenario(p);

    struct PartitionRow {
        const char* tag;
        Partition partition;
    };
    const PartitionRow parts[] = {
        {"four_qubits", Partition::four_qubits()},
        {"spin_momentum", Partition::spin_vs_momentum()},
        {"alice_bob", Partition::alice_bob()},
        {"cross_pair", Partition::cross_pair()},
    };

    std::ostringstream out;
    auto line = [&out](const std::string& key, double value) {
        out << key << " = " << format_g17(value) << '\n';
    };

    out << "family = " << (p.family == ScenarioParams::Family::bell ? "bell" : "triplet")
        << '\n';
    line("alpha", p.alpha);
    if (p.family == ScenarioParams::Family::bell) {
        line("beta", p.beta);
    } else {
        line("theta", p.theta);
        line("phi", p.phi);
    }
    if (config.from_speeds) {
        line("v", p.v);
        line("w", p.w);
    }
    line("delta", p.delta);

    double e_init[4], e_boost[4];
    for (int k = 0; k < 4; ++k) {
        e_init[k] = partition_entanglement(initial, parts[k].partition).total;
        e_boost[k] = partition_entanglement(boosted, parts[k].partition).total;
        const std::string tag = parts[k].tag;
        line("E_initial_" + tag, e_init[k]);
        line("E_boosted_" + tag, e_boost[k]);
        line("E_diff_" + tag, e_boost[k] - e_init[k]);
    }

    const DensityMatrix spin_initial = reduced_density(initial, {2, 3});
    const DensityMatrix spin_boosted = reduced_density(boosted, {2, 3});
    line("concurrence_spin_initial", concurrence(spin_initial));
    line("concurrence_spin_boosted", concurrence(spin_boosted));
    line("horodecki_M_spin_initial", horodecki_M(spin_initial));
    line("horodecki_M_spin_boosted", horodecki_M(spin_boosted));
    line("gme_initial", genuine_multipartite_entangled(initial) ? 1.0 : 0.0);
    line("gme_boosted", genuine_multipartite_entangled(boosted) ? 1.0 : 0.0);

    std::vector<std::pair<std::string, double>> residuals;
    if (p.family == ScenarioParams::Family::bell) {
        const BellClosedForms cf = closed_forms_bell(p.alpha, p.beta, p.delta);
        line("cf_e_4q_initial", cf.e_4q_initial);
        line("cf_e_4q_boosted", cf.e_4q_boosted);
        line("cf_e_4q_diff", cf.e_4q_diff);
        line("cf_e_spinmom_boosted", cf.e_spinmom_boosted);
        line("cf_e_alice_bob", cf.e_alice_bob);
        residuals = {
            {"residual_e_4q_initial", std::abs(e_init[0] - cf.e_4q_initial)},
            {"residual_e_4q_boosted", std::abs(e_boost[0] - cf.e_4q_boosted)},
            {"residual_e_4q_diff", std::abs((e_boost[0] - e_init[0]) - cf.e_4q_diff)},
            {"residual_e_spinmom_initial", std::abs(e_init[1])},
            {"residual_e_spinmom_boosted", std::abs(e_boost[1] - cf.e_spinmom_boosted)},
            {"residual_e_alice_bob_initial", std::abs(e_init[2] - cf.e_alice_bob)},
            {"residual_e_alice_bob_boosted", std::abs(e_boost[2] - cf.e_alice_bob)},
        };
    } else {
        const TripletClosedForms cf = closed_forms_triplet(p.alpha, p.theta, p.phi, p.delta);
        line("cf_e_4q_diff", cf.e_4q_diff);
        line("cf_e_spinmom_boosted", cf.e_spinmom_boosted);
        line("cf_e_alice_bob", cf.e_alice_bob);
        residuals = {
            {"residual_e_4q_diff", std::abs((e_boost[0] - e_init[0]) - cf.e_4q_diff)},
            {"residual_e_spinmom_initial", std::abs(e_init[1])},
            {"residual_e_spinmom_boosted", std::abs(e_boost[1] - cf.e_spinmom_boosted)},
            {"residual_e_alice_bob_initial", std::abs(e_init[2] - cf.e_alice_bob)},
            {"residual_e_alice_bob_boosted", std::abs(e_boost[2] - cf.e_alice_bob)},
        };
    }
    residuals.emplace_back("residual_alice_bob_invariance", std::abs(e_boost[2] - e_init[2]));

    ScenarioOutcome outcome;
    for (const auto& [key, value] : residuals) {
        line(key, value);
        outcome.max_residual = std::max(outcome.max_residual, value);
    }
    line("max_residual", outcome.max_residual);
    outcome.report = out.str();
    return outcome;
}

// ---- CHSH ----

ChshOutcome run_chsh(double v, double w) {
    check_speed_range("v", v);
    check_speed_range("w", w);
    const ChshDemoResult demo = boosted_chsh_demo(v, w);
    const double s_max = 2.0 * std::sqrt(2.0);

    std::ostringstream out;
    auto line = [&out](const std::string& key, double value) {
        out << key << " = " << format_g17(value) << '\n';
    };
    line("v", v);
    line("w", w);
    line("delta", demo.delta);
    line("S_initial", demo.s_initial);
    line("S_boosted_fixed", demo.s_boosted_fixed);
    line("S_boosted_transformed", demo.s_boosted_transformed);
    line("S_max", s_max);

    ChshOutcome outcome;
    outcome.deviation = std::abs(std::abs(demo.s_boosted_transformed) - s_max);
    line("deviation_transformed", outcome.deviation);
    outcome.report = out.str();
    return outcome;
}

// ---- entry point ----

namespace {

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        write_text_file(out_path, text);
}

} // namespace

int cli_main(int argc, char** argv) {
    CLI::App app{"Boost-induced entanglement redistribution for two-particle "
                 "spin-momentum states"};
    app.require_subcommand(1);

    std::string out_path;
    bool degrees = false;

    auto* scenario_cmd =
        app.add_subcommand("scenario", "evaluate one configuration and print a report");
    std::string config_path;
    double scenario_tol = EPS_ORACLE;
    scenario_cmd->add_option("config", config_path, "JSON configuration file")->required();
    scenario_cmd->add_option("--out", out_path, "write the report to this file");
    scenario_cmd->add_option("--tol", scenario_tol,
                             "max |numeric - closed form| accepted (default 1e-9)");
    scenario_cmd->add_flag("--degrees", degrees, "interpret input angles as degrees");

    auto* sweep_cmd = app.add_subcommand("sweep", "evaluate a parameter grid and write CSV");
    std::string preset, spec_path;
    sweep_cmd->add_option("--preset", preset, "built-in grid: fig1, fig2, fig3 or fig4");
    sweep_cmd->add_option("--spec", spec_path, "JSON sweep specification file");
    sweep_cmd->add_option("--out", out_path, "output CSV path (overrides spec/preset)");
    sweep_cmd->add_flag("--degrees", degrees, "interpret spec angles as degrees");

    auto* chsh_cmd =
        app.add_subcommand("chsh", "boosted CHSH demo for particle speed v, boost speed w");
    double v = 0.0, w = 0.0;
    double chsh_tol = 1e-8;
    chsh_cmd->add_option("--v", v, "particle speed in [0, 1)")->required();
    chsh_cmd->add_option("--w", w, "observer boost speed in [0, 1)")->required();
    chsh_cmd->add_option("--out", out_path, "write the report to this file");
    chsh_cmd->add_option("--tol", chsh_tol,
                         "max | |S_transformed| - 2 sqrt 2 | accepted (default 1e-8)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // help/version exit clean, everything else is misuse
    }

    try {
        if (scenario_cmd->parsed()) {
            const ScenarioConfig config =
                scenario_from_json(read_text_file(config_path), degrees);
            const ScenarioOutcome outcome = run_scenario(config);
            emit(outcome.report, out_path);
            if (outcome.max_residual > scenario_tol) {
                std::cerr << "scenario: max residual " << format_g17(outcome.max_residual)
                          << " exceeds tolerance " << format_g17(scenario_tol) << '\n';
                return 3;
            }
            return 0;
        }
        if (sweep_cmd->parsed()) {
            if (preset.empty() == spec_path.empty())
                throw ConfigError("sweep: give exactly one of --preset or --spec");
            SweepSpec spec = preset.empty() ? sweep_from_json(read_text_file(spec_path), degrees)
                                            : preset_sweep(preset);
            if (!out_path.empty()) spec.out = out_path;
            const std::string csv = run_sweep(spec);
            emit(csv, spec.out);
            return 0;
        }
        if (chsh_cmd->parsed()) {
            const ChshOutcome outcome = run_chsh(v, w);
            emit(outcome.report, out_path);
            if (outcome.deviation > chsh_tol) {
                std::cerr << "chsh: deviation " << format_g17(outcome.deviation)
                          << " exceeds tolerance " << format_g17(chsh_tol) << '\n';
                return 3;
            }
            return 0;
        }
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

} // namespace rqi
