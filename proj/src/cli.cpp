#include "gsf/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gsf/crossover.hpp"
#include "gsf/error.hpp"
#include "gsf/fidelity.hpp"
#include "gsf/models.hpp"
#include "gsf/parallel.hpp"
#include "gsf/quench.hpp"
#include "gsf/scaling.hpp"
#include "gsf/verify.hpp"

namespace gsf::cli {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::vector<std::string> split3(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    if (parts.size() != 3) throw ConfigError("range must look like lo:hi:n, got '" + text + "'");
    return parts;
}

template <class T>
T parse_number(const std::string& s) {
    std::istringstream in(s);
    T v{};
    in >> v;
    if (in.fail() || !in.eof()) throw ConfigError("not a number: '" + s + "'");
    return v;
}

const std::vector<std::string> kCommands{"fidelity", "sweep", "scaling", "crossover", "quench", "verify"};
const std::vector<std::string> kFunctions{"A", "B", "A_mcp", "A_mps"};
const std::vector<std::string> kQuantities{"gamma_three_halves", "size_three_halves", "delta_seven_quarters"};

bool one_of(const std::string& v, const std::vector<std::string>& set) {
    return std::find(set.begin(), set.end(), v) != set.end();
}

std::vector<std::int64_t> sizes_of(const RunConfig& cfg) {
    if (cfg.N_range) return parse_int_range(*cfg.N_range).values();
    if (cfg.N) return {*cfg.N};
    return {};
}

std::vector<double> cs_of(const RunConfig& cfg) {
    if (cfg.c_range) return parse_real_range(*cfg.c_range).values();
    return {cfg.c};
}

PathSpec spec_for(const RunConfig& cfg, double c) {
    switch (parse_path(cfg.path)) {
        case PathKind::A: return PathSpec::path_a(cfg.gamma, cfg.delta, c);
        case PathKind::B: return PathSpec::path_b(cfg.g, cfg.delta, c);
        case PathKind::C: return PathSpec::path_c(cfg.delta, c);
        case PathKind::D: return PathSpec::path_d(cfg.alpha, cfg.delta, c);
        case PathKind::ExtIsing: return PathSpec::ext_ising(cfg.delta, c);
    }
    throw ConfigError("unknown path");
}

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

struct Point {
    double c;
    std::int64_t N;
};

std::vector<Point> grid_points(const RunConfig& cfg) {
    std::vector<Point> pts;
    for (double c : cs_of(cfg)) {
        for (std::int64_t n : sizes_of(cfg)) pts.push_back({c, n});
    }
    return pts;
}

Table fidelity_table(const RunConfig& cfg, bool sweep) {
    const auto pts = grid_points(cfg);
    struct Out {
        FidelityResult exact;
        std::optional<ScalingPrediction> pred;
    };
    const auto res = parallel_map<Out>(pts.size(), cfg.parallelism, [&](std::size_t i) {
        const PathSpec spec = spec_for(cfg, pts[i].c);
        const ResolvedPair pr = resolve_path(spec);
        Out o{fidelity_product(pr.first, pr.second, pts[i].N), std::nullopt};
        try {
            o.pred = predict_lnF(spec, pts[i].N);
        } catch (const DomainError&) {
        }
        return o;
    });

    Table t;
    if (sweep) {
        t.columns = {"c", "N", "F_exact", "F_predicted", "lnF_exact", "lnF_predicted"};
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const auto& r = res[i];
            t.rows.push_back({pts[i].c, pts[i].N, r.exact.F, r.pred ? json(r.pred->F()) : json(nullptr),
                              number_or_null(r.exact.lnF),
                              r.pred ? number_or_null(r.pred->lnF()) : json(nullptr)});
        }
        return t;
    }

    std::vector<std::string> ratio_names;
    for (const auto& r : res) {
        if (!r.pred) continue;
        for (const auto& v : r.pred->validity) {
            if (!one_of(v.name, ratio_names)) ratio_names.push_back(v.name);
        }
    }
    t.columns = {"path", "c", "N", "lnF", "F", "exact_zero", "lnF_predicted", "F_predicted", "formula_id"};
    for (const auto& n : ratio_names) t.columns.push_back(n);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& r = res[i];
        std::vector<json> row{cfg.path, pts[i].c, pts[i].N, number_or_null(r.exact.lnF), r.exact.F,
                              r.exact.exact_zero};
        if (r.pred) {
            row.push_back(number_or_null(r.pred->lnF()));
            row.push_back(r.pred->F());
            row.push_back(r.pred->formula_id);
        } else {
            row.insert(row.end(), 3, json(nullptr));
        }
        for (const auto& n : ratio_names) {
            json cell = nullptr;
            if (r.pred) {
                for (const auto& v : r.pred->validity) {
                    if (v.name == n) cell = number_or_null(v.value);
                }
            }
            row.push_back(cell);
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table scaling_table(const RunConfig& cfg) {
    const auto cs = cs_of(cfg);
    const auto vals = parallel_map<double>(cs.size(), cfg.parallelism, [&](std::size_t i) {
        const double c = cs[i];
        if (cfg.function == "A") return scaling_A(c);
        if (cfg.function == "B") return scaling_B(c);
        if (cfg.function == "A_mcp") return scaling_A_mcp(c);
        return scaling_A_mps(c);
    });
    Table t;
    t.columns = {"c", cfg.function};
    for (std::size_t i = 0; i < cs.size(); ++i) t.rows.push_back({cs[i], vals[i]});
    return t;
}

Table crossover_table(const RunConfig& cfg) {
    SweepOptions opts;
    opts.per_decade = cfg.per_decade;
    opts.parallelism = cfg.parallelism;
    double v = 0.0;
    if (cfg.quantity == "gamma_three_halves") {
        v = gamma_three_halves(cfg.delta, *cfg.N, opts);
    } else if (cfg.quantity == "size_three_halves") {
        v = size_three_halves(cfg.alpha, cfg.delta, cfg.c, opts);
    } else {
        v = delta_seven_quarters(cfg.alpha, *cfg.N, cfg.c, opts);
    }
    Table t;
    t.columns = {"quantity", "value"};
    t.rows.push_back({cfg.quantity, v});
    return t;
}

Table quench_table(const RunConfig& cfg) {
    const auto pts = grid_points(cfg);
    const auto res = parallel_map<QuenchResult>(pts.size(), cfg.parallelism, [&](std::size_t i) {
        return excitation_density(cfg.gamma, cfg.delta, pts[i].c, pts[i].N);
    });
    Table t;
    t.columns = {"c", "N", "n_ex", "n_ex_limit", "n_ex_over_delta", "B", "survival"};
    const double ad = std::abs(cfg.delta);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& r = res[i];
        t.rows.push_back({pts[i].c, pts[i].N, r.n_ex, r.n_ex_limit, r.n_ex / ad, scaling_B(pts[i].c), r.survival});
    }
    return t;
}

Table verify_table(const RunConfig& cfg) {
    const auto cs = cs_of(cfg);
    const bool a = parse_path(cfg.path) == PathKind::A;
    const auto res = a ? residual_grid_pathA(cfg.gamma, cfg.delta, cs, cfg.parallelism)
                       : residual_grid_pathB(cfg.g, cfg.delta, cs, cfg.parallelism);
    Table t;
    t.columns = {"c", a ? "gamma" : "g", "delta", "E", "normalized"};
    for (const auto& s : res) t.rows.push_back({s.c, a ? s.gamma : s.g, s.delta, s.E, s.normalized});
    return t;
}

std::string utc_now() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string csv_cell(const json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
    if (v.is_number_unsigned()) return std::to_string(v.get<std::uint64_t>());
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
    return buf;
}

}  // namespace

std::vector<std::int64_t> IntRange::values() const {
    std::vector<std::int64_t> out;
    for (std::int64_t v = lo; v <= hi; v += step) out.push_back(v);
    return out;
}

std::vector<double> RealRange::values() const {
    if (count == 1) return {lo};
    std::vector<double> out(static_cast<std::size_t>(count));
    const double step = (hi - lo) / static_cast<double>(count - 1);
    for (std::int64_t i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = lo + static_cast<double>(i) * step;
    out.back() = hi;
    return out;
}

IntRange parse_int_range(const std::string& text) {
    const auto p = split3(text);
    IntRange r{parse_number<std::int64_t>(p[0]), parse_number<std::int64_t>(p[1]),
               parse_number<std::int64_t>(p[2])};
    if (r.step < 1 || r.hi < r.lo) throw ConfigError("N range needs lo <= hi and step >= 1");
    return r;
}

RealRange parse_real_range(const std::string& text) {
    const auto p = split3(text);
    RealRange r{parse_number<double>(p[0]), parse_number<double>(p[1]), parse_number<std::int64_t>(p[2])};
    if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || r.hi < r.lo || r.count < 1) {
        throw ConfigError("c range needs finite lo <= hi and count >= 1");
    }
    if (r.count == 1 && r.hi != r.lo) throw ConfigError("c range with one point needs lo == hi");
    return r;
}

nlohmann::json to_json(const RunConfig& cfg) {
    json j;
    j["command"] = cfg.command;
    j["path"] = cfg.path;
    j["gamma"] = cfg.gamma;
    j["g"] = cfg.g;
    j["alpha"] = cfg.alpha;
    j["delta"] = cfg.delta;
    j["c"] = cfg.c;
    j["N"] = cfg.N ? json(*cfg.N) : json(nullptr);
    j["N_range"] = cfg.N_range ? json(*cfg.N_range) : json(nullptr);
    j["c_range"] = cfg.c_range ? json(*cfg.c_range) : json(nullptr);
    j["function"] = cfg.function;
    j["quantity"] = cfg.quantity;
    j["per_decade"] = cfg.per_decade;
    j["format"] = cfg.format;
    j["output"] = cfg.output;
    j["parallelism"] = cfg.parallelism;
    return j;
}

RunConfig config_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw ConfigError("config must be a JSON object");
    const json& j = doc.contains("config") && doc.contains("rows") ? doc.at("config") : doc;
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    RunConfig cfg;
    try {
        for (const auto& [key, v] : j.items()) {
            if (key == "command") cfg.command = v.get<std::string>();
            else if (key == "path") cfg.path = v.get<std::string>();
            else if (key == "gamma") cfg.gamma = v.get<double>();
            else if (key == "g") cfg.g = v.get<double>();
            else if (key == "alpha") cfg.alpha = v.get<double>();
            else if (key == "delta") cfg.delta = v.get<double>();
            else if (key == "c") cfg.c = v.get<double>();
            else if (key == "N") cfg.N = v.is_null() ? std::nullopt : std::optional(v.get<std::int64_t>());
            else if (key == "N_range") cfg.N_range = v.is_null() ? std::nullopt : std::optional(v.get<std::string>());
            else if (key == "c_range") cfg.c_range = v.is_null() ? std::nullopt : std::optional(v.get<std::string>());
            else if (key == "function") cfg.function = v.get<std::string>();
            else if (key == "quantity") cfg.quantity = v.get<std::string>();
            else if (key == "per_decade") cfg.per_decade = v.get<int>();
            else if (key == "format") cfg.format = v.get<std::string>();
            else if (key == "output") cfg.output = v.get<std::string>();
            else if (key == "parallelism") {
                const auto p = v.get<std::int64_t>();
                if (p < 0) throw ConfigError("parallelism must be >= 0");
                cfg.parallelism = static_cast<unsigned>(p);
            } else {
                throw ConfigError("unknown config key '" + key + "'");
            }
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad config value: ") + e.what());
    }
    return cfg;
}

void validate(const RunConfig& cfg) {
    if (!one_of(cfg.command, kCommands)) throw ConfigError("unknown command '" + cfg.command + "'");
    if (cfg.format != "csv" && cfg.format != "json") throw ConfigError("format must be csv or json");
    if (cfg.per_decade < 1) throw ConfigError("per_decade must be >= 1");
    const auto cs = cs_of(cfg);  // parses the range
    const auto sizes = sizes_of(cfg);
    try {
        for (std::int64_t n : sizes) check_sites(n);
        const std::string& cmd = cfg.command;
        if (cmd == "scaling") {
            if (!one_of(cfg.function, kFunctions)) throw ConfigError("unknown function '" + cfg.function + "'");
            for (double c : cs) {
                if (!std::isfinite(c)) throw ConfigError("c must be finite");
                if (cfg.function == "A_mcp" && c < 1.0) throw ConfigError("A_mcp needs c >= 1");
            }
            return;
        }
        const PathKind kind = parse_path(cfg.path);
        if (cmd == "crossover") {
            if (!one_of(cfg.quantity, kQuantities)) throw ConfigError("unknown quantity '" + cfg.quantity + "'");
            if (cfg.delta == 0.0) throw ConfigError("crossover needs delta != 0");
            if (cfg.quantity == "gamma_three_halves") {
                if (!cfg.N) throw ConfigError("crossover needs N");
                PathSpec::path_a(1.0, cfg.delta, -1.0).validate();
            } else {
                if (cfg.quantity == "delta_seven_quarters" && !cfg.N) throw ConfigError("crossover needs N");
                PathSpec::path_d(cfg.alpha, cfg.delta, cfg.c).validate();
            }
            return;
        }
        if (cmd == "verify") {
            if (kind != PathKind::A && kind != PathKind::B) throw ConfigError("verify supports paths A and B");
            if (cfg.delta == 0.0) throw ConfigError("verify needs delta != 0");
            if (kind == PathKind::A && cfg.gamma == 0.0) throw ConfigError("verify needs gamma != 0");
            for (double c : cs) spec_for(cfg, c).validate();
            return;
        }
        if (sizes.empty()) throw ConfigError(cmd + " needs N or N_range");
        if (cmd == "quench") {
            if (kind != PathKind::A) throw ConfigError("quench supports path A");
            if (cfg.delta == 0.0) throw ConfigError("quench needs delta != 0");
        }
        if (cmd == "sweep" && !cfg.N_range && !cfg.c_range) throw ConfigError("sweep needs N_range or c_range");
        for (double c : cs) spec_for(cfg, c).validate();
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
}

Table compute(const RunConfig& cfg) {
    if (cfg.command == "fidelity") return fidelity_table(cfg, false);
    if (cfg.command == "sweep") return fidelity_table(cfg, true);
    if (cfg.command == "scaling") return scaling_table(cfg);
    if (cfg.command == "crossover") return crossover_table(cfg);
    if (cfg.command == "quench") return quench_table(cfg);
    if (cfg.command == "verify") return verify_table(cfg);
    throw ConfigError("unknown command '" + cfg.command + "'");
}

std::string format_csv(const Table& t, const nlohmann::json& manifest) {
    std::ostringstream out;
    out << "# tool " << manifest.value("tool", "") << ' ' << manifest.value("version", "") << '\n';
    out << "# config " << manifest.at("config").dump() << '\n';
    out << "# timestamp " << manifest.at("timestamp").dump() << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
    out << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
        out << '\n';
    }
    return out.str();
}

nlohmann::json format_json(const Table& t, const nlohmann::json& manifest) {
    json rows = json::array();
    for (const auto& row : t.rows) {
        json r = json::object();
        for (std::size_t i = 0; i < row.size(); ++i) r[t.columns[i]] = row[i];
        rows.push_back(std::move(r));
    }
    return json{{"config", manifest.at("config")}, {"manifest", manifest}, {"rows", std::move(rows)}};
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::string started = utc_now();
    try {
        validate(cfg);
    } catch (const ConfigError& e) {
        err << "invalid config: " << e.what() << '\n';
        return kExitConfig;
    }
    Table table;
    try {
        table = compute(cfg);
    } catch (const Error& e) {
        err << "numeric failure: " << e.what() << '\n';
        return kExitNumeric;
    }
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const json manifest{{"tool", kToolName},
                        {"version", kToolVersion},
                        {"config", to_json(cfg)},
                        {"timestamp", {{"started_utc", started}, {"wall_seconds", wall}}}};
    const std::string text =
        cfg.format == "csv" ? format_csv(table, manifest) : format_json(table, manifest).dump(2) + "\n";
    if (cfg.output.empty()) {
        out << text;
        out.flush();
        return out ? kExitOk : kExitIO;
    }
    std::ofstream f(cfg.output, std::ios::binary);
    if (!f) {
        err << "cannot open " << cfg.output << '\n';
        return kExitIO;
    }
    f << text;
    f.close();
    if (!f) {
        err << "write failed: " << cfg.output << '\n';
        return kExitIO;
    }
    return kExitOk;
}

int main_entry(int argc, char** argv) {
    CLI::App app{"Ground-state fidelity of XY and extended Ising chains"};
    app.require_subcommand(1);

    std::optional<std::string> path, n_range, c_range, function, quantity, format, output, config_file;
    std::optional<double> gamma, g, alpha, delta, c;
    std::optional<std::int64_t> n;
    std::optional<int> per_decade;
    std::optional<unsigned> parallelism;

    for (const auto& name : kCommands) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--path", path, "A, B, C, D or E");
        sub->add_option("--gamma", gamma);
        sub->add_option("--g", g);
        sub->add_option("--alpha", alpha);
        sub->add_option("--delta", delta);
        sub->add_option("--c", c);
        sub->add_option("--N", n);
        sub->add_option("--N-range", n_range, "lo:hi:step");
        sub->add_option("--c-range", c_range, "lo:hi:count");
        sub->add_option("--function", function, "A, B, A_mcp or A_mps");
        sub->add_option("--quantity", quantity, "gamma_three_halves, size_three_halves or delta_seven_quarters");
        sub->add_option("--per-decade", per_decade);
        sub->add_option("--output", output);
        sub->add_option("--format", format, "csv or json");
        sub->add_option("--config", config_file, "JSON file; flags override it");
        sub->add_option("--parallelism", parallelism, "0 = all cores");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    json merged = json::object();
    if (config_file) {
        std::ifstream in(*config_file);
        if (!in) {
            std::cerr << "cannot read config " << *config_file << '\n';
            return kExitIO;
        }
        try {
            merged = json::parse(in);
        } catch (const json::exception& e) {
            std::cerr << "invalid config: " << e.what() << '\n';
            return kExitConfig;
        }
        if (merged.is_object() && merged.contains("config") && merged.contains("rows")) merged = merged["config"];
    }
    if (!merged.is_object()) {
        std::cerr << "invalid config: not a JSON object\n";
        return kExitConfig;
    }
    merged["command"] = app.get_subcommands().front()->get_name();
    auto set = [&merged](const char* key, const auto& v) {
        if (v) merged[key] = *v;
    };
    set("path", path);
    set("gamma", gamma);
    set("g", g);
    set("alpha", alpha);
    set("delta", delta);
    set("c", c);
    set("N", n);
    set("N_range", n_range);
    set("c_range", c_range);
    set("function", function);
    set("quantity", quantity);
    set("per_decade", per_decade);
    set("format", format);
    set("output", output);
    set("parallelism", parallelism);
    if (n && !n_range) merged["N_range"] = nullptr;
    if (n_range && !n) merged["N"] = nullptr;
    if (c && !c_range) merged["c_range"] = nullptr;

    RunConfig cfg;
    try {
        cfg = config_from_json(merged);
    } catch (const ConfigError& e) {
        std::cerr << "invalid config: " << e.what() << '\n';
        return kExitConfig;
    }
    return run(cfg, std::cout, std::cerr);
}

}  // namespace gsf::cli
