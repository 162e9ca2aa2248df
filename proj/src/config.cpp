#include "landau/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "landau/errors.hpp"

namespace landau {

namespace {

std::string trim(std::string s) {
    auto sp = [](unsigned char c) { return std::isspace(c); };
    while (!s.empty() && sp(s.front())) s.erase(s.begin());
    while (!s.empty() && sp(s.back())) s.pop_back();
    return s;
}

double to_number(const std::string& v, int line) {
    char* end = nullptr;
    double d = std::strtod(v.c_str(), &end);
    if (v.empty() || end != v.c_str() + v.size() || !std::isfinite(d))
        throw parse_error("expected a finite number, got \"" + v + "\"", line);
    return d;
}

long to_integer(const std::string& v, int line) {
    char* end = nullptr;
    long n = std::strtol(v.c_str(), &end, 10);
    if (v.empty() || end != v.c_str() + v.size())
        throw parse_error("expected an integer, got \"" + v + "\"", line);
    return n;
}

std::uint64_t to_seed(const std::string& v, int line) {
    char* end = nullptr;
    unsigned long long n = std::strtoull(v.c_str(), &end, 10);
    if (v.empty() || end != v.c_str() + v.size())
        throw parse_error("expected an unsigned integer, got \"" + v + "\"", line);
    return n;
}

field_component to_component(const std::string& v, int line) {
    if (v == "E1") return field_component::E1;
    if (v == "E2") return field_component::E2;
    throw parse_error("target must be E1 or E2, got \"" + v + "\"", line);
}

// one section instance from the line grammar: remembers where each key was set
struct section {
    std::string name;
    int line = 0;  // header line
    std::map<std::string, std::pair<std::string, int>> kv;

    bool has(const std::string& k) const { return kv.count(k) != 0; }
    std::pair<std::string, int> get(const std::string& k) const { return kv.at(k); }

    void check_keys(std::initializer_list<const char*> allowed) const {
        for (const auto& [k, v] : kv) {
            if (std::find_if(allowed.begin(), allowed.end(),
                             [&](const char* a) { return k == a; }) == allowed.end())
                throw parse_error("unknown key \"" + k + "\" in section [" + name + "]", v.second);
        }
    }
    double num(const char* k, double def) const {
        return has(k) ? to_number(get(k).first, get(k).second) : def;
    }
    long integer(const char* k, long def) const {
        return has(k) ? to_integer(get(k).first, get(k).second) : def;
    }
    double require_num(const char* k) const {
        if (!has(k))
            throw parse_error("section [" + name + "] is missing required key \"" + k + "\"",
                              line);
        return to_number(get(k).first, get(k).second);
    }
};

field_primitive build_primitive(const section& s, const std::string& base_dir) {
    auto target = [&]() {
        return s.has("target") ? to_component(s.get("target").first, s.get("target").second)
                               : field_component::E1;
    };
    std::string type = s.name.substr(std::string("primitive ").size());
    if (type == "constant") {
        s.check_keys({"target", "amplitude"});
        constant_signal p;
        p.target = target();
        p.amplitude = s.require_num("amplitude");
        return p;
    }
    if (type == "sinusoid") {
        s.check_keys({"target", "amplitude", "angular_frequency", "phase", "from", "to"});
        sinusoid_signal p;
        p.target = target();
        p.amplitude = s.require_num("amplitude");
        p.angular_frequency = s.require_num("angular_frequency");
        p.phase = s.num("phase", 0.0);
        if (s.has("from")) p.from = s.require_num("from");
        if (s.has("to")) p.to = s.require_num("to");
        return p;
    }
    if (type == "gaussian") {
        s.check_keys({"target", "amplitude", "center", "width", "carrier_angular_frequency",
                      "carrier_phase"});
        gaussian_pulse_signal p;
        p.target = target();
        p.amplitude = s.require_num("amplitude");
        p.center = s.require_num("center");
        p.width = s.require_num("width");
        p.carrier_angular_frequency = s.num("carrier_angular_frequency", 0.0);
        p.carrier_phase = s.num("carrier_phase", 0.0);
        return p;
    }
    if (type == "square") {
        s.check_keys({"target", "amplitude", "from", "to"});
        square_pulse_signal p;
        p.target = target();
        p.amplitude = s.require_num("amplitude");
        p.from = s.require_num("from");
        p.to = s.require_num("to");
        return p;
    }
    if (type == "noise") {
        s.check_keys({"target", "amplitude", "sample_step", "seed"});
        white_noise_signal p;
        p.target = target();
        p.amplitude = s.require_num("amplitude");
        p.sample_step = s.require_num("sample_step");
        if (s.has("seed")) p.seed = to_seed(s.get("seed").first, s.get("seed").second);
        return p;
    }
    if (type == "sampled") {
        s.check_keys({"path"});
        if (!s.has("path"))
            throw parse_error("section [primitive sampled] is missing required key \"path\"",
                              s.line);
        std::filesystem::path p(s.get("path").first);
        if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
        sampled_signal sig;
        sig.table = load_sampled_field(p.string());
        sig.origin = s.get("path").first;
        return sig;
    }
    throw parse_error("unknown primitive type \"" + type + "\"", s.line);
}

run_config assemble(const std::vector<section>& sections, const std::string& base_dir) {
    run_config cfg;
    std::optional<double> t_start, t_end;
    std::vector<field_primitive> prims;
    bool have_field_section = false;

    for (const auto& s : sections) {
        if (s.name.empty()) {  // top level: physical parameters
            s.check_keys({"q", "m", "B", "c", "hbar", "k"});
            cfg.params.q = s.num("q", cfg.params.q);
            cfg.params.m = s.num("m", cfg.params.m);
            cfg.params.B = s.num("B", cfg.params.B);
            cfg.params.c = s.num("c", cfg.params.c);
            cfg.params.hbar = s.num("hbar", cfg.params.hbar);
            if (s.has("k")) cfg.params.k_override = s.require_num("k");
        } else if (s.name == "field") {
            s.check_keys({"t_start", "t_end", "t_final"});
            have_field_section = true;
            t_start = s.require_num("t_start");
            t_end = s.require_num("t_end");
            if (s.has("t_final")) cfg.t_final = s.require_num("t_final");
        } else if (s.name.rfind("primitive ", 0) == 0) {
            prims.push_back(build_primitive(s, base_dir));
        } else if (s.name == "quadrature") {
            s.check_keys({"panels_per_period", "nodes", "max_panel_width"});
            cfg.quadrature.panels_per_period =
                static_cast<int>(s.integer("panels_per_period", cfg.quadrature.panels_per_period));
            cfg.quadrature.nodes = static_cast<int>(s.integer("nodes", cfg.quadrature.nodes));
            cfg.quadrature.max_panel_width = s.num("max_panel_width", 0.0);
        } else if (s.name == "oracle") {
            s.check_keys({"dimension", "steps_per_period", "norm_tolerance", "tail_threshold",
                          "energy_offset"});
            cfg.oracle.dimension = static_cast<int>(s.integer("dimension", cfg.oracle.dimension));
            cfg.oracle.steps_per_period =
                static_cast<int>(s.integer("steps_per_period", cfg.oracle.steps_per_period));
            cfg.oracle.norm_tolerance = s.num("norm_tolerance", cfg.oracle.norm_tolerance);
            cfg.oracle.tail_threshold = s.num("tail_threshold", cfg.oracle.tail_threshold);
            cfg.oracle.energy_offset = s.num("energy_offset", cfg.oracle.energy_offset);
        } else if (s.name == "matrix") {
            s.check_keys({"n", "x", "alpha_re", "alpha_im", "m_max", "m_cap", "tail_tolerance"});
            cfg.matrix.n = static_cast<int>(s.integer("n", cfg.matrix.n));
            if (s.has("x")) cfg.matrix.x = s.require_num("x");
            if (s.has("alpha_re") || s.has("alpha_im"))
                cfg.matrix.alpha =
                    std::complex<double>(s.num("alpha_re", 0.0), s.num("alpha_im", 0.0));
            cfg.matrix.settings.m_max = static_cast<int>(s.integer("m_max", -1));
            cfg.matrix.settings.m_cap =
                static_cast<int>(s.integer("m_cap", cfg.matrix.settings.m_cap));
            cfg.matrix.settings.tail_tolerance =
                s.num("tail_tolerance", cfg.matrix.settings.tail_tolerance);
        } else if (s.name == "sweep") {
            s.check_keys({"kind", "x", "n", "n_min", "n_max", "x_min", "x_max", "points",
                          "omega_min", "omega_max", "omega_points"});
            if (s.has("kind")) {
                cfg.sweep.kind = s.get("kind").first;
                if (cfg.sweep.kind != "levels" && cfg.sweep.kind != "intensity" &&
                    cfg.sweep.kind != "spectrum")
                    throw parse_error("sweep kind must be levels, intensity or spectrum",
                                      s.get("kind").second);
            }
            cfg.sweep.x = s.num("x", cfg.sweep.x);
            cfg.sweep.n = static_cast<int>(s.integer("n", cfg.sweep.n));
            cfg.sweep.n_min = static_cast<int>(s.integer("n_min", cfg.sweep.n_min));
            cfg.sweep.n_max = static_cast<int>(s.integer("n_max", cfg.sweep.n_max));
            cfg.sweep.x_min = s.num("x_min", cfg.sweep.x_min);
            cfg.sweep.x_max = s.num("x_max", cfg.sweep.x_max);
            cfg.sweep.points = static_cast<int>(s.integer("points", cfg.sweep.points));
            cfg.sweep.omega_min = s.num("omega_min", cfg.sweep.omega_min);
            cfg.sweep.omega_max = s.num("omega_max", cfg.sweep.omega_max);
            cfg.sweep.omega_points =
                static_cast<int>(s.integer("omega_points", cfg.sweep.omega_points));
        } else if (s.name == "verify") {
            s.check_keys({"tolerance"});
            cfg.verify_tolerance = s.num("tolerance", cfg.verify_tolerance);
        } else {
            throw parse_error("unknown section [" + s.name + "]", s.line);
        }
    }

    if (!prims.empty() && !have_field_section)
        throw config_error("primitives given without a [field] section defining the window");
    if (have_field_section) {
        try {
            cfg.field.emplace(*t_start, *t_end, std::move(prims));
        } catch (const std::invalid_argument& e) {
            throw config_error(std::string("field: ") + e.what());
        }
    }
    try {
        cfg.params.validate();
        cfg.quadrature.validate();
    } catch (const std::invalid_argument& e) {
        throw config_error(e.what());
    }
    return cfg;
}

}  // namespace

run_config parse_config_text(const std::string& text, const std::string& base_dir) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    std::vector<section> sections(1);  // [0] collects top-level keys

    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw parse_error("unterminated section header", line_no);
            section s;
            s.name = trim(line.substr(1, line.size() - 2));
            s.line = line_no;
            if (s.name.empty()) throw parse_error("empty section name", line_no);
            sections.push_back(std::move(s));
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw parse_error("expected key = value, got \"" + trim(raw) + "\"", line_no);
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw parse_error("missing key before '='", line_no);
        if (value.empty()) throw parse_error("missing value for key \"" + key + "\"", line_no);
        section& cur = sections.back();
        if (cur.kv.count(key))
            throw parse_error("duplicate key \"" + key + "\" (first set on line " +
                                  std::to_string(cur.kv[key].second) + ")",
                              line_no);
        cur.kv[key] = {value, line_no};
    }
    return assemble(sections, base_dir);
}

namespace {

using nlohmann::json;

void reject_unknown(const json& j, std::initializer_list<const char*> allowed,
                    const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) {
                return it.key() == a;
            }) == allowed.end())
            throw config_error("unknown key \"" + it.key() + "\" in " + where);
    }
}

}  // namespace

run_config parse_config_json(const std::string& text, const std::string& base_dir) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw config_error(std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object()) throw config_error("config root must be an object");
    reject_unknown(j, {"params", "field", "quadrature", "oracle", "matrix", "sweep", "verify"},
                   "config root");

    // Round-trip through the line grammar assembler by translating sections;
    // keeps one set of defaults and validation.
    std::vector<section> sections(1);
    auto put = [](section& s, const std::string& k, const json& v) {
        if (v.is_string())
            s.kv[k] = {v.get<std::string>(), 0};
        else if (v.is_number_integer())
            s.kv[k] = {std::to_string(v.get<long long>()), 0};
        else if (v.is_number()) {
            std::ostringstream os;
            os.precision(17);
            os << v.get<double>();
            s.kv[k] = {os.str(), 0};
        } else {
            throw config_error("key \"" + k + "\" must be a number or string");
        }
    };

    if (j.contains("params")) {
        const json& p = j["params"];
        reject_unknown(p, {"q", "m", "B", "c", "hbar", "k"}, "params");
        for (auto it = p.begin(); it != p.end(); ++it) put(sections[0], it.key(), it.value());
    }
    if (j.contains("field")) {
        const json& f = j["field"];
        reject_unknown(f, {"t_start", "t_end", "t_final", "primitives"}, "field");
        section s;
        s.name = "field";
        if (f.contains("t_start")) put(s, "t_start", f["t_start"]);
        if (f.contains("t_end")) put(s, "t_end", f["t_end"]);
        if (f.contains("t_final")) put(s, "t_final", f["t_final"]);
        sections.push_back(std::move(s));
        if (f.contains("primitives")) {
            if (!f["primitives"].is_array())
                throw config_error("field.primitives must be an array");
            for (const json& pj : f["primitives"]) {
                if (!pj.is_object() || !pj.contains("kind") || !pj["kind"].is_string())
                    throw config_error("each primitive needs a string \"kind\"");
                section s2;
                s2.name = "primitive " + pj["kind"].get<std::string>();
                for (auto it = pj.begin(); it != pj.end(); ++it)
                    if (it.key() != "kind") put(s2, it.key(), it.value());
                sections.push_back(std::move(s2));
            }
        }
    }
    for (const char* name : {"quadrature", "oracle", "matrix", "sweep", "verify"}) {
        if (!j.contains(name)) continue;
        const json& sec = j[name];
        if (!sec.is_object()) throw config_error(std::string(name) + " must be an object");
        section s;
        s.name = name;
        for (auto it = sec.begin(); it != sec.end(); ++it) put(s, it.key(), it.value());
        sections.push_back(std::move(s));
    }
    return assemble(sections, base_dir);
}

run_config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string base = std::filesystem::path(path).parent_path().string();
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
        return parse_config_json(buf.str(), base);
    return parse_config_text(buf.str(), base);
}

}  // namespace landau
