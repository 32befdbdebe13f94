#include "dynfrac/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "dynfrac/errors.hpp"

namespace dynfrac {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) out.push_back(trim(item));
    return out;
}

double parse_double(const std::string& text, const std::string& what) {
    const std::string t = trim(text);
    if (t == "inf" || t == "+inf") return std::numeric_limits<double>::infinity();
    double v = 0.0;
    const auto r = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || r.ec != std::errc() || r.ptr != t.data() + t.size())
        throw InputError(what + ": not a number: '" + text + "'");
    return v;
}

long parse_long(const std::string& text, const std::string& what) {
    const std::string t = trim(text);
    long v = 0;
    const auto r = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || r.ec != std::errc() || r.ptr != t.data() + t.size())
        throw InputError(what + ": not an integer: '" + text + "'");
    return v;
}

enum class Kind { Number, Integer, Flag, Text };

const std::map<std::string, std::pair<Kind, std::string>>& defaults() {
    static const std::map<std::string, std::pair<Kind, std::string>> d = {
        {"nu", {Kind::Number, "0.3"}},
        {"c_l", {Kind::Number, "1"}},
        {"mu", {Kind::Number, "1"}},
        {"rho", {Kind::Text, ""}},
        {"V", {Kind::Text, ""}},
        {"V_ratio", {Kind::Number, "0.5"}},
        {"delta", {Kind::Number, "1"}},
        {"x0", {Kind::Number, "0"}},
        {"N", {Kind::Integer, "24"}},
        {"M", {Kind::Integer, "400"}},
        {"L", {Kind::Number, "1"}},
        {"refine_M", {Kind::Flag, "false"}},
        {"check_doubling", {Kind::Flag, "false"}},
        {"inv_A", {Kind::Number, "18.420680743952367"}},
        {"inv_m", {Kind::Integer, "40"}},
        {"inv_euler", {Kind::Integer, "12"}},
        {"threads", {Kind::Integer, "0"}},
        {"axis", {Kind::Text, ""}},
        {"range", {Kind::Text, ""}},
        {"t", {Kind::Number, "10"}},
        {"schedule", {Kind::Text, ""}},
        {"stress_file", {Kind::Text, ""}},
        {"points", {Kind::Text, ""}},
        {"weight_points", {Kind::Integer, "48"}},
        {"radiated_points", {Kind::Integer, "40"}},
        {"omega_points", {Kind::Integer, "400"}},
        {"sif_points", {Kind::Integer, "40"}},
        {"det_tol", {Kind::Number, "1e-10"}},
    };
    return d;
}

}  // namespace

RunConfig::RunConfig() {
    for (const auto& [k, v] : defaults()) values_[k] = v.second;
}

void RunConfig::set(const std::string& key, const std::string& value) {
    const auto it = defaults().find(key);
    if (it == defaults().end()) throw InputError("unknown config key '" + key + "'");
    const std::string v = trim(value);
    switch (it->second.first) {
        case Kind::Number: parse_double(v, key); break;
        case Kind::Integer: parse_long(v, key); break;
        case Kind::Flag:
            if (v != "true" && v != "false") throw InputError(key + ": expected true or false");
            break;
        case Kind::Text:
            if ((key == "rho" || key == "V") && !v.empty()) parse_double(v, key);
            break;
    }
    values_[key] = v;
}

const std::string& RunConfig::get(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) throw InputError("unknown config key '" + key + "'");
    return it->second;
}

double RunConfig::number(const std::string& key) const { return parse_double(get(key), key); }
int RunConfig::integer(const std::string& key) const { return static_cast<int>(parse_long(get(key), key)); }
bool RunConfig::flag(const std::string& key) const { return get(key) == "true"; }

Material RunConfig::material() const {
    const double nu = number("nu");
    if (!(nu > 0.0 && nu < 0.5)) throw InputError("nu must lie in (0, 0.5)");
    if (!get("rho").empty()) return Material::from_moduli(number("mu"), nu, number("rho"));
    return Material::from_speed(nu, number("c_l"), number("mu"));
}

CrackSetup RunConfig::setup() const {
    const Material m = material();
    const double V = get("V").empty() ? number("V_ratio") * m.c_R : number("V");
    return make_setup(m, V, number("delta"), number("x0"));
}

SolverOptions RunConfig::solver() const {
    SolverOptions o;
    o.N = integer("N");
    o.M = integer("M");
    o.L = number("L");
    o.refine_M = flag("refine_M");
    o.check_doubling = flag("check_doubling");
    return o;
}

InversionConfig RunConfig::inversion() const {
    InversionConfig c;
    c.A = number("inv_A");
    c.m = integer("inv_m");
    c.euler_terms = integer("inv_euler");
    return c;
}

unsigned RunConfig::threads() const { return static_cast<unsigned>(std::max(0, integer("threads"))); }

GrowthOptions RunConfig::growth() const {
    GrowthOptions g;
    g.solver = solver();
    g.inversion = inversion();
    g.weight_points = integer("weight_points");
    g.radiated_points = integer("radiated_points");
    g.omega_points = integer("omega_points");
    g.sif_points = integer("sif_points");
    g.det_tol = number("det_tol");
    g.threads = threads();
    return g;
}

void RunConfig::validate() const {
    setup();
    inversion().validate();
    const SolverOptions o = solver();
    if (o.N < 8) throw InputError("N must be at least 8");
    if (o.M < 1) throw InputError("M must be positive");
    if (!(o.L > 0.0)) throw InputError("L must be positive");
    if (integer("threads") < 0) throw InputError("threads must be non-negative");
    for (const char* k : {"weight_points", "radiated_points", "omega_points", "sif_points"})
        if (integer(k) < 4) throw InputError(std::string(k) + " must be at least 4");
    if (!(number("det_tol") > 0.0)) throw InputError("det_tol must be positive");
    if (!(number("t") > 0.0)) throw InputError("t must be positive");
    if (!get("axis").empty()) parse_axis(get("axis"));
    if (!get("range").empty()) parse_range(get("range"));
}

void read_config(std::istream& in, RunConfig& cfg) {
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw InputError("config line " + std::to_string(n) + ": expected key = value");
        cfg.set(trim(line.substr(0, eq)), line.substr(eq + 1));
    }
}

void load_config(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open config file '" + path + "'");
    read_config(in, cfg);
}

Range parse_range(const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw InputError("range must be A:B:STEP");
    Range r{parse_double(parts[0], "range"), parse_double(parts[1], "range"), parse_double(parts[2], "range")};
    if (!(r.step > 0.0) || !(r.b >= r.a)) throw InputError("range: need A <= B and STEP > 0");
    return r;
}

SweepAxis parse_axis(const std::string& text) {
    if (text == "time") return SweepAxis::Time;
    if (text == "speed") return SweepAxis::Speed;
    if (text == "depth") return SweepAxis::Depth;
    throw InputError("axis must be time, speed or depth");
}

const char* axis_name(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::Time: return "time";
        case SweepAxis::Speed: return "speed";
        case SweepAxis::Depth: return "depth";
    }
    return "time";
}

SpeedSchedule parse_schedule(const std::string& text) {
    SpeedSchedule s;
    for (const auto& v : split(text, ',')) {
        const auto p = split(v, ':');
        if (p.size() != 2) throw InputError("schedule vertices must be t:l");
        s.t.push_back(parse_double(p[0], "schedule"));
        s.l.push_back(parse_double(p[1], "schedule"));
    }
    return s;
}

std::vector<PointStress> parse_points(const std::string& text) {
    std::vector<PointStress> out;
    if (trim(text).empty()) return out;
    for (const auto& v : split(text, ';')) {
        if (v.empty()) continue;
        const auto p = split(v, ':');
        if (p.size() != 3) throw InputError("point loads must be x:sigma12:sigma22");
        out.push_back({parse_double(p[0], "points"), parse_double(p[1], "points"), parse_double(p[2], "points")});
    }
    return out;
}

StressProfile load_stress_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open stress file '" + path + "'");
    StressProfile p;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        if (header) {
            header = false;
            if (std::isalpha(static_cast<unsigned char>(line[0]))) continue;
        }
        const auto f = split(line, ',');
        if (f.size() != 3) throw InputError("stress file: expected x,sigma12,sigma22");
        p.x.push_back(parse_double(f[0], "stress file"));
        p.sigma12.push_back(parse_double(f[1], "stress file"));
        p.sigma22.push_back(parse_double(f[2], "stress file"));
    }
    p.validate();
    return p;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_weight_csv(std::ostream& out, const WeightTable& table) {
    out << "coordinate,w_I_I,w_I_II,w_II_I,w_II_II,W_I_I,W_I_II,W_II_I,W_II_II\n";
    for (const auto& s : table.samples) {
        out << format_double(s.coordinate);
        for (const auto* q : {&s.w, &s.W})
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) out << ',' << format_double((*q)[i][j]);
        out << '\n';
    }
}

void write_sif_csv(std::ostream& out, const std::vector<StageResult>& stages) {
    out << "stage,t,K_I,K_II\n";
    for (const auto& st : stages)
        for (std::size_t n = 0; n < st.t.size(); ++n)
            out << st.k << ',' << format_double(st.t[n]) << ',' << format_double(st.K[n][0]) << ','
                << format_double(st.K[n][1]) << '\n';
}

void write_stage_csv(std::ostream& out, const std::vector<StageResult>& stages) {
    out << "stage,V,t_start,t_end,l_start,l_end,driving_scale,roundtrip_error,negation_residual,min_det,flagged\n";
    for (const auto& st : stages)
        out << st.k << ',' << format_double(st.V) << ',' << format_double(st.t_start) << ','
            << format_double(st.t_end) << ',' << format_double(st.l_start) << ',' << format_double(st.l_end) << ','
            << format_double(st.driving_scale) << ',' << format_double(st.roundtrip_error) << ','
            << format_double(st.negation_residual) << ',' << format_double(st.min_det) << ',' << st.flagged << '\n';
}

void write_radiated_csv(std::ostream& out, const StageResult& stage) {
    out << "tau,x1,pi_I,pi_II\n";
    const RadiatedStress& r = stage.radiated;
    for (std::size_t n = 1; n < r.tau.size(); ++n) {
        const StressPair p = r.pi(r.tau[n]);
        out << format_double(r.tau[n]) << ',' << format_double(r.origin + r.V * r.tau[n]) << ','
            << format_double(p[0]) << ',' << format_double(p[1]) << '\n';
    }
}

}  // namespace dynfrac
