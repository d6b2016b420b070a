#include "resetwalk/config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace resetwalk {

const char* to_string(ExperimentKind k) {
    switch (k) {
    case ExperimentKind::mfpt_curve: return "mfpt-curve";
    case ExperimentKind::survival_curve: return "survival-curve";
    case ExperimentKind::stationary: return "stationary";
    case ExperimentKind::optimize: return "optimize";
    case ExperimentKind::figure: return "figure";
    }
    return "?";
}

namespace {

struct Value {
    enum class Type { number, string, array, boolean };
    Type type = Type::number;
    double num = 0.0;
    bool is_int = false;
    long long inum = 0;
    bool bval = false;
    std::string str;
    std::vector<double> arr;
    int line = 0;
    mutable bool consumed = false;
};

[[noreturn]] void fail(const std::string& path, int line, const std::string& what) {
    std::ostringstream os;
    os << path;
    if (line > 0) os << ":" << line;
    os << ": " << what;
    throw ConfigError(os.str());
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// Strip a trailing # comment (quotes respected).
std::string strip_comment(const std::string& s) {
    bool quoted = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '"') quoted = !quoted;
        else if (s[i] == '#' && !quoted) return s.substr(0, i);
    }
    return s;
}

bool valid_key(const std::string& k) {
    if (k.empty() || k.front() == '.' || k.back() == '.') return false;
    char prev = '.';
    for (char c : k) {
        if (c == '.' && prev == '.') return false; // empty segment
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
              c == '.'))
            return false;
        prev = c;
    }
    return true;
}

double parse_number(const std::string& path, int line, const std::string& tok,
                    bool* is_int = nullptr, long long* inum = nullptr) {
    const std::string t = trim(tok);
    if (t.empty()) fail(path, line, "expected a number, got nothing");
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size())
        fail(path, line, "cannot parse '" + t + "' as a number");
    if (is_int) {
        *is_int = t.find_first_of(".eE") == std::string::npos;
        if (*is_int && inum) *inum = std::strtoll(t.c_str(), nullptr, 10);
    }
    return v;
}

Value parse_value(const std::string& path, int line, const std::string& raw) {
    Value v;
    v.line = line;
    const std::string s = trim(raw);
    if (s.empty()) fail(path, line, "missing value after '='");
    if (s.front() == '"') {
        if (s.size() < 2 || s.back() != '"')
            fail(path, line, "unterminated string value");
        const std::string body = s.substr(1, s.size() - 2);
        if (body.find('"') != std::string::npos)
            fail(path, line, "string value may not contain '\"'");
        v.type = Value::Type::string;
        v.str = body;
        return v;
    }
    if (s.front() == '[') {
        if (s.back() != ']')
            fail(path, line, "array value must close with ']' on the same line");
        v.type = Value::Type::array;
        const std::string body = trim(s.substr(1, s.size() - 2));
        if (!body.empty()) {
            std::size_t pos = 0;
            while (pos <= body.size()) {
                std::size_t comma = body.find(',', pos);
                const std::string tok =
                    body.substr(pos, comma == std::string::npos ? std::string::npos
                                                                : comma - pos);
                v.arr.push_back(parse_number(path, line, tok));
                if (comma == std::string::npos) break;
                pos = comma + 1;
                if (trim(body.substr(pos)).empty())
                    fail(path, line, "trailing comma in array");
            }
        }
        return v;
    }
    if (s == "true" || s == "false") {
        v.type = Value::Type::boolean;
        v.bval = (s == "true");
        return v;
    }
    v.type = Value::Type::number;
    v.num = parse_number(path, line, s, &v.is_int, &v.inum);
    return v;
}

using KeyMap = std::map<std::string, Value>;

KeyMap parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path + ": cannot open file");
    KeyMap keys;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string s = trim(strip_comment(line));
        if (s.empty()) continue;
        const std::size_t eq = s.find('=');
        if (eq == std::string::npos)
            fail(path, lineno, "expected 'key = value', got '" + s + "'");
        const std::string key = trim(s.substr(0, eq));
        if (!valid_key(key))
            fail(path, lineno, "invalid key '" + key + "'");
        Value v = parse_value(path, lineno, s.substr(eq + 1));
        auto [it, inserted] = keys.emplace(key, std::move(v));
        if (!inserted)
            fail(path, lineno,
                 "duplicate key '" + key + "' (first set on line " +
                     std::to_string(it->second.line) + ")");
    }
    return keys;
}

// Typed getters; every access marks the key consumed.
class Reader {
public:
    Reader(const std::string& path, const KeyMap& keys) : path_(path), keys_(keys) {}

    bool has(const std::string& k) const { return keys_.count(k) != 0; }

    const Value* find(const std::string& k) const {
        auto it = keys_.find(k);
        if (it == keys_.end()) return nullptr;
        it->second.consumed = true;
        return &it->second;
    }

    double number(const std::string& k, double fallback) const {
        const Value* v = find(k);
        if (!v) return fallback;
        if (v->type != Value::Type::number)
            fail(path_, v->line, "key '" + k + "' must be a number");
        return v->num;
    }

    double required_number(const std::string& k) const {
        const Value* v = find(k);
        if (!v) fail(path_, 0, "missing required key '" + k + "'");
        if (v->type != Value::Type::number)
            fail(path_, v->line, "key '" + k + "' must be a number");
        return v->num;
    }

    std::uint64_t uinteger(const std::string& k, std::uint64_t fallback) const {
        const Value* v = find(k);
        if (!v) return fallback;
        if (v->type != Value::Type::number || !v->is_int || v->inum < 0)
            fail(path_, v->line, "key '" + k + "' must be a nonnegative integer");
        return static_cast<std::uint64_t>(v->inum);
    }

    std::string string(const std::string& k, const std::string& fallback) const {
        const Value* v = find(k);
        if (!v) return fallback;
        if (v->type != Value::Type::string)
            fail(path_, v->line, "key '" + k + "' must be a quoted string");
        return v->str;
    }

    std::string required_string(const std::string& k) const {
        const Value* v = find(k);
        if (!v) fail(path_, 0, "missing required key '" + k + "'");
        if (v->type != Value::Type::string)
            fail(path_, v->line, "key '" + k + "' must be a quoted string");
        return v->str;
    }

    // Grids must be nonempty and strictly increasing.
    std::vector<double> grid(const std::string& k, bool required) const {
        const Value* v = find(k);
        if (!v) {
            if (required) fail(path_, 0, "missing required key '" + k + "'");
            return {};
        }
        if (v->type != Value::Type::array)
            fail(path_, v->line, "key '" + k + "' must be an array of numbers");
        if (v->arr.empty()) fail(path_, v->line, "grid '" + k + "' must be nonempty");
        for (std::size_t i = 1; i < v->arr.size(); ++i)
            if (!(v->arr[i - 1] < v->arr[i]))
                fail(path_, v->line, "grid '" + k + "' must be strictly increasing");
        return v->arr;
    }

    int line_of(const std::string& k) const {
        auto it = keys_.find(k);
        return it == keys_.end() ? 0 : it->second.line;
    }

    // After building the config, any never-consumed key is a hard error.
    void reject_unconsumed() const {
        for (const auto& [k, v] : keys_)
            if (!v.consumed)
                fail(path_, v.line,
                     "unknown or unused key '" + k + "' for this experiment kind");
    }

    [[noreturn]] void fail_at(const std::string& k, const std::string& what) const {
        fail(path_, line_of(k), what);
    }

private:
    const std::string& path_;
    const KeyMap& keys_;
};

JumpLaw read_law(const Reader& r, const std::string& prefix) {
    const std::string kind = r.string(prefix + ".kind", "zero");
    if (kind == "zero") {
        if (r.has(prefix + ".gamma"))
            r.fail_at(prefix + ".gamma", "'" + prefix + ".gamma' needs kind \"exponential\"");
        if (r.has(prefix + ".size"))
            r.fail_at(prefix + ".size",
                      "'" + prefix + ".size' needs kind \"deterministic\"");
        return JumpLaw::zero();
    }
    if (kind == "exponential") {
        if (r.has(prefix + ".size"))
            r.fail_at(prefix + ".size",
                      "'" + prefix + ".size' needs kind \"deterministic\"");
        const double gamma = r.required_number(prefix + ".gamma");
        if (!(gamma > 0.0))
            r.fail_at(prefix + ".gamma", "'" + prefix + ".gamma' must be > 0");
        return JumpLaw::exponential(gamma);
    }
    if (kind == "deterministic") {
        if (r.has(prefix + ".gamma"))
            r.fail_at(prefix + ".gamma", "'" + prefix + ".gamma' needs kind \"exponential\"");
        const double size = r.required_number(prefix + ".size");
        if (!(size >= 0.0))
            r.fail_at(prefix + ".size", "'" + prefix + ".size' must be >= 0");
        return JumpLaw::deterministic(size);
    }
    r.fail_at(prefix + ".kind",
              "jump law kind must be \"zero\", \"exponential\" or \"deterministic\"");
}

ModelParams read_model(const Reader& r, bool reset_rate_allowed, const std::string& path) {
    ModelParams m;
    if (r.has("model.reset_rate")) {
        if (!reset_rate_allowed)
            r.fail_at("model.reset_rate",
                      "this experiment kind sweeps the reset rate; remove "
                      "model.reset_rate and use the grid key instead");
        m.reset_rate = r.required_number("model.reset_rate");
    }
    m.direction_prob = r.number("model.direction_prob", m.direction_prob);
    m.speed_plus = r.number("model.speed_plus", m.speed_plus);
    m.speed_minus = r.number("model.speed_minus", m.speed_minus);
    m.jump_rate_plus = r.number("model.jump_rate_plus", m.jump_rate_plus);
    m.jump_rate_minus = r.number("model.jump_rate_minus", m.jump_rate_minus);
    m.jump_law_plus = read_law(r, "model.jump_law_plus");
    m.jump_law_minus = read_law(r, "model.jump_law_minus");
    try {
        validate_params(m);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(path + ": model: " + e.what());
    }
    return m;
}

} // namespace

ExperimentConfig ExperimentConfig::load(const std::string& path) {
    const KeyMap keys = parse_file(path);
    const Reader r(path, keys);

    {
        const Value* schema = r.find("schema");
        if (!schema) throw ConfigError(path + ": missing required key 'schema'");
        if (schema->type != Value::Type::number || !schema->is_int || schema->inum != 1)
            fail(path, schema->line, "unsupported schema (this tool reads schema = 1)");
    }

    ExperimentConfig cfg;
    const std::string kind = r.required_string("kind");
    if (kind == "mfpt-curve") cfg.kind = ExperimentKind::mfpt_curve;
    else if (kind == "survival-curve") cfg.kind = ExperimentKind::survival_curve;
    else if (kind == "stationary") cfg.kind = ExperimentKind::stationary;
    else if (kind == "optimize") cfg.kind = ExperimentKind::optimize;
    else if (kind == "figure") cfg.kind = ExperimentKind::figure;
    else
        r.fail_at("kind", "kind must be one of mfpt-curve, survival-curve, stationary, "
                          "optimize, figure");

    cfg.seed = r.uinteger("seed", cfg.seed);
    cfg.n_paths = r.uinteger("n_paths", cfg.n_paths);
    if (cfg.n_paths < 1) r.fail_at("n_paths", "n_paths must be >= 1");
    cfg.out_dir = r.string("out", cfg.out_dir);

    switch (cfg.kind) {
    case ExperimentKind::mfpt_curve:
        cfg.lambda_grid = r.grid("lambda_grid", true);
        if (cfg.lambda_grid.front() <= 0.0)
            r.fail_at("lambda_grid", "lambda_grid entries must be > 0");
        cfg.level = r.number("level", cfg.level);
        if (!(cfg.level > 0.0)) r.fail_at("level", "level must be > 0");
        cfg.model = read_model(r, /*reset_rate_allowed=*/false, path);
        cfg.model.reset_rate = cfg.lambda_grid.front(); // placeholder; swept at run time
        break;
    case ExperimentKind::survival_curve:
        cfg.t_grid = r.grid("t_grid", true);
        if (cfg.t_grid.front() <= 0.0) r.fail_at("t_grid", "t_grid entries must be > 0");
        cfg.level = r.number("level", cfg.level);
        if (!(cfg.level > 0.0)) r.fail_at("level", "level must be > 0");
        cfg.model = read_model(r, /*reset_rate_allowed=*/true, path);
        break;
    case ExperimentKind::stationary:
        cfg.model = read_model(r, /*reset_rate_allowed=*/true, path);
        if (!(cfg.model.reset_rate > 0.0))
            throw ConfigError(path + ": stationary experiments need model.reset_rate > 0");
        // The analytic overlay is the closed-form law for rightward
        // exponential jumps with leftward drift; other models have no shipped
        // closed-form stationary density.
        if (cfg.model.speed_plus != 0.0 ||
            cfg.model.jump_law_plus.kind() != JumpLaw::Kind::exponential ||
            !(cfg.model.jump_rate_plus > 0.0) || cfg.model.jump_rate_minus != 0.0)
            throw ConfigError(
                path + ": stationary experiments require rightward exponential jumps "
                       "(speed_plus = 0, jump_rate_plus > 0, exponential law) and "
                       "leftward pure drift (jump_rate_minus = 0)");
        cfg.t_snapshot = r.number("t_snapshot", 20.0 / cfg.model.reset_rate);
        if (!(cfg.t_snapshot >= 20.0 / cfg.model.reset_rate))
            r.fail_at("t_snapshot",
                      "t_snapshot must be >= 20/reset_rate (stationarity burn-in)");
        cfg.hist.lo = r.number("hist_lo", cfg.hist.lo);
        cfg.hist.hi = r.number("hist_hi", cfg.hist.hi);
        cfg.hist.bins = static_cast<std::size_t>(r.uinteger("hist_bins", cfg.hist.bins));
        if (!(cfg.hist.lo < cfg.hist.hi) || cfg.hist.bins < 1)
            throw ConfigError(path + ": histogram needs hist_lo < hist_hi, hist_bins >= 1");
        cfg.omega_grid = r.grid("omega_grid", false);
        break;
    case ExperimentKind::optimize:
        cfg.rho_grid = r.grid("rho_grid", true);
        if (cfg.rho_grid.front() <= 0.0 || cfg.rho_grid.back() > 1.0)
            r.fail_at("rho_grid", "rho_grid entries must lie in (0, 1]");
        cfg.level = r.number("level", cfg.level);
        if (!(cfg.level > 0.0)) r.fail_at("level", "level must be > 0");
        cfg.model = read_model(r, /*reset_rate_allowed=*/false, path);
        cfg.model.reset_rate = 1.0; // placeholder; the optimizer sweeps it
        break;
    case ExperimentKind::figure: {
        cfg.figure = r.required_string("figure");
        if (cfg.figure != "fig2" && cfg.figure != "fig4" && cfg.figure != "fig6")
            r.fail_at("figure", "figure must be \"fig2\", \"fig4\" or \"fig6\"");
        const ExperimentConfig preset =
            figure_preset(cfg.figure, cfg.n_paths, cfg.seed, cfg.out_dir);
        cfg.model = preset.model;
        cfg.level = preset.level;
        cfg.rho_grid = preset.rho_grid;
        cfg.lambda_grid = preset.lambda_grid;
        if (r.has("rho_grid")) {
            cfg.rho_grid = r.grid("rho_grid", true);
            if (cfg.rho_grid.front() <= 0.0 || cfg.rho_grid.back() > 1.0)
                r.fail_at("rho_grid", "rho_grid entries must lie in (0, 1]");
        }
        if (r.has("lambda_grid")) {
            cfg.lambda_grid = r.grid("lambda_grid", true);
            if (cfg.lambda_grid.front() <= 0.0)
                r.fail_at("lambda_grid", "lambda_grid entries must be > 0");
        }
        break;
    }
    }

    r.reject_unconsumed();
    return cfg;
}

ExperimentConfig ExperimentConfig::figure_preset(const std::string& name,
                                                 std::uint64_t n_paths, std::uint64_t seed,
                                                 const std::string& out_dir) {
    auto linspace = [](double lo, double hi, int n) {
        std::vector<double> v(n);
        for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
        return v;
    };
    ExperimentConfig cfg;
    cfg.kind = ExperimentKind::figure;
    cfg.figure = name;
    cfg.n_paths = n_paths;
    cfg.seed = seed;
    cfg.out_dir = out_dir;
    cfg.level = 1.0;
    if (name == "fig2") {
        // Pure drift, speeds 1, level 1: the sweep variable is Lambda in
        // units of speed/level.
        cfg.model = pure_drift_params(1.0, 0.5, 1.0);
        cfg.rho_grid = {0.25, 0.5, 0.75, 1.0};
        cfg.lambda_grid = linspace(0.05, 5.0, 20);
    } else if (name == "fig4") {
        // Exponential jumps, rate 1, gamma*level = 4; sweep Lambda/jump_rate.
        cfg.model = exp_jump_params(1.0, 0.5, 1.0, 4.0, 1.0);
        cfg.rho_grid = {0.25, 0.5, 0.75, 0.9};
        cfg.lambda_grid = linspace(0.05, 5.0, 20);
    } else if (name == "fig6") {
        // gamma*level = 0.5: optima exist only for rho close to 1.
        cfg.model = exp_jump_params(1.0, 0.5, 1.0, 0.5, 1.0);
        cfg.rho_grid = {0.25, 0.5, 0.75, 0.9};
        cfg.lambda_grid = linspace(0.25, 8.0, 20);
    } else {
        throw ConfigError("unknown figure '" + name + "' (expected fig2, fig4 or fig6)");
    }
    return cfg;
}

} // namespace resetwalk
