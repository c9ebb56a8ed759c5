#include "fracmono/report_io.hpp"

#include "fracmono/errors.hpp"

#include <json.hpp>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace fracmono {

using nlohmann::json;

namespace {

std::optional<Verdict> verdict_from_string(std::string_view s)
{
    for (Verdict v : {Verdict::strictly_increasing, Verdict::nondecreasing, Verdict::strictly_decreasing,
                      Verdict::nonincreasing, Verdict::none})
        if (to_string(v) == s)
            return v;
    return std::nullopt;
}

void reject_unknown(const json& obj, std::initializer_list<std::string_view> known, std::string_view where)
{
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (auto k : known)
            ok = ok || key == k;
        if (!ok)
            throw config_error("unknown key '" + key + "' in " + std::string(where));
    }
}

template <class T>
T get_as(const json& obj, const char* key, std::string_view where)
{
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw config_error("bad or missing '" + std::string(key) + "' in " + std::string(where));
    }
}

double positive(const json& obj, const char* key, std::string_view where)
{
    const auto v = get_as<double>(obj, key, where);
    if (!(v > 0.0) || !std::isfinite(v))
        throw config_error("'" + std::string(key) + "' must be a positive number");
    return v;
}

UserCase parse_case(const json& j, std::size_t index)
{
    const std::string where = "cases[" + std::to_string(index) + "]";
    if (!j.is_object())
        throw config_error(where + " must be an object");
    reject_unknown(j, {"rule", "f", "g", "n", "interval", "c", "expected"}, where);
    UserCase uc;
    const auto rule = suite_from_string(get_as<std::string>(j, "rule", where));
    if (!rule)
        throw config_error("unknown rule in " + where);
    uc.rule = *rule;
    uc.f = get_as<std::string>(j, "f", where);
    uc.g = get_as<std::string>(j, "g", where);
    uc.n = get_as<int>(j, "n", where);
    const auto iv = get_as<std::vector<double>>(j, "interval", where);
    if (iv.size() != 2)
        throw config_error(where + ".interval must be [lo, hi]");
    uc.lo = iv[0];
    uc.hi = iv[1];
    uc.c = j.contains("c") ? get_as<double>(j, "c", where) : uc.lo;
    if (j.contains("expected")) {
        uc.expected = verdict_from_string(get_as<std::string>(j, "expected", where));
        if (!uc.expected)
            throw config_error("unknown verdict in " + where + ".expected");
    }
    return uc;
}

} // namespace

SuiteConfig parse_config(std::string_view json_text)
{
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw config_error(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw config_error("configuration must be a JSON object");
    reject_unknown(doc, {"suites", "grid_size", "output_dir", "seed", "monte_carlo_samples", "tolerances", "cases"},
                   "configuration");

    SuiteConfig cfg;
    if (doc.contains("suites")) {
        for (const auto& name : get_as<std::vector<std::string>>(doc, "suites", "configuration")) {
            const auto s = suite_from_string(name);
            if (!s)
                throw config_error("unknown suite '" + name + "'");
            cfg.suites.push_back(*s);
        }
    }
    if (doc.contains("grid_size")) {
        const auto g = get_as<long long>(doc, "grid_size", "configuration");
        if (g < 0)
            throw config_error("grid_size must be nonnegative");
        cfg.grid_size = static_cast<std::size_t>(g);
    }
    if (doc.contains("output_dir"))
        cfg.output_dir = get_as<std::string>(doc, "output_dir", "configuration");
    if (doc.contains("seed"))
        cfg.seed = get_as<std::uint64_t>(doc, "seed", "configuration");
    if (doc.contains("monte_carlo_samples"))
        cfg.mc_samples = get_as<std::uint64_t>(doc, "monte_carlo_samples", "configuration");
    if (doc.contains("tolerances")) {
        const json& t = doc.at("tolerances");
        if (!t.is_object())
            throw config_error("tolerances must be an object");
        reject_unknown(t, {"abs_tol", "rel_tol", "max_depth", "min_intervals", "tau_strict", "tau_zero"},
                       "tolerances");
        if (t.contains("abs_tol"))
            cfg.quad.abs_tol = positive(t, "abs_tol", "tolerances");
        if (t.contains("rel_tol"))
            cfg.quad.rel_tol = positive(t, "rel_tol", "tolerances");
        if (t.contains("max_depth"))
            cfg.quad.max_depth = get_as<int>(t, "max_depth", "tolerances");
        if (t.contains("min_intervals"))
            cfg.quad.min_intervals = get_as<int>(t, "min_intervals", "tolerances");
        if (t.contains("tau_strict"))
            cfg.res.strict_scale = positive(t, "tau_strict", "tolerances");
        if (t.contains("tau_zero"))
            cfg.res.zero_scale = positive(t, "tau_zero", "tolerances");
    }
    if (doc.contains("cases")) {
        const json& cases = doc.at("cases");
        if (!cases.is_array())
            throw config_error("cases must be an array");
        for (std::size_t k = 0; k < cases.size(); ++k)
            cfg.cases.push_back(parse_case(cases[k], k));
    }
    return cfg;
}

SuiteConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw config_error("cannot read configuration " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

namespace {

json config_json(const SuiteConfig& cfg)
{
    json suites = json::array();
    for (SuiteKind s : cfg.suites)
        suites.push_back(std::string(to_string(s)));
    json cases = json::array();
    for (const auto& uc : cfg.cases) {
        json c{{"rule", std::string(to_string(uc.rule))},
               {"f", uc.f},
               {"g", uc.g},
               {"n", uc.n},
               {"interval", {uc.lo, uc.hi}},
               {"c", uc.c}};
        if (uc.expected)
            c["expected"] = std::string(to_string(*uc.expected));
        cases.push_back(std::move(c));
    }
    return json{{"suites", suites},
                {"grid_size", cfg.grid_size},
                {"output_dir", cfg.output_dir.string()},
                {"seed", cfg.seed},
                {"monte_carlo_samples", cfg.mc_samples},
                {"tolerances",
                 {{"abs_tol", cfg.quad.abs_tol},
                  {"rel_tol", cfg.quad.rel_tol},
                  {"max_depth", cfg.quad.max_depth},
                  {"min_intervals", cfg.quad.min_intervals},
                  {"tau_strict", cfg.res.strict_scale},
                  {"tau_zero", cfg.res.zero_scale}}},
                {"cases", cases}};
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + '"';
}

std::string file_stem(const std::string& name)
{
    std::string out = name;
    for (char& ch : out)
        if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '-' || ch == '_' || ch == '.'))
            ch = '_';
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw io_error("cannot open " + path.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.close();
    if (!out)
        throw io_error("failed writing " + path.string());
}

void make_dirs(const std::filesystem::path& dir)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir))
        throw io_error("cannot create directory " + dir.string() + (ec ? ": " + ec.message() : ""));
}

} // namespace

std::string config_to_json(const SuiteConfig& cfg)
{
    return config_json(cfg).dump(2);
}

std::string format_value(double v)
{
    if (std::isnan(v))
        return {};
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void emit_csv(const RunReport& report, const std::filesystem::path& dir)
{
    make_dirs(dir);
    std::set<std::filesystem::path> written;
    for (const auto& curve : report.curves) {
        const auto sub = dir / curve.suite;
        make_dirs(sub);
        auto path = sub / (file_stem(curve.name) + ".csv");
        if (!written.insert(path).second)
            throw io_error("two curves map to " + path.string());
        std::string text;
        for (std::size_t k = 0; k < curve.columns.size(); ++k)
            text += (k ? "," : "") + csv_field(curve.columns[k]);
        text += '\n';
        for (const auto& row : curve.rows) {
            for (std::size_t k = 0; k < row.size(); ++k) {
                if (k)
                    text += ',';
                text += format_value(row[k]);
            }
            text += '\n';
        }
        write_file(path, text);
    }

    std::string summary = "suite,case,hypothesis,conclusion,max_violation,pass\n";
    for (const auto& c : report.cases)
        summary += csv_field(c.suite) + ',' + csv_field(c.id) + ',' + c.hypothesis + ',' + c.conclusion + ',' +
                   format_value(c.max_violation) + ',' + (c.pass ? "true" : "false") + '\n';
    write_file(dir / "summary.csv", summary);
}

std::string report_to_json(const RunReport& report)
{
    json cases = json::array();
    for (const auto& c : report.cases)
        cases.push_back({{"suite", c.suite},
                         {"id", c.id},
                         {"hypothesis", c.hypothesis},
                         {"conclusion", c.conclusion},
                         {"max_violation", c.max_violation},
                         {"wall_seconds", c.wall_seconds},
                         {"pass", c.pass},
                         {"detail", c.detail}});
    std::size_t failed = 0;
    for (const auto& c : report.cases)
        failed += c.pass ? 0 : 1;
    const json doc{{"version", report.version},
                   {"pass", report.pass()},
                   {"case_count", report.cases.size()},
                   {"failed_count", failed},
                   {"config", config_json(report.config)},
                   {"cases", cases}};
    return doc.dump(2) + '\n';
}

void write_report(const RunReport& report, const std::filesystem::path& dir)
{
    emit_csv(report, dir);
    write_file(dir / "report.json", report_to_json(report));
}

} // namespace fracmono
