#include "tsou/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "detail/csv.hpp"
#include "detail/parallel.hpp"
#include "tsou/cumulants.hpp"
#include "tsou/pricing_lsmc.hpp"
#include "tsou/pricing_mc.hpp"
#include "tsou/rng.hpp"
#include "tsou/transition_law.hpp"

namespace tsou {

namespace {

using Json = nlohmann::json;
namespace fs = std::filesystem;

// ---------------------------------------------------------------- parsing

[[noreturn]] void bad_config(const std::string& message) {
    throw std::invalid_argument("config: " + message);
}

void expect_keys(const Json& obj, const std::string& where,
                 std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) bad_config(where + " must be an object");
    for (const auto& [key, _] : obj.items()) {
        if (std::find_if(allowed.begin(), allowed.end(),
                         [&](const char* a) { return key == a; }) == allowed.end())
            bad_config("unknown key '" + key + "' in " + where);
    }
}

const Json* find(const Json& obj, const char* key) {
    const auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
}

double get_number(const Json& obj, const std::string& where, const char* key,
                  std::optional<double> fallback = std::nullopt) {
    const Json* v = find(obj, key);
    if (!v) {
        if (fallback) return *fallback;
        bad_config(where + "." + key + " is required");
    }
    if (!v->is_number()) bad_config(where + "." + key + " must be a number");
    return v->get<double>();
}

long long get_integer(const Json& obj, const std::string& where, const char* key,
                      std::optional<long long> fallback = std::nullopt) {
    const Json* v = find(obj, key);
    if (!v) {
        if (fallback) return *fallback;
        bad_config(where + "." + key + " is required");
    }
    if (!v->is_number_integer()) bad_config(where + "." + key + " must be an integer");
    return v->get<long long>();
}

CtsParams parse_leg(const Json& j, const std::string& where) {
    expect_keys(j, where, {"alpha", "beta", "c"});
    CtsParams leg;
    leg.alpha = get_number(j, where, "alpha");
    leg.beta = get_number(j, where, "beta");
    leg.c = get_number(j, where, "c");
    return leg;
}

BctsParams parse_model(const Json& j, const std::string& where) {
    if (find(j, "cgmy")) {
        expect_keys(j, where, {"cgmy"});
        const Json& g = j.at("cgmy");
        expect_keys(g, where + ".cgmy", {"c", "g", "m", "y", "b"});
        return BctsParams::cgmy(get_number(g, where + ".cgmy", "c"),
                                get_number(g, where + ".cgmy", "g"),
                                get_number(g, where + ".cgmy", "m"),
                                get_number(g, where + ".cgmy", "y"),
                                get_number(g, where + ".cgmy", "b"));
    }
    expect_keys(j, where, {"b", "pos", "neg"});
    BctsParams p;
    p.b = get_number(j, where, "b");
    p.pos.c = 0.0;
    p.neg.c = 0.0;
    if (const Json* pos = find(j, "pos")) p.pos = parse_leg(*pos, where + ".pos");
    if (const Json* neg = find(j, "neg")) p.neg = parse_leg(*neg, where + ".neg");
    return p;
}

Scheme parse_scheme(const std::string& name) {
    if (name == "exact") return Scheme::Exact;
    if (name == "approx1") return Scheme::Approx1;
    if (name == "approx2") return Scheme::Approx2;
    bad_config("unknown scheme '" + name + "' (exact | approx1 | approx2)");
}

Json model_json(const BctsParams& m) {
    const auto leg = [](const CtsParams& l) {
        return Json{{"alpha", l.alpha}, {"beta", l.beta}, {"c", l.c}};
    };
    return Json{{"b", m.b}, {"pos", leg(m.pos)}, {"neg", leg(m.neg)}};
}

Json canonical_json(const ExperimentConfig& c) {
    Json j;
    // The echo records the experiment definition only; execution details
    // (threads, out) change neither the results nor the bytes written, so
    // they stay out and reruns into any destination compare byte-identical.
    j["kind"] = c.kind;
    j["model"] = model_json(c.model);
    j["seed"] = c.seed;
    j["day_count"] = c.day_count;
    if (c.kind == "cumulants") {
        j["n_paths"] = c.n_paths;
        j["dt"] = c.dt;
        j["x0"] = c.x0;
        return j;
    }
    if (!c.curve_csv.empty()) j["curve"] = Json{{"csv", c.curve_csv}};
    else j["curve"] = Json{{"flat", c.flat_level}};
    if (c.kind == "call-strip" || c.kind == "strike-sweep") {
        j["n_paths"] = c.n_paths;
        j["rate"] = c.rate;
        j["fft"] = Json{{"alpha_cm", c.fft.alpha_cm}, {"n", c.fft.n}, {"eta", c.fft.eta}};
        if (c.kind == "call-strip") {
            j["strike"] = c.strike;
            j["n_dates"] = c.n_dates;
            if (c.sweep)
                j["sweep"] = Json{{"min", c.sweep->min}, {"max", c.sweep->max},
                                  {"count", c.sweep->count}};
        } else {
            j["t"] = c.t_single;
            j["sweep"] = Json{{"min", c.sweep->min}, {"max", c.sweep->max},
                              {"count", c.sweep->count}};
        }
        return j;
    }
    if (c.kind == "asian") {
        j["strike"] = c.strike;
        j["rate"] = c.rate;
        j["n_dates"] = c.n_dates;
        j["forward_start_days"] = c.forward_start_days;
        Json schemes = Json::array();
        for (Scheme s : c.schemes) schemes.push_back(scheme_name(s));
        j["schemes"] = schemes;
        j["n_paths_list"] = c.n_paths_list;
        return j;
    }
    if (c.kind == "swing") {
        j["strike"] = c.strike;
        j["rate"] = c.rate;
        j["n_dates"] = c.n_dates;
        j["rights"] = c.rights;
        j["basis_degree"] = c.basis_degree;
        j["n_paths_list"] = c.n_paths_list;
        return j;
    }
    if (c.kind == "noa-sim") {
        j["n_paths"] = c.n_paths;
        j["n_dates"] = c.n_dates;
        j["period"] = Json{{"t1", c.period.t1}, {"t2", c.period.t2}};
        j["f0"] = c.f0;
        j["gamma1"] = c.gamma1_coeff;
        Json steps = Json::array();
        for (const auto& [from, level] : c.gamma_steps) steps.push_back(Json::array({from, level}));
        j["gamma_steps"] = steps;
        if (c.driver2) j["driver2"] = model_json(*c.driver2);
        return j;
    }
    // trajectories
    j["n_paths"] = c.n_paths;
    j["n_dates"] = c.n_dates;
    j["scheme"] = scheme_name(c.schemes.front());
    return j;
}

}  // namespace

ForwardCurve ExperimentConfig::curve() const {
    if (!curve_csv.empty()) return ForwardCurve::from_csv(curve_csv, day_count);
    return ForwardCurve::flat(flat_level);
}

ExperimentConfig parse_experiment_config(const std::string& json_text, const std::string& kind,
                                         const ExperimentOverrides& overrides) {
    Json j;
    try {
        j = Json::parse(json_text);
    } catch (const Json::parse_error& e) {
        bad_config(std::string("not valid JSON: ") + e.what());
    }

    static const std::vector<std::string> kinds{"cumulants",   "call-strip", "asian",
                                                "swing",       "noa-sim",    "strike-sweep",
                                                "trajectories"};
    if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end())
        bad_config("unknown experiment kind '" + kind + "'");

    ExperimentConfig c;
    c.kind = kind;
    if (const Json* k = find(j, "kind")) {
        if (!k->is_string() || k->get<std::string>() != kind)
            bad_config("config kind '" + k->get<std::string>() + "' does not match '" + kind + "'");
    }

    std::vector<const char*> allowed{"kind", "model", "seed", "threads", "out", "day_count"};
    const auto allow = [&](std::initializer_list<const char*> extra) {
        allowed.insert(allowed.end(), extra.begin(), extra.end());
    };
    if (kind == "cumulants") allow({"n_paths", "dt", "x0"});
    else if (kind == "call-strip")
        allow({"curve", "n_paths", "rate", "fft", "strike", "n_dates", "sweep"});
    else if (kind == "strike-sweep") allow({"curve", "n_paths", "rate", "fft", "t", "sweep"});
    else if (kind == "asian")
        allow({"curve", "strike", "rate", "n_dates", "forward_start_days", "schemes", "n_paths",
               "n_paths_list"});
    else if (kind == "swing")
        allow({"curve", "strike", "rate", "n_dates", "rights", "basis_degree", "n_paths",
               "n_paths_list"});
    else if (kind == "noa-sim")
        allow({"n_paths", "n_dates", "period", "f0", "gamma1", "gamma_steps", "driver2"});
    else allow({"n_paths", "n_dates", "scheme"});
    {
        // expect_keys wants a fixed list; rebuild it from the accumulated set
        if (!j.is_object()) bad_config("top level must be an object");
        for (const auto& [key, _] : j.items())
            if (std::find_if(allowed.begin(), allowed.end(),
                             [&](const char* a) { return key == a; }) == allowed.end())
                bad_config("unknown key '" + key + "' for kind '" + kind + "'");
    }

    const Json* model = find(j, "model");
    if (!model) bad_config("model is required");
    c.model = parse_model(*model, "model");
    c.model.validate();

    if (const Json* s = find(j, "seed")) {
        if (!s->is_number_unsigned() && !s->is_number_integer()) bad_config("seed must be an integer");
        c.seed = s->get<std::uint64_t>();
    }
    c.threads = static_cast<int>(get_integer(j, "config", "threads", 0));
    if (c.threads < 0) bad_config("threads must be >= 0");
    if (const Json* o = find(j, "out")) {
        if (!o->is_string()) bad_config("out must be a string");
        c.out_dir = o->get<std::string>();
    }
    c.day_count = static_cast<int>(get_integer(j, "config", "day_count", 360));
    if (c.day_count < 1) bad_config("day_count must be >= 1");

    if (const Json* cv = find(j, "curve")) {
        expect_keys(*cv, "curve", {"flat", "csv"});
        if (const Json* f = find(*cv, "flat")) {
            if (!f->is_number() || !(f->get<double>() > 0.0)) bad_config("curve.flat must be > 0");
            c.flat_level = f->get<double>();
        }
        if (const Json* p = find(*cv, "csv")) {
            if (!p->is_string()) bad_config("curve.csv must be a path string");
            c.curve_csv = p->get<std::string>();
        }
    }

    const auto parse_paths_list = [&](long long fallback_single) {
        if (const Json* list = find(j, "n_paths_list")) {
            if (!list->is_array() || list->empty()) bad_config("n_paths_list must be a non-empty array");
            c.n_paths_list.clear();
            for (const Json& v : *list) {
                if (!v.is_number_integer() || v.get<long long>() < 2)
                    bad_config("n_paths_list entries must be integers >= 2");
                c.n_paths_list.push_back(v.get<long long>());
            }
        } else {
            c.n_paths_list = {get_integer(j, "config", "n_paths", fallback_single)};
        }
    };

    if (kind == "cumulants") {
        c.n_paths = get_integer(j, "config", "n_paths", 1000000);
        c.dt = get_number(j, "config", "dt", 1.0 / 12.0);
        c.x0 = get_number(j, "config", "x0", 0.0);
        if (!(c.dt > 0.0)) bad_config("dt must be > 0");
    } else if (kind == "call-strip" || kind == "strike-sweep") {
        c.n_paths = get_integer(j, "config", "n_paths", 100000);
        c.rate = get_number(j, "config", "rate", 0.0);
        if (const Json* f = find(j, "fft")) {
            expect_keys(*f, "fft", {"alpha_cm", "n", "eta"});
            c.fft.alpha_cm = get_number(*f, "fft", "alpha_cm", 0.0);
            c.fft.n = static_cast<int>(get_integer(*f, "fft", "n", 4096));
            c.fft.eta = get_number(*f, "fft", "eta", 0.25);
        }
        if (const Json* sw = find(j, "sweep")) {
            expect_keys(*sw, "sweep", {"min", "max", "count"});
            StrikeSweep sweep;
            sweep.min = get_number(*sw, "sweep", "min");
            sweep.max = get_number(*sw, "sweep", "max");
            sweep.count = static_cast<int>(get_integer(*sw, "sweep", "count"));
            if (!(sweep.min >= 0.0) || !(sweep.max > sweep.min) || sweep.count < 2)
                bad_config("sweep needs 0 <= min < max and count >= 2");
            c.sweep = sweep;
        }
        if (kind == "call-strip") {
            c.strike = get_number(j, "config", "strike", 20.0);
            c.n_dates = static_cast<int>(get_integer(j, "config", "n_dates", 30));
        } else {
            c.t_single = get_number(j, "config", "t", 1.0 / 12.0);
            if (!(c.t_single > 0.0)) bad_config("t must be > 0");
            if (!c.sweep) bad_config("strike-sweep requires a sweep block");
        }
    } else if (kind == "asian") {
        c.strike = get_number(j, "config", "strike", 20.0);
        c.rate = get_number(j, "config", "rate", 0.0);
        c.n_dates = static_cast<int>(get_integer(j, "config", "n_dates", 90));
        c.forward_start_days =
            static_cast<int>(get_integer(j, "config", "forward_start_days", 0));
        c.schemes.clear();
        if (const Json* list = find(j, "schemes")) {
            if (!list->is_array() || list->empty()) bad_config("schemes must be a non-empty array");
            for (const Json& v : *list) {
                if (!v.is_string()) bad_config("schemes entries must be strings");
                c.schemes.push_back(parse_scheme(v.get<std::string>()));
            }
        } else {
            c.schemes = {Scheme::Exact};
        }
        parse_paths_list(100000);
    } else if (kind == "swing") {
        c.strike = get_number(j, "config", "strike", 20.0);
        c.rate = get_number(j, "config", "rate", 0.0);
        c.n_dates = static_cast<int>(get_integer(j, "config", "n_dates", 360));
        c.rights = static_cast<int>(get_integer(j, "config", "rights", 120));
        c.basis_degree = static_cast<int>(get_integer(j, "config", "basis_degree", 3));
        parse_paths_list(20000);
    } else if (kind == "noa-sim") {
        c.n_paths = get_integer(j, "config", "n_paths", 4);
        c.n_dates = static_cast<int>(get_integer(j, "config", "n_dates", 180));
        const Json* per = find(j, "period");
        if (!per) bad_config("period is required");
        expect_keys(*per, "period", {"t1", "t2"});
        c.period.t1 = get_number(*per, "period", "t1");
        c.period.t2 = get_number(*per, "period", "t2");
        c.period.validate();
        c.f0 = get_number(j, "config", "f0", 20.0);
        c.gamma1_coeff = get_number(j, "config", "gamma1", 1.0);
        if (const Json* steps = find(j, "gamma_steps")) {
            if (!steps->is_array()) bad_config("gamma_steps must be an array of [from, level]");
            for (const Json& s : *steps) {
                if (!s.is_array() || s.size() != 2 || !s[0].is_number() || !s[1].is_number())
                    bad_config("gamma_steps entries must be [from, level] number pairs");
                c.gamma_steps.emplace_back(s[0].get<double>(), s[1].get<double>());
            }
            for (std::size_t i = 1; i < c.gamma_steps.size(); ++i)
                if (!(c.gamma_steps[i].first > c.gamma_steps[i - 1].first))
                    bad_config("gamma_steps from-times must be strictly increasing");
        }
        if (const Json* d2 = find(j, "driver2")) {
            c.driver2 = parse_model(*d2, "driver2");
            c.driver2->validate();
        }
        if (!c.gamma_steps.empty() && !c.driver2)
            bad_config("gamma_steps given but driver2 missing");
    } else {  // trajectories
        c.n_paths = get_integer(j, "config", "n_paths", 4);
        if (c.n_paths < 0) bad_config("n_paths must be >= 0");
        c.n_dates = static_cast<int>(get_integer(j, "config", "n_dates", 360));
        std::string scheme = "exact";
        if (const Json* s = find(j, "scheme")) {
            if (!s->is_string()) bad_config("scheme must be a string");
            scheme = s->get<std::string>();
        }
        c.schemes = {parse_scheme(scheme)};
    }
    if (kind != "trajectories" && kind != "noa-sim" && c.n_paths < 2 && c.n_paths_list.empty())
        bad_config("n_paths must be >= 2");
    if (c.n_dates < 1) bad_config("n_dates must be >= 1");

    if (overrides.seed) c.seed = *overrides.seed;
    if (overrides.out_dir) c.out_dir = *overrides.out_dir;

    c.echo = canonical_json(c).dump();
    return c;
}

ExperimentConfig load_experiment_config(const std::string& file, const std::string& kind,
                                        const ExperimentOverrides& overrides) {
    std::ifstream in(file);
    if (!in) bad_config("cannot open config file: " + file);
    std::ostringstream text;
    text << in.rdbuf();
    return parse_experiment_config(text.str(), kind, overrides);
}

// ------------------------------------------------------------- estimation

CumulantEstimate estimate_step_cumulants(const BctsParams& params, double x0, double dt,
                                         long long n_paths, std::uint64_t seed, int threads) {
    if (n_paths < 2) throw std::invalid_argument("n_paths must be >= 2");
    const TimeGrid grid = TimeGrid::uniform(0.0, dt, 1);
    const PathGenerator gen(params, grid, Scheme::Exact);

    const long long blocks = detail::block_count(n_paths);
    std::vector<std::array<double, 5>> sums(static_cast<std::size_t>(blocks),
                                            std::array<double, 5>{});
    detail::parallel_blocks(n_paths, threads, [&](long long blk, long long, long long count) {
        RngStream rng(seed, static_cast<std::uint64_t>(blk));
        std::vector<double> path;
        auto& s = sums[static_cast<std::size_t>(blk)];
        for (long long p = 0; p < count; ++p) {
            gen.generate(x0, rng, path);
            const double x = path[1];
            s[0] += 1.0;
            s[1] += x;
            s[2] += x * x;
            s[3] += x * x * x;
            s[4] += x * x * x * x;
        }
    });

    // one cumulant estimate per batch, then mean and spread across batches
    std::array<detail::Neumaier, 4> acc{}, acc2{};
    for (const auto& s : sums) {
        const double n = s[0];
        const double m1 = s[1] / n;
        const double r2 = s[2] / n, r3 = s[3] / n, r4 = s[4] / n;
        const double m2 = r2 - m1 * m1;
        const double m3 = r3 - 3.0 * m1 * r2 + 2.0 * m1 * m1 * m1;
        const double m4 = r4 - 4.0 * m1 * r3 + 6.0 * m1 * m1 * r2 - 3.0 * m1 * m1 * m1 * m1;
        const std::array<double, 4> k{m1, m2, m3, m4 - 3.0 * m2 * m2};
        for (int i = 0; i < 4; ++i) {
            acc[static_cast<std::size_t>(i)].add(k[static_cast<std::size_t>(i)]);
            acc2[static_cast<std::size_t>(i)].add(k[static_cast<std::size_t>(i)] *
                                                  k[static_cast<std::size_t>(i)]);
        }
    }
    const double nb = static_cast<double>(blocks);
    std::array<double, 4> mean{}, se{};
    for (std::size_t i = 0; i < 4; ++i) {
        mean[i] = acc[i].value() / nb;
        const double var = std::max(0.0, acc2[i].value() / nb - mean[i] * mean[i]);
        se[i] = nb > 1 ? std::sqrt(var / (nb - 1.0)) : 0.0;
    }
    CumulantEstimate est;
    est.value = {mean[0], mean[1], mean[2], mean[3]};
    est.std_error = {se[0], se[1], se[2], se[3]};
    return est;
}

// --------------------------------------------------------------- runners

namespace {

std::string out_path(const ExperimentConfig& c, const char* name) {
    fs::create_directories(c.out_dir);
    return (fs::path(c.out_dir) / name).string();
}

void write_preamble(detail::CsvFile& csv, const ExperimentConfig& c) {
    csv.comment("config " + c.echo);
    csv.comment("seed " + std::to_string(c.seed));
}

using detail::CsvFile;

void run_cumulants(const ExperimentConfig& c) {
    const CumulantSet analytic = ou_cumulants(c.model, c.x0, c.dt);
    const CumulantEstimate est =
        estimate_step_cumulants(c.model, c.x0, c.dt, c.n_paths, c.seed, c.threads);
    CsvFile csv(out_path(c, "cumulants.csv"));
    write_preamble(csv, c);
    csv.row({"k", "analytic", "estimate", "err_pct", "std_error"});
    for (int k = 1; k <= 4; ++k) {
        const double ref = analytic[k];
        const double got = est.value[k];
        csv.row({std::to_string(k), CsvFile::num(ref), CsvFile::num(got),
                 ref != 0.0 ? CsvFile::num(100.0 * (ref - got) / ref) : "nan",
                 CsvFile::num(est.std_error[k])});
    }
}

std::vector<double> daily_dates(int n_dates, int day_count) {
    std::vector<double> dates(static_cast<std::size_t>(n_dates));
    for (int i = 0; i < n_dates; ++i)
        dates[static_cast<std::size_t>(i)] = static_cast<double>(i + 1) / day_count;
    return dates;
}

// Strip payoffs per strike from one common path set: rows (K, fft strip,
// mc strip, mc +- 3 se bands).
void write_strike_sweep(const ExperimentConfig& c, const std::vector<double>& dates,
                        const char* filename) {
    const ForwardCurve curve = c.curve();
    const StrikeSweep& sw = *c.sweep;
    std::vector<double> strikes(static_cast<std::size_t>(sw.count));
    for (int i = 0; i < sw.count; ++i)
        strikes[static_cast<std::size_t>(i)] =
            sw.min + (sw.max - sw.min) * i / static_cast<double>(sw.count - 1);

    // transform side: one inversion grid per date covers every strike
    std::vector<double> fft_strip(strikes.size(), 0.0);
    for (double t : dates) {
        const std::vector<double> per_date = price_calls(strikes, t, c.rate, curve, c.model, c.fft);
        for (std::size_t i = 0; i < strikes.size(); ++i) fft_strip[i] += per_date[i];
    }

    // MC side: one exact path set, payoffs accumulated per strike
    std::vector<double> times = dates;
    times.insert(times.begin(), 0.0);
    const TimeGrid grid{std::move(times)};
    const PathGenerator gen(c.model, grid, Scheme::Exact);
    std::vector<double> levels(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        levels[i] = std::log(curve(grid[i])) + risk_neutral_h(grid[i], c.model);
    const long long blocks = detail::block_count(c.n_paths);
    std::vector<detail::BlockMoments> per_strike(strikes.size(), detail::BlockMoments(blocks));
    detail::parallel_blocks(c.n_paths, c.threads, [&](long long blk, long long, long long count) {
        RngStream rng(c.seed, static_cast<std::uint64_t>(blk));
        std::vector<double> path, spots(grid.size());
        for (long long p = 0; p < count; ++p) {
            gen.generate(0.0, rng, path);
            for (std::size_t i = 1; i < grid.size(); ++i)
                spots[i] = std::exp(levels[i] + path[i]);
            for (std::size_t s = 0; s < strikes.size(); ++s) {
                double strip = 0.0;
                for (std::size_t i = 1; i < grid.size(); ++i)
                    strip += std::exp(-c.rate * grid[i]) *
                             std::max(spots[i] - strikes[s], 0.0);
                per_strike[s].add(blk, strip);
            }
        }
    });

    CsvFile csv(out_path(c, filename));
    write_preamble(csv, c);
    csv.row({"strike", "fft", "mc", "mc_minus_3se", "mc_plus_3se"});
    for (std::size_t s = 0; s < strikes.size(); ++s) {
        const auto [mean, se] = per_strike[s].reduce(c.n_paths);
        csv.row({CsvFile::num(strikes[s]), CsvFile::num(fft_strip[s]), CsvFile::num(mean),
                 CsvFile::num(mean - 3.0 * se), CsvFile::num(mean + 3.0 * se)});
    }
}

void run_call_strip(const ExperimentConfig& c) {
    const ForwardCurve curve = c.curve();
    const std::vector<double> dates = daily_dates(c.n_dates, c.day_count);
    CallStripSpec spec;
    spec.dates = dates;
    spec.strike = c.strike;
    spec.rate = c.rate;
    const PricingResult fft = price_call_strip(spec, curve, c.model, c.fft);
    const PricingResult mc =
        mc_call_strip(spec, curve, c.model, Scheme::Exact, c.n_paths, c.seed, c.threads);

    CsvFile csv(out_path(c, "call_strip.csv"));
    write_preamble(csv, c);
    csv.comment("strip_fft " + CsvFile::num(fft.value));
    csv.comment("strip_mc " + CsvFile::num(mc.value) + " se " + CsvFile::num(mc.std_error));
    csv.row({"date_index", "t", "fft", "mc", "mc_std_error"});
    for (std::size_t i = 0; i < dates.size(); ++i)
        csv.row({std::to_string(i + 1), CsvFile::num(dates[i]),
                 CsvFile::num(fft.breakdown[i].value), CsvFile::num(mc.breakdown[i].value),
                 CsvFile::num(mc.breakdown[i].std_error)});

    if (c.sweep) write_strike_sweep(c, dates, "strike_sweep.csv");
}

void run_strike_sweep(const ExperimentConfig& c) {
    write_strike_sweep(c, {c.t_single}, "strike_sweep.csv");
}

void run_asian(const ExperimentConfig& c) {
    const ForwardCurve curve = c.curve();
    AsianSpec spec;
    spec.n_dates = c.n_dates;
    spec.forward_start_days = c.forward_start_days;
    spec.strike = c.strike;
    spec.rate = c.rate;
    spec.day_count = c.day_count;

    CsvFile csv(out_path(c, "asian.csv"));
    write_preamble(csv, c);
    csv.row({"scheme", "alpha", "n_paths", "value", "std_error"});
    for (Scheme scheme : c.schemes)
        for (long long n : c.n_paths_list) {
            const PricingResult r = price_asian(spec, curve, c.model, scheme, n, c.seed, c.threads);
            csv.row({scheme_name(scheme), CsvFile::num(c.model.pos.alpha), std::to_string(n),
                     CsvFile::num(r.value), CsvFile::num(r.std_error)});
        }
}

void run_swing(const ExperimentConfig& c) {
    const ForwardCurve curve = c.curve();
    SwingSpec spec;
    spec.n_dates = c.n_dates;
    spec.rights = c.rights;
    spec.strike = c.strike;
    spec.rate = c.rate;
    spec.day_count = c.day_count;
    RegressionBasis basis;
    basis.degree = c.basis_degree;

    CsvFile csv(out_path(c, "swing.csv"));
    write_preamble(csv, c);
    csv.row({"alpha", "n_paths", "value", "std_error"});
    for (long long n : c.n_paths_list) {
        const PricingResult r = price_swing(spec, curve, c.model, basis, n, c.seed, c.threads);
        csv.row({CsvFile::num(c.model.pos.alpha), std::to_string(n), CsvFile::num(r.value),
                 CsvFile::num(r.std_error)});
    }
}

std::vector<std::string> path_header(long long n_paths) {
    std::vector<std::string> header{"t"};
    for (long long k = 1; k <= n_paths; ++k) header.push_back("path_" + std::to_string(k));
    return header;
}

void run_noa_sim(const ExperimentConfig& c) {
    NoaSpec spec;
    spec.period = c.period;
    spec.grid = TimeGrid::daily_from_origin(c.n_dates, 0, c.day_count);
    spec.f0 = c.f0;
    spec.gamma1_coeff = c.gamma1_coeff;
    if (!c.gamma_steps.empty()) {
        const auto steps = c.gamma_steps;
        spec.gamma_fn = [steps](double u) {
            double level = 0.0;
            for (const auto& [from, value] : steps) {
                if (u < from) break;
                level = value;
            }
            return level;
        };
    }
    const NoaGenerator gen(spec, c.model, c.driver2 ? *c.driver2 : c.model);

    std::vector<PathSkeleton> paths;
    for (long long k = 0; k < c.n_paths; ++k) {
        RngStream rng(c.seed, static_cast<std::uint64_t>(k));
        paths.push_back(gen.generate(rng));
    }
    CsvFile csv(out_path(c, "noa_paths.csv"));
    write_preamble(csv, c);
    csv.row(path_header(c.n_paths));
    for (std::size_t i = 0; i < spec.grid.size(); ++i) {
        std::vector<std::string> cells{CsvFile::num(spec.grid[i])};
        for (const auto& p : paths) cells.push_back(CsvFile::num(p.values[i]));
        csv.row(cells);
    }
}

void run_trajectories(const ExperimentConfig& c) {
    const TimeGrid grid = TimeGrid::daily_from_origin(c.n_dates, 0, c.day_count);
    CsvFile csv(out_path(c, "trajectories.csv"));
    write_preamble(csv, c);
    csv.row(path_header(c.n_paths));
    if (c.n_paths == 0) return;  // header-only dump

    const PathGenerator gen(c.model, grid, c.schemes.front());
    std::vector<std::vector<double>> paths(static_cast<std::size_t>(c.n_paths));
    for (long long k = 0; k < c.n_paths; ++k) {
        RngStream rng(c.seed, static_cast<std::uint64_t>(k));
        gen.generate(c.x0, rng, paths[static_cast<std::size_t>(k)]);
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        std::vector<std::string> cells{CsvFile::num(grid[i])};
        for (const auto& p : paths) cells.push_back(CsvFile::num(p[i]));
        csv.row(cells);
    }
}

}  // namespace

void run_experiment(const ExperimentConfig& c) {
    if (c.kind == "cumulants") run_cumulants(c);
    else if (c.kind == "call-strip") run_call_strip(c);
    else if (c.kind == "strike-sweep") run_strike_sweep(c);
    else if (c.kind == "asian") run_asian(c);
    else if (c.kind == "swing") run_swing(c);
    else if (c.kind == "noa-sim") run_noa_sim(c);
    else if (c.kind == "trajectories") run_trajectories(c);
    else throw std::invalid_argument("config: unknown experiment kind '" + c.kind + "'");
}

}  // namespace tsou
