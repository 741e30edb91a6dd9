#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hm/cantor.hpp"
#include "hm/checks.hpp"
#include "hm/json_io.hpp"
#include "hm/level_sets.hpp"
#include "hm/set_geometry.hpp"
#include "hm/transform.hpp"

namespace {

using nlohmann::json;

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<double> parse_grid(const std::string& spec) {
    // a:b:n[:log|:lin]
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ':')) parts.push_back(tok);
    if (parts.size() < 3 || parts.size() > 4)
        throw std::invalid_argument("t-grid spec must be a:b:n[:log|:lin]");
    double a = std::stod(parts[0]), b = std::stod(parts[1]);
    int n = std::stoi(parts[2]);
    bool logspace = parts.size() == 4 && parts[3] == "log";
    if (parts.size() == 4 && parts[3] != "log" && parts[3] != "lin")
        throw std::invalid_argument("t-grid scale must be log or lin");
    if (n < 1 || !(a > 0) || !(b > a)) throw std::invalid_argument("t-grid must be increasing and positive");
    std::vector<double> g;
    if (n == 1) return {a};
    for (int i = 0; i < n; ++i) {
        double s = static_cast<double>(i) / (n - 1);
        g.push_back(logspace ? a * std::pow(b / a, s) : a + (b - a) * s);
    }
    return g;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return j;
}

hm::IntervalUnion load_set(const std::string& path, std::int64_t seed_k) {
    json j = read_json_file(path);
    if (j.contains("cantor")) {
        const auto& c = j.at("cantor");
        int levels = c.at("levels").get<int>();
        std::int64_t sk = c.contains("seed_k") ? c.at("seed_k").get<std::int64_t>() : seed_k;
        return hm::cantor::build_set(levels, sk).to_interval_union();
    }
    return hm::set_from_json(j);
}

void emit(const std::string& out, const std::string& text) {
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot write " + out);
        f << text;
    }
}

int run_transform(const std::string& measure_path, const std::string& points,
                  const std::string& out) {
    hm::Measure mu = hm::measure_from_json(read_json_file(measure_path));
    std::vector<double> xs;
    std::stringstream ss(points);
    std::string tok;
    while (std::getline(ss, tok, ',')) xs.push_back(std::stod(tok));
    if (xs.empty()) throw std::invalid_argument("no evaluation points given");
    std::string csv = "x,H,ReF,ImF,status\n";
    for (double x : xs) {
        hm::BoundaryValue b = hm::stieltjes_boundary(mu, x);
        if (b.kind == hm::BoundaryKind::regular) {
            double re = b.value.real(), im = b.value.imag();
            csv += fmt(x) + "," + fmt(re / M_PI) + "," + fmt(re) + "," + fmt(im) + ",ok\n";
        } else {
            csv += fmt(x) + ",,,," +
                   (b.kind == hm::BoundaryKind::pole ? std::string("pole") : std::string("edge")) +
                   "\n";
        }
    }
    emit(out, csv);
    return 0;
}

int run_sweep(const std::string& measure_path, const std::string& set_path,
              const std::string& grid_spec, std::int64_t seed_k, const std::string& out) {
    hm::Measure mu = hm::measure_from_json(read_json_file(measure_path));
    std::optional<hm::IntervalUnion> s;
    if (!set_path.empty()) s = load_set(set_path, seed_k);
    auto grid = parse_grid(grid_spec);
    auto pts = hm::tail_sweep(mu, grid, s, hm::TransformKind::H);
    std::string csv = "t,lambda,t_lambda\n";
    for (const auto& p : pts)
        csv += fmt(p.t) + "," + fmt(p.lambda) + "," + fmt(p.t_lambda) + "\n";
    emit(out, csv);
    return 0;
}

int run_build_set(int levels, std::int64_t seed_k, const std::string& out) {
    auto s = hm::cantor::build_set(levels, seed_k);
    json j;
    j["cantor"] = {{"levels", levels}, {"seed_k", seed_k}};
    json rats = json::array(), floats = json::array();
    auto ivs = s.enumerated_intervals();
    std::sort(ivs.begin(), ivs.end(),
              [](const auto& a, const auto& b) { return a.left < b.left; });
    for (const auto& iv : ivs) {
        std::ostringstream l, r;
        l << iv.left;
        r << iv.right;
        rats.push_back({l.str(), r.str()});
        floats.push_back({hm::cantor::to_double(iv.left), hm::cantor::to_double(iv.right)});
    }
    j["rational_intervals"] = std::move(rats);
    j["intervals"] = std::move(floats);
    json blocks = json::array();
    for (const auto& b : s.blocks) {
        std::ostringstream k, len;
        k << b.k;
        if (b.length_exact) len << b.total_length;
        blocks.push_back({{"index", {b.idx.n, b.idx.j}},
                          {"k", k.str()},
                          {"enumerated", b.enumerated},
                          {"total_length", b.length_exact ? json(len.str()) : json(nullptr)}});
    }
    j["blocks"] = std::move(blocks);
    j["fully_enumerated"] = s.fully_enumerated();
    emit(out, j.dump(2) + "\n");
    return 0;
}

// --- canonical verify fixtures ---

hm::Measure fx_delta0() { return hm::Measure::make({{0.0, 1.0}}, {}); }
hm::Measure fx_three() {
    return hm::Measure::make({{-1.0, 0.4}, {0.2, 0.35}, {1.3, 0.25}}, {});
}
hm::Measure fx_uniform01() { return hm::Measure::make({}, {{0.0, 1.0, 1.0}}); }
hm::Measure fx_mixed() { return hm::Measure::make({{0.0, 1.0}}, {{0.0, 1.0, 1.0}}); }
hm::IntervalUnion fx_e2() { return hm::IntervalUnion({{0.0, 1.0}, {2.0, 3.0}}); }
hm::Measure fx_mu_e2() { return hm::Measure::make({{0.5, 0.5}, {2.5, 0.5}}, {}); }

std::vector<hm::CheckReport> run_selector(const std::string& sel, std::int64_t seed_k,
                                          int depth,
                                          const std::optional<hm::Measure>& user_mu) {
    std::vector<hm::CheckReport> reps;
    auto want = [&](const std::string& s) { return sel == "all" || sel == s; };

    if (want("boole")) {
        reps.push_back(hm::check_boole(fx_delta0(), 1.0));
        for (double t : {0.5, 5.0, 50.0}) reps.push_back(hm::check_boole(fx_three(), t));
        if (user_mu && user_mu->purely_atomic())
            reps.push_back(hm::check_boole(*user_mu, 1.0));
    }
    if (want("loomis")) {
        auto grid = parse_grid("0.5:100:12:log");
        reps.push_back(hm::check_loomis(fx_three(), grid));
        reps.push_back(hm::check_loomis(fx_uniform01(), grid));
        reps.push_back(hm::check_loomis(fx_mixed(), grid));
        if (user_mu) reps.push_back(hm::check_loomis(*user_mu, grid));
    }
    if (sel == "all") {
        reps.push_back(hm::check_limit_18(fx_mixed(), {10.0, 30.0, 100.0}));
        reps.push_back(hm::check_limit_18(fx_three(), {1.0, 10.0, 100.0}));
    }
    if (want("prop32")) {
        reps.push_back(hm::check_prop32(fx_delta0(), 1.0));
        reps.push_back(hm::check_prop32(fx_delta0(), 10.0));
        reps.push_back(hm::check_prop32(fx_three(), 10.0));
        if (user_mu && user_mu->purely_atomic())
            reps.push_back(hm::check_prop32(*user_mu, 1.0));
    }
    if (want("prop34")) {
        reps.push_back(hm::check_prop34(fx_delta0(), 100.0, 1.0));
        reps.push_back(hm::check_prop34(fx_three(), 10.0, 0.5));
        reps.push_back(hm::check_prop34(fx_three(), 10.0, 0.1));
    }
    if (want("key")) {
        double t_big = 10.0 * M_PI * fx_mu_e2().total_mass() / fx_e2().diam();
        reps.push_back(hm::check_key_ineq(fx_mu_e2(), fx_e2(), t_big));
        reps.push_back(hm::check_key_ineq(
            hm::Measure::make({{0.5, 1.0}}, {}), hm::IntervalUnion({{0.0, 1.0}}), 100.0));
    }
    if (want("thm14")) {
        reps.push_back(hm::check_thm14(fx_mu_e2(), fx_e2(), parse_grid("2:2000:48:log")));
        reps.push_back(hm::check_thm14(hm::Measure::make({{0.5, 1.0}}, {}),
                                       hm::IntervalUnion({{0.0, 1.0}}),
                                       parse_grid("4:4000:48:log")));
    }
    if (want("lemma33")) {
        reps.push_back(hm::check_lemma33(fx_delta0(), 1.0));
        reps.push_back(hm::check_lemma33(fx_three(), 1.0));
        reps.push_back(hm::check_lemma33(fx_three(), 10.0));
        if (user_mu && user_mu->purely_atomic())
            reps.push_back(hm::check_lemma33(*user_mu, 1.0));
    }
    if (want("poltoratski")) {
        std::vector<double> grid{10.0, 100.0, 1000.0};
        reps.push_back(hm::check_poltoratski(fx_delta0(), {1.0}, grid));
        reps.push_back(hm::check_poltoratski(fx_delta0(), {0.0, 0.0, 1.0}, grid));
        reps.push_back(hm::check_poltoratski(
            hm::Measure::make({{-0.5, 0.6}, {0.75, 0.4}}, {}), {0.0, -1.0, 0.0, 1.0}, grid));
    }
    if (want("prop52")) {
        reps.push_back(hm::check_prop52(fx_delta0(), hm::Measure::make({{1.0, 1.0}}, {}), 1.0,
                                        parse_grid("1:10000:16:log")));
        reps.push_back(hm::check_prop52(
            hm::Measure::make({{0.0, 0.2}, {0.4, 0.2}, {0.8, 0.2}, {1.2, 0.2}, {1.6, 0.2}}, {}),
            hm::Measure::make({{0.2, 0.2}, {0.6, 0.2}, {1.0, 0.2}, {1.4, 0.2}, {1.8, 0.2}}, {}),
            2.0, parse_grid("10:10000:16:log")));
    }
    if (want("cantor")) {
        reps.push_back(hm::cantor::check_lemma42(depth, seed_k, 4));
        reps.push_back(hm::cantor::check_thm16_decay(depth, seed_k, 50.0));
    }
    return reps;
}

int run_verify(const std::string& sel, std::int64_t seed_k, int depth, double tol,
               bool tol_set, const std::string& measure_path, const std::string& out) {
    static const std::vector<std::string> selectors{
        "all",     "boole",  "loomis",      "prop32", "prop34", "key",
        "thm14",   "lemma33", "poltoratski", "prop52", "cantor"};
    if (std::find(selectors.begin(), selectors.end(), sel) == selectors.end())
        throw std::invalid_argument("unknown suite selector: " + sel);
    std::optional<hm::Measure> user_mu;
    if (!measure_path.empty()) user_mu = hm::measure_from_json(read_json_file(measure_path));

    auto reps = run_selector(sel, seed_k, depth, user_mu);
    bool any_fail = false, any_precond = false;
    json bundle = json::array();
    for (auto& r : reps) {
        if (tol_set && !r.precondition_violation && r.asserted_cases > 0)
            r.passed = r.margin >= -tol;
        if (r.precondition_violation)
            any_precond = true;
        else if (!r.passed)
            any_fail = true;
        bundle.push_back(r.to_json());
    }
    json summary = {{"suite", sel}, {"reports", std::move(bundle)},
                    {"all_passed", !any_fail && !any_precond}};
    emit(out, summary.dump(2) + "\n");
    if (any_fail) return 1;
    if (any_precond) return 3;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hilbert/Stieltjes transform lab for atomic and piecewise-constant measures"};
    app.require_subcommand(1);

    std::string measure_path, set_path, grid_spec = "1:100:16:log", out, points, suite = "all";
    std::int64_t seed_k = 2;
    int depth = 2;
    double tol = 0.0;

    auto* t = app.add_subcommand("transform", "Evaluate H, Re F, Im F at points");
    t->add_option("--measure", measure_path)->required();
    t->add_option("--points", points, "comma-separated x values")->required();
    t->add_option("--out", out);

    auto* sw = app.add_subcommand("sweep", "Tail sweep: t,lambda,t*lambda CSV");
    sw->add_option("--measure", measure_path)->required();
    sw->add_option("--set", set_path);
    sw->add_option("--t-grid", grid_spec, "a:b:n[:log|:lin]");
    sw->add_option("--seed-k", seed_k);
    sw->add_option("--out", out);

    auto* v = app.add_subcommand("verify", "Run verification checks");
    v->add_option("suite", suite, "all|boole|loomis|prop32|prop34|key|thm14|lemma33|poltoratski|prop52|cantor");
    auto* tol_opt = v->add_option("--tol", tol, "pass/fail margin tolerance override");
    v->add_option("--measure", measure_path, "extra measure to run applicable checks on");
    v->add_option("--seed-k", seed_k);
    v->add_option("--depth", depth, "truncation level for the cantor suite");
    v->add_option("--out", out);

    auto* b = app.add_subcommand("build-set", "Emit the scheduled middle-thirds set as JSON");
    b->add_option("--depth", depth, "truncation level")->required();
    b->add_option("--seed-k", seed_k);
    b->add_option("--out", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (t->parsed()) return run_transform(measure_path, points, out);
        if (sw->parsed()) return run_sweep(measure_path, set_path, grid_spec, seed_k, out);
        if (v->parsed())
            return run_verify(suite, seed_k, depth, tol, tol_opt->count() > 0, measure_path, out);
        if (b->parsed()) return run_build_set(depth, seed_k, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
