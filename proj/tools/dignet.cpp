#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dignet/error.hpp"
#include "dignet/io.hpp"
#include "dignet/oracle.hpp"
#include "dignet/sobol.hpp"
#include "dignet/tval.hpp"
#include "dignet/wep.hpp"

using nlohmann::json;

namespace {

struct Range {
    int lo = 0;
    int hi = 0;  // inclusive
};

Range parse_range(const std::string& text) {
    Range r;
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoi(text);
        } else {
            r.lo = std::stoi(text.substr(0, dots));
            r.hi = std::stoi(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        dignet::throw_input("cannot parse range '" + text + "' (expected N or A..B)");
    }
    if (r.lo > r.hi) dignet::throw_input("empty range '" + text + "'");
    return r;
}

int default_threads() {
    if (const char* env = std::getenv("DIGNET_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

int run_tval_grid(const std::string& sobol_path, Range dims, Range ms, const std::string& algorithm,
                  const std::string& out, int threads) {
    const auto entries = dignet::parse_direction_file(dignet::read_file(sobol_path));
    struct Cell {
        int s, m, t;
    };
    std::vector<Cell> cells;
    for (int s = dims.lo; s <= dims.hi; ++s) {
        for (int m = ms.lo; m <= ms.hi; ++m) {
            auto net = dignet::sobol_net(entries, s, m);
            int t = -1;
            if (algorithm == "alg1") {
                t = dignet::t_from_wep(dignet::truncated_wep(net, m, threads), m);
            } else if (algorithm == "alg2") {
                t = dignet::t_value_alg2(net, threads).t;
            } else if (algorithm == "oracle") {
                t = dignet::t_by_intervals(dignet::all_points(net), net.base(), m);
            } else {
                const int t1 = dignet::t_from_wep(dignet::truncated_wep(net, m, threads), m);
                const int t2 = dignet::t_value_alg2(net, threads).t;
                if (t1 != t2)
                    throw dignet::error(dignet::errc::disagreement,
                                        "algorithms disagree at s=" + std::to_string(s) +
                                            ", m=" + std::to_string(m) + ": " + std::to_string(t1) +
                                            " vs " + std::to_string(t2));
                t = t1;
            }
            cells.push_back({s, m, t});
        }
    }
    if (out == "csv") {
        std::ostringstream os;
        os << "m\\s";
        for (int s = dims.lo; s <= dims.hi; ++s) os << ',' << s;
        os << '\n';
        for (int m = ms.lo; m <= ms.hi; ++m) {
            os << m;
            for (const auto& c : cells)
                if (c.m == m) os << ',' << c.t;
            os << '\n';
        }
        std::cout << os.str();
    } else {
        json rows = json::array();
        for (const auto& c : cells) rows.push_back({{"s", c.s}, {"m", c.m}, {"t", c.t}});
        std::cout << json{{"rows", rows}}.dump() << '\n';
    }
    return 0;
}

int run_tval_net(const dignet::DigitalNet& net, const std::string& algorithm, std::optional<int> ell,
                 const std::string& out, int threads) {
    const int m = net.m();
    json rep;
    if (algorithm == "alg1") {
        auto w = dignet::truncated_wep(net, ell.value_or(m), threads);
        rep = {{"t", dignet::t_from_wep(w, m)}, {"method", "alg1"}};
        if (ell) rep["l"] = *ell;  // the t read-off needs l >= m - t
    } else if (algorithm == "alg2") {
        auto r = dignet::t_value_alg2(net, threads);
        rep = {{"t", r.t}, {"method", "alg2"}, {"degQ", r.deg_q}};
    } else if (algorithm == "oracle") {
        rep = {{"t", dignet::t_by_intervals(dignet::all_points(net), net.base(), m)}, {"method", "oracle"}};
    } else {
        const int t1 = dignet::t_from_wep(dignet::truncated_wep(net, ell.value_or(m), threads), m);
        const int t2 = dignet::t_value_alg2(net, threads).t;
        if (t1 != t2)
            throw dignet::error(dignet::errc::disagreement, "algorithms disagree: alg1 t=" + std::to_string(t1) +
                                                                ", alg2 t=" + std::to_string(t2));
        rep = {{"t", t1}, {"method", "both"}};
    }
    if (out == "csv")
        std::cout << "s,m,t\n" << net.s() << ',' << m << ',' << rep["t"].get<int>() << '\n';
    else
        std::cout << rep.dump() << '\n';
    return 0;
}

int run_tval_points(const dignet::PointSetInput& in, const std::string& out, int threads) {
    auto rep = dignet::general_lower_bound(in.points, in.spec, in.m, threads);
    if (out == "csv")
        std::cout << "s,m,lower_bound\n" << in.s << ',' << in.m << ',' << rep.bound << '\n';
    else
        std::cout << json{{"lower_bound", rep.bound}, {"method", "alg1"}}.dump() << '\n';
    return 0;
}

int run_check_net(const dignet::DigitalNet& net, int threads) {
    bool all_ok = true;
    auto report = [&](const std::string& name, bool ok, const std::string& detail) {
        std::cout << (ok ? "pass" : "FAIL") << "  " << name;
        if (!detail.empty()) std::cout << "  (" << detail << ")";
        std::cout << '\n';
        all_ok = all_ok && ok;
    };

    const int m = net.m();
    const int t1 = dignet::t_from_wep(dignet::truncated_wep(net, m, threads), m);
    int t2 = -1;
    if (net.n() == net.m()) {
        t2 = dignet::t_value_alg2(net, threads).t;
        report("alg1 vs alg2", t1 == t2, "t=" + std::to_string(t1) + " vs " + std::to_string(t2));
    }
    const int to = dignet::t_by_intervals(dignet::all_points(net), net.base(), m);
    report("alg1 vs interval oracle", t1 == to, "t=" + std::to_string(t1) + " vs " + std::to_string(to));

    auto dual = dignet::dual_enumerate(net);
    auto w = dignet::full_wep(net, threads);
    dignet::IntPoly expect;
    for (const auto& k : dual.elements) expect.at(int(dignet::nrt_weight(k))) += w.scale;
    const bool wep_ok = w.scaled == expect;
    report("full enumerator vs brute-force dual", wep_ok,
           "|dual|=" + std::to_string(dual.elements.size()));
    if (!wep_ok) {
        std::cout << "  computed: " << dignet::wep_to_csv(w, false);
    }
    const long long mn = dignet::min_nrt(dual);
    report("duality: m+1-minNRT vs oracle t", int(m + 1 - std::min<long long>(mn, m + 1)) == to,
           "minNRT=" + std::to_string(mn));

    if (!all_ok) throw dignet::error(dignet::errc::disagreement, "cross-checks failed");
    std::cout << "all checks passed\n";
    return 0;
}

int run_check_points(const dignet::PointSetInput& in, int threads) {
    auto rep = dignet::general_lower_bound(in.points, in.spec, in.m, threads);
    const int to = dignet::t_by_intervals(in.points, in.spec.order(), in.m);
    std::cout << "lower_bound " << rep.bound << '\n';
    std::cout << "oracle_t " << to << '\n';
    if (rep.bound > to) throw dignet::error(dignet::errc::disagreement, "lower bound exceeds the oracle t");
    std::cout << (rep.bound < to ? "strict inequality: the bound is not tight for this point set\n"
                                 : "bound is tight\n");
    return 0;
}

int run_check_random(std::uint32_t b, int m, int s, int count, std::uint64_t seed, int threads) {
    std::uint64_t state = seed ? seed : 1;
    auto next = [&state]() {  // xorshift64*, stable across platforms
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        return state * 0x2545F4914F6CDD1Dull;
    };
    int agree = 0;
    for (int i = 0; i < count; ++i) {
        std::vector<std::vector<std::vector<std::uint16_t>>> mats;
        for (int j = 0; j < s; ++j) {
            std::vector<std::vector<std::uint16_t>> c;
            for (int r = 0; r < m; ++r) {
                std::vector<std::uint16_t> row;
                for (int k = 0; k < m; ++k) row.push_back(std::uint16_t(next() % b));
                c.push_back(std::move(row));
            }
            mats.push_back(std::move(c));
        }
        auto net = dignet::net_from_matrices(dignet::GroupSpec::cyclic(b), mats, m, m);
        const int t1 = dignet::t_from_wep(dignet::truncated_wep(net, m, threads), m);
        const int t2 = dignet::t_value_alg2(net, threads).t;
        const int to = dignet::t_by_intervals(dignet::all_points(net), b, m);
        if (t1 == t2 && t2 == to) {
            ++agree;
        } else {
            std::cout << "disagreement on net " << i << ": alg1=" << t1 << " alg2=" << t2
                      << " oracle=" << to << '\n';
            std::cout << dignet::net_to_json(net).dump() << '\n';
        }
    }
    std::cout << agree << '/' << count << " agreement\n";
    if (agree != count) throw dignet::error(dignet::errc::disagreement, "randomized cross-check failed");
    return 0;
}

json gw_to_json(const dignet::MultivariateEnumerator& gw) {
    json terms = json::array();
    for (const auto& [key, c] : gw.poly.terms()) {
        json exps = json::array();
        for (auto e : key) exps.push_back(e);
        terms.push_back({{"exps", exps}, {"coeff", dignet::to_decimal(c)}});
    }
    return json{{"scale", dignet::to_decimal(gw.scale)}, {"cap", gw.cap}, {"terms", terms}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"digital-net weight enumerators and exact t-values"};
    app.require_subcommand(1);
    int threads = default_threads();
    app.add_option("--threads", threads, "worker thread count (or DIGNET_THREADS)");

    // --- tval ---
    auto* tval = app.add_subcommand("tval", "exact t-value of a digital net");
    tval->fallthrough();
    std::string tval_net, tval_points, tval_sobol, tval_dims, tval_ms = "0", tval_alg = "both",
                                                              tval_out = "json";
    int tval_s = 0;
    std::optional<int> tval_ell;
    tval->add_option("--net", tval_net, "net file (json)");
    tval->add_option("--points", tval_points, "raw point-set file: reports a lower bound, not t");
    tval->add_option("--sobol", tval_sobol, "direction-number file");
    tval->add_option("--dims", tval_dims, "dimension range A..B (with --sobol)");
    tval->add_option("--s", tval_s, "single dimension count (with --sobol)");
    tval->add_option("--m", tval_ms, "m or range A..B (with --sobol)");
    tval->add_option("--algorithm", tval_alg, "alg1 | alg2 | both | oracle")
        ->check(CLI::IsMember({"alg1", "alg2", "both", "oracle"}));
    tval->add_option("--l", [&tval_ell](const std::vector<std::string>& v) {
        tval_ell = std::stoi(v.at(0));
        return true;
    }, "truncation override for alg1");
    tval->add_option("--out", tval_out, "json | csv")->check(CLI::IsMember({"json", "csv"}));

    // --- wep ---
    auto* wep = app.add_subcommand("wep", "weight enumerator of the dual");
    wep->fallthrough();
    std::string wep_net, wep_out = "json";
    bool wep_full = false, wep_gw = false;
    std::optional<int> wep_ell;
    int wep_cap = -1;
    wep->add_option("--net", wep_net, "net file (json)")->required();
    wep->add_flag("--full", wep_full, "whole-range enumerator (degrees 0..ns)");
    wep->add_option("--l", [&wep_ell](const std::vector<std::string>& v) {
        wep_ell = std::stoi(v.at(0));
        return true;
    }, "truncation degree (default m)");
    wep->add_flag("--gw", wep_gw, "multivariate enumerator in z_1..z_s");
    wep->add_option("--cap", wep_cap, "total-degree cap for --gw (default m)");
    wep->add_option("--out", wep_out, "json | csv")->check(CLI::IsMember({"json", "csv"}));

    // --- check ---
    auto* check = app.add_subcommand("check", "cross-validate against the brute-force oracles");
    check->fallthrough();
    std::string check_net, check_points;
    bool check_random = false;
    std::uint32_t check_b = 2;
    int check_m = 3, check_s = 2, check_count = 10;
    std::uint64_t check_seed = 1;
    check->add_option("--net", check_net, "net file (json)");
    check->add_option("--points", check_points, "raw point-set file");
    check->add_flag("--random", check_random, "randomized matrix suite");
    check->add_option("--b", check_b, "base for --random");
    check->add_option("--m", check_m, "m for --random");
    check->add_option("--s", check_s, "dimensions for --random");
    check->add_option("--count", check_count, "number of random nets");
    check->add_option("--seed", check_seed, "seed for --random");

    try {
        app.parse(argc, argv);

        if (tval->parsed()) {
            const int sources = int(!tval_net.empty()) + int(!tval_points.empty()) + int(!tval_sobol.empty());
            if (sources != 1) dignet::throw_input("tval needs exactly one of --net, --points, --sobol");
            if (!tval_sobol.empty()) {
                Range dims{};
                if (!tval_dims.empty())
                    dims = parse_range(tval_dims);
                else if (tval_s >= 1)
                    dims = Range{tval_s, tval_s};
                else
                    dignet::throw_input("--sobol needs --dims or --s");
                Range ms = parse_range(tval_ms);
                if (ms.lo < 1) dignet::throw_input("--sobol needs --m >= 1");
                return run_tval_grid(tval_sobol, dims, ms, tval_alg, tval_out, threads);
            }
            if (!tval_points.empty())
                return run_tval_points(dignet::load_points(tval_points), tval_out, threads);
            return run_tval_net(dignet::load_net(tval_net), tval_alg, tval_ell, tval_out, threads);
        }

        if (wep->parsed()) {
            auto net = dignet::load_net(wep_net);
            if (wep_gw) {
                auto gw = dignet::multivariate_wep(net, wep_cap);
                std::cout << gw_to_json(gw).dump() << '\n';
                return 0;
            }
            dignet::WeightEnumerator w = wep_full ? dignet::full_wep(net, threads)
                                                  : dignet::truncated_wep(net, wep_ell.value_or(net.m()), threads);
            if (wep_out == "csv")
                std::cout << dignet::wep_to_csv(w, true);
            else
                std::cout << dignet::wep_to_json(w, true).dump() << '\n';
            return 0;
        }

        if (check->parsed()) {
            const int sources = int(!check_net.empty()) + int(!check_points.empty()) + int(check_random);
            if (sources != 1) dignet::throw_input("check needs exactly one of --net, --points, --random");
            if (check_random) return run_check_random(check_b, check_m, check_s, check_count, check_seed, threads);
            if (!check_points.empty()) return run_check_points(dignet::load_points(check_points), threads);
            return run_check_net(dignet::load_net(check_net), threads);
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const dignet::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        switch (e.kind()) {
            case dignet::errc::input:
                return 2;
            case dignet::errc::resource:
                return 3;
            default:
                return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
