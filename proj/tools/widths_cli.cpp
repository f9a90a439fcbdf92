// widths: deviation rate of random-direction widths of convex polygons.
//
// Exit codes: 0 success, 1 domain error, 2 usage error. Payloads go to stdout
// only after they are fully assembled; diagnostics go to stderr.

#include "widths/error.hpp"
#include "widths/experiments.hpp"
#include "widths/geometry.hpp"
#include "widths/io.hpp"
#include "widths/moments.hpp"
#include "widths/reinhardt.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace widths;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int thread_cap() {
    if (const char* env = std::getenv("WIDTHS_NUM_THREADS")) {
        try {
            const int v = std::stoi(env);
            if (v > 0) {
                return v;
            }
        } catch (const std::exception&) {
        }
        throw UsageError("WIDTHS_NUM_THREADS must be a positive integer");
    }
    return 0;
}

struct PolygonSource {
    std::string file;
    int regular = 0;
    std::vector<int> reinhardt;

    void attach(CLI::App* cmd) {
        cmd->add_option("polygon", file, "Polygon file (JSON {\"vertices\": ...} or CSV x,y)");
        cmd->add_option("--regular", regular, "Regular n-gon with unit circumradius");
        cmd->add_option("--reinhardt", reinhardt, "Reinhardt n-gon: n and class index")->expected(2);
    }

    ConvexPolygon resolve() const {
        const int given = (!file.empty()) + (regular != 0) + (!reinhardt.empty());
        if (given != 1) {
            throw UsageError("give exactly one of: polygon file, --regular n, --reinhardt n index");
        }
        if (!file.empty()) {
            return io::read_polygon_file(file);
        }
        if (regular != 0) {
            return regular_polygon(regular, 1.0);
        }
        const auto classes = enumerate_reinhardt(reinhardt[0], thread_cap());
        const int index = reinhardt[1];
        if (index < 0 || index >= static_cast<int>(classes.size())) {
            throw Error(ErrorKind::BadParameter, "Reinhardt class index " + std::to_string(index) + " out of range (" +
                                                     std::to_string(classes.size()) + " classes)");
        }
        return realize(classes[static_cast<std::size_t>(index)].representative);
    }
};

std::vector<double> parse_grid(const std::string& spec) {
    std::vector<double> grid;
    auto number = [&](const std::string& s) {
        try {
            std::size_t used = 0;
            const double v = std::stod(s, &used);
            if (used != s.size()) {
                throw UsageError("");
            }
            return v;
        } catch (const std::exception&) {
            throw UsageError("bad t-grid entry '" + s + "'");
        }
    };
    // "lo:hi:count" or a comma list.
    if (spec.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(spec);
        std::string item;
        while (std::getline(ss, item, ':')) {
            parts.push_back(item);
        }
        if (parts.size() != 3) {
            throw UsageError("t-grid range must be lo:hi:count");
        }
        const double lo = number(parts[0]);
        const double hi = number(parts[1]);
        const int count = static_cast<int>(number(parts[2]));
        if (count < 2) {
            throw UsageError("t-grid count must be >= 2");
        }
        for (int i = 0; i < count; ++i) {
            grid.push_back(lo + (hi - lo) * i / (count - 1));
        }
    } else {
        std::stringstream ss(spec);
        std::string item;
        while (std::getline(ss, item, ',')) {
            grid.push_back(number(item));
        }
    }
    if (grid.empty()) {
        throw UsageError("empty t-grid");
    }
    return grid;
}

std::string truncated_5dp(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.5f", std::floor(x * 1e5) / 1e5);
    return buf;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Deviation rate of the random-direction width of convex polygons"};
    app.require_subcommand(1);

    PolygonSource delta_src;
    auto* delta_cmd = app.add_subcommand("delta", "Print the moment summary (JSON) of a polygon");
    delta_src.attach(delta_cmd);

    int enum_n = 0;
    bool enum_canonical = false;
    bool enum_cyclic = false;
    auto* enum_cmd = app.add_subcommand("enumerate", "Enumerate P(n) sign vectors or Reinhardt classes");
    enum_cmd->add_option("n", enum_n, "Polygon size (2..24)")->required();
    enum_cmd->add_flag("--canonical", enum_canonical, "List dihedral classes with realized delta");
    enum_cmd->add_flag("--cyclic", enum_cyclic, "List classes as cyclic run vectors");

    int table_max = 7;
    auto* table_cmd = app.add_subcommand("nu-table", "CSV of the minimum deviation rate nu(m)");
    table_cmd->add_option("max_m", table_max, "Largest m (1..64)");

    PolygonSource profile_src;
    int profile_samples = 360;
    auto* profile_cmd = app.add_subcommand("profile", "CSV width profile omega,width over [0, 2pi)");
    profile_src.attach(profile_cmd);
    profile_cmd->add_option("--samples", profile_samples, "Number of directions (>= 8)");

    double trunc_lambda = 1.0;
    std::string trunc_grid = "0.01,0.02,0.03,0.04,0.05";
    bool trunc_csv = false;
    auto* trunc_cmd = app.add_subcommand("truncate", "Truncation trend of the regular triangle");
    trunc_cmd->add_option("--lambda", trunc_lambda, "Cut ratio (1 = parallel)");
    trunc_cmd->add_option("--t-grid", trunc_grid, "Comma list or lo:hi:count in (0, 0.2]");
    trunc_cmd->add_flag("--csv", trunc_csv, "Emit t,delta_diff CSV");

    SearchConfig search;
    auto* search_cmd = app.add_subcommand("search", "Multi-restart simplex search for the delta-minimal n-gon");
    search_cmd->add_option("--n", search.n, "Polygon size (>= 3)");
    search_cmd->add_option("--seed", search.seed, "Seed");
    search_cmd->add_option("--restarts", search.restarts, "Independent restarts");
    search_cmd->add_option("--iterations", search.iterations, "Simplex iterations per restart");
    search_cmd->add_option("--scale", search.simplex_scale, "Initial simplex size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        std::string payload;
        if (*delta_cmd) {
            payload = io::summary_to_json(moment_summary(delta_src.resolve())) + "\n";
        } else if (*enum_cmd) {
            const int threads = thread_cap();
            if (enum_canonical || enum_cyclic) {
                const auto classes = enumerate_reinhardt(enum_n, threads);
                if (enum_cyclic && !enum_canonical) {
                    payload = "{\"count\":" + std::to_string(classes.size()) + ",\"n\":" + std::to_string(enum_n) +
                              ",\"cyclic\":[";
                    for (std::size_t i = 0; i < classes.size(); ++i) {
                        payload += (i ? ",\"" : "\"") + classes[i].cyclic.to_string() + "\"";
                    }
                    payload += "]}\n";
                } else {
                    // {"count":..., "n":..., "classes":[...]}
                    const std::string body = io::reinhardt_to_json(enum_n, classes);
                    payload = "{\"count\":" + std::to_string(classes.size()) + "," + body.substr(1) + "\n";
                }
            } else {
                const auto members = enumerate_P(enum_n, threads);
                payload = "{\"count\":" + std::to_string(members.size()) + ",\"n\":" + std::to_string(enum_n) +
                          ",\"sign_vectors\":[";
                for (std::size_t i = 0; i < members.size(); ++i) {
                    payload += (i ? "," : "") + io::int_list_to_json(members[i].signs());
                }
                payload += "]}\n";
            }
        } else if (*table_cmd) {
            if (table_max < 1 || table_max > 64) {
                throw UsageError("max_m must be in 1..64");
            }
            payload = "m,nu_5dp,nu\n";
            for (int m = 1; m <= table_max; ++m) {
                const double v = nu(m);
                payload += std::to_string(m) + "," + truncated_5dp(v) + "," + io::format_number(v) + "\n";
            }
        } else if (*profile_cmd) {
            if (profile_samples < 8) {
                throw UsageError("--samples must be >= 8");
            }
            const ConvexPolygon polygon = profile_src.resolve();
            payload = "omega,width\n";
            for (int k = 0; k < profile_samples; ++k) {
                const double omega = kTwoPi * k / profile_samples;
                payload += io::format_number(omega) + "," + io::format_number(shadow_width(polygon, Angle{omega})) + "\n";
            }
        } else if (*trunc_cmd) {
            const auto grid = parse_grid(trunc_grid);
            const auto trend = truncation_trend(trunc_lambda, grid);
            if (trunc_csv) {
                payload = "t,delta_diff\n";
                for (const auto& p : trend) {
                    payload += io::format_number(p.t) + "," + io::format_number(p.delta_diff) + "\n";
                }
            } else {
                payload = "{\"lambda\":" + io::format_number(trunc_lambda) +
                          ",\"delta_triangle\":" + io::format_number(moment_summary(unit_triangle()).delta) +
                          ",\"rows\":[";
                for (std::size_t i = 0; i < trend.size(); ++i) {
                    payload += (i ? "," : "");
                    payload += "{\"t\":" + io::format_number(trend[i].t) + ",\"delta\":" +
                               io::format_number(trend[i].delta) + ",\"delta_diff\":" +
                               io::format_number(trend[i].delta_diff) + "}";
                }
                payload += "]";
                if (trunc_lambda == 1.0 && grid.size() >= 2) {
                    const auto ratio = parallel_curvature_ratio(grid);
                    payload += ",\"curvature_ratio_fitted\":" + io::format_number(ratio.fitted) +
                               ",\"curvature_ratio_exact\":" + io::format_number(ratio.exact);
                }
                payload += "}\n";
            }
        } else if (*search_cmd) {
            const SearchResult res = minimize_delta(search);
            const double per = perimeter(res.polygon);
            payload = "{\"n\":" + std::to_string(search.n) + ",\"seed\":" + std::to_string(search.seed) +
                      ",\"restarts\":" + std::to_string(search.restarts) + ",\"delta\":" +
                      io::format_number(res.delta) + ",\"best_restart\":" + std::to_string(res.best_restart) +
                      ",\"vertices\":" + io::points_to_json(res.polygon.vertices());
            payload += ",\"minimal_width_unit_perimeter\":" + io::format_number(minimal_width(res.polygon) / per);
            if (search.n == 4) {
                payload += ",\"kite_distance\":" + io::format_number(similarity_distance(res.polygon, reference_kite()));
            }
            payload += "}\n";
        }
        std::cout << payload;
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
