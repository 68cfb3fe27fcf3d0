#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "plurigreen/errors.hpp"
#include "plurigreen/green.hpp"
#include "plurigreen/io.hpp"
#include "plurigreen/lelong.hpp"
#include "plurigreen/lempert.hpp"
#include "plurigreen/monge_ampere.hpp"
#include "plurigreen/parallel.hpp"
#include "plurigreen/verify.hpp"

namespace pg = plurigreen;

namespace {

enum Exit { kOk = 0, kParse = 2, kDomain = 3, kInfeasible = 4, kEmpty = 5 };

double closed_form(const pg::PoleConfiguration& cfg, const pg::WeightVector& nu, const pg::ComplexPoint& z,
                   bool max_form) {
    const auto kind = cfg.domain().kind;
    if (kind == pg::DomainTag::Kind::Bidisc) {
        return max_form ? pg::green_bidisc_maxform(cfg, nu, z) : pg::green_bidisc_weighted(cfg, nu, z);
    }
    if (kind == pg::DomainTag::Kind::Polydisc) {
        return max_form ? pg::green_polydisc_maxform(cfg, nu, z) : pg::green_polydisc_axis(cfg, nu, z);
    }
    throw pg::GeometryError("no closed form on the " + pg::to_string(cfg.domain()));
}

void require_dimension(const pg::PoleConfiguration& cfg, const pg::ComplexPoint& z) {
    if (z.size() != cfg.domain().dimension()) {
        throw pg::ParseError("point has " + std::to_string(z.size()) + " coordinates, domain needs " +
                             std::to_string(cfg.domain().dimension()));
    }
}

std::pair<int, int> parse_grid(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw pg::ParseError("--grid expects R,A");
    try {
        std::size_t used = 0;
        const int r = std::stoi(text.substr(0, comma), &used);
        if (used != comma) throw pg::ParseError("--grid expects R,A");
        const auto tail = text.substr(comma + 1);
        const int a = std::stoi(tail, &used);
        if (used != tail.size()) throw pg::ParseError("--grid expects R,A");
        return {r, a};
    } catch (const std::logic_error&) {
        throw pg::ParseError("--grid expects R,A");
    }
}

std::vector<std::size_t> parse_subset(const std::string& text, std::size_t poles) {
    std::vector<std::size_t> out;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(part, &used);
        } catch (const std::logic_error&) {
            throw pg::ParseError("--subset expects 'all' or 1-based pole indices");
        }
        if (used != part.size() || v < 1 || static_cast<std::size_t>(v) > poles) {
            throw pg::ParseError("--subset index out of range: " + part);
        }
        out.push_back(static_cast<std::size_t>(v - 1));
    }
    if (out.empty()) throw pg::ParseError("--subset is empty");
    return out;
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw pg::ParseError("cannot write " + path);
    out << text;
}

struct Options {
    std::string config;
    std::string point;
    std::string form = "sum";
    std::string grid;
    double tol = 1e-7;
    std::string subset = "all";
    std::uint64_t seed = 0;
    std::string a = "0.5", b = "-0.5", gamma = "0.3";
    std::string out = "-";
    std::string region;
    double step = 0.1;
    double fd_step = pg::kDefaultFdStep;
    double exclude = 0.05;
    std::string what = "green";
};

int cmd_eval(const Options& o) {
    const auto cfg = pg::load_pole_config(o.config);
    const auto z = pg::parse_point(o.point);
    require_dimension(cfg, z);
    const pg::WeightVector nu(cfg.weights());
    std::cout << pg::format_double(closed_form(cfg, nu, z, o.form == "max")) << "\n";
    return kOk;
}

pg::SolverConfig solver_config(const Options& o) {
    pg::SolverConfig sc;
    if (!o.grid.empty()) std::tie(sc.radii, sc.angles) = parse_grid(o.grid);
    sc.refine_tol = o.tol;
    sc.seed = o.seed;
    return sc;
}

int cmd_lempert(const Options& o) {
    const auto cfg = pg::load_pole_config(o.config);
    const auto z = pg::parse_point(o.point);
    require_dimension(cfg, z);
    const pg::WeightVector nu(cfg.weights());
    const auto sc = solver_config(o);
    pg::LempertResult r;
    if (o.subset == "all") {
        r = pg::lempert_subset_min(z, cfg, nu, sc);
    } else {
        const auto subset = parse_subset(o.subset, cfg.size());
        r = pg::lempert_bidisc_axis(z, cfg, nu, subset, sc);
    }
    if (!r.feasible()) {
        std::cerr << "no feasible disc at this resolution\n";
        return kInfeasible;
    }
    nlohmann::json cert;
    nlohmann::json nodes = nlohmann::json::array();
    nlohmann::json moduli = nlohmann::json::array();
    for (const auto& n : r.best_nodes) {
        nodes.push_back(nlohmann::json::array({n.real(), n.imag()}));
        moduli.push_back(std::abs(n));
    }
    nlohmann::json subset = nlohmann::json::array();
    for (auto i : r.subset) subset.push_back(i + 1);
    cert["value"] = r.value;
    cert["subset"] = subset;
    cert["nodes"] = nodes;
    cert["node_moduli"] = moduli;
    cert["pick_min_eigenvalue_first"] = pg::json_number(r.min_eig_first);
    cert["pick_min_eigenvalue_second"] = pg::json_number(r.min_eig_second);
    cert["grid_points"] = r.grid_points;
    cert["feasible_grid_points"] = r.feasible_grid_points;
    cert["solver"] = {{"radii", sc.radii}, {"angles", sc.angles}, {"refine_tol", sc.refine_tol}, {"seed", sc.seed}};
    std::cout << pg::format_double(r.value) << "\n" << cert.dump(2) << "\n";
    return kOk;
}

int cmd_counterexample(const Options& o) {
    const auto a = pg::parse_complex(o.a);
    const auto b = pg::parse_complex(o.b);
    const auto gamma = pg::parse_complex(o.gamma);
    pg::check_two_pole_geometry(a, b, gamma);
    const auto rep = pg::counterexample_experiment(a, b, gamma, solver_config(o));
    write_output(o.out, rep.dump());
    return kOk;
}

double lelong_at(const pg::ScalarField& u, const pg::DomainTag& domain, const pg::ComplexPoint& z) {
    return pg::lelong_estimate(pg::recentered(u, z), pg::slice_direction(domain, z), pg::default_radii()).alpha;
}

int cmd_scan(const Options& o) {
    const auto cfg = pg::load_pole_config(o.config);
    if (cfg.domain().kind != pg::DomainTag::Kind::Bidisc) {
        throw pg::GeometryError("scans are implemented on the bidisc");
    }
    auto region = pg::parse_region(o.region, o.step);
    if (!region.inside(cfg.domain())) throw pg::DomainViolation("scan region leaves the bidisc");
    for (const auto& p : cfg.poles()) region.exclusions.push_back({p.location, o.exclude});

    const pg::WeightVector nu(cfg.weights());
    const auto field = pg::green_field(cfg, nu);
    std::vector<std::pair<pg::ComplexPoint, double>> rows;
    if (o.what == "ma") {
        pg::ScanOptions so;
        so.fd_step = o.fd_step;
        for (const auto& p : pg::scan_points(field, region, so)) {
            if (p.status == pg::PointStatus::Used) rows.emplace_back(p.z, p.det);
        }
    } else {
        const std::size_t n = region.size();
        std::vector<std::optional<double>> values(n);
        const bool lelong = o.what == "lelong";
        const auto count = static_cast<std::int64_t>(n);
        std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 16) num_threads(pg::parallel::num_threads())
        for (std::int64_t i = 0; i < count; ++i) {
            const auto z = region.point(static_cast<std::size_t>(i));
            if (region.excluded(z)) continue;
            try {
                values[static_cast<std::size_t>(i)] = lelong ? lelong_at(field.value, cfg.domain(), z) : field(z);
            } catch (...) {
#pragma omp critical(plurigreen_cli_scan)
                if (!failure) failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);
        for (std::size_t i = 0; i < n; ++i) {
            if (values[i]) rows.emplace_back(region.point(i), *values[i]);
        }
    }
    if (rows.empty()) {
        std::cerr << "no grid point left after exclusions\n";
        return kEmpty;
    }
    std::ostringstream csv;
    csv << "re_z1,im_z1,re_z2,im_z2,value\n";
    for (const auto& [z, v] : rows) {
        csv << pg::format_double(z[0].real()) << ',' << pg::format_double(z[0].imag()) << ','
            << pg::format_double(z[1].real()) << ',' << pg::format_double(z[1].imag()) << ','
            << pg::format_double(v) << '\n';
    }
    write_output(o.out, csv.str());
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pluricomplex Green functions, Lempert functions and Monge-Ampere checks on model domains"};
    app.require_subcommand(1);
    Options o;
    int threads = 0;
    app.add_option("--threads", threads, "Worker threads (0: PLURIGREEN_THREADS or the OpenMP default)")
        ->check(CLI::NonNegativeNumber);

    auto* eval = app.add_subcommand("eval", "Closed-form Green function at a point");
    eval->add_option("--config", o.config, "Pole configuration JSON")->required();
    eval->add_option("--point", o.point, "Comma-separated complex coordinates")->required();
    eval->add_option("--form", o.form, "sum or max")->check(CLI::IsMember({"sum", "max"}));

    auto* lempert = app.add_subcommand("lempert", "Lempert function by grid search over Pick-feasible discs");
    lempert->add_option("--config", o.config, "Pole configuration JSON")->required();
    lempert->add_option("--point", o.point, "Comma-separated complex coordinates")->required();
    lempert->add_option("--grid", o.grid, "Radial and angular resolution R,A");
    lempert->add_option("--tol", o.tol, "Refinement tolerance")->check(CLI::PositiveNumber);
    lempert->add_option("--subset", o.subset, "'all' or 1-based pole indices, comma-separated");
    lempert->add_option("--seed", o.seed, "Tie-break seed");

    auto* counter = app.add_subcommand("counterexample", "Two-pole experiment: delta_{2,1} against g_{2,1}");
    counter->add_option("--a", o.a, "First pole");
    counter->add_option("--b", o.b, "Second pole");
    counter->add_option("--gamma", o.gamma, "Second coordinate of the evaluation point");
    counter->add_option("--grid", o.grid, "Radial and angular resolution R,A");
    counter->add_option("--tol", o.tol, "Refinement tolerance")->check(CLI::PositiveNumber);
    counter->add_option("--seed", o.seed, "Tie-break seed");
    counter->add_option("--out", o.out, "Report file, '-' for standard output");

    auto* scan = app.add_subcommand("scan", "Grid scan of the Green function, its Monge-Ampere density or Lelong numbers");
    scan->add_option("--config", o.config, "Pole configuration JSON")->required();
    scan->add_option("--region", o.region, "c1,c2,w1,w2,w3,w4")->required();
    scan->add_option("--step", o.step, "Grid step")->check(CLI::PositiveNumber);
    scan->add_option("--fd-step", o.fd_step, "Finite-difference step for --what ma")->check(CLI::PositiveNumber);
    scan->add_option("--exclude", o.exclude, "Radius removed around each pole")->check(CLI::NonNegativeNumber);
    scan->add_option("--what", o.what, "ma, green or lelong")->check(CLI::IsMember({"ma", "green", "lelong"}));
    scan->add_option("--out", o.out, "CSV file, '-' for standard output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParse;
    }

    try {
        pg::parallel::set_num_threads(threads);
        if (*eval) return cmd_eval(o);
        if (*lempert) return cmd_lempert(o);
        if (*counter) return cmd_counterexample(o);
        return cmd_scan(o);
    } catch (const pg::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const pg::EmptyGrid& e) {
        std::cerr << e.what() << "\n";
        return kEmpty;
    } catch (const pg::DomainViolation& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kDomain;
    } catch (const pg::GeometryError& e) {
        std::cerr << "geometry error: " << e.what() << "\n";
        return kDomain;
    } catch (const pg::InvalidParameter& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kParse;
    } catch (const pg::Error& e) {
        std::cerr << e.what() << "\n";
        return kDomain;
    }
}
