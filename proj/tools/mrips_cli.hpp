#pragma once

// The `mrips` command line. run() is separate from main() so the test suite
// can drive it in-process.

#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <mrips/mrips.hpp>
#include <mrips/oracles.hpp>

namespace mrips::cli {

inline constexpr const char* kVersion = "0.1.0";

inline std::string version_text()
{
    return std::string("mrips ") + kVersion +
           "\n"
           "filtration: monoidal Rips on non-degenerate vertex tuples (face-join recurrence), Z/2 coefficients\n"
           "products: p-sum on [0,inf]^d (--p, inf allowed); interleaving q-sum (--q, q <= p)\n"
           "bifiltration: sublevel Rips over [0,inf]^2 with (max, +_q); diagonal slices\n"
           "distances: graph distance via left adjoints; network distance by exhaustive correspondences";
}

namespace detail {

inline double parse_exponent(const std::string& s, const char* name)
{
    const auto v = io::try_parse_number(s);
    mrips::detail::require(v.has_value() && *v >= 1.0, std::string(name) + " must be a number >= 1 or 'inf'");
    return *v;
}

inline std::vector<double> parse_list(const std::string& s, std::size_t expected, const char* what)
{
    std::vector<double> out;
    for (const auto& tok : io::detail::split(s)) {
        const auto v = io::try_parse_number(tok);
        mrips::detail::require(v.has_value(), std::string("bad number in ") + what + ": '" + tok + "'");
        out.push_back(*v);
    }
    mrips::detail::require(expected == 0 || out.size() == expected,
                           std::string(what) + " needs " + std::to_string(expected) + " comma-separated values");
    return out;
}

inline Metric parse_metric(const std::string& s)
{
    if (s == "euclidean")
        return Metric::euclidean;
    if (s == "chebyshev")
        return Metric::chebyshev;
    if (s == "manhattan")
        return Metric::manhattan;
    throw InvalidInput("unknown metric '" + s + "'");
}

inline std::optional<io::InputFormat> parse_optional_format(const std::string& s)
{
    if (s.empty() || s == "auto")
        return std::nullopt;
    return io::parse_format(s);
}

// lo:hi:count, count evenly spaced values including both ends.
inline std::vector<double> parse_axis(const std::string& s)
{
    std::vector<std::string> parts;
    std::stringstream ss(s);
    for (std::string p; std::getline(ss, p, ':');)
        parts.push_back(p);
    mrips::detail::require(parts.size() == 3, "grid axis must look like lo:hi:count, got '" + s + "'");
    const auto lo = io::try_parse_number(parts[0]);
    const auto hi = io::try_parse_number(parts[1]);
    const auto n = io::try_parse_number(parts[2]);
    mrips::detail::require(lo && hi && n && std::isfinite(*lo) && std::isfinite(*hi) && *lo <= *hi && *lo >= 0.0,
                           "grid axis bounds must be finite with 0 <= lo <= hi");
    mrips::detail::require(*n >= 1 && *n == std::floor(*n) && *n <= 100000, "grid axis count must be a positive integer");
    const auto count = static_cast<std::size_t>(*n);
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i)
        out[i] = count == 1 ? *lo : (i + 1 == count ? *hi : *lo + (*hi - *lo) * static_cast<double>(i) / static_cast<double>(count - 1));
    return out;
}

// "T0:T1:NTxS0:S1:NS"
inline std::pair<std::vector<double>, std::vector<double>> parse_grid(const std::string& s)
{
    const auto x = s.find_first_of("xX");
    mrips::detail::require(x != std::string::npos, "grid must look like T0:T1:NTxS0:S1:NS");
    return {parse_axis(s.substr(0, x)), parse_axis(s.substr(x + 1))};
}

class Output {
public:
    Output(const std::string& path, std::ostream& fallback)
    {
        if (path.empty() || path == "-") {
            stream_ = &fallback;
        } else {
            file_.open(path, std::ios::binary);
            mrips::detail::require(file_.good(), "cannot write '" + path + "'");
            stream_ = &file_;
        }
    }
    std::ostream& operator*() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_ = nullptr;
};

struct GraphInput {
    std::string path;
    std::string vertices;  // optional vertex-weight table for edge lists
    std::string format = "auto";
    std::string metric = "euclidean";
};

inline LGraph load_graph(const GraphInput& in, LatticeDescriptor descriptor)
{
    const auto table = io::read_csv_file(in.path);
    std::optional<io::CsvTable> vertices;
    if (!in.vertices.empty())
        vertices = io::read_csv_file(in.vertices);
    const auto format = parse_optional_format(in.format);
    mrips::detail::require(!vertices || format.value_or(io::infer_format(table)) == io::InputFormat::edges,
                           "--vertices only applies to edge lists");
    return io::read_graph(table, format, descriptor, parse_metric(in.metric), vertices ? &*vertices : nullptr);
}

// Runs jobs on `threads` workers; results keep input order.
template <class Result, class Fn>
std::vector<Result> parallel_map(std::size_t count, std::size_t threads, Fn fn)
{
    std::vector<Result> results(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                results[i] = fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < std::min(threads, count); ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return results;
}

// Filtration value of one tuple straight from the face recurrence.
inline Grade rips_value(const LGraph& g, std::span<const Vertex> y)
{
    std::vector<Grade> faces;
    if (y.size() > 1)
        for (std::size_t i = 0; i < y.size(); ++i)
            faces.push_back(rips_value(g, collapse_repeats(face(y, i))));
    return filtration_value(g, y, faces);
}

inline std::string one_line(std::string s)
{
    for (char& c : s)
        if (c == '\n' || c == '\r')
            c = ' ';
    return s;
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr)
{
    CLI::App app{"Persistent homology of lattice-valued networks (monoidal Rips)", "mrips"};
    app.set_version_flag("--version", version_text());
    app.require_subcommand(1);

    // persistence
    auto* pers = app.add_subcommand("persistence", "Persistence diagram of a scalar network");
    std::vector<std::string> pers_inputs;
    detail::GraphInput pers_in;
    std::string pers_p = "inf", pers_out, pers_out_dir, pers_dump;
    std::size_t pers_max_dim = 1, pers_jobs = 1;
    std::optional<double> pers_threshold;
    pers->add_option("--input", pers_inputs, "edge list, point cloud or distance matrix CSV (repeatable)")->required();
    pers->add_option("--vertices", pers_in.vertices, "vertex,weight CSV for edge lists");
    pers->add_option("--format", pers_in.format, "auto|edges|points|matrix");
    pers->add_option("--metric", pers_in.metric, "euclidean|chebyshev|manhattan for point clouds");
    pers->add_option("--p", pers_p, "product exponent, 1..inf");
    pers->add_option("--max-dim", pers_max_dim, "highest homology dimension");
    pers->add_option("--threshold", pers_threshold, "keep simplices with grade <= threshold");
    pers->add_option("--out", pers_out, "diagram CSV (single input; default stdout)");
    pers->add_option("--out-dir", pers_out_dir, "directory for per-input diagrams (several inputs)");
    pers->add_option("--dump-filtration", pers_dump, "write the sorted filtration CSV (single input)");
    pers->add_option("--jobs", pers_jobs, "worker threads for several inputs")->check(CLI::PositiveNumber);

    // bipersistence
    auto* bip = app.add_subcommand("bipersistence", "Sublevel Rips bifiltration: Betti grid or diagonal slice");
    detail::GraphInput bip_in;
    std::string bip_points, bip_matrix, bip_gamma, bip_grid, bip_offset, bip_out, bip_dump;
    std::size_t bip_max_dim = 1;
    auto* bip_points_opt = bip->add_option("--points", bip_points, "point cloud CSV");
    auto* bip_matrix_opt = bip->add_option("--matrix", bip_matrix, "distance matrix CSV");
    bip_points_opt->excludes(bip_matrix_opt);
    bip->add_option("--metric", bip_in.metric, "euclidean|chebyshev|manhattan for point clouds");
    bip->add_option("--gamma", bip_gamma, "one function value per vertex (last column)")->required();
    auto* grid_opt = bip->add_option("--grid", bip_grid, "T0:T1:NTxS0:S1:NS");
    auto* offset_opt = bip->add_option("--slice-offset", bip_offset, "a,b: diagram of the slice t -> (t+a, t+b)");
    grid_opt->excludes(offset_opt);
    bip->add_option("--max-dim", bip_max_dim, "highest homology dimension");
    bip->add_option("--out", bip_out, "output CSV (default stdout)");
    bip->add_option("--dump-filtration", bip_dump, "write the bigraded simplices CSV");

    // distance
    auto* dist = app.add_subcommand("distance", "Graph and network distances between two networks");
    detail::GraphInput a_in, b_in;
    std::string dist_q = "1", dist_p = "inf", dist_out, a_gamma, b_gamma;
    bool dist_network = false, dist_sample = false;
    std::size_t dist_cap = kDefaultCorrespondenceCap, dist_restarts = 64;
    std::uint64_t dist_seed = 0;
    dist->add_option("--a", a_in.path, "first network")->required();
    dist->add_option("--b", b_in.path, "second network")->required();
    dist->add_option("--a-vertices", a_in.vertices, "vertex,weight CSV for --a");
    dist->add_option("--b-vertices", b_in.vertices, "vertex,weight CSV for --b");
    dist->add_option("--a-gamma", a_gamma, "vertex function for --a: compare sublevel graphs");
    dist->add_option("--b-gamma", b_gamma, "vertex function for --b");
    dist->add_option("--format", a_in.format, "auto|edges|points|matrix (both inputs)");
    dist->add_option("--metric", a_in.metric, "metric for point clouds");
    dist->add_option("--q", dist_q, "interleaving exponent, 1..inf");
    dist->add_flag("--network", dist_network, "also compute the network distance");
    dist->add_flag("--sample", dist_sample, "above the correspondence cap, return a local-search upper bound");
    dist->add_option("--cap", dist_cap, "largest n1*n2 grid searched exhaustively");
    dist->add_option("--seed", dist_seed, "seed for --sample");
    dist->add_option("--restarts", dist_restarts, "restarts for --sample");
    dist->add_option("--out", dist_out, "JSON output (default stdout)");

    // image
    auto* img = app.add_subcommand("image", "Persistence image of a diagram");
    std::string img_diagram, img_res = "20x20", img_ranges = "auto", img_weight = "linear", img_kind = "grid", img_out;
    std::size_t img_dim = 0;
    double img_sigma = 0.03;
    bool img_variance = false, img_csv = false;
    img->add_option("--diagram", img_diagram, "diagram CSV (dim,birth,death)")->required();
    img->add_option("--dim", img_dim, "homology dimension");
    img->add_option("--res", img_res, "RxC for grid images, N for line images");
    img->add_option("--sigma", img_sigma, "Gaussian standard deviation (see --variance)");
    img->add_flag("--variance", img_variance, "interpret --sigma as the variance");
    img->add_option("--ranges", img_ranges, "auto or b0,b1,p0,p1");
    img->add_option("--weight", img_weight, "linear|constant");
    img->add_option("--kind", img_kind, "grid (birth x persistence), persistence (1-D), essential (1-D over births)");
    img->add_flag("--csv", img_csv, "CSV rows instead of JSON");
    img->add_option("--out", img_out, "output (default stdout)");

    // generate
    auto* gen = app.add_subcommand("generate", "Seeded synthetic data");
    gen->require_subcommand(1);
    auto* gen_drgg = gen->add_subcommand("drgg", "Directed random geometric graph on the torus (edge list CSV)");
    DrggParams drgg_params;
    std::string gen_out;
    std::uint64_t gen_seed = 0;
    gen_drgg->add_option("--n", drgg_params.n, "vertex count");
    gen_drgg->add_option("--alpha", drgg_params.alpha, "Pareto exponent, > d + 1");
    gen_drgg->add_option("--d", drgg_params.d, "torus dimension");
    gen_drgg->add_option("--r0", drgg_params.r0, "minimum radius (default n^(-1/d))");
    gen_drgg->add_option("--seed", gen_seed, "RNG seed")->required();
    gen_drgg->add_option("--out", gen_out, "edge list CSV (default stdout)");
    auto* gen_twist = gen->add_subcommand("twist", "Linked twist map orbit (point cloud CSV)");
    double twist_r = 4.3;
    std::size_t twist_iters = kDefaultTwistIterations;
    std::optional<double> twist_x0, twist_y0;
    gen_twist->add_option("--r", twist_r, "twist parameter");
    gen_twist->add_option("--iters", twist_iters, "iterations (points = iterations + 1)");
    gen_twist->add_option("--x0", twist_x0, "explicit start x (with --y0)");
    gen_twist->add_option("--y0", twist_y0, "explicit start y (with --x0)");
    gen_twist->add_option("--seed", gen_seed, "RNG seed for the start point")->required();
    gen_twist->add_option("--out", gen_out, "point cloud CSV (default stdout)");

    // oracle (debugging aid, not listed in help)
    auto* orc = app.add_subcommand("oracle", "");
    orc->group("");
    orc->require_subcommand(1);
    auto* orc_cho = orc->add_subcommand("cho", "exact Cho-nerve membership of a tuple");
    detail::GraphInput cho_in;
    std::string cho_simplex, cho_p = "2", cho_t;
    orc_cho->add_option("--input", cho_in.path)->required();
    orc_cho->add_option("--vertices", cho_in.vertices);
    orc_cho->add_option("--format", cho_in.format);
    orc_cho->add_option("--simplex", cho_simplex, "comma-separated vertex indices")->required();
    orc_cho->add_option("--t", cho_t, "grade")->required();
    orc_cho->add_option("--p", cho_p, "product exponent (finite)");
    auto* orc_vr = orc->add_subcommand("vr", "subset-based Vietoris-Rips diagram of a point cloud");
    std::string vr_points, orc_out;
    std::size_t vr_max_dim = 1;
    orc_vr->add_option("--points", vr_points)->required();
    orc_vr->add_option("--max-dim", vr_max_dim);
    orc_vr->add_option("--out", orc_out);

    std::vector<const char*> argv{"mrips"};
    for (const auto& a : args)
        argv.push_back(a.c_str());

    try {
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::ParseError& e) {
            if (e.get_exit_code() == 0)
                return app.exit(e, out, err);
            throw InvalidInput(e.what());
        }

        if (*pers) {
            const double p = detail::parse_exponent(pers_p, "--p");
            const auto descriptor = LatticeDescriptor::scalar(p, 1.0);
            mrips::detail::require(pers_inputs.size() == 1 || pers_dump.empty(), "--dump-filtration needs a single input");
            mrips::detail::require(pers_inputs.size() == 1 || pers_out.empty(), "use --out-dir with several inputs");
            auto compute = [&](std::size_t i) {
                detail::GraphInput in = pers_in;
                in.path = pers_inputs[i];
                const auto g = detail::load_graph(in, descriptor);
                return build_filtration(g, pers_max_dim, pers_threshold);
            };
            if (pers_inputs.size() == 1) {
                const auto f = compute(0);
                if (!pers_dump.empty()) {
                    detail::Output dump(pers_dump, out);
                    io::write_filtration(*dump, f);
                }
                detail::Output o(pers_out, out);
                io::write_diagram(*o, persistence_diagram(f));
                return 0;
            }
            const auto diagrams = detail::parallel_map<PersistenceDiagram>(pers_inputs.size(), pers_jobs,
                                                                          [&](std::size_t i) { return persistence_diagram(compute(i)); });
            if (!pers_out_dir.empty())
                std::filesystem::create_directories(pers_out_dir);
            for (std::size_t i = 0; i < diagrams.size(); ++i) {
                if (pers_out_dir.empty()) {
                    out << "# " << pers_inputs[i] << '\n';
                    io::write_diagram(out, diagrams[i]);
                } else {
                    const auto path = std::filesystem::path(pers_out_dir) / (std::filesystem::path(pers_inputs[i]).stem().string() + ".diagram.csv");
                    detail::Output o(path.string(), out);
                    io::write_diagram(*o, diagrams[i]);
                }
            }
            return 0;
        }

        if (*bip) {
            mrips::detail::require(!bip_points.empty() || !bip_matrix.empty(), "give --points or --matrix");
            mrips::detail::require(!bip_grid.empty() || !bip_offset.empty(), "give --grid or --slice-offset");
            detail::GraphInput in = bip_in;
            in.path = bip_points.empty() ? bip_matrix : bip_points;
            in.format = bip_points.empty() ? "matrix" : "points";
            const auto d = detail::load_graph(in, LatticeDescriptor::scalar(kInf));
            const auto gamma = io::read_vertex_values(io::read_csv_file(bip_gamma));
            const auto bf = build_bifiltration(sublevel_graph(d, gamma), bip_max_dim);
            if (!bip_dump.empty()) {
                detail::Output dump(bip_dump, out);
                io::write_filtration(*dump, bf);
            }
            detail::Output o(bip_out, out);
            if (!bip_offset.empty()) {
                const auto offset = detail::parse_list(bip_offset, 2, "--slice-offset");
                io::write_diagram(*o, persistence_diagram(slice_filtration(bf, offset)));
                return 0;
            }
            const auto [ts, ss] = detail::parse_grid(bip_grid);
            *o << "t,s,dim,betti\n";
            for (double t : ts)
                for (double s : ss) {
                    const auto betti = betti_at(bf, Grade{t, s});
                    for (std::size_t k = 0; k < betti.size(); ++k)
                        *o << io::format_number(t) << ',' << io::format_number(s) << ',' << k << ',' << betti[k] << '\n';
                }
            return 0;
        }

        if (*dist) {
            const double q = detail::parse_exponent(dist_q, "--q");
            const double p = detail::parse_exponent(dist_p, "--p");
            mrips::detail::require(q <= p, "--q must not exceed --p");
            b_in.format = a_in.format;
            b_in.metric = a_in.metric;
            mrips::detail::require(a_gamma.empty() == b_gamma.empty(), "give both --a-gamma and --b-gamma or neither");
            LGraph ga = detail::load_graph(a_in, LatticeDescriptor::scalar(p, q));
            LGraph gb = detail::load_graph(b_in, LatticeDescriptor::scalar(p, q));
            if (!a_gamma.empty()) {
                ga = sublevel_graph(ga, io::read_vertex_values(io::read_csv_file(a_gamma)), q);
                gb = sublevel_graph(gb, io::read_vertex_values(io::read_csv_file(b_gamma)), q);
            }
            nlohmann::json j;
            j["q"] = io::number_json(q);
            j["sizes"] = {ga.size(), gb.size()};
            if (ga.size() == gb.size()) {
                const Grade fwd = directed_graph_distance(ga, gb, q);
                const Grade bwd = directed_graph_distance(gb, ga, q);
                j["directed_forward"] = io::grade_json(fwd);
                j["directed_backward"] = io::grade_json(bwd);
                j["graph_distance"] = io::grade_json(join(fwd, bwd));
            } else {
                j["directed_forward"] = nullptr;
                j["directed_backward"] = nullptr;
                j["graph_distance"] = nullptr;
            }
            if (dist_network) {
                NetworkDistanceOptions opt;
                opt.cap = dist_cap;
                opt.allow_sampling = dist_sample;
                opt.seed = dist_seed;
                opt.restarts = dist_restarts;
                const auto r = network_distance(ga, gb, q, opt);
                j["network_distance"] = io::number_json(r.value);
                j["network_distance_exact"] = r.exact;
                j["argmin_correspondence"] = io::correspondence_json(r.argmin, ga.labels(), gb.labels());
                j["argmin_distortion"] = io::grade_json(r.distortion);
            }
            detail::Output o(dist_out, out);
            *o << j.dump(2) << '\n';
            return 0;
        }

        if (*img) {
            const auto diagram = io::read_diagram(io::read_csv_file(img_diagram)).in_dim(img_dim);
            mrips::detail::require(img_weight == "linear" || img_weight == "constant", "--weight must be linear or constant");
            const ImageWeight weight = img_weight == "linear" ? ImageWeight::linear : ImageWeight::constant;
            Range births, perss;
            if (img_ranges == "auto") {
                bool any = false;
                double b0 = kInf, b1 = -kInf, p1 = 0.0;
                for (const auto& pt : diagram.points()) {
                    if (pt.is_essential() != (img_kind == "essential"))
                        continue;
                    any = true;
                    b0 = std::min(b0, pt.birth);
                    b1 = std::max(b1, pt.birth);
                    if (!pt.is_essential())
                        p1 = std::max(p1, pt.persistence());
                }
                births = any ? Range{b0, b1 > b0 ? b1 : b0 + 1.0} : Range{0.0, 1.0};
                perss = Range{0.0, p1 > 0.0 ? p1 : 1.0};
            } else {
                const auto r = detail::parse_list(img_ranges, 4, "--ranges");
                births = {r[0], r[1]};
                perss = {r[2], r[3]};
            }
            PersistenceImage image;
            if (img_kind == "grid") {
                const auto x = img_res.find_first_of("xX");
                mrips::detail::require(x != std::string::npos, "--res must look like RxC");
                const auto rc = detail::parse_list(img_res.substr(0, x) + "," + img_res.substr(x + 1), 2, "--res");
                mrips::detail::require(rc[0] >= 1 && rc[1] >= 1 && rc[0] == std::floor(rc[0]) && rc[1] == std::floor(rc[1]) && rc[0] * rc[1] <= 1e7,
                                       "--res needs positive integers");
                ImageParams params;
                params.dim = img_dim;
                params.rows = static_cast<std::size_t>(rc[0]);
                params.cols = static_cast<std::size_t>(rc[1]);
                params.sigma = img_sigma;
                params.sigma_is_variance = img_variance;
                params.birth_range = births;
                params.persistence_range = perss;
                params.weight = weight;
                image = persistence_image(diagram, params);
            } else {
                const auto n = detail::parse_list(img_res, 1, "--res");
                mrips::detail::require(n[0] >= 1 && n[0] == std::floor(n[0]) && n[0] <= 1e7, "--res needs a positive integer for line images");
                const auto bins = static_cast<std::size_t>(n[0]);
                if (img_kind == "persistence")
                    image = persistence_line_image(diagram, img_dim, bins, img_sigma, perss, weight, img_variance);
                else if (img_kind == "essential")
                    image = essential_image(diagram, img_dim, bins, img_sigma, births, img_variance);
                else
                    throw InvalidInput("--kind must be grid, persistence or essential");
            }
            detail::Output o(img_out, out);
            if (img_csv)
                io::write_image_csv(*o, image);
            else
                *o << io::image_json(image).dump() << '\n';
            return 0;
        }

        if (*gen_drgg) {
            drgg_params.seed = gen_seed;
            const auto g = drgg(drgg_params);
            detail::Output o(gen_out, out);
            io::write_edge_list(*o, g);
            return 0;
        }
        if (*gen_twist) {
            mrips::detail::require(twist_x0.has_value() == twist_y0.has_value(), "give both --x0 and --y0 or neither");
            const auto pts = twist_x0 ? linked_twist_from(twist_r, twist_iters, *twist_x0, *twist_y0) : linked_twist(twist_r, twist_iters, gen_seed);
            detail::Output o(gen_out, out);
            io::write_points(*o, pts);
            return 0;
        }

        if (*orc_cho) {
            const double p = detail::parse_exponent(cho_p, "--p");
            const auto g = detail::load_graph(cho_in, LatticeDescriptor::scalar(p, 1.0));
            std::vector<Vertex> y;
            for (double v : detail::parse_list(cho_simplex, 0, "--simplex")) {
                mrips::detail::require(v >= 0 && v == std::floor(v) && v < static_cast<double>(g.size()), "--simplex entries must be vertex indices");
                y.push_back(static_cast<Vertex>(v));
            }
            const double t = detail::parse_list(cho_t, 1, "--t")[0];
            nlohmann::json j;
            j["simplex"] = y;
            j["t"] = io::number_json(t);
            j["p"] = io::number_json(p);
            j["cho_member"] = oracle::cho_membership(g, y, t, p);
            j["rips_value"] = io::grade_json(detail::rips_value(g, y));
            out << j.dump() << '\n';
            return 0;
        }
        if (*orc_vr) {
            const auto pts = io::read_points(io::read_csv_file(vr_points));
            detail::Output o(orc_out, out);
            io::write_diagram(*o, oracle::vr_oracle(pts, vr_max_dim));
            return 0;
        }
    } catch (const ResourceLimit& e) {
        err << "error: resource_limit: " << detail::one_line(e.what()) << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: invalid_input: " << detail::one_line(e.what()) << '\n';
        return 1;
    }
    return 1;
}

} // namespace mrips::cli
