#include <chrono>

#include <CLI11.hpp>

#include "cli.hpp"

namespace threefold::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Real, complex and quaternionic Hilbert spaces: classification and verification suites", "threefold"};
    app.fallthrough();
    app.require_subcommand(1);

    bool as_json = false, no_timing = false;
    Options opts;
    double tol = 0.0;
    app.add_flag("--json", as_json, "Machine-readable report");
    app.add_option("--seed", opts.seed, "Seed for randomized checks")->capture_default_str();
    auto* tol_opt = app.add_option("--tol", tol, "Override the command's check tolerance")->check(CLI::PositiveNumber);
    app.add_flag("--no-timing", no_timing, "Report elapsed_ms as 0 so output is reproducible byte for byte");

    auto* classify = app.add_subcommand("classify", "Classify the representations in a group file");
    std::string path;
    classify->add_option("file", path, "Group/representation JSON file")->required();

    auto* su2 = app.add_subcommand("su2", "SU(2) spin-j table");
    double j = 0.0, max_j = 5.0;
    int points = 2001;
    auto* j_opt = su2->add_option("--j", j, "A single spin");
    su2->add_option("--max-j", max_j, "All spins 0, 1/2, ..., max-j")->excludes(j_opt)->capture_default_str();
    su2->add_option("--points", points, "Quadrature nodes")->capture_default_str();

    auto* jordan = app.add_subcommand("jordan", "Jordan algebra suites");
    std::string algebra;
    int samples = 100;
    jordan->add_option("--algebra", algebra, "hR:n, hC:n, hH:n, hO:3 or spin:n")->required();
    jordan->add_option("--samples", samples, "Random samples")->capture_default_str();

    auto* tensor_table = app.add_subcommand("tensor-table", "Kind of a tensor product");

    auto* functors = app.add_subcommand("functors", "The six conversions between R, C and H spaces");
    std::size_t dim = 3;
    functors->add_option("--dim", dim, "Source dimension")->capture_default_str();

    auto* spectrum = app.add_subcommand("spectrum", "Spectra of random real or quaternionic generators");
    std::string system = "H";
    std::size_t spectrum_dim = 4;
    int count = 10;
    spectrum->add_option("--system", system, "R or H")->capture_default_str();
    spectrum->add_option("--dim", spectrum_dim, "Dimension")->capture_default_str();
    spectrum->add_option("--count", count, "Number of random generators")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);  // --help
        err << "usage error: " << e.what() << '\n';
        return 2;
    }
    if (*tol_opt) opts.tol = tol;

    const auto start = std::chrono::steady_clock::now();
    Report report;
    try {
        if (*classify) {
            report = cmd_classify(load_group_file(path), opts);
        } else if (*su2) {
            report = cmd_su2(*j_opt ? std::optional(j) : std::nullopt, max_j, points, opts);
        } else if (*jordan) {
            report = cmd_jordan(algebra, samples, opts);
        } else if (*tensor_table) {
            report = cmd_tensor_table(opts);
        } else if (*functors) {
            report = cmd_functors(dim, opts);
        } else if (*spectrum) {
            report = cmd_spectrum(system, spectrum_dim, count, opts);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    const auto elapsed = std::chrono::steady_clock::now() - start;
    report.elapsed_ms = no_timing ? 0 : std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();

    out << (as_json ? render_json(report) : render_text(report, !no_timing));
    return report.pass() ? 0 : 1;
}

}  // namespace threefold::cli
