#include "ringlat/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ringlat/checks.hpp"
#include "ringlat/errors.hpp"
#include "ringlat/report.hpp"
#include "ringlat/ringspec.hpp"

namespace ringlat {

namespace {

int write_out(const std::string& text, const std::string& out_path,
              std::ostream& out) {
    if (out_path.empty() || out_path == "-") {
        out << text;
        return 0;
    }
    std::ofstream f(out_path);
    if (!f) {
        return 2;
    }
    f << text;
    return 0;
}

std::vector<std::string> expectation_failures(const RingSpec& spec,
                                              const AnalysisBundle& b) {
    CorpusItem shim;
    shim.name = spec.name;
    shim.ext = spec.ext;
    shim.expect = spec.expect;
    return check_expectations(shim, b);
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
    CLI::App app{"exact lattice laboratory for finite commutative ring extensions"};
    app.require_subcommand(1);

    u32 max_nodes = default_node_budget();
    bool serial = false;
    app.add_option("--max-nodes", max_nodes,
                   "node budget for interval enumeration (env RINGLAT_NODE_BUDGET)");
    app.add_flag("--serial", serial, "use the serial reference kernels");

    std::string path, format = "text", out_path, dot_path = "-";
    bool assert_expected = false;

    CLI::App* analyze = app.add_subcommand("analyze", "full report for a ring spec");
    analyze->add_option("path", path, "ring spec JSON file")->required();
    analyze->add_option("--format", format, "text or markdown")
        ->check(CLI::IsMember({"text", "markdown"}));
    analyze->add_option("--out", out_path, "write the report to a file");
    analyze->add_flag("--assert-expected", assert_expected,
                      "exit 1 if any expectation in the spec fails");

    CLI::App* lattice = app.add_subcommand("lattice", "emit the Hasse diagram as DOT");
    lattice->add_option("path", path, "ring spec JSON file")->required();
    lattice->add_option("--dot", dot_path, "output path (default stdout)");

    std::string only;
    CLI::App* corpus = app.add_subcommand("corpus", "run the example catalogue");
    corpus->add_option("--only", only, "run a single item by name");
    bool negate = false;
    corpus->add_flag("--negate-selftest", negate,
                     "deliberately corrupt one verdict to prove failures surface");

    u64 seed = 0;
    u32 count = 200;
    CLI::App* fuzz = app.add_subcommand("fuzz", "seeded random instances with "
                                                "the full cross-check battery");
    fuzz->add_option("--seed", seed, "first seed");
    fuzz->add_option("--count", count, "number of seeds");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    kernels::set_parallel(!serial);

    try {
        if (analyze->parsed() || lattice->parsed()) {
            RingSpec spec;
            try {
                spec = load_ring_spec(path);
            } catch (const error& e) {
                err << e.what() << "\n";
                return 2;
            }
            AnalysisBundle b = analyze_extension(spec.ext, max_nodes);
            if (lattice->parsed()) {
                std::ostringstream dot;
                render_dot(b.lattice, dot);
                if (write_out(dot.str(), dot_path, out) != 0) {
                    err << "error: cannot write " << dot_path << "\n";
                    return 2;
                }
                return 0;
            }
            std::ostringstream rep;
            render_analysis(b,
                            format == "markdown" ? ReportFormat::markdown
                                                 : ReportFormat::text,
                            rep);
            std::vector<std::string> failures;
            if (spec.has_expect) {
                failures = expectation_failures(spec, b);
                rep << (format == "markdown" ? "\n## expectations\n\n" : "-- expectations --\n");
                if (failures.empty()) {
                    rep << (format == "markdown" ? "- " : "  ") << "all expectations hold\n";
                } else {
                    for (const auto& f : failures)
                        rep << (format == "markdown" ? "- FAILED: " : "  FAILED: ")
                            << f << "\n";
                }
            }
            if (write_out(rep.str(), out_path, out) != 0) {
                err << "error: cannot write " << out_path << "\n";
                return 2;
            }
            if (assert_expected && !failures.empty()) return 1;
            return 0;
        }

        if (corpus->parsed()) {
            std::vector<std::string> names =
                only.empty() ? corpus_names() : std::vector<std::string>{only};
            bool ok = run_corpus(names, out, max_nodes, negate);
            return ok ? 0 : 1;
        }

        if (fuzz->parsed()) {
            FuzzParams params;
            params.max_nodes = std::min<u32>(max_nodes, 256);
            CheckOptions opts;
            opts.node_budget = max_nodes;
            u32 failures = 0;
            // worker pool over seeds with seed-ordered aggregation
            std::vector<FuzzOutcome> outcomes(count);
#ifdef RINGLAT_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
            for (i64 k = 0; k < static_cast<i64>(count); ++k)
                outcomes[static_cast<size_t>(k)] =
                    run_fuzz_seed(seed + static_cast<u64>(k), params, opts);
            for (u64 s = seed; s < seed + count; ++s) {
                FuzzOutcome& o = outcomes[static_cast<size_t>(s - seed)];
                if (o.violations.empty()) {
                    out << "[PASS] seed " << s << ": " << o.desc << ", " << o.nodes
                        << " nodes\n";
                } else {
                    ++failures;
                    out << "[FAIL] seed " << s << ": " << o.desc << "\n";
                    for (const auto& v : o.violations) out << "       " << v << "\n";
                    // minimal reproduction: dump the instance as a spec file
                    FuzzInstance inst = fuzz_instance(s, params);
                    RingSpec spec;
                    spec.name = "fuzz-" + std::to_string(s);
                    spec.ext = inst.ext;
                    out << "       reproduction spec:\n" << serialize_ring_spec(spec);
                }
            }
            out << (failures ? "[FAIL] " : "[PASS] ") << count << " seeds, "
                << failures << " failures\n";
            return failures ? 1 : 0;
        }
    } catch (const error& e) {
        err << e.what() << "\n";
        return e.code() == errc::bad_input ? 2 : 1;
    }
    return 2;
}

}  // namespace ringlat
