#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "topoarith/embedding.hpp"
#include "topoarith/render.hpp"
#include "topoarith/suites.hpp"

using namespace topoarith;

namespace {

constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

// Writes to path, or stdout for "-".
template <class F>
void with_output(const std::string& path, F&& write) {
    if (path == "-") {
        write(std::cout);
        return;
    }
    std::ofstream os(path);
    if (!os) throw PreconditionViolation("cannot open " + path);
    write(os);
}

void summarize(const std::vector<ReportRecord>& records) {
    std::size_t pass = 0, fail = 0, inconclusive = 0;
    for (const auto& r : records) {
        if (r.status == Status::pass) ++pass;
        if (r.status == Status::fail) ++fail;
        if (r.status == Status::inconclusive) ++inconclusive;
    }
    std::cerr << records.size() << " records: " << pass << " pass, " << fail << " fail, " << inconclusive
              << " inconclusive\n";
    for (const auto& r : records)
        if (r.status == Status::fail)
            std::cerr << "FAIL " << r.suite << '/' << r.case_name << ' ' << r.params.dump() << ": "
                      << r.counterexample.value_or("") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Final-digits orders, topologies and continuity checks"};
    app.require_subcommand(1);

    auto* render = app.add_subcommand("render", "draw the suffix-class tree of an order");
    std::string order = "fd", format = "text", render_out = "-";
    std::size_t depth = 5;
    render->add_option("--order", order, "fd, variant or signed")->capture_default_str();
    render->add_option("--depth", depth, "tree depth")->capture_default_str();
    render->add_option("--format", format, "text, dot or svg")->capture_default_str();
    render->add_option("--out", render_out, "output path, - for stdout")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::string suite = "all", verify_out = "-";
    std::uint64_t max = 1u << 12, seed = 1;
    bool timing = false, serial = false;
    verify->add_option("--suite", suite, "numerals, orders, topology, continuity, embedding or all")
        ->capture_default_str();
    verify->add_option("--max", max, "truncation bound")->capture_default_str();
    verify->add_option("--seed", seed, "random seed")->capture_default_str();
    verify->add_option("--out", verify_out, "report path, - for stdout")->capture_default_str();
    verify->add_flag("--timing", timing, "add duration_ms to each record");
    verify->add_flag("--serial", serial, "run kernels on one thread");

    auto* embed = app.add_subcommand("embed", "run the back-and-forth embedding");
    std::uint64_t steps = 2000;
    bool table = false;
    embed->add_option("--steps", steps, "number of steps")->capture_default_str();
    embed->add_flag("--table", table, "print the {n, e(n)} table in step order");

    auto* probe = app.add_subcommand("probe", "gather evidence on an open claim");
    std::string claim, probe_out = "-";
    std::size_t bound = 12;
    std::uint64_t probe_seed = 1;
    probe->add_option("--claim", claim, "order-topology-equality, signed-add-continuity or transported-continuity")
        ->required();
    probe->add_option("--bound", bound, "search bound")->capture_default_str();
    probe->add_option("--seed", probe_seed, "random seed")->capture_default_str();
    probe->add_option("--out", probe_out, "report path, - for stdout")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*render) {
            RenderSpec spec{parse_order_kind(order), depth, parse_render_format(format)};
            const std::string doc = render_order(spec);
            with_output(render_out, [&](std::ostream& os) { os << doc; });
            return 0;
        }
        if (*verify) {
            const auto records = run_suite(suite, max, seed, serial ? Execution::serial : Execution::parallel);
            with_output(verify_out, [&](std::ostream& os) { write_records(os, records, timing); });
            summarize(records);
            return any_failed(records) ? exit_fail : 0;
        }
        if (*embed) {
            BackAndForth bf;
            bf.run(steps);
            if (table) {
                for (const auto& s : bf.log()) {
                    ReportRecord r;
                    r.suite = "embedding";
                    r.case_name = "table";
                    r.params = Json{{"step", s.t}};
                    r.evidence = Json{{"n", s.n.str()}, {"e", to_string(s.q)}, {"forth", s.forth}};
                    std::cout << to_json_line(r) << '\n';
                }
            } else {
                std::cout << "steps " << bf.steps() << ", mapped " << bf.forward().size() << '\n';
            }
            return 0;
        }
        if (*probe) {
            const auto records = run_probe(claim, bound, probe_seed);
            with_output(probe_out, [&](std::ostream& os) { write_records(os, records); });
            summarize(records);
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_fail;
    }
    return exit_usage;
}
