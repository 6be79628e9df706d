// Command-line front end for the ST-curve search toolkit.
//
//   stcurve enumerate --stratum 2,1,1,1,1,1,1
//   stcurve run --stratum 1,1,1,1 --out results/
//   stcurve run --stratum 2,1,1,1,1,1,1 --case 0 --shard 3/16 --out results/
//   stcurve oracle --squares 8 --stratum 1,1,1,1 --out results/
//   stcurve certify --input surface.json

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "stcurve/oracle.hpp"
#include "stcurve/pipeline.hpp"

namespace {

std::vector<int> parse_stratum(const std::string& s) {
    return stcurve::stratum_from_string(s);
}

int cmd_enumerate(const std::string& stratum) {
    try {
        std::cout << stcurve::enumerate_report(parse_stratum(stratum));
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "enumerate: " << e.what() << "\n";
        return 2;
    }
}

int cmd_run(const std::string& stratum, int case_index, const std::string& shard,
            const std::string& out_dir, bool no_window_prune, bool resume) {
    stcurve::RunConfig cfg;
    try {
        cfg.stratum = parse_stratum(stratum);
    } catch (const std::exception& e) {
        std::cerr << "run: " << e.what() << "\n";
        return 2;
    }
    if (case_index >= 0) cfg.case_index = case_index;
    if (!shard.empty()) {
        auto slash = shard.find('/');
        if (slash == std::string::npos) {
            std::cerr << "run: --shard expects k/m\n";
            return 2;
        }
        cfg.shard_index = std::stoi(shard.substr(0, slash));
        cfg.shard_count = std::stoi(shard.substr(slash + 1));
    }
    cfg.output_dir = out_dir;
    cfg.window_prune = !no_window_prune;
    cfg.resume = resume;
    try {
        stcurve::RunResult r = stcurve::run_pipeline(cfg);
        if (!r.message.empty()) std::cout << r.message << "\n";
        if (r.merged) {
            for (const auto& c : r.certified)
                if (c.certified) std::cout << stcurve::certified_record(c) << "\n";
        }
        return r.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "run: " << e.what() << "\n";
        return 1;
    }
}

int cmd_oracle(int squares, const std::string& stratum, const std::string& out_dir,
               bool force) {
    if (squares > 12 && !force) {
        std::cerr << "oracle: refusing n_squares > 12 without --force (desk-scale "
                     "guard)\n";
        return 2;
    }
    try {
        const auto st = parse_stratum(stratum);
        const auto lines = stcurve::oracle_records(squares, st);
        if (!out_dir.empty()) {
            namespace fs = std::filesystem;
            fs::path dir = fs::path(out_dir) / stcurve::stratum_tag(st);
            fs::create_directories(dir);
            std::ofstream out(dir / "oracle_certified_list",
                              std::ios::binary | std::ios::trunc);
            for (const auto& l : lines) out << l << '\n';
        }
        for (const auto& l : lines) std::cout << l << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "oracle: " << e.what() << "\n";
        return 1;
    }
}

int cmd_certify(const std::string& input) {
    try {
        std::string text;
        if (input == "-") {
            std::ostringstream ss;
            ss << std::cin.rdbuf();
            text = ss.str();
        } else {
            std::ifstream in(input);
            if (!in) {
                std::cerr << "certify: cannot open " << input << "\n";
                return 2;
            }
            std::ostringstream ss;
            ss << in.rdbuf();
            text = ss.str();
        }
        const stcurve::Origami o = stcurve::origami_from_json(text);
        const stcurve::Stratum s = stcurve::stratum_of(o);
        const auto orbit = stcurve::sl2z_orbit(o);
        const stcurve::Rational sum = stcurve::lyapunov_sum(o);
        std::cout << "stratum " << stcurve::stratum_name(s.zero_orders) << " genus "
                  << s.genus << "\n";
        std::cout << "orbit " << orbit.size() << "\n";
        std::cout << "sum " << sum.str() << "\n";
        std::cout << (sum == stcurve::Rational(1) ? "certified: ST-curve generator"
                                                  : "not an ST-curve generator")
                  << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "certify: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"search and certification toolkit for Shimura-Teichmueller "
                 "curves generated by square-tiled surfaces"};
    app.require_subcommand(1);

    std::string stratum, shard, out_dir = "stcurve-out", input = "-";
    int case_index = -1, squares = 0;
    bool no_window_prune = false, resume = false, force = false;

    auto* en = app.add_subcommand("enumerate",
                                  "show branching cases, diagram counts and "
                                  "first-element ranges for a stratum");
    en->add_option("--stratum", stratum, "comma-separated zero orders")->required();

    auto* run = app.add_subcommand("run", "run the filter cascade");
    run->add_option("--stratum", stratum, "comma-separated zero orders")->required();
    run->add_option("--case", case_index, "restrict to one branching case");
    run->add_option("--shard", shard, "k/m shard of the (case,t0,window) grid");
    run->add_option("--out", out_dir, "output directory");
    run->add_flag("--no-window-prune", no_window_prune,
                  "disable the window monotonicity prune");
    run->add_flag("--resume", resume, "resume from checkpoints");

    auto* orc = app.add_subcommand("oracle",
                                   "exhaustive desk-scale enumeration for "
                                   "cross-checking run output");
    orc->add_option("--squares", squares, "number of squares (= 4*d_opt)")->required();
    orc->add_option("--stratum", stratum, "comma-separated zero orders")->required();
    orc->add_option("--out", out_dir, "also write oracle_certified_list under this dir");
    orc->add_flag("--force", force, "override the n<=12 guard");

    auto* cert = app.add_subcommand("certify",
                                    "read an origami JSON and print stratum, "
                                    "orbit size and exact Lyapunov sum");
    cert->add_option("--input", input, "JSON file or - for stdin");

    CLI11_PARSE(app, argc, argv);

    if (en->parsed()) return cmd_enumerate(stratum);
    if (run->parsed())
        return cmd_run(stratum, case_index, shard, out_dir, no_window_prune, resume);
    if (orc->parsed()) return cmd_oracle(squares, stratum, out_dir, force);
    if (cert->parsed()) return cmd_certify(input);
    return 2;
}
