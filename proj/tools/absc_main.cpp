#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "absc/index_tools.hpp"
#include "absc/suites.hpp"

namespace {

using nlohmann::ordered_json;

void write_file(const std::string& path, const std::string& text) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write " + path);
    os << text;
}

int finish(const absc::SuiteResult& r, const std::string& out_path) {
    std::string text = r.report.dump(1) + "\n";
    if (!out_path.empty())
        write_file(out_path, text);
    else
        std::cout << text;
    if (!r.pass) {
        std::cerr << "FAIL [" << r.name << "]: " << r.failure << "\n";
        return r.inconclusive ? 2 : 1;
    }
    std::cerr << "PASS [" << r.name << "]\n";
    return 0;
}

absc::SampledLoop load_loop_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot read " + path);
    absc::SampledLoop loop;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line.find_first_of("0123456789.-") != 0) continue;  // header row
        double t, re, im;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &t, &re, &im) == 3)
            loop.pts.emplace_back(re, im);
    }
    if (loop.pts.size() < 3) throw std::runtime_error("loop CSV has fewer than 3 samples");
    return loop;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification suites for the asymptotic superconnection laboratory"};
    app.require_subcommand(1);

    std::string config_path, out_path;
    app.add_option("--config", config_path, "JSON config file merged under the flags");

    int seeds = 50;
    auto* gfd = app.add_subcommand("verify-gfd", "finite part vs global formula (exact)");
    gfd->add_option("--seeds", seeds, "number of random instances");
    gfd->add_option("--out", out_path, "report path");

    auto* weitz = app.add_subcommand("weitzenbock", "curvature identity checks");
    weitz->add_option("--out", out_path, "report path");

    absc::RocklandSuiteConfig rcfg;
    auto* rock = app.add_subcommand("rockland", "sampled Rockland condition checks");
    rock->add_option("--model", rcfg.model, "model name");
    rock->add_option("--lambda", rcfg.lambdas, "lambda sweep");
    rock->add_option("--N", rcfg.Ns, "truncation levels");
    rock->add_option("--tol", rcfg.pass_tol, "pass tolerance");
    rock->add_option("--expect", rcfg.expect, "expected verdict: pass or fail");
    rock->add_option("--out", out_path, "report path");

    int max_level = 10;
    std::string csv_path;
    auto* hopf = app.add_subcommand("hopf", "Peter-Weyl spectra and kernel");
    hopf->add_option("--max-level", max_level, "largest block level");
    hopf->add_option("--csv", csv_path, "eigenvalue table path");
    hopf->add_option("--out", out_path, "report path");

    int mode_range = 5, s1_seeds = 100;
    auto* s1 = app.add_subcommand("s1-kernel", "Fourier mode kernel solver vs oracle");
    s1->add_option("--modes", mode_range, "mode range |m| <= modes");
    s1->add_option("--seeds", s1_seeds, "random instances");
    s1->add_option("--out", out_path, "report path");

    std::vector<std::string> loop_csvs;
    std::vector<double> center{0, 0};
    auto* index = app.add_subcommand("index", "winding and twist-disjointness arithmetic");
    index->add_option("--loop-csv", loop_csvs, "loop sample files (t,Re,Im rows)");
    index->add_option("--center", center, "winding query point (re im)")->expected(2);
    index->add_option("--out", out_path, "report path");

    std::string out_dir;
    auto* all = app.add_subcommand("all", "run every suite");
    all->add_option("--out-dir", out_dir, "directory for per-suite reports");
    all->add_option("--seeds", seeds, "random instances for verify-gfd");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 64;
    }

    try {
        if (!config_path.empty()) {
            std::ifstream is(config_path);
            if (!is) throw std::runtime_error("cannot read config " + config_path);
            ordered_json cfg = ordered_json::parse(is);
            if (cfg.contains("seeds")) seeds = cfg["seeds"].get<int>();
            if (cfg.contains("max_level")) max_level = cfg["max_level"].get<int>();
            if (cfg.contains("modes")) mode_range = cfg["modes"].get<int>();
            if (cfg.contains("lambda")) rcfg.lambdas = cfg["lambda"].get<std::vector<double>>();
            if (cfg.contains("N")) rcfg.Ns = cfg["N"].get<std::vector<int>>();
            if (cfg.contains("tol")) rcfg.pass_tol = cfg["tol"].get<double>();
        }

        if (gfd->parsed()) return finish(absc::suite_verify_gfd(seeds), out_path);
        if (weitz->parsed()) return finish(absc::suite_weitzenbock(), out_path);
        if (rock->parsed()) return finish(absc::suite_rockland(rcfg), out_path);
        if (hopf->parsed()) {
            std::string csv;
            auto r = absc::suite_hopf(max_level, &csv);
            if (!csv_path.empty()) write_file(csv_path, csv);
            return finish(r, out_path);
        }
        if (s1->parsed()) return finish(absc::suite_s1_kernel(mode_range, s1_seeds), out_path);
        if (index->parsed()) {
            if (!loop_csvs.empty()) {
                std::vector<absc::SampledLoop> loops;
                for (const auto& p : loop_csvs) loops.push_back(load_loop_csv(p));
                ordered_json j;
                j["schema"] = "absc.report/1";
                j["suite"] = "index-csv";
                j["winding"] = absc::winding(loops.front(),
                                             std::complex<double>(center[0], center[1]));
                j["index_formula"] = absc::index_formula(loops);
                std::string text = j.dump(1) + "\n";
                if (!out_path.empty())
                    write_file(out_path, text);
                else
                    std::cout << text;
                return 0;
            }
            return finish(absc::suite_index(), out_path);
        }
        if (all->parsed()) {
            auto results = absc::suite_all();
            int worst = 0;
            for (const auto& r : results) {
                std::string path =
                    out_dir.empty() ? std::string() : out_dir + "/" + r.name + ".json";
                int code = finish(r, path);
                worst = std::max(worst, code);
            }
            return worst;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 64;
}
