#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lacm/metrics.hpp"
#include "lacm/pipeline.hpp"
#include "lacm/pnm.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct SynthArgs {
    std::string out = ".";
    std::string layout = "disk";
    int size = 125;
    double fg = 180.0, bg = 60.0;
    std::string shading = "ramp";
    double amplitude = 0.5;
    int looks = 1;
    bool noise_free = false;
    uint64_t seed = 42;
};

struct SegmentArgs {
    std::string input;
    std::string out = ".";
    std::string solver = "sb";
    std::string config;
    int looks = -1;
    bool despeckle = false;
    bool eta_literal = false;
    bool fp_unweighted = false;
    std::string membership = "mask";
    // numeric knobs; applied only when the option was actually given
    double mu = 0, lambda = 0, alpha = 0, theta = 0, nu = 0, t = 0, dt = 0, eps = 0;
    double sigma = 0, beta = 0, isef_sigma = 0, gamma = 0, vol = 0, inner_tol = 0;
    int radius = 0, isef_size = 0, max_iter = 0, inner_max = 0;
};

struct MetricsArgs {
    std::string cs, gt, image;
    bool pp_literal = false;
};

struct BenchArgs {
    std::vector<std::string> solvers{"levelset", "sb", "fp1", "fp2"};
    std::vector<int> looks{1, 8};
    uint64_t seed = 42;
    int size = 125;
    std::string out;
};

void ensure_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir))
        throw lacm::IoError("cannot create output directory '" + dir + "'");
}

int cmd_synth(const SynthArgs& a) {
    lacm::PhantomSpec spec;
    spec.layout = lacm::layout_from_name(a.layout);
    spec.size = a.size;
    spec.level_fg = a.fg;
    spec.level_bg = a.bg;
    spec.shading = lacm::shading_from_name(a.shading);
    spec.amplitude = a.amplitude;
    spec.looks = a.looks;
    spec.noiseless = a.noise_free;
    spec.seed = a.seed;
    lacm::Phantom ph = lacm::make_phantom(spec);

    ensure_dir(a.out);
    fs::path dir(a.out);
    lacm::write_pgm((dir / "observed.pgm").string(), lacm::quantize8(ph.observed));
    lacm::write_pgm((dir / "clean.pgm").string(), ph.clean);
    lacm::write_pgm((dir / "truth.pgm").string(), ph.truth);

    json manifest{
        {"layout", a.layout},
        {"size", a.size},
        {"level_fg", a.fg},
        {"level_bg", a.bg},
        {"shading", a.shading},
        {"amplitude", a.amplitude},
        {"looks", a.looks},
        {"noise_free", a.noise_free},
        {"seed", a.seed},
        {"files", {{"observed", "observed.pgm"}, {"clean", "clean.pgm"}, {"truth", "truth.pgm"}}},
    };
    std::ofstream mf(dir / "manifest.json");
    if (!mf) throw lacm::IoError("cannot write manifest.json");
    mf << manifest.dump(2) << "\n";
    if (!mf.flush()) throw lacm::IoError("cannot write manifest.json");
    return 0;
}

// Flat key=value config file, '#' starts a comment. Keys are the segment
// long-option names without the dashes.
std::map<std::string, std::string> read_kv_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw lacm::IoError("cannot open config file '" + path + "'");
    std::map<std::string, std::string> kv;
    std::string line;
    size_t lineno = 0;
    auto trim = [](const std::string& s) {
        size_t b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) return std::string();
        size_t e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (size_t hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        size_t eq = line.find('=');
        std::string key = eq == std::string::npos ? "" : trim(line.substr(0, eq));
        std::string val = eq == std::string::npos ? "" : trim(line.substr(eq + 1));
        if (key.empty() || val.empty())
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key=value");
        kv[key] = val;
    }
    return kv;
}

double cfg_double(const std::string& key, const std::string& v) {
    size_t pos = 0;
    double x = 0;
    try {
        x = std::stod(v, &pos);
    } catch (...) {
        pos = std::string::npos;
    }
    if (pos != v.size())
        throw std::invalid_argument("config key '" + key + "': bad number '" + v + "'");
    return x;
}

int cfg_int(const std::string& key, const std::string& v) {
    size_t pos = 0;
    int x = 0;
    try {
        x = std::stoi(v, &pos);
    } catch (...) {
        pos = std::string::npos;
    }
    if (pos != v.size())
        throw std::invalid_argument("config key '" + key + "': bad integer '" + v + "'");
    return x;
}

bool cfg_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw std::invalid_argument("config key '" + key + "': bad boolean '" + v + "'");
}

lacm::StatsMembership membership_from(const std::string& v) {
    if (v == "mask") return lacm::StatsMembership::mask;
    if (v == "phi") return lacm::StatsMembership::phi;
    throw std::invalid_argument("stats-membership must be 'mask' or 'phi', got '" + v + "'");
}

bool apply_cfg_key(lacm::RunPlan& plan, const std::string& k, const std::string& v) {
    lacm::SolverConfig& cfg = plan.cfg;
    if (k == "mu") cfg.mu = cfg_double(k, v);
    else if (k == "lambda") cfg.lambda = cfg_double(k, v);
    else if (k == "alpha") cfg.alpha = cfg_double(k, v);
    else if (k == "theta") cfg.theta = cfg_double(k, v);
    else if (k == "nu") cfg.nu = cfg_double(k, v);
    else if (k == "t") cfg.t = cfg_double(k, v);
    else if (k == "dt") cfg.dt = cfg_double(k, v);
    else if (k == "eps") cfg.eps = cfg_double(k, v);
    else if (k == "sigma") cfg.sigma = cfg_double(k, v);
    else if (k == "radius") cfg.radius = cfg_int(k, v);
    else if (k == "beta") cfg.beta = cfg_double(k, v);
    else if (k == "isef-sigma") cfg.isef_sigma = cfg_double(k, v);
    else if (k == "isef-size") cfg.isef_size = cfg_int(k, v);
    else if (k == "gamma") cfg.gamma = cfg_double(k, v);
    else if (k == "vol") cfg.vol = cfg_double(k, v);
    else if (k == "max-iter") cfg.max_iter = cfg_int(k, v);
    else if (k == "inner-tol") cfg.inner_tol = cfg_double(k, v);
    else if (k == "inner-max") cfg.inner_max = cfg_int(k, v);
    else if (k == "eta-literal") cfg.eta_literal = cfg_bool(k, v);
    else if (k == "fp-unweighted-shrink") cfg.fp_unweighted_shrink = cfg_bool(k, v);
    else if (k == "stats-membership") cfg.membership = membership_from(v);
    else if (k == "despeckle") plan.despeckle = cfg_bool(k, v);
    else return false;
    return true;
}

int cmd_segment(const SegmentArgs& a, CLI::App* sub) {
    auto given = [&](const char* name) { return sub->count(name) > 0; };

    std::map<std::string, std::string> file_cfg;
    if (!a.config.empty()) file_cfg = read_kv_config(a.config);
    auto cfg_str = [&](const char* key) -> const std::string* {
        auto it = file_cfg.find(key);
        return it == file_cfg.end() ? nullptr : &it->second;
    };

    // solver and looks pick the base profile, so resolve them first
    std::string solver = a.solver;
    if (!given("--solver"))
        if (const std::string* v = cfg_str("solver")) solver = *v;
    lacm::SolverKind kind = lacm::solver_from_name(solver);

    int looks = a.looks;
    if (!given("--looks"))
        if (const std::string* v = cfg_str("looks")) looks = cfg_int("looks", *v);
    if (looks > (1 << 20)) throw std::invalid_argument("looks out of range");
    lacm::RunPlan plan{lacm::SolverConfig::defaults(kind), false};
    if (looks >= 0) plan = lacm::plan_for(kind, looks);

    // precedence: profile defaults < config file < command-line flags
    for (const auto& [k, v] : file_cfg) {
        if (k == "solver" || k == "looks") continue;
        if (!apply_cfg_key(plan, k, v))
            throw std::invalid_argument("config: unknown key '" + k + "'");
    }

    lacm::SolverConfig& cfg = plan.cfg;
    if (given("--despeckle")) plan.despeckle = a.despeckle;
    if (given("--mu")) cfg.mu = a.mu;
    if (given("--lambda")) cfg.lambda = a.lambda;
    if (given("--alpha")) cfg.alpha = a.alpha;
    if (given("--theta")) cfg.theta = a.theta;
    if (given("--nu")) cfg.nu = a.nu;
    if (given("--t")) cfg.t = a.t;
    if (given("--dt")) cfg.dt = a.dt;
    if (given("--eps")) cfg.eps = a.eps;
    if (given("--sigma")) cfg.sigma = a.sigma;
    if (given("--radius")) cfg.radius = a.radius;
    if (given("--beta")) cfg.beta = a.beta;
    if (given("--isef-sigma")) cfg.isef_sigma = a.isef_sigma;
    if (given("--isef-size")) cfg.isef_size = a.isef_size;
    if (given("--gamma")) cfg.gamma = a.gamma;
    if (given("--vol")) cfg.vol = a.vol;
    if (given("--max-iter")) cfg.max_iter = a.max_iter;
    if (given("--inner-tol")) cfg.inner_tol = a.inner_tol;
    if (given("--inner-max")) cfg.inner_max = a.inner_max;
    if (given("--eta-literal")) cfg.eta_literal = a.eta_literal;
    if (given("--fp-unweighted-shrink")) cfg.fp_unweighted_shrink = a.fp_unweighted;
    if (given("--stats-membership")) cfg.membership = membership_from(a.membership);
    cfg.validate();

    lacm::ScalarField f = lacm::quantize8(lacm::read_pgm(a.input));
    if (plan.despeckle) f = lacm::quantize8(lacm::despeckle_l1(f));
    lacm::SegmentationResult r = lacm::run_solver(f, cfg);

    ensure_dir(a.out);
    fs::path dir(a.out);
    lacm::write_pgm((dir / "mask.pgm").string(), r.mask);
    lacm::write_pgm_scaled((dir / "phi.pgm").string(), r.phi);
    lacm::write_text_matrix((dir / "phi.txt").string(), r.phi);
    lacm::write_ppm_overlay((dir / "overlay.ppm").string(), f, r.mask);

    std::printf("solver,iterations,seconds,residual\n");
    std::printf("%s,%d,%.3f,%.6g\n", lacm::solver_name(kind).c_str(), r.iterations, r.seconds,
                r.final_residual());
    return 0;
}

int cmd_metrics(const MetricsArgs& a) {
    lacm::BinaryMask cs = lacm::read_mask_pgm(a.cs);
    lacm::BinaryMask gt = lacm::read_mask_pgm(a.gt);
    double d = lacm::dsc(cs, gt);
    std::printf("dsc,pp\n");
    if (a.image.empty()) {
        std::printf("%.6f,\n", d);
    } else {
        lacm::ScalarField img = lacm::read_pgm(a.image);
        double pp = lacm::pp_uniformity(img, cs, !a.pp_literal);
        std::printf("%.6f,%.6f\n", d, pp);
    }
    return 0;
}

int cmd_bench(const BenchArgs& a) {
    std::vector<lacm::SolverKind> kinds;
    for (const auto& s : a.solvers) kinds.push_back(lacm::solver_from_name(s));
    std::vector<lacm::BenchRow> rows = lacm::run_bench(kinds, a.looks, a.seed, a.size);

    std::string csv = "solver,image,looks,iterations,seconds,dsc,pp\n";
    char line[160];
    for (const auto& r : rows) {
        std::snprintf(line, sizeof line, "%s,%s,%d,%d,%.3f,%.4f,%.4f\n", r.solver.c_str(),
                      r.image.c_str(), r.looks, r.iterations, r.seconds, r.dsc, r.pp);
        csv += line;
    }
    std::fputs(csv.c_str(), stdout);
    if (!a.out.empty()) {
        std::ofstream out(a.out);
        if (!out) throw lacm::IoError("cannot open '" + a.out + "' for writing");
        out << csv;
        if (!out.flush()) throw lacm::IoError("write failed for '" + a.out + "'");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Speckle-robust active-contour segmentation toolkit"};
    app.require_subcommand(1);

    SynthArgs sy;
    CLI::App* synth = app.add_subcommand("synth", "Generate a synthetic speckled phantom");
    synth->add_option("--out", sy.out, "Output directory");
    synth->add_option("--layout", sy.layout, "Scene layout: disk, ring, two-blob");
    synth->add_option("--size", sy.size, "Image side length")->check(CLI::Range(8, 4096));
    synth->add_option("--fg", sy.fg, "Foreground gray level");
    synth->add_option("--bg", sy.bg, "Background gray level");
    synth->add_option("--shading", sy.shading, "Shading profile: none, ramp, bump");
    synth->add_option("--amplitude", sy.amplitude, "Shading amplitude in [0,1)");
    synth->add_option("--looks", sy.looks, "Number of looks L (speckle variance 1/L)")
        ->check(CLI::Range(1, 1 << 20));
    synth->add_flag("--noise-free", sy.noise_free, "Skip the speckle factor");
    synth->add_option("--seed", sy.seed, "RNG seed");

    SegmentArgs sg;
    CLI::App* segment = app.add_subcommand("segment", "Segment an 8-bit PGM image");
    segment->add_option("input", sg.input, "Input image (binary PGM)")->required();
    segment->add_option("--out", sg.out, "Output directory");
    segment->add_option("--solver", sg.solver, "Solver: levelset, sb, fp1, fp2");
    segment->add_option("--looks", sg.looks, "Apply the per-look parameter profile (0 = noise-free)")
        ->check(CLI::NonNegativeNumber);
    segment->add_flag("--despeckle,!--no-despeckle", sg.despeckle,
                      "Force (or suppress) multilook+geometric-mean preprocessing");
    segment->add_option("--mu", sg.mu, "Data term weight");
    segment->add_option("--lambda", sg.lambda, "TV split weight");
    segment->add_option("--alpha", sg.alpha, "Proximal weight (fp1/fp2)");
    segment->add_option("--theta", sg.theta, "Edge/length weight (levelset)");
    segment->add_option("--nu", sg.nu, "Distance regularization weight (levelset)");
    segment->add_option("--t", sg.t, "Fixed-point relaxation, in (0,1)");
    segment->add_option("--dt", sg.dt, "Euler step (levelset)");
    segment->add_option("--eps", sg.eps, "Heaviside/delta smoothing");
    segment->add_option("--sigma", sg.sigma, "Region-fitting Gaussian sigma");
    segment->add_option("--radius", sg.radius, "Region-fitting kernel radius");
    segment->add_option("--beta", sg.beta, "Edge detector sharpness");
    segment->add_option("--isef-sigma", sg.isef_sigma, "ISEF scale");
    segment->add_option("--isef-size", sg.isef_size, "ISEF kernel size (odd)");
    segment->add_option("--gamma", sg.gamma, "Mask threshold, in (0,1)");
    segment->add_option("--vol", sg.vol, "Stopping threshold on ||dphi||_2");
    segment->add_option("--max-iter", sg.max_iter, "Outer iteration cap");
    segment->add_option("--inner-tol", sg.inner_tol, "Fixed-point inner loop tolerance");
    segment->add_option("--inner-max", sg.inner_max, "Fixed-point inner loop cap");
    segment->add_flag("--eta-literal", sg.eta_literal, "Literal eta formula from the source text");
    segment->add_option("--stats-membership", sg.membership, "Stats membership: mask or phi")
        ->check(CLI::IsMember({"mask", "phi"}));
    segment->add_flag("--fp-unweighted-shrink", sg.fp_unweighted,
                      "Constant 1/lambda threshold in the fixed-point b-update");
    segment->add_option("--config", sg.config, "Config file (key=value lines, # comments)");

    MetricsArgs mt;
    CLI::App* metrics = app.add_subcommand("metrics", "DSC/PP of a computed mask vs ground truth");
    metrics->add_option("--cs", mt.cs, "Computed segmentation mask (PGM)")->required();
    metrics->add_option("--gt", mt.gt, "Ground-truth mask (PGM)")->required();
    metrics->add_option("--image", mt.image, "Intensity image for PP (PGM)");
    metrics->add_flag("--pp-literal", mt.pp_literal, "Unnormalized PP (no constant C)");

    BenchArgs bn;
    CLI::App* bench = app.add_subcommand("bench", "Phantom benchmark table (CSV)");
    bench->add_option("--solvers", bn.solvers, "Solvers to run")->delimiter(',');
    bench->add_option("--looks", bn.looks, "Look counts (0 = noise-free)")->delimiter(',');
    bench->add_option("--seed", bn.seed, "Phantom seed");
    bench->add_option("--size", bn.size, "Phantom side length")->check(CLI::Range(32, 1024));
    bench->add_option("--out", bn.out, "Also write the CSV to this file");

    try {
        app.parse(argc, argv);
        if (*synth) return cmd_synth(sy);
        if (*segment) return cmd_segment(sg, segment);
        if (*metrics) return cmd_metrics(mt);
        if (*bench) return cmd_bench(bn);
        return 1;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const lacm::IoError& e) {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
