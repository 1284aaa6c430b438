// hbtool: command-line front end for the Hecke-Baxter toolkit.
//
// Every command prints one JSON record on stdout. Exit status: 0 success,
// 1 evaluation or verification failure, 2 usage error.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <mutex>
#include <numbers>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hb/errors.hpp"
#include "hb/harmonic.hpp"
#include "hb/hglalg.hpp"
#include "hb/hspalg.hpp"
#include "hb/lfactor.hpp"
#include "hb/report.hpp"

using json = nlohmann::ordered_json;
using hb::Complex;

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

json cjson(Complex z)
{
    return {{"re", z.real()}, {"im", z.imag()}};
}

Complex parse_complex(const std::string& text)
{
    static const std::regex re(R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?(?:([+-]?(?:\d+\.?\d*|\.\d+)?(?:[eE][+-]?\d+)?)i)?\s*$)");
    std::smatch m;
    if (text.empty() || !std::regex_match(text, m, re)) throw UsageError("malformed number '" + text + "'");
    double r = m[1].matched ? std::stod(m[1].str()) : 0.0;
    double i = 0.0;
    if (m[2].matched) {
        std::string s = m[2].str();
        if (s.empty() || s == "+")
            i = 1.0;
        else if (s == "-")
            i = -1.0;
        else
            i = std::stod(s);
    } else if (!m[1].matched) {
        throw UsageError("malformed number '" + text + "'");
    }
    return {r, i};
}

std::vector<Complex> parse_gamma(const std::string& text, int ell)
{
    std::vector<Complex> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        out.push_back(parse_complex(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.size() != static_cast<std::size_t>(ell) + 1)
        throw UsageError("--gamma needs ell+1 = " + std::to_string(ell + 1) + " entries, got " +
                         std::to_string(out.size()));
    return out;
}

hb::GroupMatrix load_matrix(const std::string& spec, const std::string& file, int size)
{
    try {
        if (!file.empty()) return hb::read_matrix_file(file, size);
        return hb::parse_matrix_spec(spec, size);
    } catch (const hb::SingularMatrixError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

unsigned thread_count(int flag)
{
    if (flag > 0) return static_cast<unsigned>(flag);
    if (const char* env = std::getenv("HB_THREADS")) {
        try {
            int v = std::stoi(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring HB_THREADS='" << env << "'\n";
    }
    return 0;
}

// Progress lines on stderr, at most one per 10% step.
std::function<void(std::uint64_t, std::uint64_t)> progress_printer(const std::string& label, bool quiet)
{
    if (quiet) return {};
    auto last = std::make_shared<std::atomic<int>>(0);
    auto mu = std::make_shared<std::mutex>();
    return [label, last, mu](std::uint64_t done, std::uint64_t total) {
        int decile = static_cast<int>(10 * done / total);
        int prev = last->load();
        if (decile > prev && last->compare_exchange_strong(prev, decile)) {
            std::lock_guard<std::mutex> lock(*mu);
            std::cerr << label << ": " << decile * 10 << "% (" << done << "/" << total << " samples)\n";
        }
    };
}

void emit(const json& j)
{
    std::cout << j.dump() << "\n";
}

// Options shared by the Monte Carlo commands.
struct McOptions {
    std::uint64_t samples = 100000;
    std::uint64_t seed = 1;
    std::uint64_t chunk = 4096;
    int threads = 0;
    bool quiet = false;

    void attach(CLI::App* app)
    {
        app->add_option("--samples", samples, "Monte Carlo sample count")->check(CLI::PositiveNumber);
        app->add_option("--seed", seed, "random seed");
        app->add_option("--chunk", chunk, "samples per deterministic chunk")->check(CLI::PositiveNumber);
        app->add_option("--threads", threads, "worker threads (default: HB_THREADS or all cores)")
            ->check(CLI::NonNegativeNumber);
        app->add_flag("--quiet", quiet, "no progress output on stderr");
    }

    hb::MCConfig config(const std::string& label) const
    {
        hb::MCConfig cfg;
        cfg.samples = samples;
        cfg.seed = seed;
        cfg.chunk = chunk;
        cfg.threads = thread_count(threads);
        cfg.progress = progress_printer(label, quiet || samples < 200000);
        return cfg;
    }

    void record(json& params) const
    {
        params["samples"] = samples;
        params["seed"] = seed;
        params["chunk"] = chunk;
    }
};

json estimate_json(const hb::Estimate& e)
{
    return {{"value", cjson(e.value)}, {"stderr", e.std_error}, {"samples", e.samples}};
}

// ------------------------------------------------------------------ verify

int run_verify(const std::string& algebra, int ell, bool long_mode, int degree)
{
    const int limit = algebra == "hgl" ? (long_mode ? hb::kMaxHglEll : 2) : (long_mode ? hb::kMaxHspEll : 1);
    if (ell < 0 || ell > limit)
        throw UsageError("--ell " + std::to_string(ell) + " outside 0.." + std::to_string(limit) + " for " + algebra +
                         (long_mode ? "" : " (use --long for larger ranks)"));

    std::vector<hb::VerificationReport> parts;
    std::optional<hb::VerificationReport> diagnostic;
    if (algebra == "hgl") {
        auto real = hb::build_hgl_realization(ell);
        parts.push_back(hb::verify_relations(real, hb::build_hgl_relation_table(ell)));
        parts.push_back(hb::verify_jacobi(real));
        parts.push_back(hb::verify_lemma1_factorization(real));
        parts.push_back(hb::verify_spherical_vector(real));
        parts.push_back(hb::verify_whittaker_covector(real, degree));
    } else {
        auto real = hb::build_hsp_realization(ell);
        parts.push_back(hb::verify_sp_relations(real, hb::build_hsp_relation_table(ell)));
        if (ell == 0 || long_mode) parts.push_back(hb::verify_jacobi(real));
        parts.push_back(hb::verify_lemma2_factorization(real));
        parts.push_back(hb::verify_lemma3_spherical_subalgebra(real));
        parts.push_back(hb::verify_hgl_embedding(hb::build_hgl_realization(ell), real));
        parts.push_back(hb::verify_sp_vectors(real, degree));
        diagnostic = hb::verify_sp_cross_copy(real);
    }

    hb::VerificationReport all;
    all.task = "verify_" + algebra;
    all.params["algebra"] = algebra;
    all.params["ell"] = ell;
    all.params["long"] = long_mode;
    all.params["max_test_degree"] = degree;
    json sections = json::array();
    for (const auto& p : parts) {
        sections.push_back({{"task", p.task}, {"pass", p.pass()}, {"checks", p.checks}, {"residuals", p.residuals.size()}});
        all.merge(p);
    }
    json out = hb::to_json(all);
    out["sections"] = sections;
    if (diagnostic) {
        json d = json::array();
        for (const auto& r : diagnostic->residuals) d.push_back({{"relation", r.relation}, {"value", r.residual}});
        out["cross_copy_brackets"] = d;
    }
    emit(out);
    return all.pass() ? 0 : 1;
}

// ------------------------------------------------------------------- eigen

int run_eigen(int ell, const std::vector<Complex>& gamma, Complex s, double c, const hb::GroupMatrix& g,
              const McOptions& mc, std::uint64_t calib_samples)
{
    if (g.size() != ell + 1) throw UsageError("--g must be (ell+1)x(ell+1)");
    if (!(s.real() > ell)) throw UsageError("convergence needs Re(s) > ell");

    hb::VerificationReport rep;
    rep.task = "eigen";
    rep.params["ell"] = ell;
    json gj = json::array();
    for (auto z : gamma) gj.push_back(cjson(z));
    rep.params["gamma"] = gj;
    rep.params["s"] = cjson(s);
    rep.params["c"] = c;
    mc.record(rep.params);

    const hb::Estimate est = hb::hb_eigenvalue_mc(gamma, s, c, g, mc.config("eigen"));
    const Complex L = hb::l_factor({ell, gamma, s, c});

    double N = 1.0, N_se = 0.0;
    if (ell > 0) {
        McOptions cal = mc;
        cal.samples = calib_samples ? calib_samples : mc.samples;
        const auto h = hb::calibrate_haar_constant(ell, s, c, cal.config("calibration"));
        N = h.value;
        N_se = h.std_error;
    }
    rep.params["haar_constant"] = N;
    rep.params["haar_constant_stderr"] = N_se;

    hb::Estimate phi = hb::spherical_function(gamma, g, mc.config("spherical"));
    rep.params["spherical_value"] = cjson(phi.value);
    rep.params["spherical_stderr"] = phi.std_error;

    const Complex ref = N * L * phi.value;
    const double rel_ref = std::hypot(N > 0 ? N_se / N : 0.0, std::abs(phi.value) > 0 ? phi.std_error / std::abs(phi.value) : 0.0);
    const double pooled = std::hypot(est.std_error, std::abs(ref) * rel_ref);

    hb::EstimateRecord r;
    r.label = "eigenvalue";
    r.value_re = est.value.real();
    r.value_im = est.value.imag();
    r.std_error = est.std_error;
    r.reference_re = ref.real();
    r.reference_im = ref.imag();
    r.rel_err = std::abs(est.value - ref) / std::abs(ref);
    r.tolerance = 3.0 * pooled / std::abs(ref);
    rep.estimates.push_back(r);

    if (ell == 0) {
        // independent route to the same L-factor
        const Complex q = hb::gl1_eigenvalue_quadrature(gamma[0].real(), s, c) * phi.value;
        hb::EstimateRecord rq = r;
        rq.label = "eigenvalue_vs_quadrature";
        rq.reference_re = q.real();
        rq.reference_im = q.imag();
        rq.rel_err = std::abs(est.value - q) / std::abs(q);
        rq.tolerance = 3.0 * est.std_error / std::abs(q);
        if (gamma[0].imag() == 0.0) rep.estimates.push_back(rq);
    }
    emit(hb::to_json(rep));
    return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Hecke-Baxter operator toolkit: L-factors, algebra verification, spherical functions"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "hbtool 1.0");

    // gamma
    double g_re = 0.0, g_im = 0.0;
    auto* gamma_cmd = app.add_subcommand("gamma", "complex Gamma function");
    gamma_cmd->add_option("--re", g_re, "real part")->required();
    gamma_cmd->add_option("--im", g_im, "imaginary part");

    // shared spectral options
    int ell = 0;
    std::string gamma_text;
    double s_re = 1.0, s_im = 0.0, c = 0.5;

    auto* lf_cmd = app.add_subcommand("lfactor", "Archimedean L-factor");
    bool canonical = false;
    lf_cmd->add_option("--ell", ell, "rank offset")->required()->check(CLI::NonNegativeNumber);
    lf_cmd->add_option("--gamma", gamma_text, "comma-separated spectral parameters (a, a+bi, bi)")->required();
    lf_cmd->add_option("--s-re", s_re, "Re s")->required();
    lf_cmd->add_option("--s-im", s_im, "Im s");
    auto* c_opt = lf_cmd->add_option("--c", c, "Gaussian width c > 0");
    auto* can_opt = lf_cmd->add_flag("--canonical", canonical, "use 2c = 1/pi");
    c_opt->excludes(can_opt);

    auto* verify_cmd = app.add_subcommand("verify", "exact verification of the hgl or hsp realization");
    std::string algebra;
    bool long_mode = false;
    int degree = 4;
    verify_cmd->add_option("--algebra", algebra, "hgl or hsp")->required()->check(CLI::IsMember({"hgl", "hsp"}));
    verify_cmd->add_option("--ell", ell, "rank offset")->required();
    verify_cmd->add_flag("--long", long_mode, "allow the larger ranks");
    verify_cmd->add_option("--degree", degree, "maximal test-monomial degree")->check(CLI::Range(2, 6));

    McOptions mc;
    std::string g_spec = "id", g2_spec = "id", matrix_file;
    std::uint64_t calib_samples = 0;

    auto* eigen_cmd = app.add_subcommand("eigen", "Monte Carlo check of the eigenvalue theorem");
    eigen_cmd->add_option("--ell", ell, "rank offset")->required()->check(CLI::NonNegativeNumber);
    eigen_cmd->add_option("--gamma", gamma_text, "spectral parameters")->required();
    eigen_cmd->add_option("--s-re", s_re, "Re s")->required();
    eigen_cmd->add_option("--s-im", s_im, "Im s");
    eigen_cmd->add_option("--c", c, "Gaussian width c > 0");
    eigen_cmd->add_option("--g", g_spec, "matrix spec: id | diag:a,b,... | m:a,b,c,d,...");
    eigen_cmd->add_option("--matrix-file", matrix_file, "row-major whitespace-separated matrix");
    eigen_cmd->add_option("--calib-samples", calib_samples, "samples for the Haar constant (default: --samples)");
    mc.attach(eigen_cmd);

    auto* sph_cmd = app.add_subcommand("spherical", "zonal spherical function");
    sph_cmd->add_option("--ell", ell, "rank offset")->required()->check(CLI::NonNegativeNumber);
    sph_cmd->add_option("--gamma", gamma_text, "spectral parameters")->required();
    sph_cmd->add_option("--g", g_spec, "matrix spec");
    sph_cmd->add_option("--matrix-file", matrix_file, "row-major whitespace-separated matrix");
    mc.attach(sph_cmd);

    auto* ker_cmd = app.add_subcommand("kernel", "Hecke-Baxter kernel Q_{s,c}(g)");
    double kappa = 0.0;
    ker_cmd->add_option("--ell", ell, "rank offset")->required()->check(CLI::NonNegativeNumber);
    ker_cmd->add_option("--s-re", s_re, "Re s");
    ker_cmd->add_option("--s-im", s_im, "Im s");
    ker_cmd->add_option("--c", c, "Gaussian width c > 0");
    auto* kappa_ker = ker_cmd->add_option("--kappa", kappa, "also evaluate the one-dimensional matrix element");
    ker_cmd->add_option("--g", g_spec, "matrix spec");
    ker_cmd->add_option("--matrix-file", matrix_file, "row-major whitespace-separated matrix");

    auto* wh_cmd = app.add_subcommand("whittaker", "matrix element W(g1, g2)");
    wh_cmd->add_option("--ell", ell, "rank offset")->required()->check(CLI::NonNegativeNumber);
    auto* gamma_wh = wh_cmd->add_option("--gamma", gamma_text, "spectral parameters");
    auto* kappa_wh = wh_cmd->add_option("--kappa", kappa, "one-dimensional representation |det|^{i kappa}");
    gamma_wh->excludes(kappa_wh);
    wh_cmd->add_option("--c", c, "Gaussian width c > 0");
    wh_cmd->add_option("--g", g_spec, "g1 matrix spec");
    wh_cmd->add_option("--g2", g2_spec, "g2 matrix spec");
    mc.attach(wh_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const Complex s(s_re, s_im);
        if (*gamma_cmd) {
            emit(cjson(hb::complex_gamma({g_re, g_im})));
            return 0;
        }
        if (*lf_cmd) {
            const auto gamma = parse_gamma(gamma_text, ell);
            const double cc = canonical ? 1.0 / (2.0 * std::numbers::pi) : c;
            if (!(cc > 0.0)) throw UsageError("--c must be positive");
            hb::LFactorParams p{ell, gamma, s, cc};
            const auto terms = hb::l_factor_terms(p);
            json factors = json::array();
            for (std::size_t j = 0; j < terms.size(); ++j)
                factors.push_back({{"gamma", cjson(gamma[j])}, {"value", cjson(terms[j])}});
            json out;
            out["params"] = {{"ell", ell}, {"s", cjson(s)}, {"c", cc}, {"canonical", canonical}};
            out["value"] = cjson(hb::l_factor(p));
            out["factors"] = factors;
            emit(out);
            return 0;
        }
        if (*verify_cmd) return run_verify(algebra, ell, long_mode, degree);
        if (ell + 1 > hb::kMaxMatrixSize) throw UsageError("--ell must be at most " + std::to_string(hb::kMaxMatrixSize - 1));
        if (!(c > 0.0)) throw UsageError("--c must be positive");
        if (*eigen_cmd) {
            const auto gamma = parse_gamma(gamma_text, ell);
            const auto g = load_matrix(g_spec, matrix_file, ell + 1);
            return run_eigen(ell, gamma, s, c, g, mc, calib_samples);
        }
        if (*sph_cmd) {
            const auto gamma = parse_gamma(gamma_text, ell);
            const auto g = load_matrix(g_spec, matrix_file, ell + 1);
            const auto e = hb::spherical_function(gamma, g, mc.config("spherical"));
            json out;
            out["params"] = {{"ell", ell}, {"g", matrix_file.empty() ? g_spec : matrix_file}};
            mc.record(out["params"]);
            out.update(estimate_json(e));
            out["exact"] = e.samples == 0;
            emit(out);
            return 0;
        }
        if (*ker_cmd) {
            const auto g = load_matrix(g_spec, matrix_file, ell + 1);
            json out;
            out["params"] = {{"ell", ell}, {"s", cjson(s)}, {"c", c}};
            out["value"] = cjson(hb::hb_kernel({{}, s, c, 0.0}, g));
            if (*kappa_ker) {
                out["params"]["kappa"] = kappa;
                out["theorem_value"] = cjson(hb::hb_kernel_from_theorem(kappa, c, ell, g));
            }
            emit(out);
            return 0;
        }
        if (*wh_cmd) {
            const auto g1 = load_matrix(g_spec, "", ell + 1);
            const auto g2 = load_matrix(g2_spec, "", ell + 1);
            json out;
            out["params"] = {{"ell", ell}, {"c", c}, {"g1", g_spec}, {"g2", g2_spec}};
            if (*gamma_wh) {
                const auto gamma = parse_gamma(gamma_text, ell);
                mc.record(out["params"]);
                const auto e = hb::whittaker_hgl(gamma, c, g1, g2, mc.config("whittaker"));
                out.update(estimate_json(e));
                out["exact"] = e.samples == 0;
            } else {
                out["params"]["kappa"] = kappa;
                out["value"] = cjson(hb::whittaker_one_dim(kappa, c, g1, g2));
                out["exact"] = true;
            }
            emit(out);
            return 0;
        }
    } catch (const hb::PoleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const hb::SingularMatrixError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const hb::OverflowError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const hb::ConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
