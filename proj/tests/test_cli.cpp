#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
    std::string out;
    int code = -1;
};

Run hbtool(const std::string& args, const std::string& env = "")
{
    const std::string cmd = env + " " HBTOOL_PATH " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

nlohmann::json parse(const Run& r)
{
    return nlohmann::json::parse(r.out);
}

double re(const nlohmann::json& v) { return v["re"].get<double>(); }
double im(const nlohmann::json& v) { return v["im"].get<double>(); }

}  // namespace

TEST_CASE("gamma")
{
    Run r = hbtool("gamma --re 1 --im 0");
    CHECK(r.code == 0);
    CHECK(r.out.find('\n') == r.out.size() - 1);
    auto j = parse(r);
    CHECK(re(j) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(im(j) == 0.0);
    CHECK(re(parse(hbtool("gamma --re 0.5 --im 0"))) == doctest::Approx(1.7724538509).epsilon(1e-10));
    CHECK(hbtool("gamma --re -1 --im 0").code == 1);
    CHECK(hbtool("gamma --re abc").code == 2);
    CHECK(hbtool("gamma --bogus 1").code == 2);
    CHECK(hbtool("").code == 2);
}

TEST_CASE("lfactor")
{
    auto a = parse(hbtool("lfactor --ell 0 --gamma 0 --s-re 1 --s-im 0 --c 0.5"));
    CHECK(re(a["value"]) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));
    auto b = parse(hbtool("lfactor --ell 0 --gamma 0 --s-re 2 --s-im 0 --canonical"));
    CHECK(re(b["value"]) == doctest::Approx(1.0 / std::numbers::pi).epsilon(1e-14));

    Run r = hbtool("lfactor --ell 1 --gamma=1,-1 --s-re 2 --s-im 0 --c 0.7");
    CHECK(r.code == 0);
    auto c = parse(r);
    REQUIRE(c["factors"].size() == 2);
    const std::complex<double> f0(re(c["factors"][0]["value"]), im(c["factors"][0]["value"]));
    const std::complex<double> f1(re(c["factors"][1]["value"]), im(c["factors"][1]["value"]));
    const std::complex<double> v(re(c["value"]), im(c["value"]));
    CHECK(std::abs(f0 * f1 - v) < 1e-14 * std::abs(v));

    CHECK(hbtool("lfactor --ell 1 --gamma 1 --s-re 2 --c 0.5").code == 2);
    CHECK(hbtool("lfactor --ell 0 --gamma 1+x --s-re 2 --c 0.5").code == 2);
    CHECK(hbtool("lfactor --ell 0 --gamma 0 --s-re 0 --c 0.5").code == 1);
    CHECK(hbtool("lfactor --ell 0 --gamma 0 --s-re 2 --c 0.5 --canonical").code == 2);
}

TEST_CASE("verify")
{
    Run h = hbtool("verify --algebra hgl --ell 1");
    CHECK(h.code == 0);
    auto j = parse(h);
    CHECK(j["pass"] == true);
    CHECK(j["residuals"].empty());
    CHECK(j["sections"].size() >= 5);

    CHECK(hbtool("verify --algebra hgl --ell 9").code == 2);
    CHECK(hbtool("verify --algebra hgl --ell 3").code == 2);
    CHECK(hbtool("verify --algebra sl --ell 0").code == 2);

    // the lifted vector equations do not hold; the verifier says so
    Run s = hbtool("verify --algebra hsp --ell 0");
    CHECK(s.code == 1);
    auto k = parse(s);
    CHECK(k["pass"] == false);
    CHECK(k["residuals"].size() == 2);
    for (const auto& sec : k["sections"])
        if (sec["task"] != "sp_vectors") CHECK(sec["pass"] == true);
    CHECK(k["cross_copy_brackets"].size() == 6);
}

TEST_CASE("kernel, spherical, whittaker")
{
    auto k = parse(hbtool("kernel --ell 1 --s-re 1 --c 1 --g id"));
    CHECK(re(k["value"]) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));

    auto s = parse(hbtool("spherical --ell 0 --gamma 2 --g diag:3"));
    const std::complex<double> ref = std::exp(std::complex<double>(0.0, 2.0 * std::log(3.0)));
    CHECK(re(s["value"]) == doctest::Approx(ref.real()).epsilon(1e-14));
    CHECK(im(s["value"]) == doctest::Approx(ref.imag()).epsilon(1e-14));

    auto w = parse(hbtool("whittaker --ell 0 --kappa 0 --c 1 --g2 diag:2"));
    CHECK(re(w["value"]) == doctest::Approx(std::sqrt(2.0) * std::exp(-2.0)).epsilon(1e-14));

    CHECK(hbtool("kernel --ell 1 --s-re 1 --c 1 --g m:1,2,2,4").code == 1);
    CHECK(hbtool("kernel --ell 1 --s-re 1 --c 1 --g m:1,2").code == 2);
    CHECK(hbtool("kernel --ell 1 --s-re 1 --c 1 --g diag:1,0").code == 1);
    CHECK(hbtool("spherical --ell 1 --gamma=1,-1 --g nope").code == 2);
}

TEST_CASE("eigen")
{
    Run r = hbtool("eigen --ell 0 --gamma 1 --s-re 2 --c 0.5 --g 1 --samples 200000 --seed 7");
    CHECK(r.code == 0);
    auto j = parse(r);
    CHECK(j["pass"] == true);
    REQUIRE(j["estimates"].size() == 2);
    CHECK(j["estimates"][1]["label"] == "eigenvalue_vs_quadrature");
    CHECK(j["estimates"][0]["rel_err"].get<double>() <= j["estimates"][0]["tolerance"].get<double>());

    CHECK(hbtool("eigen --ell 1 --gamma=0,0 --s-re 0.5 --c 0.5 --g id --samples 100").code == 2);
    CHECK(hbtool("eigen --ell 1 --gamma=0,0 --s-re 3 --c 0.5 --g id --samples 0").code == 2);
}

TEST_CASE("determinism")
{
    const std::string args = "spherical --ell 1 --gamma=1,-1 --g diag:2,0.5 --samples 20000 --seed 11";
    const Run a = hbtool(args), b = hbtool(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(hbtool(args + " --threads 1").out == a.out);
    CHECK(hbtool(args, "HB_THREADS=3").out == a.out);
    CHECK(hbtool("spherical --ell 1 --gamma=1,-1 --g diag:2,0.5 --samples 20000 --seed 12").out != a.out);

    const std::string eig = "eigen --ell 1 --gamma=1,-1 --s-re 3 --c 0.5 --g id --samples 20000 --seed 5 --quiet";
    CHECK(hbtool(eig).out == hbtool(eig + " --threads 2").out);
}
