#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using namespace dpa::cli;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome call(std::vector<std::string> args) {
    args.insert(args.begin(), "dpa");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = main_entry(int(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

int count_lines(const std::string& s) { return int(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("stats sweep row count") {
        const auto r = call({"stats", "--model", "phi90", "--omega", "1", "--lambda", "0.25", "--init", "0,1,0,0,0,0",
                             "--t-grid", "0:3:301"});
        REQUIRE(r.code == 0);
        CHECK(count_lines(r.out) == 302);
        CHECK(r.out.rfind("t,mean_N,var_N,g2,sigma_q,sigma_p,sigma_pq,mean_q,mean_p\n", 0) == 0);
    }

    TEST_CASE("headers") {
        CHECK(call({"mu", "--t", "1"}).out.rfind("t,mu0,mu1,W\n", 0) == 0);
        CHECK(call({"ermakov", "--t", "1"}).out.rfind("t,alpha,beta,gamma,delta,epsilon,kappa,A,B,C,D\n", 0) == 0);
        CHECK(call({"squeeze-params", "--t", "1"}).out.rfind("t,theta,tau,phi,re_xi,im_xi\n", 0) == 0);
    }

    TEST_CASE("default initial data is the vacuum") {
        const auto a = call({"ermakov", "--omega", "2.25", "--lambda", "0.5", "--t-grid", "0:2:5"});
        const auto b = call({"ermakov", "--omega", "2.25", "--lambda", "0.5", "--t-grid", "0:2:5", "--init", "0,1.5,0,0,0,0"});
        REQUIRE(a.code == 0);
        CHECK(a.out == b.out);
    }

    TEST_CASE("figure1 frames") {
        const auto r = call({"figure1", "--omega", "1", "--lambda", "0.25", "--level", "2", "--t-grid", "0:3.14159:8",
                             "--format", "json"});
        REQUIRE(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        REQUIRE(j.size() == 8);
        for (const auto& f : j) {
            CHECK(f["points"].size() == 256);
            CHECK(f["area"].get<double>() == doctest::Approx(j[0]["area"].get<double>()).epsilon(1e-6));
        }
    }

    TEST_CASE("amplitudes with adaptive cutoff") {
        const auto r = call({"amplitudes", "--init", "0.3,1.2,0,0.5,-0.4,0", "--n", "1", "--t", "0.8", "--nmax", "auto",
                             "--format", "json"});
        REQUIRE(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j[0]["tail_mass"].get<double>() < 1e-10);
        CHECK(j[0]["entries"].size() == j[0]["nmax"].get<std::size_t>() + 1);
        const auto c = call({"amplitudes", "--t", "0.8", "--nmax", "10"});
        REQUIRE(c.code == 0);
        CHECK(c.out.rfind("# {", 0) == 0);
        CHECK(count_lines(c.out) == 2 + 11);
    }

    TEST_CASE("wigner and propagate") {
        const auto w = call({"wigner", "--t", "0.5", "--points", "11"});
        REQUIRE(w.code == 0);
        CHECK(count_lines(w.out) == 1 + 121);
        const auto fixed = call({"wigner", "--t", "0.5", "--points", "5", "--x-range", "-1:1", "--p-range", "-2:2", "--format", "json"});
        REQUIRE(fixed.code == 0);
        CHECK(nlohmann::json::parse(fixed.out)[0]["W"].size() == 5);

        const std::string path = "cli_test_psi0.csv";
        REQUIRE(call({"propagate", "--t", "0", "--out", path}).code == 0);
        const auto p = call({"propagate", "--input", path, "--t-grid", "0.5:1:2", "--points", "9", "--x-range", "-2:2"});
        REQUIRE(p.code == 0);
        CHECK(count_lines(p.out) == 1 + 18);
        std::remove(path.c_str());
    }

    TEST_CASE("tmin") {
        const auto r = call({"tmin", "--t-grid", "0:3:2", "--format", "json"});
        REQUIRE(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["roots"].size() == 3);
        CHECK(call({"tmin", "--t", "1"}).code == 2);
    }

    TEST_CASE("byte-identical output") {
        const std::vector<std::string> args = {"amplitudes", "--init", "0.3,1.2,0.1,0.5,-0.4,0.2", "--n", "2",
                                               "--model", "phi90", "--t-grid", "0:2:5"};
        const auto a = call(args);
        setenv("DPA_THREADS", "1", 1);
        const auto b = call(args);
        setenv("DPA_THREADS", "3", 1);
        const auto c = call(args);
        unsetenv("DPA_THREADS");
        REQUIRE(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(a.out == c.out);
    }

    TEST_CASE("exit codes") {
        CHECK(call({"stats", "--bogus"}).code == 2);
        CHECK(call({}).code == 2);
        CHECK(call({"stats", "--init", "1,2,3"}).code == 2);
        CHECK(call({"stats", "--t-grid", "2:1:5"}).code == 2);
        CHECK(call({"stats", "--t-grid", "0:1:0"}).code == 2);
        CHECK(call({"stats", "--t", "1", "--t-grid", "0:1:3"}).code == 2);
        CHECK(call({"stats", "--format", "xml"}).code == 2);
        CHECK(call({"stats", "--model", "phi45"}).code == 2);
        CHECK(call({"amplitudes", "--nmax", "many"}).code == 2);
        const auto dom = call({"stats", "--lambda", "1.0"});
        CHECK(dom.code == 3);
        CHECK(dom.err.find("lambda") != std::string::npos);
        CHECK(call({"stats", "--init", "0,0,0,0,0,0"}).code == 3);
        CHECK(call({"amplitudes", "--lambda", "0.5", "--t", "4"}).code == 1);
        CHECK(call({"propagate", "--lambda", "0", "--t", "3.141592653589793"}).code == 1);
        CHECK(call({"propagate", "--input", "/nonexistent/psi.csv", "--t", "1"}).code == 1);
        const auto help = call({"--help"});
        CHECK(help.code == 0);
        CHECK(help.out.find("--t-grid") != std::string::npos);
    }

    TEST_CASE("config file with flag override") {
        const std::string path = "cli_test.cfg";
        {
            std::ofstream f(path);
            f << "# sweep\nmodel = phi90\nlambda=0.5\nt-grid = 0:1:3\nformat=json\n";
        }
        const auto from_file = call({"stats", "--config", path});
        const auto explicit_flags = call({"stats", "--model", "phi90", "--lambda", "0.5", "--t-grid", "0:1:3", "--format", "json"});
        REQUIRE(from_file.code == 0);
        CHECK(from_file.out == explicit_flags.out);
        const auto overridden = call({"stats", "--config", path, "--t", "2", "--format", "csv"});
        REQUIRE(overridden.code == 0);
        CHECK(count_lines(overridden.out) == 2);
        {
            std::ofstream f(path);
            f << "colour = blue\n";
        }
        CHECK(call({"stats", "--config", path}).code == 2);
        std::remove(path.c_str());
        CHECK(call({"stats", "--config", "/nonexistent.cfg"}).code == 2);
    }

    TEST_CASE("numbers round trip") {
        std::mt19937_64 rng(11);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        std::uniform_int_distribution<int> e(-300, 300);
        for (int k = 0; k < 2000; ++k) {
            const double v = u(rng) * std::pow(10.0, e(rng));
            const std::string s = format_number(v);
            CHECK(std::strtod(s.c_str(), nullptr) == v);
            std::string mant;
            for (char ch : s.substr(0, s.find('e')))
                if (std::isdigit(static_cast<unsigned char>(ch))) mant += ch;
            const auto first = mant.find_first_not_of('0');
            const auto last = mant.find_last_not_of('0');
            const int digits = first == std::string::npos ? 0 : int(last - first + 1);
            CHECK(digits <= 17);
        }
        CHECK(format_number(0.5) == "0.5");
        CHECK(format_number(-767134455935886592.0) == "-7.671344559358866e+17");
        CHECK(format_number(std::nan("")) == "nan");
    }

    TEST_CASE("time grid") {
        const TimeGrid g{0.0, 1.0, 5};
        const auto ts = g.points();
        REQUIRE(ts.size() == 5);
        CHECK(ts[2] == 0.5);
        CHECK(ts.back() == 1.0);
        CHECK(TimeGrid{2.0, 2.0, 1}.points() == std::vector<double>{2.0});
    }
}
