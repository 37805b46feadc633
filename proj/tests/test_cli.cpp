// Process-level tests of the frobpow binary. The binary path arrives via
// the FROBPOW_BIN environment variable (set by CTest).

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <unistd.h>

#include <json.hpp>

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string output;   // stdout + stderr interleaved
};

std::string binary() {
    const char* bin = std::getenv("FROBPOW_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "FROBPOW_BIN must point at the CLI binary");
    return bin;
}

RunResult run(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd = env_prefix + binary() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return RunResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("frobpow-cli-" + std::to_string(::getpid()) + "-" +
                std::to_string(reinterpret_cast<uintptr_t>(this)));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

} // namespace

TEST_CASE("count emits the pinned CSV header and row") {
    auto r = run("count --c 3 --d 5 --k 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("c,d,k,g,pi,pred_pi,ratio_pi,N,pred_N,ratio_N,psi,pred_psi,"
                         "ratio_psi,theta\n", 0) == 0);
    CHECK(r.output.find("\n3,5,1,7,2,") != std::string::npos);
}

TEST_CASE("count json carries every report field") {
    auto r = run("count --c 3 --d 5 --k 1 --format json");
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.output);
    for (const char* key : {"c", "d", "k", "g", "pi", "pred_pi", "ratio_pi", "N",
                            "pred_N", "ratio_N", "psi", "pred_psi", "ratio_psi", "theta"})
        CHECK(doc.contains(key));
    CHECK(doc["pi"] == 2);
    CHECK(doc["N"] == 4);
    CHECK(doc["psi"].get<double>() == doctest::Approx(2.70805020110221));
}

TEST_CASE("validation failures exit 2 with a machine-parsable reason") {
    auto bad = run("count --c 4 --d 6 --k 1");
    CHECK(bad.exit_code == 2);
    CHECK(bad.output.rfind("error:not-coprime:", 0) == 0);

    auto ordering = run("count --c 5 --d 3");
    CHECK(ordering.exit_code == 2);
    CHECK(ordering.output.rfind("error:ordering:", 0) == 0);

    auto usage = run("count --c 3");
    CHECK(usage.exit_code == 2);
    CHECK(usage.output.rfind("error:usage:", 0) == 0);

    auto domain = run("count --c 3 --d 5 --k 0");
    CHECK(domain.exit_code == 2);
    CHECK(domain.output.rfind("error:domain:", 0) == 0);

    auto arcs_domain = run("arcs --c 3 --d 5 --Q 0");
    CHECK(arcs_domain.exit_code == 2);
    CHECK(arcs_domain.output.rfind("error:domain:", 0) == 0);
}

TEST_CASE("table rows beyond the in-memory cap stream and match count") {
    // g = 6000*6007 - 6000 - 6007 = 36'029'993 forces the streamed path
    auto table = run("table --c-min 6000 --c-max 6000 --d-min 6007 --d-max 6007");
    CHECK(table.exit_code == 0);
    auto single = run("count --c 6000 --d 6007 --k 1");
    CHECK(single.exit_code == 0);
    CHECK(table.output == single.output);
    CHECK(table.output.find("36029993") != std::string::npos);
}

TEST_CASE("table: three coprime pairs give a header and three rows") {
    auto r = run("table --c-min 3 --c-max 5 --d-min 7 --d-max 7");
    CHECK(r.exit_code == 0);
    size_t lines = 0;
    for (char ch : r.output)
        if (ch == '\n') ++lines;
    CHECK(lines == 4);   // header + (3,7), (4,7), (5,7)
    CHECK(r.output.rfind("c,d,k,g,", 0) == 0);
}

TEST_CASE("table output is byte-identical across seeds reruns and threads") {
    TempDir tmp;
    auto out1 = tmp.path / "a.csv";
    auto out2 = tmp.path / "b.csv";
    auto out3 = tmp.path / "c.csv";
    std::string common =
        "table --c-min 3 --c-max 60 --d-min 61 --d-max 200 --k 1 --k 2 "
        "--pairs random:12 --seed 99 ";
    CHECK(run(common + "--threads 1 --out " + out1.string()).exit_code == 0);
    CHECK(run(common + "--threads 2 --out " + out2.string()).exit_code == 0);
    CHECK(run(common + "--threads 7 --out " + out3.string()).exit_code == 0);
    auto bytes = slurp(out1);
    CHECK(bytes == slurp(out2));
    CHECK(bytes == slurp(out3));
    CHECK(bytes.rfind("# pairs=random:12 seed=99\n", 0) == 0);

    // different seed, different pair set
    auto out4 = tmp.path / "d.csv";
    CHECK(run("table --c-min 3 --c-max 60 --d-min 61 --d-max 200 --k 1 --k 2 "
              "--pairs random:12 --seed 100 --out " + out4.string()).exit_code == 0);
    CHECK(slurp(out4) != bytes);
}

TEST_CASE("table rows are sorted lexicographically") {
    auto r = run("table --c-min 2 --c-max 5 --d-min 5 --d-max 9 --k 2 --k 1");
    CHECK(r.exit_code == 0);
    std::vector<std::array<long, 3>> keys;
    size_t pos = r.output.find('\n') + 1;
    while (pos < r.output.size()) {
        size_t end = r.output.find('\n', pos);
        if (end == std::string::npos) break;
        std::array<long, 3> key{};
        CHECK(std::sscanf(r.output.c_str() + pos, "%ld,%ld,%ld", &key[0], &key[1],
                          &key[2]) == 3);
        keys.push_back(key);
        pos = end + 1;
    }
    REQUIRE(keys.size() > 4);
    for (size_t i = 1; i < keys.size(); ++i) CHECK(keys[i - 1] < keys[i]);
}

TEST_CASE("table json records the seed in its config header") {
    auto r = run("table --c-min 3 --c-max 9 --d-min 10 --d-max 14 "
                 "--pairs random:3 --seed 7 --format json");
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.output);
    CHECK(doc["config"]["seed"] == 7);
    CHECK(doc["rows"].size() == 3);
}

TEST_CASE("unwritable output path fails with io error") {
    auto r = run("table --c-min 3 --c-max 4 --d-min 5 --d-max 7 --out /nonexistent/x.csv");
    CHECK(r.exit_code == 2);
    CHECK(r.output.rfind("error:io:", 0) == 0);
}

TEST_CASE("verify quick passes and the fault injection is caught") {
    auto ok = run("verify --level quick");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("all checks passed") != std::string::npos);

    auto mutated = run("verify --level quick --inject residue-flip");
    CHECK(mutated.exit_code == 1);
    CHECK(mutated.output.find("FAIL membership-oracle-equivalence") != std::string::npos);
    CHECK(mutated.output.find("witness=(c=") != std::string::npos);
    CHECK(mutated.output.find(" n=") != std::string::npos);
}

TEST_CASE("arcs json: single arc, probes, and the constraint warning") {
    auto r = run("arcs --c 3 --d 5 --k 1 --Q 1");
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.output);
    CHECK(doc["Q"] == 1);
    CHECK(doc["g"] == 7);
    REQUIRE(doc["arcs"].size() == 1);
    CHECK(doc["arcs"][0]["center"] == "1");
    CHECK(doc["arcs"][0]["half_width"] == "1/7");
    CHECK(doc["disjoint_certified"] == true);
    CHECK(!doc.contains("warning"));

    auto warned = run("arcs --c 11 --d 13 --k 1 --Q 10");   // 2*10^3 >= g = 119
    json wdoc = json::parse(warned.output);
    CHECK(wdoc["disjoint_certified"] == false);
    CHECK(wdoc.contains("warning"));

    auto probed = run("arcs --c 101 --d 103 --k 1 --Q 4 --probes 500 "
                      "--quadrature --step-divisor 16");
    CHECK(probed.exit_code == 0);
    json pdoc = json::parse(probed.output);
    CHECK(pdoc["sup_probe"]["samples"] == 500);
    CHECK(pdoc["sup_probe"]["ratio"].get<double>() <= 1.0);
    double window = pdoc["quadrature"]["window"].get<double>();
    double psi = pdoc["quadrature"]["psi_exact"].get<double>();
    CHECK(window == doctest::Approx(psi).epsilon(1e-3));
    double major = pdoc["quadrature"]["major"].get<double>();
    double minor = pdoc["quadrature"]["minor"].get<double>();
    CHECK(major + minor == doctest::Approx(window).epsilon(1e-9));
}

TEST_CASE("sieve cache is created and reused through the environment") {
    TempDir tmp;
    std::string env = "FP_SIEVE_CACHE_DIR=" + tmp.path.string() + " ";
    auto first = run("count --c 23 --d 47 --k 1", env);
    CHECK(first.exit_code == 0);
    bool found = false;
    for (const auto& entry : fs::directory_iterator(tmp.path)) {
        auto name = entry.path().filename().string();
        if (name.rfind("sieve-", 0) == 0 && name.find(".fpsv1") != std::string::npos) {
            found = true;
            auto bytes = slurp(entry.path());
            REQUIRE(bytes.size() >= 5);
            CHECK(bytes.substr(0, 5) == "FPSV1");
        }
    }
    CHECK(found);

    auto second = run("count --c 23 --d 47 --k 1", env);
    CHECK(second.exit_code == 0);
    CHECK(second.output == first.output);

    // cached tables serve smaller queries too
    auto third = run("count --c 3 --d 5 --k 1", env);
    CHECK(third.exit_code == 0);
    CHECK(third.output.find("\n3,5,1,7,2,") != std::string::npos);
}
