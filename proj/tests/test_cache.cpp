#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "frobpow/arith.hpp"
#include "frobpow/sieve_cache.hpp"

using namespace frobpow;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("frobpow-test-" + std::to_string(::getpid()) + "-" +
                std::to_string(reinterpret_cast<uintptr_t>(this)));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

} // namespace

TEST_CASE("cache round trip preserves bits and weights") {
    TempDir tmp;
    auto tables = build_sieve(10'000);
    std::string path = save_sieve_cache(tmp.path.string(), tables);
    auto loaded = load_sieve_cache(path);

    CHECK(loaded.limit() == tables.limit());
    CHECK(loaded.prime_words() == tables.prime_words());
    CHECK(loaded.lambda_array() == tables.lambda_array());
    CHECK(!loaded.has_spf());

    // factorisation-backed queries still work without spf
    CHECK(euler_phi(9'240, loaded) == euler_phi(9'240, tables));
    CHECK(moebius(9'241, loaded) == moebius(9'241, tables));
    CHECK(chebyshev_psi(10'000.0, loaded) == chebyshev_psi(10'000.0, tables));
}

TEST_CASE("file layout is pinned little-endian") {
    TempDir tmp;
    auto tables = build_sieve(64);
    std::string path = save_sieve_cache(tmp.path.string(), tables);

    std::ifstream in(path, std::ios::binary);
    std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                     std::istreambuf_iterator<char>());
    REQUIRE(bytes.size() >= 29);
    CHECK(bytes[0] == 'F');
    CHECK(bytes[1] == 'P');
    CHECK(bytes[2] == 'S');
    CHECK(bytes[3] == 'V');
    CHECK(bytes[4] == '1');
    // limit = 64 little-endian
    CHECK(bytes[5] == 64);
    for (int i = 6; i < 13; ++i) CHECK(bytes[i] == 0);
    // word count = 2
    CHECK(bytes[13] == 2);
    // first bitset word: primes below 64
    uint64_t word = 0;
    for (int i = 0; i < 8; ++i) word |= uint64_t(bytes[21 + i]) << (8 * i);
    uint64_t expect = 0;
    for (uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61})
        expect |= uint64_t(1) << p;
    CHECK(word == expect);
    // total size: 5 + 8 + 8 + 16 + 8 + 65*8
    CHECK(bytes.size() == 5 + 8 + 8 + 16 + 8 + 65 * 8);
}

TEST_CASE("cache lookup picks the smallest sufficient file") {
    TempDir tmp;
    save_sieve_cache(tmp.path.string(), build_sieve(1'000));
    save_sieve_cache(tmp.path.string(), build_sieve(5'000));
    save_sieve_cache(tmp.path.string(), build_sieve(20'000));

    auto hit = find_sieve_cache(tmp.path.string(), 4'000);
    REQUIRE(hit.has_value());
    CHECK(hit->find("sieve-5000.fpsv1") != std::string::npos);
    CHECK(!find_sieve_cache(tmp.path.string(), 100'000).has_value());
    CHECK(!find_sieve_cache((tmp.path / "missing").string(), 10).has_value());
}

TEST_CASE("corrupt cache files are rejected") {
    TempDir tmp;
    auto tables = build_sieve(1'000);
    std::string path = save_sieve_cache(tmp.path.string(), tables);

    SUBCASE("bad magic") {
        std::fstream f(path, std::ios::in | std::ios::out | std::ios::binary);
        f.seekp(0);
        f.write("XXXXX", 5);
        f.close();
        CHECK_THROWS_AS(load_sieve_cache(path), io_error);
    }
    SUBCASE("truncated") {
        fs::resize_file(path, fs::file_size(path) / 2);
        CHECK_THROWS_AS(load_sieve_cache(path), io_error);
    }
    SUBCASE("missing") {
        CHECK_THROWS_AS(load_sieve_cache((tmp.path / "nope.fpsv1").string()), io_error);
    }
}
