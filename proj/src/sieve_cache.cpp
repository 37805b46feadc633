#include "frobpow/sieve_cache.hpp"

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <vector>

namespace frobpow {

namespace {

constexpr char magic[5] = {'F', 'P', 'S', 'V', '1'};

void put_u64(std::ofstream& out, uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    out.write(reinterpret_cast<const char*>(b), 8);
}

uint64_t get_u64(std::ifstream& in) {
    unsigned char b[8];
    in.read(reinterpret_cast<char*>(b), 8);
    if (!in) throw io_error("truncated sieve cache file");
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(b[i]) << (8 * i);
    return v;
}

} // namespace

std::string save_sieve_cache(const std::string& dir, const SieveTables& tables) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);

    std::string path = dir + "/sieve-" + std::to_string(tables.limit()) + ".fpsv1";
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw io_error("cannot write sieve cache at " + tmp);
        out.write(magic, sizeof magic);
        put_u64(out, tables.limit());
        const auto& words = tables.prime_words();
        put_u64(out, words.size());
        for (uint64_t w : words) put_u64(out, w);
        const auto& lam = tables.lambda_array();
        put_u64(out, lam.size());
        static_assert(sizeof(double) == 8);
        out.write(reinterpret_cast<const char*>(lam.data()),
                  static_cast<std::streamsize>(lam.size() * sizeof(double)));
        if (!out) throw io_error("short write to sieve cache at " + tmp);
    }
    fs::rename(tmp, path, ec);
    if (ec) throw io_error("cannot move sieve cache into place: " + ec.message());
    return path;
}

SieveTables load_sieve_cache(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open sieve cache at " + path);
    char head[5];
    in.read(head, sizeof head);
    if (!in || std::memcmp(head, magic, sizeof magic) != 0)
        throw io_error("bad sieve cache magic in " + path);

    uint64_t limit = get_u64(in);
    uint64_t nwords = get_u64(in);
    if (nwords != (limit >> 6) + 1) throw io_error("sieve cache word count mismatch");
    std::vector<uint64_t> words(nwords);
    for (uint64_t& w : words) w = get_u64(in);

    uint64_t nlam = get_u64(in);
    if (nlam != limit + 1) throw io_error("sieve cache lambda count mismatch");
    std::vector<double> lam(nlam);
    in.read(reinterpret_cast<char*>(lam.data()),
            static_cast<std::streamsize>(nlam * sizeof(double)));
    if (!in) throw io_error("truncated sieve cache file " + path);
    return SieveTables::from_parts(limit, std::move(words), std::move(lam));
}

std::optional<std::string> find_sieve_cache(const std::string& dir, uint64_t min_limit) {
    namespace fs = std::filesystem;
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) return std::nullopt;

    std::optional<std::string> best;
    uint64_t best_limit = UINT64_MAX;
    for (const auto& entry : fs::directory_iterator(dir, ec)) {
        if (ec) break;
        const auto name = entry.path().filename().string();
        uint64_t limit = 0;
        if (std::sscanf(name.c_str(), "sieve-%lu.fpsv1", &limit) != 1) continue;
        if (limit >= min_limit && limit < best_limit) {
            best_limit = limit;
            best = entry.path().string();
        }
    }
    return best;
}

} // namespace frobpow
