#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "frlp/io.hpp"
#include "frlp/rng.hpp"

using namespace frlp;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("frlp_io_test_" + std::to_string(std::rand()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

} // namespace

TEST_CASE("csv and binary round-trips are lossless at f64 precision") {
    TempDir tmp;
    GridSpec g = make_grid(1, 16.0, 64);
    Rng rng(1);
    Signal f(g);
    for (auto& z : f.v) z = rng.cgauss();

    auto csv = tmp.path / "sig.csv";
    io::write_signal(csv, f, io::Format::csv);
    Signal c = io::read_signal(csv);
    CHECK(c.grid == f.grid);
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(c.v[i] == f.v[i]);

    auto bin = tmp.path / "sig.bin";
    io::write_signal(bin, f, io::Format::binary);
    Signal b = io::read_signal(bin);
    CHECK(b.grid == f.grid);
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(b.v[i] == f.v[i]);

    // csv -> binary -> csv is byte-identical
    io::write_signal(tmp.path / "sig2.csv", b, io::Format::csv);
    std::ifstream f1(csv), f2(tmp.path / "sig2.csv");
    std::string s1((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
    std::string s2((std::istreambuf_iterator<char>(f2)), std::istreambuf_iterator<char>());
    CHECK(s1 == s2);
}

TEST_CASE("2-d signals round-trip through both formats") {
    TempDir tmp;
    GridSpec g = make_grid(2, 8.0, 16);
    Rng rng(2);
    Signal f(g);
    for (auto& z : f.v) z = rng.cgauss();
    for (auto fmt : {io::Format::csv, io::Format::binary}) {
        auto p = tmp.path / (fmt == io::Format::csv ? "sig2d.csv" : "sig2d.bin");
        io::write_signal(p, f, fmt);
        Signal back = io::read_signal(p);
        CHECK(back.grid == f.grid);
        for (std::size_t i = 0; i < f.size(); ++i) CHECK(back.v[i] == f.v[i]);
    }
}

TEST_CASE("format sniffing distinguishes the binary magic") {
    TempDir tmp;
    GridSpec g = make_grid(1, 8.0, 8);
    Signal f(g);
    io::write_signal(tmp.path / "a.csv", f, io::Format::csv);
    io::write_signal(tmp.path / "a.bin", f, io::Format::binary);
    CHECK(io::sniff_format(tmp.path / "a.csv") == io::Format::csv);
    CHECK(io::sniff_format(tmp.path / "a.bin") == io::Format::binary);
}

TEST_CASE("reader rejects malformed input") {
    TempDir tmp;
    auto bad = tmp.path / "bad.csv";
    io::write_text(bad, "not a signal header\n1,2\n");
    CHECK_THROWS_AS(io::read_signal(bad), Error);

    auto trunc = tmp.path / "trunc.csv";
    io::write_text(trunc, "# frlp-signal v1; 1;8;8\n1,2\n");
    CHECK_THROWS_AS(io::read_signal(trunc), Error);

    CHECK_THROWS_AS(io::read_signal(tmp.path / "missing.csv"), Error);
    CHECK_THROWS_AS(io::format_from_name("xml"), Error);
}
