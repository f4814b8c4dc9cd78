#include "frlp/io.hpp"

#include <array>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace frlp::io {

namespace {

constexpr std::array<char, 16> kMagic = {'F', 'R', 'L', 'P', 'S', 'I', 'G', '1',
                                         0, 0, 0, 0, 0, 0, 0, 0};

std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

Format format_from_name(const std::string& name) {
    if (name == "csv") return Format::csv;
    if (name == "bin" || name == "binary") return Format::binary;
    fail(ErrorCode::UsageError, "unknown signal format: " + name);
}

Format sniff_format(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::IoError, "cannot open " + path.string());
    char head[8] = {};
    in.read(head, 8);
    if (in.gcount() == 8 && std::memcmp(head, kMagic.data(), 8) == 0) return Format::binary;
    return Format::csv;
}

void write_signal(const std::filesystem::path& path, const Signal& f, Format fmt) {
    if (fmt == Format::csv) {
        std::ostringstream out;
        out << "# frlp-signal v1; " << f.grid.dim << ";" << fmt_double(f.grid.extent) << ";"
            << f.grid.samples << "\n";
        for (const cplx& z : f.v)
            out << fmt_double(z.real()) << "," << fmt_double(z.imag()) << "\n";
        write_text(path, out.str());
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::IoError, "cannot write " + path.string());
    out.write(kMagic.data(), kMagic.size());
    std::uint32_t dim = std::uint32_t(f.grid.dim);
    double L = f.grid.extent;
    std::uint32_t n = std::uint32_t(f.grid.samples);
    out.write(reinterpret_cast<const char*>(&dim), sizeof dim);
    out.write(reinterpret_cast<const char*>(&L), sizeof L);
    out.write(reinterpret_cast<const char*>(&n), sizeof n);
    for (const cplx& z : f.v) {
        double re = z.real(), im = z.imag();
        out.write(reinterpret_cast<const char*>(&re), sizeof re);
        out.write(reinterpret_cast<const char*>(&im), sizeof im);
    }
    if (!out) fail(ErrorCode::IoError, "write failed for " + path.string());
}

Signal read_signal(const std::filesystem::path& path) {
    Format fmt = sniff_format(path);
    if (fmt == Format::binary) {
        std::ifstream in(path, std::ios::binary);
        if (!in) fail(ErrorCode::IoError, "cannot open " + path.string());
        std::array<char, 16> magic{};
        in.read(magic.data(), magic.size());
        if (std::memcmp(magic.data(), kMagic.data(), 8) != 0)
            fail(ErrorCode::IoError, "bad magic in " + path.string());
        std::uint32_t dim = 0, n = 0;
        double L = 0;
        in.read(reinterpret_cast<char*>(&dim), sizeof dim);
        in.read(reinterpret_cast<char*>(&L), sizeof L);
        in.read(reinterpret_cast<char*>(&n), sizeof n);
        if (!in) fail(ErrorCode::IoError, "truncated header in " + path.string());
        GridSpec g = make_grid(int(dim), L, int(n));
        std::vector<cplx> vals(g.size());
        for (auto& z : vals) {
            double re = 0, im = 0;
            in.read(reinterpret_cast<char*>(&re), sizeof re);
            in.read(reinterpret_cast<char*>(&im), sizeof im);
            z = {re, im};
        }
        if (!in) fail(ErrorCode::IoError, "truncated data in " + path.string());
        return Signal(g, std::move(vals));
    }
    std::ifstream in(path);
    if (!in) fail(ErrorCode::IoError, "cannot open " + path.string());
    std::string header;
    std::getline(in, header);
    const std::string prefix = "# frlp-signal v1;";
    if (header.rfind(prefix, 0) != 0)
        fail(ErrorCode::IoError, "missing signal header in " + path.string());
    std::string rest = header.substr(prefix.size());
    int dim = 0, n = 0;
    double L = 0;
    {
        std::stringstream ss(rest);
        std::string tok;
        if (!std::getline(ss, tok, ';')) fail(ErrorCode::IoError, "bad header");
        dim = std::stoi(tok);
        if (!std::getline(ss, tok, ';')) fail(ErrorCode::IoError, "bad header");
        L = std::stod(tok);
        if (!std::getline(ss, tok, ';')) fail(ErrorCode::IoError, "bad header");
        n = std::stoi(tok);
    }
    GridSpec g = make_grid(dim, L, n);
    std::vector<cplx> vals;
    vals.reserve(g.size());
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto comma = line.find(',');
        if (comma == std::string::npos) fail(ErrorCode::IoError, "bad row: " + line);
        vals.emplace_back(std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
    }
    if (vals.size() != g.size())
        fail(ErrorCode::IoError, "expected " + std::to_string(g.size()) + " rows, got " +
                                     std::to_string(vals.size()));
    return Signal(g, std::move(vals));
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::IoError, "cannot write " + path.string());
    out << text;
    if (!out) fail(ErrorCode::IoError, "write failed for " + path.string());
}

} // namespace frlp::io
