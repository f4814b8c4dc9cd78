#pragma once

// Signal file formats and JSON report serialization.
//
// CSV:    "# frlp-signal v1; <dim>;<L>;<N>" header then "re,im" rows.
// Binary: 16-byte magic "FRLPSIG1" (zero padded), then dim (u32 LE),
//         L (f64 LE), N (u32 LE), then interleaved f64 re,im.

#include <filesystem>
#include <string>

#include "frlp/grid.hpp"

namespace frlp::io {

enum class Format { csv, binary };

Format format_from_name(const std::string& name);
Format sniff_format(const std::filesystem::path& path);

void write_signal(const std::filesystem::path& path, const Signal& f, Format fmt);
Signal read_signal(const std::filesystem::path& path);

void write_text(const std::filesystem::path& path, const std::string& text);

} // namespace frlp::io
