#pragma once

#include "hc2l/index.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace hc2l {

// bad magic or unknown version
struct IndexFormatError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

// truncated or inconsistent file contents
struct IndexCorruptionError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

constexpr uint16_t INDEX_FORMAT_VERSION = 1;

// deterministic little-endian layout, documented in docs/index_format.md
size_t save_index(const DistanceIndex &idx, std::ostream &out);
size_t save_index_file(const DistanceIndex &idx, const std::string &path);

DistanceIndex load_index(std::istream &in);
DistanceIndex load_index_file(const std::string &path);

} // namespace hc2l
