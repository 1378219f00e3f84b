#pragma once

// On-disk product tables: canonical JSON (sorted keys, integers only),
// gzip-compressed, carrying a format version and a CRC of the triple list.
// Writers stage to a temp file and publish with an atomic rename; readers
// never see partial files.

#include "bk/weyl.hpp"

#include <array>
#include <filesystem>

namespace bk {

inline constexpr int kTableFormatVersion = 1;

std::string table_cache_filename(const RootDatum& datum, const std::vector<int>& delta_p);

void store_table_file(const std::filesystem::path& path, const RootDatum& datum,
                      const std::vector<int>& delta_p,
                      const std::vector<std::array<Int, 4>>& triples);

// Returns false (without throwing) when the file is absent, unreadable,
// version-mismatched, checksum-corrupt, or keyed to different data.
bool load_table_file(const std::filesystem::path& path, const RootDatum& datum,
                     const std::vector<int>& delta_p, std::vector<std::array<Int, 4>>& out);

}  // namespace bk
