#include "bk/cache_io.hpp"
#include "bk/schubert.hpp"

#include <mutex>
#include <random>

#include <nlohmann/json.hpp>
#include <zlib.h>

namespace bk {

namespace {
std::mutex g_cache_mu;
std::optional<std::string> g_cache_dir;

std::string fnv_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

nlohmann::json key_json(const RootDatum& datum, const std::vector<int>& delta_p) {
  nlohmann::json j;
  nlohmann::json dj;
  to_json(dj, datum);
  j["datum"] = dj;
  j["parabolic"] = nlohmann::json{{"delta_p", delta_p}};
  return j;
}

std::string triples_payload(const std::vector<std::array<Int, 4>>& triples) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : triples) arr.push_back({t[0], t[1], t[2], t[3]});
  return arr.dump();
}

bool gz_read_all(const std::filesystem::path& path, std::string& out) {
  gzFile f = gzopen(path.string().c_str(), "rb");
  if (!f) return false;
  char buf[1 << 16];
  int n;
  out.clear();
  while ((n = gzread(f, buf, sizeof buf)) > 0) out.append(buf, size_t(n));
  bool ok = n == 0;
  gzclose(f);
  return ok;
}

}  // namespace

void set_cache_directory(std::optional<std::string> dir) {
  std::lock_guard<std::mutex> lock(g_cache_mu);
  g_cache_dir = std::move(dir);
}

std::optional<std::string> cache_directory() {
  std::lock_guard<std::mutex> lock(g_cache_mu);
  return g_cache_dir;
}

std::string table_cache_filename(const RootDatum& datum, const std::vector<int>& delta_p) {
  std::string tag = datum.series_tag() + "_dp";
  for (int k : delta_p) tag += "-" + std::to_string(k + 1);
  return "table_" + tag + "_" + fnv_hex(key_json(datum, delta_p).dump()) + ".json.gz";
}

void store_table_file(const std::filesystem::path& path, const RootDatum& datum,
                      const std::vector<int>& delta_p,
                      const std::vector<std::array<Int, 4>>& triples) {
  nlohmann::json j = key_json(datum, delta_p);
  j["version"] = kTableFormatVersion;
  std::string payload = triples_payload(triples);
  j["checksum"] = static_cast<Int>(
      crc32(0, reinterpret_cast<const Bytef*>(payload.data()), uInt(payload.size())));
  j["triples"] = nlohmann::json::parse(payload);
  const std::string text = j.dump();

  // single writer: stage to a unique temp file, publish by atomic rename
  static std::random_device rd;
  std::filesystem::path tmp =
      path.parent_path() / (path.filename().string() + ".tmp" + std::to_string(rd()));
  gzFile f = gzopen(tmp.string().c_str(), "wb9");
  if (!f) throw Error("cache: cannot open " + tmp.string() + " for writing");
  int written = gzwrite(f, text.data(), unsigned(text.size()));
  gzclose(f);
  if (written != int(text.size())) {
    std::filesystem::remove(tmp);
    throw Error("cache: short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

bool load_table_file(const std::filesystem::path& path, const RootDatum& datum,
                     const std::vector<int>& delta_p, std::vector<std::array<Int, 4>>& out) {
  std::error_code ec;
  if (!std::filesystem::exists(path, ec) || ec) return false;
  std::string text;
  if (!gz_read_all(path, text)) return false;
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) return false;
  if (!j.contains("version") || j["version"] != kTableFormatVersion) return false;
  nlohmann::json expect = key_json(datum, delta_p);
  if (j["datum"] != expect["datum"] || j["parabolic"] != expect["parabolic"]) return false;
  if (!j.contains("triples") || !j["triples"].is_array() || !j.contains("checksum"))
    return false;
  std::vector<std::array<Int, 4>> triples;
  for (const auto& t : j["triples"]) {
    if (!t.is_array() || t.size() != 4) return false;
    triples.push_back({t[0].get<Int>(), t[1].get<Int>(), t[2].get<Int>(), t[3].get<Int>()});
  }
  std::string payload = triples_payload(triples);
  Int crc = static_cast<Int>(
      crc32(0, reinterpret_cast<const Bytef*>(payload.data()), uInt(payload.size())));
  if (crc != j["checksum"].get<Int>()) return false;
  out = std::move(triples);
  return true;
}

CacheInfo cache_info() {
  CacheInfo info;
  auto dir = cache_directory();
  if (!dir) return info;
  info.directory = *dir;
  std::error_code ec;
  for (const auto& e : std::filesystem::directory_iterator(*dir, ec)) {
    if (!e.is_regular_file()) continue;
    auto name = e.path().filename().string();
    if (name.rfind("table_", 0) == 0)
      info.files.emplace_back(name, e.file_size());
  }
  std::sort(info.files.begin(), info.files.end());
  return info;
}

int cache_clear() {
  auto dir = cache_directory();
  if (!dir) return 0;
  int removed = 0;
  std::error_code ec;
  for (const auto& e : std::filesystem::directory_iterator(*dir, ec)) {
    if (!e.is_regular_file()) continue;
    auto name = e.path().filename().string();
    if (name.rfind("table_", 0) == 0 && std::filesystem::remove(e.path())) ++removed;
  }
  return removed;
}

}  // namespace bk
