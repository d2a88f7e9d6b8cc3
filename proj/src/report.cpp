#include "polylcm/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace polylcm {

nlohmann::json RunReport::to_json() const {
  nlohmann::json j;
  j["schema"] = schema;
  j["version"] = version;
  j["command"] = command;
  j["poly"] = poly;
  j["x"] = x;
  j["config"] = config;
  j["outputs"] = outputs;
  j["certification"] = certification;
  if (timing_ms) j["timing_ms"] = *timing_ms;
  return j;
}

RunReport RunReport::from_json(const nlohmann::json& j) {
  RunReport r;
  r.schema = j.at("schema").get<int>();
  r.version = j.at("version").get<std::string>();
  r.command = j.at("command").get<std::string>();
  r.poly = j.at("poly").get<std::string>();
  r.x = j.at("x").get<u64>();
  r.config = j.at("config");
  r.outputs = j.at("outputs");
  r.certification = j.at("certification").get<std::string>();
  if (j.contains("timing_ms")) r.timing_ms = j.at("timing_ms").get<double>();
  return r;
}

std::string RunReport::serialize() const { return to_json().dump(2) + "\n"; }

namespace {

u64 fnv1a(const std::string& data) {
  u64 h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

void put_u16(std::string& out, u16 v) {
  out.push_back(static_cast<char>(v & 0xFF));
  out.push_back(static_cast<char>(v >> 8));
}

void put_u64(std::string& out, u64 v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>(v >> (8 * i) & 0xFF));
}

u16 get_u16(const std::string& in, size_t& pos) {
  if (pos + 2 > in.size()) throw std::invalid_argument("factor log truncated");
  const u16 v = static_cast<u16>(static_cast<unsigned char>(in[pos]) |
                                 (static_cast<unsigned char>(in[pos + 1]) << 8));
  pos += 2;
  return v;
}

u64 get_u64(const std::string& in, size_t& pos) {
  if (pos + 8 > in.size()) throw std::invalid_argument("factor log truncated");
  u64 v = 0;
  for (int i = 0; i < 8; ++i)
    v |= static_cast<u64>(static_cast<unsigned char>(in[pos + i])) << (8 * i);
  pos += 8;
  return v;
}

}  // namespace

std::string cache_stem(const std::string& poly_canonical, u64 x, u64 L0,
                       ArgumentMode mode) {
  char hex[17];
  std::snprintf(hex, sizeof(hex), "%016llx",
                static_cast<unsigned long long>(fnv1a(poly_canonical)));
  std::string stem = std::string(hex) + "_x" + std::to_string(x) + "_L" +
                     std::to_string(L0);
  if (mode == ArgumentMode::integers) stem += "_integers";
  return stem;
}

void write_factor_log(const std::string& path,
                      const std::vector<FactorRecord>& records) {
  std::string blob;
  std::vector<unsigned char> magnitude;
  for (const FactorRecord& rec : records) {
    put_u64(blob, rec.q);
    if (rec.factors.size() > 0xFFFF)
      throw std::invalid_argument("factor log: too many factors in a record");
    put_u16(blob, static_cast<u16>(rec.factors.size()));
    for (const auto& [p, e] : rec.factors) {
      const size_t bytes = (mpz_sizeinbase(p.get_mpz_t(), 2) + 7) / 8;
      if (bytes > 0xFFFF)
        throw std::invalid_argument("factor log: prime too wide");
      magnitude.resize(bytes);
      size_t written = 0;
      mpz_export(magnitude.data(), &written, 1, 1, 1, 0, p.get_mpz_t());
      put_u16(blob, static_cast<u16>(written));
      blob.append(reinterpret_cast<const char*>(magnitude.data()), written);
      if (e > 0xFFFF)
        throw std::invalid_argument("factor log: exponent too large");
      put_u16(blob, static_cast<u16>(e));
    }
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write factor log: " + path);
  out.write(blob.data(), static_cast<std::streamsize>(blob.size()));
}

std::vector<FactorRecord> read_factor_log(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read factor log: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string blob = buffer.str();

  std::vector<FactorRecord> records;
  size_t pos = 0;
  mpz_class prime;
  while (pos < blob.size()) {
    FactorRecord rec;
    rec.q = get_u64(blob, pos);
    const u16 count = get_u16(blob, pos);
    rec.factors.reserve(count);
    for (u16 i = 0; i < count; ++i) {
      const u16 len = get_u16(blob, pos);
      if (pos + len > blob.size())
        throw std::invalid_argument("factor log truncated");
      mpz_import(prime.get_mpz_t(), len, 1, 1, 1, 0, blob.data() + pos);
      pos += len;
      const u16 e = get_u16(blob, pos);
      rec.factors.emplace_back(prime, e);
    }
    records.push_back(std::move(rec));
  }
  return records;
}

bool cache_load(const std::string& dir, const std::string& stem,
                const std::string& poly_canonical, u64 x, u64 L0,
                std::vector<FactorRecord>& records, bool& probabilistic) {
  namespace fs = std::filesystem;
  const fs::path json_path = fs::path(dir) / (stem + ".json");
  const fs::path bin_path = fs::path(dir) / (stem + ".factors.bin");
  if (!fs::exists(json_path) || !fs::exists(bin_path)) return false;
  try {
    std::ifstream in(json_path);
    nlohmann::json j = nlohmann::json::parse(in);
    const RunReport report = RunReport::from_json(j);
    if (report.poly != poly_canonical || report.x != x) return false;
    if (report.config.value("L0", u64(0)) != L0) return false;
    records = read_factor_log(bin_path.string());
    probabilistic = report.certification == "probabilistic";
    return true;
  } catch (const std::exception&) {
    return false;  // unreadable entries are treated as misses
  }
}

void cache_store(const std::string& dir, const std::string& stem,
                 const RunReport& report, const FactorizationTable& table) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  const fs::path json_path = fs::path(dir) / (stem + ".json");
  const fs::path bin_path = fs::path(dir) / (stem + ".factors.bin");
  write_factor_log(bin_path.string(), table.records());
  std::ofstream out(json_path, std::ios::trunc);
  if (!out)
    throw std::runtime_error("cannot write cache entry: " + json_path.string());
  out << report.serialize();
}

}  // namespace polylcm
