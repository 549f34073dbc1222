#include "syzlab/resolution.hpp"

#include <openssl/evp.h>

#include <cstring>
#include <fstream>
#include <random>
#include <sstream>

#include "syzlab/errors.hpp"

namespace syzlab {

Resolution::Resolution(PresentedModule presentation, std::vector<Matrix> differentials)
    : presentation_(std::move(presentation)), differentials_(std::move(differentials)) {
  for (std::size_t i = 0; i < differentials_.size(); ++i) {
    const std::vector<int>& target = i == 0 ? presentation_.generator_degrees() : differentials_[i - 1].col_degrees();
    if (differentials_[i].row_degrees() != target) throw InvariantError("resolution differentials do not compose");
  }
}

const Matrix& Resolution::differential(int i) const {
  if (i < 1 || i > length()) throw UsageError("differential index " + std::to_string(i) + " out of range");
  return differentials_[static_cast<std::size_t>(i - 1)];
}

const std::vector<int>& Resolution::free_degrees(int i) const {
  if (i < 0 || i > length()) throw UsageError("free module index " + std::to_string(i) + " out of range");
  if (i == 0) return presentation_.generator_degrees();
  return differentials_[static_cast<std::size_t>(i - 1)].col_degrees();
}

bool Resolution::complete() const {
  for (int i = 0; i <= length(); ++i) {
    if (free_degrees(i).empty()) return true;
  }
  return false;
}

std::optional<int> Resolution::projective_dimension() const {
  for (int i = 0; i <= length(); ++i) {
    if (free_degrees(i).empty()) return i - 1;
  }
  return std::nullopt;
}

bool Resolution::is_minimal() const {
  for (const auto& d : differentials_) {
    if (!d.is_minimal()) return false;
  }
  return true;
}

bool Resolution::is_complex() const {
  for (std::size_t i = 0; i + 1 < differentials_.size(); ++i) {
    if (!product(differentials_[i], differentials_[i + 1]).is_zero()) return false;
  }
  return true;
}

Resolution Resolution::truncated(int len) const {
  if (len < 0) throw UsageError("resolution length must be non-negative");
  if (len >= length()) return *this;
  return Resolution(presentation_, std::vector<Matrix>(differentials_.begin(), differentials_.begin() + len));
}

Resolution Resolution::rebind(const RingPtr& ring) const {
  if (ring == this->ring()) return *this;
  std::vector<Matrix> ds;
  for (const auto& d : differentials_) ds.push_back(d.rebind(ring));
  return Resolution(PresentedModule(presentation_.presentation().rebind(ring)), std::move(ds));
}

Resolution Resolution::extended(int len) const {
  if (len <= length()) return *this;
  std::vector<Matrix> ds = differentials_;
  while (static_cast<int>(ds.size()) < len) {
    if (ds.empty()) {
      ds.push_back(presentation_.presentation());
      continue;
    }
    ds.push_back(kernel_matrix(ds.back()));
  }
  return Resolution(presentation_, std::move(ds));
}

std::int64_t BettiTable::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

std::int64_t BettiTable::total(int i) const {
  std::int64_t t = 0;
  for (const auto& [k, v] : entries) {
    if (k.first == i) t += v;
  }
  return t;
}

std::vector<std::int64_t> BettiTable::totals() const {
  std::vector<std::int64_t> out(static_cast<std::size_t>(length + 1), 0);
  for (const auto& [k, v] : entries) out[static_cast<std::size_t>(k.first)] += v;
  return out;
}

BettiTable betti_table(const Resolution& res) {
  if (!res.is_minimal()) throw UsageError("Betti numbers need a minimal resolution");
  BettiTable t;
  t.length = res.length();
  for (int i = 0; i <= res.length(); ++i) {
    for (int j : res.free_degrees(i)) ++t.entries[{i, j}];
  }
  return t;
}

// ---- cache -----------------------------------------------------------------

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw InvariantError("SHA-256 computation failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

namespace {

constexpr char kMagic[4] = {'S', 'Y', 'Z', 'R'};
constexpr std::uint8_t kFormatVersion = 1;
constexpr std::size_t kDigestSize = 32;

std::string raw_sha256(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  return std::string(reinterpret_cast<const char*>(digest), len);
}

class Writer {
 public:
  void u8(std::uint8_t v) { out_.push_back(static_cast<char>(v)); }
  void u32(std::uint32_t v) {
    for (int k = 0; k < 4; ++k) u8(static_cast<std::uint8_t>(v >> (8 * k)));
  }
  void i32(int v) { u32(static_cast<std::uint32_t>(v)); }
  void str(const std::string& s) {
    u32(static_cast<std::uint32_t>(s.size()));
    out_ += s;
  }
  void matrix(const Matrix& m, std::size_t nvars) {
    u32(static_cast<std::uint32_t>(m.rows()));
    u32(static_cast<std::uint32_t>(m.cols()));
    for (int d : m.row_degrees()) i32(d);
    for (int d : m.col_degrees()) i32(d);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const auto& terms = m.at(i, j).terms();
        u32(static_cast<std::uint32_t>(terms.size()));
        for (const auto& t : terms) {
          u32(t.coeff);
          for (std::size_t v = 0; v < nvars; ++v) u8(static_cast<std::uint8_t>(t.mono[v]));
        }
      }
    }
  }
  std::string& bytes() { return out_; }

 private:
  std::string out_;
};

class Reader {
 public:
  Reader(const std::string& s, std::size_t begin, std::size_t end) : s_(s), pos_(begin), end_(end) {}

  bool u8(std::uint8_t& v) {
    if (pos_ >= end_) return false;
    v = static_cast<std::uint8_t>(s_[pos_++]);
    return true;
  }
  bool u32(std::uint32_t& v) {
    v = 0;
    for (int k = 0; k < 4; ++k) {
      std::uint8_t b;
      if (!u8(b)) return false;
      v |= static_cast<std::uint32_t>(b) << (8 * k);
    }
    return true;
  }
  bool i32(int& v) {
    std::uint32_t u;
    if (!u32(u)) return false;
    v = static_cast<int>(u);
    return true;
  }
  bool str(std::string& out) {
    std::uint32_t n;
    if (!u32(n) || end_ - pos_ < n) return false;
    out = s_.substr(pos_, n);
    pos_ += n;
    return true;
  }
  bool done() const { return pos_ == end_; }
  std::size_t remaining() const { return end_ - pos_; }

 private:
  const std::string& s_;
  std::size_t pos_;
  std::size_t end_;
};

std::optional<Matrix> read_matrix(Reader& r, const RingPtr& ring) {
  std::uint32_t rows, cols;
  if (!r.u32(rows) || !r.u32(cols)) return std::nullopt;
  // every entry costs at least four bytes
  if (static_cast<std::uint64_t>(rows) * cols * 4 + (rows + cols) * 4ull > r.remaining()) return std::nullopt;
  std::vector<int> rd(rows), cd(cols);
  for (auto& d : rd) {
    if (!r.i32(d)) return std::nullopt;
  }
  for (auto& d : cd) {
    if (!r.i32(d)) return std::nullopt;
  }
  Matrix m(ring, rd, cd);
  const PolyRing& P = ring->poly();
  std::size_t nvars = ring->nvars();
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      std::uint32_t n;
      if (!r.u32(n) || n > r.remaining()) return std::nullopt;
      std::vector<PolyTerm> terms;
      for (std::uint32_t k = 0; k < n; ++k) {
        std::uint32_t c;
        if (!r.u32(c) || c == 0 || c >= ring->field().characteristic()) return std::nullopt;
        std::vector<int> e(nvars);
        for (auto& x : e) {
          std::uint8_t b;
          if (!r.u8(b)) return std::nullopt;
          x = b;
        }
        terms.push_back({c, Monomial::from_exponents(e)});
      }
      m.set(i, j, P.from_terms(std::move(terms)));
    }
  }
  return m;
}

}  // namespace

std::string canonical_form(const PresentedModule& m) {
  const Matrix& p = m.presentation();
  std::string s = "rows=";
  for (int d : p.row_degrees()) s += std::to_string(d) + ",";
  s += ";cols=";
  for (int d : p.col_degrees()) s += std::to_string(d) + ",";
  s += ";" + p.format();
  return s;
}

std::string serialize_resolution(const std::string& key, const Resolution& res) {
  Writer w;
  w.bytes().append(kMagic, 4);
  w.u8(kFormatVersion);
  w.str(key);
  std::size_t nvars = res.ring()->nvars();
  w.u32(static_cast<std::uint32_t>(res.length()));
  w.matrix(res.presentation().presentation(), nvars);
  for (int i = 1; i <= res.length(); ++i) w.matrix(res.differential(i), nvars);
  w.bytes() += raw_sha256(w.bytes());
  return std::move(w.bytes());
}

std::optional<Resolution> deserialize_resolution(const RingPtr& ring, const std::string& key,
                                                 const std::string& bytes) {
  if (bytes.size() < 5 + kDigestSize) return std::nullopt;
  if (std::memcmp(bytes.data(), kMagic, 4) != 0) return std::nullopt;
  if (static_cast<std::uint8_t>(bytes[4]) != kFormatVersion) return std::nullopt;
  std::size_t body = bytes.size() - kDigestSize;
  if (raw_sha256(bytes.substr(0, body)) != bytes.substr(body)) return std::nullopt;
  try {
    Reader r(bytes, 5, body);
    std::string stored;
    if (!r.str(stored) || stored != key) return std::nullopt;
    std::uint32_t len;
    if (!r.u32(len)) return std::nullopt;
    auto pres = read_matrix(r, ring);
    if (!pres) return std::nullopt;
    std::vector<Matrix> ds;
    for (std::uint32_t i = 0; i < len; ++i) {
      auto d = read_matrix(r, ring);
      if (!d) return std::nullopt;
      ds.push_back(std::move(*d));
    }
    if (!r.done()) return std::nullopt;
    return Resolution(PresentedModule(std::move(*pres)), std::move(ds));
  } catch (const Error&) {
    return std::nullopt;
  }
}

ResolutionCache::ResolutionCache(std::filesystem::path directory) : directory_(std::move(directory)) {
  std::filesystem::create_directories(*directory_);
}

std::optional<Resolution> ResolutionCache::lookup(const RingPtr& ring, const std::string& key, int length) {
  {
    std::lock_guard lock(mutex_);
    auto it = memory_.find(key);
    if (it != memory_.end() && (it->second->length() >= length || it->second->complete())) {
      ++hits_;
      return it->second->truncated(length).rebind(ring);
    }
  }
  if (directory_) {
    auto file = *directory_ / (sha256_hex(key + ";length=" + std::to_string(length)) + ".syzr");
    std::ifstream in(file, std::ios::binary);
    if (in) {
      std::ostringstream buf;
      buf << in.rdbuf();
      if (auto res = deserialize_resolution(ring, key, buf.str()); res && res->length() == length) {
        std::lock_guard lock(mutex_);
        ++hits_;
        auto& slot = memory_[key];
        if (!slot || slot->length() < res->length()) slot = std::make_shared<const Resolution>(*res);
        return res;
      }
    }
  }
  std::lock_guard lock(mutex_);
  ++misses_;
  return std::nullopt;
}

void ResolutionCache::store(const std::string& key, const Resolution& res) {
  {
    std::lock_guard lock(mutex_);
    auto& slot = memory_[key];
    if (!slot || slot->length() < res.length()) slot = std::make_shared<const Resolution>(res);
  }
  if (!directory_) return;
  auto file = *directory_ / (sha256_hex(key + ";length=" + std::to_string(res.length())) + ".syzr");
  std::error_code ec;
  if (std::filesystem::exists(file, ec)) return;
  std::random_device rd;
  auto tmp = file;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary);
    std::string bytes = serialize_resolution(key, res);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
      std::filesystem::remove(tmp, ec);
      return;
    }
  }
  std::filesystem::rename(tmp, file, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

std::uint64_t ResolutionCache::hits() const {
  std::lock_guard lock(mutex_);
  return hits_;
}

std::uint64_t ResolutionCache::misses() const {
  std::lock_guard lock(mutex_);
  return misses_;
}

// ---- public operations ------------------------------------------------------

Resolution minimal_resolution(const PresentedModule& m, int length) {
  if (length < 0) throw UsageError("resolution length must be non-negative");
  const auto& cache = m.ring()->options().cache;
  std::string key;
  if (cache) {
    key = m.ring()->canonical() + "|" + canonical_form(m);
    if (auto hit = cache->lookup(m.ring(), key, length)) return hit->extended(length);
  }
  Resolution res = Resolution(minimal_presentation(m), {}).extended(length);
  if (cache) cache->store(key, res);
  return res;
}

PresentedModule syzygy_module(const PresentedModule& m, int n) {
  if (n < 0) throw UsageError("syzygy index must be non-negative");
  if (n == 0) return m;
  Resolution res = minimal_resolution(m, n + 1);
  return PresentedModule(res.differential(n + 1));
}

PresentedModule transpose(const PresentedModule& m) {
  PresentedModule p = minimal_presentation(m);
  return minimal_presentation(PresentedModule(p.presentation().transpose_dual()));
}

}  // namespace syzlab
