#include "qpi/serialize.hpp"

#include <array>
#include <fstream>
#include <istream>
#include <ostream>

namespace qpi {

namespace {

class Writer {
public:
  explicit Writer(std::ostream& out) : out_(out) {}

  void u64(std::uint64_t v) {
    std::array<char, 8> b{};
    for (std::size_t t = 0; t < 8; ++t) b[t] = static_cast<char>((v >> (8 * t)) & 0xFF);
    out_.write(b.data(), 8);
  }
  void i64(std::int64_t v) { u64(static_cast<std::uint64_t>(v)); }

  template <class T>
  void array(const std::vector<T>& v) {
    u64(v.size());
    for (const T& x : v) i64(static_cast<std::int64_t>(x));
  }

private:
  std::ostream& out_;
};

class Reader {
public:
  explicit Reader(std::istream& in) : in_(in) {}

  std::uint64_t u64() {
    std::array<char, 8> b{};
    if (!in_.read(b.data(), 8)) throw Error(ErrorCode::Format, "index file truncated");
    std::uint64_t v = 0;
    for (std::size_t t = 0; t < 8; ++t) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(b[t])) << (8 * t);
    return v;
  }
  std::int64_t i64() { return static_cast<std::int64_t>(u64()); }

  std::uint64_t count(std::uint64_t limit) {
    const std::uint64_t c = u64();
    if (c > limit) throw Error(ErrorCode::Format, "array length " + std::to_string(c) + " exceeds " + std::to_string(limit));
    return c;
  }

  std::vector<std::int32_t> array32(std::uint64_t limit) {
    std::vector<std::int32_t> v(static_cast<std::size_t>(count(limit)));
    for (auto& x : v) {
      const std::int64_t y = i64();
      if (y < INT32_MIN || y > INT32_MAX) throw Error(ErrorCode::Format, "array value out of range");
      x = static_cast<std::int32_t>(y);
    }
    return v;
  }

private:
  std::istream& in_;
};

void write_arrays(Writer& w, const SuffixArrays& a) {
  w.array(a.sa);
  w.array(a.isa);
  w.array(a.lcp);
}

SuffixArrays read_arrays(Reader& r, std::uint64_t n) {
  SuffixArrays a;
  a.sa = r.array32(n);
  a.isa = r.array32(n);
  a.lcp = r.array32(n);
  return a;
}

}  // namespace

void save_index(const Index& idx, std::ostream& out) {
  out.write(kIndexMagic, 4);
  out.put(static_cast<char>(kIndexVersion));
  Writer w(out);
  const auto& ti = idx.text_index();
  const std::string& bytes = ti.text().bytes();
  w.u64(bytes.size());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  write_arrays(w, ti.forward());
  write_arrays(w, ti.reverse());

  const auto& levels = idx.seeds().levels();
  w.u64(levels.size());
  for (const auto& level : levels) {
    w.u64(level.size());
    for (const SeedNode& node : level) {
      w.i64(node.interval.a);
      w.i64(node.interval.k);
      w.array(node.local_sa);
      std::vector<std::int32_t> entries;
      entries.reserve(node.entries.size() * 4);
      for (const auto& e : node.entries) entries.insert(entries.end(), {e.rank_lo, e.rank_hi, e.first, e.count});
      w.array(entries);
      std::vector<std::int32_t> lengths;
      lengths.reserve(node.lengths.size() * 2);
      for (const auto& l : node.lengths) lengths.insert(lengths.end(), {l.lo, l.hi});
      w.array(lengths);
    }
  }
  if (!out) throw Error(ErrorCode::Io, "failed to write index");
}

void save_index(const Index& idx, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot open " + path + " for writing");
  save_index(idx, out);
}

std::unique_ptr<Index> load_index(std::istream& in) {
  std::array<char, 5> head{};
  if (!in.read(head.data(), 5) || !std::equal(head.begin(), head.begin() + 4, kIndexMagic)) {
    throw Error(ErrorCode::Format, "not a qpi index (bad magic)");
  }
  if (static_cast<std::uint8_t>(head[4]) != kIndexVersion) {
    throw Error(ErrorCode::Format, "unsupported index version " + std::to_string(static_cast<unsigned char>(head[4])));
  }
  Reader r(in);
  const std::uint64_t n = r.count(std::uint64_t{INT32_MAX});
  std::string bytes(static_cast<std::size_t>(n), '\0');
  if (!in.read(bytes.data(), static_cast<std::streamsize>(n))) throw Error(ErrorCode::Format, "index file truncated");
  SuffixArrays fwd = read_arrays(r, n);
  SuffixArrays rev = read_arrays(r, n);

  std::vector<std::vector<SeedNode>> levels(static_cast<std::size_t>(r.count(64)));
  for (auto& level : levels) {
    level.resize(static_cast<std::size_t>(r.count(n)));
    for (SeedNode& node : level) {
      node.interval.a = r.i64();
      const std::int64_t k = r.i64();
      if (k < 0 || k > 62) throw Error(ErrorCode::Format, "bad basic interval level");
      node.interval.k = static_cast<int>(k);
      node.local_sa = r.array32(n);
      const auto entries = r.array32(4 * n);
      if (entries.size() % 4 != 0) throw Error(ErrorCode::Format, "bad seed entry array");
      for (std::size_t t = 0; t < entries.size(); t += 4) {
        node.entries.push_back({entries[t], entries[t + 1], entries[t + 2], entries[t + 3]});
      }
      const auto lengths = r.array32(2 * n * n);
      if (lengths.size() % 2 != 0) throw Error(ErrorCode::Format, "bad seed length array");
      for (std::size_t t = 0; t < lengths.size(); t += 2) node.lengths.push_back({lengths[t], lengths[t + 1]});
    }
  }
  return std::make_unique<Index>(Text(bytes), std::move(fwd), std::move(rev), std::move(levels));
}

std::unique_ptr<Index> load_index(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  return load_index(in);
}

}  // namespace qpi
