#include "filiform/metric/ball_io.hpp"

#include <array>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "filiform/core/errors.hpp"

namespace filiform {

namespace {

void put_u32(std::ostream& out, std::uint32_t v) {
  std::array<char, 4> b;
  for (int i = 0; i < 4; ++i) {
    b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  }
  out.write(b.data(), b.size());
}

void put_u64(std::ostream& out, std::uint64_t v) {
  std::array<char, 8> b;
  for (int i = 0; i < 8; ++i) {
    b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  }
  out.write(b.data(), b.size());
}

void read_exact(std::istream& in, char* dst, std::size_t n) {
  in.read(dst, static_cast<std::streamsize>(n));
  if (static_cast<std::size_t>(in.gcount()) != n) {
    throw CacheFormatError("ball cache truncated");
  }
}

std::uint64_t get_le(std::istream& in, int bytes) {
  std::array<unsigned char, 8> b{};
  read_exact(in, reinterpret_cast<char*>(b.data()), static_cast<std::size_t>(bytes));
  std::uint64_t v = 0;
  for (int i = bytes - 1; i >= 0; --i) {
    v = (v << 8) | b[i];
  }
  return v;
}

void put_bigint(std::ostream& out, const BigInt& x) {
  std::size_t count = 0;
  std::vector<unsigned char> bytes;
  if (x != 0) {
    bytes.resize((mpz_sizeinbase(x.get_mpz_t(), 2) + 7) / 8);
    mpz_export(bytes.data(), &count, -1, 1, -1, 0, x.get_mpz_t());
    bytes.resize(count);
  }
  out.put(static_cast<char>(x < 0 ? 1 : 0));
  put_u32(out, static_cast<std::uint32_t>(bytes.size()));
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

BigInt get_bigint(std::istream& in) {
  std::uint64_t sign = get_le(in, 1);
  if (sign > 1) {
    throw CacheFormatError("ball cache: bad sign byte");
  }
  std::uint64_t count = get_le(in, 4);
  if (count > (1u << 20)) {
    throw CacheFormatError("ball cache: implausible integer width");
  }
  std::vector<unsigned char> bytes(count);
  read_exact(in, reinterpret_cast<char*>(bytes.data()), bytes.size());
  BigInt x = 0;
  if (count > 0) {
    mpz_import(x.get_mpz_t(), bytes.size(), -1, 1, -1, 0, bytes.data());
  }
  if (sign == 1) {
    x = -x;
  }
  return x;
}

}  // namespace

void write_ball(const BallCache& ball, std::ostream& out) {
  out.write(kBallMagic, sizeof(kBallMagic));
  put_u32(out, kBallFormatVersion);
  put_u32(out, static_cast<std::uint32_t>(ball.dim()));
  put_u32(out, ball.radius());
  put_u64(out, ball.size());
  for (std::size_t i = 0; i < ball.size(); ++i) {
    const GroupElement& g = ball.element(i);
    put_bigint(out, g.t_exp());
    for (const auto& p : g.a_exps()) {
      put_bigint(out, p);
    }
    put_u32(out, ball.distance_at(i));
  }
  if (!out) {
    throw Error("failed writing ball cache");
  }
}

BallCache read_ball(std::istream& in) {
  char magic[4];
  read_exact(in, magic, sizeof(magic));
  if (!std::equal(magic, magic + 4, kBallMagic)) {
    throw CacheFormatError("ball cache: bad magic");
  }
  auto version = static_cast<std::uint32_t>(get_le(in, 4));
  if (version != kBallFormatVersion) {
    throw CacheFormatError("ball cache: unsupported format version " + std::to_string(version));
  }
  auto dim = static_cast<std::size_t>(get_le(in, 4));
  auto radius = static_cast<std::uint32_t>(get_le(in, 4));
  std::uint64_t count = get_le(in, 8);
  if (dim == 0 || count == 0) {
    throw CacheFormatError("ball cache: empty or zero-dimensional");
  }
  std::vector<GroupElement> elements;
  std::vector<std::uint32_t> distances;
  elements.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(count, 1u << 24)));
  for (std::uint64_t i = 0; i < count; ++i) {
    BigInt r = get_bigint(in);
    std::vector<BigInt> a(dim);
    for (auto& p : a) {
      p = get_bigint(in);
    }
    elements.emplace_back(std::move(r), std::move(a));
    distances.push_back(static_cast<std::uint32_t>(get_le(in, 4)));
  }
  return BallCache::from_records(dim, radius, std::move(elements), distances);
}

void save_ball(const BallCache& ball, const std::filesystem::path& path) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error("cannot open " + path.string() + " for writing");
  }
  write_ball(ball, out);
}

BallCache load_ball(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open " + path.string());
  }
  return read_ball(in);
}

std::filesystem::path ball_cache_path(const std::filesystem::path& cache_dir, std::size_t dim,
                                      std::uint32_t radius) {
  return cache_dir /
         ("ball_d" + std::to_string(dim) + "_r" + std::to_string(radius) + ".bin");
}

void export_ball_csv(const BallCache& ball, std::ostream& out) {
  out << "r";
  for (std::size_t i = 1; i <= ball.dim(); ++i) {
    out << ",p_" << i;
  }
  out << ",dist\n";
  for (std::size_t i = 0; i < ball.size(); ++i) {
    const GroupElement& g = ball.element(i);
    out << to_string(g.t_exp());
    for (const auto& p : g.a_exps()) {
      out << ',' << to_string(p);
    }
    out << ',' << ball.distance_at(i) << '\n';
  }
}

}  // namespace filiform
