#include "filiform/metric/waring.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>

#include "filiform/core/errors.hpp"

namespace filiform {

namespace {

constexpr unsigned kMaxTrackedExponent = 64;
std::array<std::atomic<std::uint64_t>, kMaxTrackedExponent + 1> g_max_parts{};

void record_parts(unsigned k, std::uint64_t count) {
  if (k > kMaxTrackedExponent) {
    return;
  }
  auto& slot = g_max_parts[k];
  std::uint64_t seen = slot.load(std::memory_order_relaxed);
  while (count > seen && !slot.compare_exchange_weak(seen, count, std::memory_order_relaxed)) {
  }
}

// Floating-point estimate, then exact integer correction.
std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && (r > UINT32_MAX || r * r > n)) {
    --r;
  }
  while (r + 1 <= UINT32_MAX && (r + 1) * (r + 1) <= n) {
    ++r;
  }
  return r;
}

bool is_square(std::uint64_t n) {
  std::uint64_t s = isqrt(n);
  return s * s == n;
}

bool excluded_from_three_squares(std::uint64_t n) {
  while (n != 0 && n % 4 == 0) {
    n /= 4;
  }
  return n % 8 == 7;
}

// Largest a with n - a^2 a perfect square, a >= b.
bool two_squares(std::uint64_t n, std::vector<std::uint64_t>& out) {
  for (std::uint64_t a = isqrt(n); 2 * a * a >= n; --a) {
    std::uint64_t rest = n - a * a;
    if (is_square(rest)) {
      out.push_back(a);
      if (rest != 0) {
        out.push_back(isqrt(rest));
      }
      return true;
    }
    if (a == 0) {
      break;
    }
  }
  return false;
}

void three_squares(std::uint64_t n, std::vector<std::uint64_t>& out) {
  for (std::uint64_t a = isqrt(n); a >= 1; --a) {
    std::uint64_t rest = n - a * a;
    std::vector<std::uint64_t> tail;
    if (rest == 0 || two_squares(rest, tail)) {
      out.push_back(a);
      out.insert(out.end(), tail.begin(), tail.end());
      return;
    }
  }
  throw InternalError("three_squares: no decomposition found");
}

std::vector<std::uint64_t> minimal_squares(std::uint64_t n) {
  // n = 4m needs exactly as many squares as m, each doubled.
  if (n != 0 && n % 4 == 0) {
    std::vector<std::uint64_t> out = minimal_squares(n / 4);
    for (auto& b : out) {
      b *= 2;
    }
    return out;
  }
  std::vector<std::uint64_t> out;
  if (is_square(n)) {
    out.push_back(isqrt(n));
  } else if (two_squares(n, out)) {
  } else if (!excluded_from_three_squares(n)) {
    three_squares(n, out);
  } else {
    for (std::uint64_t a = isqrt(n); a >= 1; --a) {
      std::uint64_t rest = n - a * a;
      if (!excluded_from_three_squares(rest)) {
        out.push_back(a);
        std::vector<std::uint64_t> tail = minimal_squares(rest);
        out.insert(out.end(), tail.begin(), tail.end());
        break;
      }
    }
  }
  return out;
}

// Minimal-count table for exponent k >= 3 over [0, size).
struct PowerTable {
  unsigned k = 0;
  std::vector<std::uint64_t> powers;  // powers[b] = b^k, b >= 1
  std::vector<std::uint16_t> count;
  std::vector<std::uint32_t> base;

  void extend_to(std::uint64_t n) {
    if (count.empty()) {
      count.push_back(0);
      base.push_back(0);
      powers = {0};
    }
    while (powers.back() <= n) {
      std::uint64_t b = powers.size();
      std::uint64_t pw = 1;
      for (unsigned i = 0; i < k; ++i) {
        pw *= b;
      }
      powers.push_back(pw);
    }
    std::uint64_t old = count.size();
    if (n < old) {
      return;
    }
    count.resize(n + 1);
    base.resize(n + 1);
    for (std::uint64_t x = old; x <= n; ++x) {
      std::uint32_t best_count = UINT16_MAX;
      std::uint32_t best_base = 0;
      for (std::uint64_t b = powers.size() - 1; b >= 1; --b) {
        if (powers[b] > x) {
          continue;
        }
        std::uint32_t c = count[x - powers[b]] + 1u;
        if (c < best_count) {
          best_count = c;
          best_base = static_cast<std::uint32_t>(b);
        }
      }
      count[x] = static_cast<std::uint16_t>(best_count);
      base[x] = best_base;
    }
  }
};

std::mutex g_tables_mutex;
std::map<unsigned, PowerTable>& tables() {
  static std::map<unsigned, PowerTable> t;
  return t;
}

std::vector<std::uint64_t> minimal_powers(std::uint64_t n, unsigned k) {
  std::lock_guard<std::mutex> lock(g_tables_mutex);
  PowerTable& table = tables()[k];
  table.k = k;
  table.extend_to(n);
  std::vector<std::uint64_t> out;
  while (n > 0) {
    std::uint32_t b = table.base[n];
    out.push_back(b);
    n -= table.powers[b];
  }
  return out;
}

}  // namespace

std::vector<BigInt> waring_decompose(const BigInt& p, unsigned k) {
  if (p < 1 || k < 1) {
    throw PreconditionViolation("waring_decompose requires p >= 1 and k >= 1");
  }
  std::vector<BigInt> parts;
  if (k == 1) {
    parts.push_back(p);
    record_parts(k, 1);
    return parts;
  }
  // The square case is exact far beyond the DP range: its cost is a
  // sqrt-scan, not a table.
  const BigInt limit = from_uint64(k == 2 ? kSquaresExactLimit : kWaringExactLimit);
  BigInt rest = p;
  while (rest > limit) {
    BigInt b = iroot_floor(rest, k);
    parts.push_back(b);
    rest -= ipow(b, k);
  }
  if (rest > 0) {
    std::uint64_t n = rest.get_ui();
    std::vector<std::uint64_t> tail = k == 2 ? minimal_squares(n) : minimal_powers(n, k);
    for (std::uint64_t b : tail) {
      parts.push_back(from_uint64(b));
    }
  }
  std::sort(parts.begin(), parts.end(), [](const BigInt& a, const BigInt& b) { return a > b; });
  record_parts(k, parts.size());
  return parts;
}

std::uint64_t waring_classical_bound(unsigned k) {
  if (k == 0 || k > 62) {
    throw PreconditionViolation("waring_classical_bound: exponent out of range");
  }
  BigInt three_k = ipow(BigInt(3), k);
  BigInt two_k = ipow(BigInt(2), k);
  BigInt g = two_k + floor_div(three_k, two_k) - 2;
  return to_uint64(g);
}

std::uint64_t waring_max_parts_observed(unsigned k) {
  if (k > kMaxTrackedExponent) {
    return 0;
  }
  return g_max_parts[k].load(std::memory_order_relaxed);
}

}  // namespace filiform
