#include "filiform/core/random.hpp"

#include <vector>

namespace filiform {

Word random_word(std::size_t dim, std::size_t length, Rng& rng) {
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(2 * dim + 1));
  Word w(dim);
  for (std::size_t i = 0; i < length; ++i) {
    std::uint32_t x = pick(rng);
    w.push_back(Letter{x / 2, (x % 2) == 1});
  }
  return w;
}

GroupElement random_element(std::size_t dim, std::int64_t bound, Rng& rng) {
  std::uniform_int_distribution<std::int64_t> t_pick(-bound, bound);
  BigInt r = from_int64(t_pick(rng));
  std::vector<BigInt> a(dim);
  BigInt limit = from_int64(bound);
  for (std::size_t i = 0; i < dim; ++i) {
    // Uniform in [-bound^{i+1}, bound^{i+1}].
    BigInt hi = ipow(limit, static_cast<unsigned>(i + 1));
    if (hi.fits_slong_p()) {
      std::uniform_int_distribution<std::int64_t> pick(-hi.get_si(), hi.get_si());
      a[i] = from_int64(pick(rng));
    } else {
      gmp_randclass gen(gmp_randinit_default);
      gen.seed(static_cast<unsigned long>(rng()));
      BigInt width = 2 * hi + 1;
      a[i] = gen.get_z_range(width) - hi;
    }
  }
  return GroupElement(std::move(r), std::move(a));
}

}  // namespace filiform
