#include "tritab/figurate.hpp"

namespace tritab {

Natural triangular(std::uint64_t n) {
  BigInt v = n;
  v *= n + 1;
  v /= 2;
  return Natural(std::move(v));
}

Natural tetrahedral(std::uint64_t n) {
  BigInt v = n;
  v *= n + 1;
  v *= n + 2;
  v /= 6;
  return Natural(std::move(v));
}

Natural binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return Natural(0u);
  if (n - k < k) k = n - k;
  // Multiplicative form; each division is exact because the running product
  // is C(n-k+i, i) * i!.
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return Natural(std::move(r));
}

TriangularModStream::TriangularModStream(Modulus m, std::uint64_t start_n)
    : modulus_(m.value()) {
  // S_n mod M only depends on n mod 2M.
  std::uint64_t r = start_n % (2 * modulus_);
  residue_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * (r + 1) / 2) %
                                        modulus_);
  step_ = start_n % modulus_;  // next() bumps this to n+1 before adding
}

std::uint64_t triangular_mod(std::uint64_t n, Modulus m) {
  std::uint64_t r = n % (2 * m.value());
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * (r + 1) / 2) %
                                    m.value());
}

std::vector<std::uint64_t> triangular_mod_sequence(Modulus m, std::uint64_t n_max) {
  std::vector<std::uint64_t> out;
  out.reserve(n_max + 1);
  TriangularModStream s(m);
  for (std::uint64_t n = 0; n <= n_max; ++n) out.push_back(s.next());
  return out;
}

}  // namespace tritab
