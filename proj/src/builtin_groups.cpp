#include "superchar/builtin_groups.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <string>

namespace superchar {

GroupPtr cyclic_group(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return group_from_cayley(t, "C" + std::to_string(n));
}

GroupPtr symmetric_group(int degree) {
  if (degree < 1) throw Error(ErrorCode::InvalidInput, "degree must be positive");
  std::vector<std::vector<int>> gens;
  if (degree >= 2) {
    std::vector<int> swap(degree), cycle(degree);
    std::iota(swap.begin(), swap.end(), 0);
    std::swap(swap[0], swap[1]);
    for (int i = 0; i < degree; ++i) cycle[i] = (i + 1) % degree;
    gens = {swap, cycle};
  }
  return group_from_permutations(degree, gens, "S" + std::to_string(degree));
}

GroupPtr alternating_group(int degree) {
  if (degree < 1) throw Error(ErrorCode::InvalidInput, "degree must be positive");
  std::vector<std::vector<int>> gens;
  for (int k = 2; k < degree; ++k) {
    // 3-cycle (0 1 k)
    std::vector<int> p(degree);
    std::iota(p.begin(), p.end(), 0);
    p[0] = 1;
    p[1] = k;
    p[k] = 0;
    gens.push_back(p);
  }
  return group_from_permutations(degree, gens, "A" + std::to_string(degree));
}

GroupPtr dihedral_group(int n) {
  if (n < 3) throw Error(ErrorCode::InvalidInput, "dihedral group needs n >= 3");
  std::vector<int> rot(n), ref(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    ref[i] = (n - i) % n;
  }
  return group_from_permutations(n, {rot, ref}, "D" + std::to_string(n));
}

GroupPtr quaternion_group(int n) {
  if (n < 4 || n % 4 != 0)
    throw Error(ErrorCode::InvalidInput, "dicyclic group order must be a positive multiple of 4");
  // elements a^i x^j stored at i + 2m*j; a^{2m} = 1, x^2 = a^m, x a x^-1 = a^-1
  const int m = n / 4;
  const int r = 2 * m;
  auto idx = [r](int i, int j) { return ((i % r) + r) % r + r * j; };
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < r; ++i)
      for (int l = 0; l < 2; ++l)
        for (int k = 0; k < r; ++k) {
          int out;
          if (j == 0)
            out = idx(i + k, l);
          else if (l == 0)
            out = idx(i - k, 1);
          else
            out = idx(i - k + m, 0);
          t[idx(i, j)][idx(k, l)] = out;
        }
  return group_from_cayley(t, "Q" + std::to_string(n));
}

GroupPtr builtin_group(std::string_view spec, int max_order) {
  if (spec.size() < 2) throw Error(ErrorCode::InvalidInput, "unknown builtin group '" + std::string(spec) + "'");
  const char kind = static_cast<char>(std::tolower(static_cast<unsigned char>(spec[0])));
  int n = 0;
  auto [ptr, ec] = std::from_chars(spec.data() + 1, spec.data() + spec.size(), n);
  if (ec != std::errc() || ptr != spec.data() + spec.size() || n < 1)
    throw Error(ErrorCode::InvalidInput, "unknown builtin group '" + std::string(spec) + "'");

  auto too_big = [&](long order) {
    if (order > max_order)
      throw Error(ErrorCode::OrderCapExceeded, "builtin " + std::string(spec) + " has order " +
                                                   std::to_string(order) + " above cap " +
                                                   std::to_string(max_order));
  };
  auto factorial = [](int k) {
    long f = 1;
    for (int i = 2; i <= k && f <= 1000000; ++i) f *= i;
    return f;
  };
  switch (kind) {
    case 'c': too_big(n); return cyclic_group(n);
    case 's': too_big(factorial(n)); return symmetric_group(n);
    case 'a': too_big(n <= 2 ? 1 : factorial(n) / 2); return alternating_group(n);
    case 'd': too_big(2L * n); return dihedral_group(n);
    case 'q': too_big(n); return quaternion_group(n);
    default: break;
  }
  throw Error(ErrorCode::InvalidInput, "unknown builtin group '" + std::string(spec) + "'");
}

}  // namespace superchar
