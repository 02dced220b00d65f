#include "eigenframe/graphcore/subspaces.hpp"

#include <algorithm>
#include <limits>
#include <utility>
#include <string>

#include "eigenframe/error.hpp"
#include "eigenframe/graphcore/graph.hpp"

namespace eigenframe {
namespace {

long long inverse_mod(long long a, long long q) {
  long long t = 0, new_t = 1, r = q, new_r = a % q;
  while (new_r != 0) {
    const long long quotient = r / new_r;
    t = std::exchange(new_t, t - quotient * new_t);
    r = std::exchange(new_r, r - quotient * new_r);
  }
  return t < 0 ? t + q : t;
}

// Free positions of an RREF matrix with the given pivot columns: entries right
// of a row's pivot that are not themselves pivot columns.
std::vector<std::pair<int, int>> free_positions(const std::vector<int>& pivots, int n) {
  std::vector<std::pair<int, int>> out;
  for (int row = 0; row < static_cast<int>(pivots.size()); ++row) {
    for (int col = pivots[row] + 1; col < n; ++col) {
      if (!std::binary_search(pivots.begin(), pivots.end(), col)) out.emplace_back(row, col);
    }
  }
  return out;
}

void collect_for_pivots(const std::vector<int>& pivots, int q, int n, std::vector<Subspace>& out) {
  const int r = static_cast<int>(pivots.size());
  const auto slots = free_positions(pivots, n);
  Subspace base{r, n, std::vector<int>(static_cast<std::size_t>(r) * n, 0)};
  for (int row = 0; row < r; ++row) base.rref[static_cast<std::size_t>(row) * n + pivots[row]] = 1;
  std::vector<int> digits(slots.size(), 0);
  while (true) {
    Subspace s = base;
    for (std::size_t k = 0; k < slots.size(); ++k) {
      s.rref[static_cast<std::size_t>(slots[k].first) * n + slots[k].second] = digits[k];
    }
    out.push_back(std::move(s));
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == q) digits[k++] = 0;
    if (k == digits.size()) break;
  }
}

}  // namespace

bool is_prime(long long q) {
  if (q < 2) return false;
  for (long long d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

long long q_integer(int q, int k) {
  long long total = 0, power = 1;
  for (int i = 0; i < k; ++i) {
    total += power;
    power *= q;
  }
  return total;
}

std::uint64_t gaussian_binomial(int q, int n, int r) {
  if (r < 0 || r > n) return 0;
  if (r == 0 || r == n) return 1;
  // [n choose r]_q = prod_{i<r} (q^{n-i} - 1) / (q^{i+1} - 1), built up as an
  // exact running product of binomials [n-r+i+1 choose i+1]_q.
  using u128 = unsigned __int128;
  constexpr u128 kCap = std::numeric_limits<std::uint64_t>::max();
  u128 value = 1;
  for (int i = 0; i < r; ++i) {
    u128 num = 1, den = 1;
    for (int k = 0; k < n - i; ++k) {
      num *= static_cast<u128>(q);
      if (num > kCap * 4) return std::numeric_limits<std::uint64_t>::max();
    }
    for (int k = 0; k < i + 1; ++k) den *= static_cast<u128>(q);
    num -= 1;
    den -= 1;
    if (value > kCap * 4 / num) return std::numeric_limits<std::uint64_t>::max();
    value = value * num / den;
  }
  return value > kCap ? std::numeric_limits<std::uint64_t>::max()
                      : static_cast<std::uint64_t>(value);
}

std::vector<Subspace> enumerate_subspaces(int q, int n, int r) {
  if (!is_prime(q)) throw Unsupported("q = " + std::to_string(q) + " is not prime");
  if (n < 1 || r < 1 || r > n) {
    throw InvalidArgument("need n >= 1 and 1 <= r <= n, got n=" + std::to_string(n) +
                          " r=" + std::to_string(r));
  }
  const std::uint64_t count = gaussian_binomial(q, n, r);
  if (count > kMaxVertices) {
    throw ResourceError("[" + std::to_string(n) + " choose " + std::to_string(r) + "]_" +
                        std::to_string(q) + " subspaces exceed the vertex cap");
  }
  std::vector<Subspace> out;
  out.reserve(count);
  std::vector<int> pivots(r);
  for (int i = 0; i < r; ++i) pivots[i] = i;
  while (true) {
    collect_for_pivots(pivots, q, n, out);
    int i = r - 1;
    while (i >= 0 && pivots[i] == n - r + i) --i;
    if (i < 0) break;
    ++pivots[i];
    for (int j = i + 1; j < r; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

int rank_mod_q(std::vector<std::vector<int>> rows, int q) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] % q == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const long long inv = inverse_mod(rows[rank][c], q);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      const long long factor = rows[i][c] * inv % q;
      if (factor == 0) continue;
      for (std::size_t k = c; k < cols; ++k) {
        long long v = (rows[i][k] - factor * rows[rank][k]) % q;
        rows[i][k] = static_cast<int>(v < 0 ? v + q : v);
      }
    }
    ++rank;
  }
  return rank;
}

namespace {

std::vector<std::vector<int>> stacked_rows(const Subspace& a, const Subspace& b) {
  std::vector<std::vector<int>> rows;
  for (const Subspace* s : {&a, &b}) {
    for (int i = 0; i < s->dim; ++i) {
      rows.emplace_back(s->rref.begin() + static_cast<long>(i) * s->n,
                        s->rref.begin() + static_cast<long>(i + 1) * s->n);
    }
  }
  return rows;
}

}  // namespace

int intersection_dimension(const Subspace& a, const Subspace& b, int q) {
  if (a.n != b.n) throw InvalidArgument("subspaces of different ambient spaces");
  return a.dim + b.dim - rank_mod_q(stacked_rows(a, b), q);
}

bool skew(const Subspace& a, const Subspace& b, int q) { return intersection_dimension(a, b, q) == 0; }

bool contains(const Subspace& big, const Subspace& small, int q) {
  return intersection_dimension(big, small, q) == small.dim;
}

}  // namespace eigenframe
