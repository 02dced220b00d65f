#include "eigenframe/exactla/modular.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <optional>
#include <string>

#include "eigenframe/error.hpp"

namespace eigenframe {
namespace {

constexpr std::size_t kPrimeCount = 24;

constexpr bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint32_t d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

constexpr std::array<std::uint32_t, kPrimeCount> make_primes() {
  std::array<std::uint32_t, kPrimeCount> out{};
  std::uint32_t candidate = (1u << 31) - 1;
  for (std::size_t k = 0; k < kPrimeCount; --candidate) {
    if (is_prime_u32(candidate)) out[k++] = candidate;
  }
  return out;
}

constexpr auto kPrimes = make_primes();
static_assert(kPrimes[0] == 2147483647u);

template <std::uint32_t P>
struct Zp {
  static std::uint32_t mul(std::uint32_t a, std::uint32_t b) {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % P);
  }
  static std::uint32_t inv(std::uint32_t a) {
    std::uint32_t result = 1, base = a, e = P - 2;
    while (e) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }
  static std::uint32_t reduce(std::int64_t v) {
    const std::int64_t r = v % static_cast<std::int64_t>(P);
    return static_cast<std::uint32_t>(r < 0 ? r + P : r);
  }
};

struct ModularForm {
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // ascending
  // rref[k][f]: entry of the k-th pivot row in column f (free columns only matter).
  std::vector<std::vector<std::uint32_t>> rref;
};

// Echelon basis built row by row; each stored row has its leading 1 at its pivot.
template <std::uint32_t P>
ModularForm reduce_mod(const SparseIntegerSystem& sys, bool reduced) {
  using F = Zp<P>;
  const std::size_t n = sys.cols;
  std::vector<int> row_of_pivot(n, -1);
  std::vector<std::vector<std::uint32_t>> basis;
  std::vector<std::uint32_t> row(n);

  for (const auto& sparse : sys.rows) {
    if (basis.size() == n) break;
    std::fill(row.begin(), row.end(), 0u);
    std::size_t first = n;
    for (const auto& [col, coef] : sparse) {
      row[col] = F::reduce(coef);
      if (row[col] != 0) first = std::min<std::size_t>(first, col);
    }
    for (std::size_t c = first; c < n; ++c) {
      if (row[c] == 0) continue;
      const int b = row_of_pivot[c];
      if (b < 0) {
        const std::uint32_t s = F::inv(row[c]);
        for (std::size_t j = c; j < n; ++j) row[j] = F::mul(row[j], s);
        row_of_pivot[c] = static_cast<int>(basis.size());
        basis.push_back(row);
        break;
      }
      const std::uint32_t f = P - row[c];
      const auto& br = basis[static_cast<std::size_t>(b)];
      for (std::size_t j = c; j < n; ++j) {
        if (br[j]) row[j] = static_cast<std::uint32_t>((row[j] + static_cast<std::uint64_t>(f) * br[j]) % P);
      }
    }
  }

  ModularForm out;
  out.rank = basis.size();
  if (!reduced) return out;
  for (std::size_t c = 0; c < n; ++c)
    if (row_of_pivot[c] >= 0) out.pivots.push_back(c);
  // Back substitution, last pivot first.
  for (std::size_t k = out.pivots.size(); k-- > 0;) {
    auto& r = basis[static_cast<std::size_t>(row_of_pivot[out.pivots[k]])];
    for (std::size_t l = k + 1; l < out.pivots.size(); ++l) {
      const std::size_t c = out.pivots[l];
      if (r[c] == 0) continue;
      const std::uint32_t f = P - r[c];
      const auto& br = basis[static_cast<std::size_t>(row_of_pivot[c])];
      for (std::size_t j = c; j < n; ++j) {
        if (br[j]) r[j] = static_cast<std::uint32_t>((r[j] + static_cast<std::uint64_t>(f) * br[j]) % P);
      }
    }
  }
  out.rref.reserve(out.pivots.size());
  for (std::size_t c : out.pivots) out.rref.push_back(std::move(basis[static_cast<std::size_t>(row_of_pivot[c])]));
  return out;
}

using Reducer = ModularForm (*)(const SparseIntegerSystem&, bool);

template <std::size_t... I>
constexpr std::array<Reducer, sizeof...(I)> make_reducers(std::index_sequence<I...>) {
  return {&reduce_mod<kPrimes[I]>...};
}

constexpr auto kReducers = make_reducers(std::make_index_sequence<kPrimeCount>{});

// Wang's rational reconstruction with |num|, den <= sqrt(m / 2).
std::optional<mpq_class> reconstruct(const mpz_class& a, const mpz_class& m) {
  mpz_class bound;
  mpz_class half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = m, r1 = a, t0 = 0, t1 = 1, q, tmp;
  while (r1 > bound) {
    q = r0 / r1;
    tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (abs(t1) > bound || sgn(t1) == 0) return std::nullopt;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  mpq_class out(r1, t1);
  out.canonicalize();
  return out;
}

ExactVector primitive(const ExactVector& v) {
  mpz_class lcm = 1, g = 0;
  for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  std::vector<mpz_class> ints(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    ints[j] = v[j].get_num() * (lcm / v[j].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[j].get_mpz_t());
  }
  const auto lead = std::find_if(ints.begin(), ints.end(), [](const mpz_class& x) { return sgn(x) != 0; });
  if (lead != ints.end() && sgn(*lead) < 0) g = -g;
  ExactVector out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) out[j] = mpq_class(ints[j] / g);
  return out;
}

bool satisfies(const SparseIntegerSystem& sys, const ExactVector& v) {
  mpz_class acc;
  for (const auto& row : sys.rows) {
    acc = 0;
    for (const auto& [col, coef] : row) {
      const mpz_class& x = v[col].get_num();
      if (sgn(x) == 0) continue;
      if (coef >= LONG_MIN && coef <= LONG_MAX) {
        acc += x * static_cast<long>(coef);
      } else {
        acc += x * mpz_class(std::to_string(coef));
      }
    }
    if (sgn(acc) != 0) return false;
  }
  return true;
}

HomogeneousSolution bareiss_fallback(const SparseIntegerSystem& sys) {
  ExactMatrix m(sys.rows.size(), sys.cols);
  for (std::size_t i = 0; i < sys.rows.size(); ++i)
    for (const auto& [col, coef] : sys.rows[i]) m(i, col) = mpq_class(mpz_class(std::to_string(coef)));
  HomogeneousSolution out;
  out.basis = nullspace(m);
  out.rank = sys.cols - out.basis.size();
  out.used_fallback = true;
  return out;
}

}  // namespace

void SparseIntegerSystem::add_row(Row row) {
  std::erase_if(row, [](const auto& e) { return e.second == 0; });
  for (const auto& e : row) {
    if (e.first >= cols) throw InvalidArgument("sparse row column out of range");
  }
  if (!row.empty()) rows.push_back(std::move(row));
}

SparseIntegerSystem to_sparse_system(const ExactMatrix& m) {
  SparseIntegerSystem sys;
  sys.cols = m.cols();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    SparseIntegerSystem::Row row;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const mpq_class& x = m(i, j);
      if (sgn(x) == 0) continue;
      if (x.get_den() != 1 || !x.get_num().fits_slong_p()) {
        throw InvalidArgument("sparse system needs small integer entries");
      }
      row.emplace_back(static_cast<std::uint32_t>(j), x.get_num().get_si());
    }
    sys.add_row(std::move(row));
  }
  return sys;
}

std::size_t rank_mod_prime(const SparseIntegerSystem& system, std::size_t prime_index) {
  if (prime_index >= kPrimeCount) throw InvalidArgument("prime index out of range");
  return kReducers[prime_index](system, false).rank;
}

HomogeneousSolution solve_homogeneous(const SparseIntegerSystem& sys) {
  HomogeneousSolution out;
  if (sys.cols == 0) return out;

  std::optional<ModularForm> best;
  std::vector<std::vector<mpz_class>> crt;  // per pivot row, per free column
  std::vector<std::size_t> free_cols;
  mpz_class modulus = 1;

  for (std::size_t k = 0; k < kPrimeCount; ++k) {
    const std::uint32_t p = kPrimes[k];
    ModularForm form = kReducers[k](sys, true);
    out.primes_used = static_cast<int>(k + 1);
    if (k == 0 && form.rank == sys.cols) {
      out.rank = sys.cols;
      return out;
    }
    // Unlucky primes lose rank or push pivots to the right.
    const bool better = !best || form.rank > best->rank ||
                        (form.rank == best->rank && form.pivots < best->pivots);
    if (better) {
      best = std::move(form);
      if (best->rank == sys.cols) {
        out.rank = sys.cols;
        return out;
      }
      free_cols.clear();
      std::vector<char> is_pivot(sys.cols, 0);
      for (std::size_t c : best->pivots) is_pivot[c] = 1;
      for (std::size_t c = 0; c < sys.cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
      crt.assign(best->pivots.size(), std::vector<mpz_class>(free_cols.size()));
      for (std::size_t r = 0; r < best->pivots.size(); ++r)
        for (std::size_t f = 0; f < free_cols.size(); ++f) crt[r][f] = best->rref[r][free_cols[f]];
      modulus = p;
    } else if (form.rank == best->rank && form.pivots == best->pivots) {
      // x = a + m * ((b - a) * m^{-1} mod p)
      mpz_class inv, pz = p, diff;
      mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
      for (std::size_t r = 0; r < best->pivots.size(); ++r) {
        for (std::size_t f = 0; f < free_cols.size(); ++f) {
          diff = mpz_class(form.rref[r][free_cols[f]]) - crt[r][f];
          diff = (diff * inv) % pz;
          if (sgn(diff) < 0) diff += pz;
          crt[r][f] += modulus * diff;
        }
      }
      modulus *= p;
    } else {
      continue;
    }

    std::vector<ExactVector> candidate;
    bool ok = true;
    for (std::size_t f = 0; f < free_cols.size() && ok; ++f) {
      ExactVector v(sys.cols);
      v[free_cols[f]] = 1;
      for (std::size_t r = 0; r < best->pivots.size(); ++r) {
        const auto q = reconstruct(crt[r][f], modulus);
        if (!q) {
          ok = false;
          break;
        }
        v[best->pivots[r]] = -*q;
      }
      if (ok) {
        v = primitive(v);
        ok = satisfies(sys, v);
      }
      if (ok) candidate.push_back(std::move(v));
    }
    if (ok) {
      // Each vector is the only one nonzero at its free column, so they are
      // independent; rational rank <= modular rank gives exactness.
      out.rank = best->rank;
      out.basis = std::move(candidate);
      return out;
    }
  }
  HomogeneousSolution fb = bareiss_fallback(sys);
  fb.primes_used = out.primes_used;
  return fb;
}

}  // namespace eigenframe
