#include <string>

#include "eigenframe/error.hpp"
#include "eigenframe/exactla/exact_matrix.hpp"

namespace eigenframe {

// Faddeev-LeVerrier: M_1 = I, c_{n-k} = -tr(A M_k) / k, M_{k+1} = A M_k + c_{n-k} I.
std::vector<mpq_class> characteristic_polynomial(const ExactMatrix& m) {
  if (!m.square()) throw InvalidArgument("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<mpq_class> c(n + 1);
  c[n] = 1;
  ExactMatrix mk = ExactMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    ExactMatrix am = m * mk;
    c[n - k] = -am.trace() / mpq_class(static_cast<long>(k));
    if (k == n) break;
    for (std::size_t i = 0; i < n; ++i) am(i, i) += c[n - k];
    mk = std::move(am);
  }
  return c;
}

bool is_psd_exact(const ExactMatrix& m) {
  if (!m.is_symmetric()) throw InvalidArgument("PSD test needs a symmetric matrix");
  const std::size_t n = m.rows();
  // Scaling by a positive integer keeps the signs of the coefficients and
  // lets the recurrence run on integer-valued entries.
  mpz_class scale = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).get_den_mpz_t());
  const ExactMatrix scaled = m * mpq_class(scale);
  const auto c = characteristic_polynomial(scaled);
  for (std::size_t k = 0; k <= n; ++k) {
    const int s = sgn(c[k]);
    if ((n - k) % 2 == 0 ? s < 0 : s > 0) return false;
  }
  return true;
}

}  // namespace eigenframe
