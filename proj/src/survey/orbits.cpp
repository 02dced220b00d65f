#include "eigenframe/survey/orbits.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <thread>
#include <unordered_set>

#include "eigenframe/error.hpp"
#include "eigenframe/graphcore/generators.hpp"

namespace eigenframe {
namespace {

void check_n(int n) {
  if (n < 1) throw InvalidArgument("survey dimension must be at least 1");
  if (n > 5) throw Unsupported("orbit enumeration is limited to n <= 5");
}

// Depth-first search over ordered independent tuples (b_0, b_1, ...) of the
// set, each sent to the next unit vector e_j.
struct Search {
  int n = 0;
  ConnectionMask set = 0;
  std::vector<std::uint32_t> elems;
  std::array<int, 32> image{};  // image of each vector of the current span, -1 outside
  ConnectionMask best = 0;
  bool have_best = false;

  // Lex comparison restricted to the low `width` bits: -1 less, 0 equal, 1 greater.
  static int compare_low(ConnectionMask a, ConnectionMask b, std::uint32_t width) {
    const ConnectionMask low = width >= 32 ? ~0u : ((1u << width) - 1);
    const ConnectionMask diff = (a ^ b) & low;
    if (!diff) return 0;
    return (a & (diff & -diff)) ? -1 : 1;
  }

  // `span` lists the current span; `partial` holds the images of the set's
  // elements inside it, all below 2^j.
  void run(int j, const std::vector<std::uint32_t>& span, ConnectionMask partial) {
    if (have_best && compare_low(partial, best, 1u << j) > 0) return;
    bool extended = false;
    std::vector<std::uint32_t> next_span;
    for (std::uint32_t b : elems) {
      if (image[b] >= 0) continue;
      extended = true;
      next_span = span;
      ConnectionMask next = partial;
      for (std::uint32_t v : span) {
        const std::uint32_t w = v ^ b;
        image[w] = image[v] | (1 << j);
        next_span.push_back(w);
        if (set >> w & 1) next |= 1u << image[w];
      }
      run(j + 1, next_span, next);
      for (std::uint32_t v : span) image[v ^ b] = -1;
    }
    if (!extended && (!have_best || lex_less(partial, best))) {
      best = partial;
      have_best = true;
    }
  }
};

}  // namespace

std::vector<std::uint32_t> mask_elements(ConnectionMask mask) {
  std::vector<std::uint32_t> out;
  while (mask) {
    out.push_back(static_cast<std::uint32_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

ConnectionMask elements_mask(const std::vector<std::uint32_t>& elements) {
  ConnectionMask m = 0;
  for (std::uint32_t v : elements) {
    if (v == 0 || v >= 32) throw InvalidArgument("connection set element out of range");
    m |= 1u << v;
  }
  return m;
}

bool lex_less(ConnectionMask a, ConnectionMask b) {
  const ConnectionMask diff = a ^ b;
  return diff && (a & (diff & -diff));
}

ConnectionMask canonical_form(int n, ConnectionMask mask) {
  check_n(n);
  if (mask & 1u) throw InvalidArgument("connection set contains 0");
  if (n < 5 && (mask >> (1u << n))) throw InvalidArgument("connection set element out of range");
  if (mask == 0) return 0;
  Search s;
  s.n = n;
  s.set = mask;
  s.elems = mask_elements(mask);
  s.image.fill(-1);
  s.image[0] = 0;
  s.run(0, {0}, 0);
  return s.best;
}

std::vector<ConnectionMask> enumerate_all_orbits_by_augmentation(int n, unsigned workers) {
  check_n(n);
  workers = std::max(1u, workers);
  const std::uint32_t universe = (1u << n) - 1;  // number of nonzero vectors
  std::vector<ConnectionMask> all{0};
  std::vector<ConnectionMask> level{0};
  for (std::uint32_t k = 0; k < universe; ++k) {
    std::vector<std::unordered_set<ConnectionMask>> found(workers);
    auto work = [&](unsigned w) {
      for (std::size_t i = w; i < level.size(); i += workers) {
        for (std::uint32_t v = 1; v <= universe; ++v) {
          if (level[i] >> v & 1) continue;
          found[w].insert(canonical_form(n, level[i] | (1u << v)));
        }
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }
    std::unordered_set<ConnectionMask> merged;
    for (auto& f : found) merged.insert(f.begin(), f.end());
    level.assign(merged.begin(), merged.end());
    std::sort(level.begin(), level.end(), lex_less);
    all.insert(all.end(), level.begin(), level.end());
  }
  return all;
}

std::vector<ConnectionMask> enumerate_orbits(int n, unsigned workers) {
  check_n(n);
  std::vector<ConnectionMask> reps;
  if (n <= 4) {
    const std::uint32_t universe = (1u << n) - 1;
    std::unordered_set<ConnectionMask> seen;
    for (std::uint32_t subset = 1; subset < (1u << universe); ++subset) {
      const ConnectionMask mask = subset << 1;
      if (gf2_rank(mask_elements(mask)) != n) continue;
      seen.insert(canonical_form(n, mask));
    }
    reps.assign(seen.begin(), seen.end());
  } else {
    for (ConnectionMask m : enumerate_all_orbits_by_augmentation(n, workers))
      if (gf2_rank(mask_elements(m)) == n) reps.push_back(m);
  }
  std::sort(reps.begin(), reps.end(), [](ConnectionMask a, ConnectionMask b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : lex_less(a, b);
  });
  return reps;
}

}  // namespace eigenframe
