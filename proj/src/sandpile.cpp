#include "rrgroup/sandpile.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>
#include <utility>

#include "rrgroup/errors.hpp"

namespace rrgroup {

namespace {

void topple_in_place(const WiredTree& w, ChipConfig& c, Vertex x) {
  const auto deg = static_cast<std::uint64_t>(w.degree(x));
  if (c.chips[x] < deg) {
    throw std::invalid_argument("vertex " + std::to_string(x) + " is stable and cannot topple");
  }
  c.chips[x] -= deg;
  for (Vertex y : w.rotor_sequence(x)) {
    if (y != w.sink()) ++c.chips[y];
  }
}

bool unstable(const WiredTree& w, const ChipConfig& c, Vertex x) {
  return c.chips[x] >= static_cast<std::uint64_t>(w.degree(x));
}

// Kahn-style peeling of the functional graph x -> choice(x): every vertex is
// removed iff no cycle exists.
bool acyclic_choice(const WiredTree& w, const std::vector<int>& choice, std::vector<int>& indegree,
                    std::vector<Vertex>& queue) {
  const auto n = w.size();
  std::fill(indegree.begin(), indegree.end(), 0);
  for (std::size_t x = 0; x < n; ++x) {
    const Vertex y = w.target(static_cast<Vertex>(x), choice[x]);
    if (y != w.sink()) ++indegree[y];
  }
  queue.clear();
  for (std::size_t x = 0; x < n; ++x) {
    if (indegree[x] == 0) queue.push_back(static_cast<Vertex>(x));
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    const Vertex y = w.target(x, choice[x]);
    if (y != w.sink() && --indegree[y] == 0) queue.push_back(y);
  }
  return queue.size() == n;
}

}  // namespace

ChipConfig topple(const WiredTree& w, ChipConfig c, Vertex x) {
  topple_in_place(w, c, x);
  return c;
}

bool is_stable(const WiredTree& w, const ChipConfig& c) {
  for (std::size_t x = 0; x < w.size(); ++x) {
    if (unstable(w, c, static_cast<Vertex>(x))) return false;
  }
  return true;
}

ChipConfig stabilize(const WiredTree& w, ChipConfig c) {
  std::deque<Vertex> queue;
  std::vector<bool> queued(w.size(), false);
  for (std::size_t x = 0; x < w.size(); ++x) {
    if (unstable(w, c, static_cast<Vertex>(x))) {
      queue.push_back(static_cast<Vertex>(x));
      queued[x] = true;
    }
  }
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    queued[x] = false;
    topple_in_place(w, c, x);
    if (unstable(w, c, x)) {
      queue.push_back(x);
      queued[x] = true;
    }
    for (Vertex y : w.rotor_sequence(x)) {
      if (y != w.sink() && !queued[y] && unstable(w, c, y)) {
        queue.push_back(y);
        queued[y] = true;
      }
    }
  }
  return c;
}

ChipConfig stabilize(const WiredTree& w, ChipConfig c, const TopplePicker& pick) {
  std::vector<Vertex> candidates;
  for (;;) {
    candidates.clear();
    for (std::size_t x = 0; x < w.size(); ++x) {
      if (unstable(w, c, static_cast<Vertex>(x))) candidates.push_back(static_cast<Vertex>(x));
    }
    if (candidates.empty()) return c;
    const auto k = pick(candidates);
    if (k >= candidates.size()) throw std::out_of_range("toppling order picked a missing vertex");
    topple_in_place(w, c, candidates[k]);
  }
}

ReducedLaplacian reduced_laplacian(const WiredTree& w) {
  const auto n = w.size();
  ReducedLaplacian lap{std::vector<std::vector<std::int64_t>>(n, std::vector<std::int64_t>(n, 0))};
  for (std::size_t x = 0; x < n; ++x) {
    lap.matrix[x][x] = w.degree(static_cast<Vertex>(x));
    for (Vertex y : w.rotor_sequence(static_cast<Vertex>(x))) {
      if (y != w.sink()) --lap.matrix[x][y];
    }
  }
  return lap;
}

BigInt det_bigint(const std::vector<std::vector<std::int64_t>>& matrix) {
  const auto n = matrix.size();
  for (const auto& row : matrix) {
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  }
  if (n == 0) return 1;

  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(matrix[i][j]);
  }

  // Bareiss: after step k every entry of the trailing block is a (k+1)x(k+1)
  // minor, so the division by the previous pivot is exact.
  BigInt previous = 1;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a[k][k]) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a[p][k]) == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), previous.get_mpz_t());
      }
      a[i][k] = 0;
    }
    previous = a[k][k];
  }
  BigInt det = a[n - 1][n - 1];
  return negate ? BigInt(-det) : det;
}

BigInt count_spanning_trees_bruteforce(const WiredTree& w, std::uint64_t cap) {
  const auto space = w.configuration_count();
  if (space > cap) {
    throw CapExceeded("spanning-tree enumeration space has " + std::to_string(space) +
                      " choices (cap " + std::to_string(cap) + ")");
  }
  const auto n = w.size();
  std::vector<int> choice(n, 0);
  std::vector<int> indegree(n);
  std::vector<Vertex> queue;
  queue.reserve(n);
  std::uint64_t count = 0;
  for (;;) {
    count += acyclic_choice(w, choice, indegree, queue);
    std::size_t x = 0;
    for (; x < n; ++x) {
      if (++choice[x] < w.degree(static_cast<Vertex>(x))) break;
      choice[x] = 0;
    }
    if (x == n) break;
  }
  BigInt result;
  mpz_import(result.get_mpz_t(), 1, 1, sizeof(count), 0, 0, &count);
  return result;
}

}  // namespace rrgroup
