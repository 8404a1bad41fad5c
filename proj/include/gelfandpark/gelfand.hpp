#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "budget.hpp"
#include "errors.hpp"
#include "groups.hpp"
#include "parallel.hpp"
#include "permutation.hpp"
#include "repthy.hpp"

namespace gelfandpark {

// K-orbits on X = Gamma^n / diag for K = diag(Gamma) x S_n, i.e. the
// suborbits of the action of Gamma wr S_n on G/K. Label 0 is the base point.
struct SuborbitTable {
  CosetSpace space;
  std::vector<std::uint32_t> labels;  // suborbit of each coset index
  std::vector<std::uint64_t> reps;    // first point reached in each suborbit
  std::vector<std::uint64_t> sizes;

  std::size_t count() const noexcept { return reps.size(); }
};

// Breadth-first closure from each unlabelled point (in index order) under
// the n-1 adjacent transpositions and the diagonal images of a generating
// set of Gamma.
inline SuborbitTable compute_suborbits(FiniteGroup const& gamma, std::size_t n,
                                       Budget const& budget = {}) {
  CosetSpace space = coset_space(gamma, n, budget.points);
  Deadline const deadline(budget.seconds);
  std::vector<Elem> const diag = generating_set(gamma);
  constexpr std::uint32_t kUnset = ~0u;
  SuborbitTable t{space, std::vector<std::uint32_t>(space.size(), kUnset), {}, {}};
  std::vector<Elem> x(n), y(n);
  std::vector<std::uint64_t> queue;
  for (std::uint64_t start = 0; start < space.size(); ++start) {
    if (t.labels[start] != kUnset) continue;
    auto const label = static_cast<std::uint32_t>(t.reps.size());
    t.reps.push_back(start);
    t.labels[start] = label;
    queue.assign(1, start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      space.point_into(queue[head], x);
      auto visit = [&](std::uint64_t idx) {
        if (t.labels[idx] == kUnset) {
          t.labels[idx] = label;
          queue.push_back(idx);
        }
      };
      for (std::size_t i = 0; i + 1 < n; ++i) {
        y = x;
        std::swap(y[i], y[i + 1]);
        visit(space.index_of(y));
      }
      for (Elem d : diag) {
        for (std::size_t i = 0; i < n; ++i) y[i] = gamma.product(d, x[i]);
        visit(space.index_of(y));
      }
    }
    t.sizes.push_back(queue.size());
    if ((label & 63) == 0) deadline.check("compute_suborbits");
  }
  return t;
}

// p[i][j][k]: with y_k the representative of suborbit k, the number of z in
// X such that (x0, z) lies in orbital i and (z, y_k) lies in orbital j. These
// are the structure constants A_i A_j = sum_k p[i][j][k] A_k of the orbital
// basis of the centraliser algebra.
class IntersectionNumbers {
 public:
  explicit IntersectionNumbers(std::size_t m) : m_(m), p_(m * m * m, 0) {}

  std::size_t rank() const noexcept { return m_; }
  std::uint64_t operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return p_[(i * m_ + j) * m_ + k];
  }
  std::uint64_t& at(std::size_t i, std::size_t j, std::size_t k) {
    return p_[(i * m_ + j) * m_ + k];
  }

 private:
  std::size_t m_;
  std::vector<std::uint64_t> p_;
};

// Orbital of (u, v) is the suborbit of translate_to_base(u, v). The k-slices
// are independent, so workers split the k range.
inline IntersectionNumbers compute_intersection_numbers(SuborbitTable const& t,
                                                        Budget const& budget = {},
                                                        unsigned workers = 1) {
  std::size_t const m = t.count();
  std::size_t const n = t.space.degree();
  auto const& gamma = t.space.gamma();
  IntersectionNumbers p(m);
  Deadline const deadline(budget.seconds);
  parallel_chunks(m, workers, [&](unsigned, std::size_t lo, std::size_t hi) {
    std::vector<Elem> z(n), y(n), w(n);
    for (std::size_t k = lo; k < hi; ++k) {
      t.space.point_into(t.reps[k], y);
      for (std::uint64_t zi = 0; zi < t.space.size(); ++zi) {
        t.space.point_into(zi, z);
        for (std::size_t c = 0; c < n; ++c) w[c] = gamma.product(gamma.inverse(z[c]), y[c]);
        ++p.at(t.labels[zi], t.labels[t.space.index_of(w)], k);
      }
      deadline.check("compute_intersection_numbers");
    }
  });
  return p;
}

struct GelfandVerdict {
  std::string gamma;
  std::size_t n;
  bool gelfand;
  std::size_t suborbits;
  std::optional<std::array<std::size_t, 3>> witness;  // first (i, j, k) with p_ij^k != p_ji^k
  std::uint64_t elapsed_ms;
};

// (Gamma wr S_n, diag(Gamma^n) x S_n) is Gelfand iff the centraliser algebra
// is commutative, i.e. p[i][j][k] == p[j][i][k] for all triples.
inline GelfandVerdict is_gelfand_pair(FiniteGroup const& gamma, std::size_t n,
                                      Budget const& budget = {}, unsigned workers = 1) {
  Deadline const clock(budget.seconds);
  auto const t = compute_suborbits(gamma, n, budget);
  auto const p = compute_intersection_numbers(t, budget, workers);
  GelfandVerdict v{gamma.name(), n, true, t.count(), std::nullopt, 0};
  std::size_t const m = t.count();
  for (std::size_t i = 0; i < m && v.gelfand; ++i)
    for (std::size_t j = i + 1; j < m && v.gelfand; ++j)
      for (std::size_t k = 0; k < m; ++k)
        if (p(i, j, k) != p(j, i, k)) {
          v.gelfand = false;
          v.witness = std::array<std::size_t, 3>{i, j, k};
          break;
        }
  v.elapsed_ms = clock.elapsed_ms();
  return v;
}

struct CyclicCrossCheck {
  bool agrees;
  bool orbital_verdict;
  std::size_t suborbits;
  std::size_t constituents;
  bool multiplicity_free;
};

// For Gamma = Z_r the orbital verdict, the suborbit count and the explicit
// decomposition of the induced representation must tell the same story.
inline CyclicCrossCheck gelfand_cross_check_cyclic(std::uint32_t r, std::size_t n,
                                                   Budget const& budget = {}) {
  detail::require(r >= 1 && n >= 2, "gelfand_cross_check_cyclic: need r >= 1, n >= 2");
  if (n > 5) throw budget_exceeded("gelfand_cross_check_cyclic: n above guard", n, 5);
  auto const verdict = is_gelfand_pair(make_group(GroupSpec::cyclic(r)), n, budget);
  auto const ks = induced_decomposition(n, r, true, budget);
  bool free = true;
  for (auto const& k : ks) free = free && multiplicity_in_induced(k, true) == 1;
  return {verdict.gelfand && free && verdict.suborbits == ks.size(), verdict.gelfand,
          verdict.suborbits, ks.size(), free};
}

}  // namespace gelfandpark
