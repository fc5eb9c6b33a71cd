#include "degflag/bruhat.hpp"

#include <algorithm>
#include <thread>

namespace degflag {

RankMatrix::RankMatrix(const Permutation& w)
    : m_(w.size()), r_(static_cast<std::size_t>(m_ * m_), 0) {
  // Row i is row i-1 with +1 in the columns j >= w(i).
  for (int i = 1; i <= m_; ++i) {
    const int wi = w(i);
    for (int j = 1; j <= m_; ++j) {
      const int above = (i > 1) ? at(i - 1, j) : 0;
      r_[static_cast<std::size_t>((i - 1) * m_ + (j - 1))] = above + (wi <= j ? 1 : 0);
    }
  }
}

bool RankMatrix::dominates(const RankMatrix& other) const {
  if (m_ != other.m_) throw std::invalid_argument("rank matrix size mismatch");
  for (std::size_t idx = 0; idx < r_.size(); ++idx)
    if (r_[idx] < other.r_[idx]) return false;
  return true;
}

bool bruhat_leq(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size())
    throw std::invalid_argument("Bruhat comparison requires equal degree");
  return RankMatrix(u).dominates(RankMatrix(v));
}

long long PoincarePolynomial::eval(long long q) const {
  long long acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * q + *it;
  return acc;
}

namespace {

// Minimal representatives are exactly the concatenations of sorted value
// blocks, one block per ascending run.  Emitting blocks as lexicographically
// increasing combinations of the remaining values yields the stream in
// lexicographic one-line order.
void emit_reps(const std::vector<int>& runs, std::size_t level,
               std::vector<int>& remaining, std::vector<int>& word,
               const std::function<void(const Permutation&)>& fn) {
  if (level == runs.size()) {
    fn(Permutation(word));
    return;
  }
  const int take = runs[level];
  const int avail = static_cast<int>(remaining.size());
  std::vector<int> pick(static_cast<std::size_t>(take));
  for (int i = 0; i < take; ++i) pick[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::vector<int> rest;
    rest.reserve(remaining.size() - static_cast<std::size_t>(take));
    {
      std::size_t pi = 0;
      for (int i = 0; i < avail; ++i) {
        if (pi < pick.size() && pick[pi] == i) {
          word.push_back(remaining[static_cast<std::size_t>(i)]);
          ++pi;
        } else {
          rest.push_back(remaining[static_cast<std::size_t>(i)]);
        }
      }
    }
    emit_reps(runs, level + 1, rest, word, fn);
    word.resize(word.size() - static_cast<std::size_t>(take));

    // next combination in lexicographic order
    int i = take - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == avail - take + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < take; ++j)
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
}

void check_quotient_bound(const DimensionVector& dv) {
  if (2 * dv.n() > 12)
    throw bound_error("quotient enumeration capped at 2n <= 12");
}

}  // namespace

void for_each_minimal_rep(const DimensionVector& dv,
                          const std::function<void(const Permutation&)>& fn) {
  check_quotient_bound(dv);
  const std::vector<int> runs = dv.run_lengths();
  std::vector<int> remaining(static_cast<std::size_t>(2 * dv.n()));
  for (int i = 0; i < 2 * dv.n(); ++i) remaining[static_cast<std::size_t>(i)] = i + 1;
  std::vector<int> word;
  word.reserve(remaining.size());
  emit_reps(runs, 0, remaining, word, fn);
}

std::vector<Permutation> enumerate_quotient(const DimensionVector& dv) {
  std::vector<Permutation> out;
  for_each_minimal_rep(dv, [&](const Permutation& tau) { out.push_back(tau); });
  return out;
}

namespace {

// Streams the minimal representatives whose first-run combination index is
// congruent to part mod parts; partitions the full stream across workers.
void for_each_minimal_rep_part(const DimensionVector& dv, int part, int parts,
                               const std::function<void(const Permutation&)>& fn) {
  const std::vector<int> runs = dv.run_lengths();
  std::vector<int> remaining(static_cast<std::size_t>(2 * dv.n()));
  for (int i = 0; i < 2 * dv.n(); ++i) remaining[static_cast<std::size_t>(i)] = i + 1;

  const int take = runs[0];
  const int avail = static_cast<int>(remaining.size());
  std::vector<int> sub_runs(runs.begin() + 1, runs.end());
  std::vector<int> pick(static_cast<std::size_t>(take));
  for (int i = 0; i < take; ++i) pick[static_cast<std::size_t>(i)] = i;
  long long combo = 0;
  while (true) {
    if (combo % parts == part) {
      std::vector<int> word;
      std::vector<int> rest;
      std::size_t pi = 0;
      for (int i = 0; i < avail; ++i) {
        if (pi < pick.size() && pick[pi] == i) {
          word.push_back(remaining[static_cast<std::size_t>(i)]);
          ++pi;
        } else {
          rest.push_back(remaining[static_cast<std::size_t>(i)]);
        }
      }
      emit_reps(sub_runs, 0, rest, word, fn);
    }
    ++combo;
    int i = take - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == avail - take + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < take; ++j)
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

PoincarePolynomial interval_poincare(const Permutation& sigma,
                                     const DimensionVector& dv, int threads) {
  check_quotient_bound(dv);
  if (!is_minimal_rep(sigma, dv))
    throw std::invalid_argument("interval_poincare requires a minimal representative");
  const RankMatrix ref(sigma);
  const int top = sigma.length();
  threads = std::max(1, threads);

  auto worker_hist = [&](int part, int parts) {
    std::vector<long long> hist(static_cast<std::size_t>(top + 1), 0);
    auto visit = [&](const Permutation& tau) {
      if (RankMatrix(tau).dominates(ref)) {
        const int len = tau.length();
        hist[static_cast<std::size_t>(len)] += 1;
      }
    };
    if (parts == 1)
      for_each_minimal_rep(dv, visit);
    else
      for_each_minimal_rep_part(dv, part, parts, visit);
    return hist;
  };

  std::vector<long long> hist;
  if (threads == 1) {
    hist = worker_hist(0, 1);
  } else {
    std::vector<std::vector<long long>> partial(static_cast<std::size_t>(threads));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&, t]() { partial[static_cast<std::size_t>(t)] = worker_hist(t, threads); });
    for (auto& th : pool) th.join();
    hist.assign(static_cast<std::size_t>(top + 1), 0);
    for (const auto& h : partial)
      for (std::size_t i = 0; i < h.size(); ++i) hist[i] += h[i];
  }
  return PoincarePolynomial{std::move(hist)};
}

std::vector<long long> genocchi_numbers(int max_n) {
  if (max_n < 1) throw std::invalid_argument("genocchi_numbers requires max_n >= 1");
  if (max_n > 5) throw bound_error("genocchi enumeration capped at max_n <= 5");
  std::vector<long long> out;
  out.reserve(static_cast<std::size_t>(max_n));
  for (int n = 1; n <= max_n; ++n) {
    const DimensionVector dv = DimensionVector::complete(n);
    out.push_back(interval_poincare(sigma_n(n), dv).cardinality());
  }
  return out;
}

long long iota_fixed_count(const Permutation& sigma, const DimensionVector& dv) {
  if (!(iota_involution(sigma) == sigma))
    throw std::invalid_argument("iota_fixed_count requires an iota-fixed sigma");
  if (!dv.type_c_symmetric())
    throw std::invalid_argument("iota_fixed_count requires a type C symmetric dimension vector");
  const RankMatrix ref(sigma);
  long long count = 0;
  for_each_minimal_rep(dv, [&](const Permutation& tau) {
    if (iota_involution(tau) == tau && RankMatrix(tau).dominates(ref)) ++count;
  });
  return count;
}

}  // namespace degflag
