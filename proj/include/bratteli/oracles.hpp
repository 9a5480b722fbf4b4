#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "bratteli/laurent.hpp"
#include "bratteli/macdonald.hpp"
#include "bratteli/partition.hpp"

namespace bratteli {

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline void check_prime(int p) {
  if (!is_prime(p))
    throw std::invalid_argument("invalid-params: matrix oracle needs prime p, got " +
                                std::to_string(p));
}

// Dense matrix of residues mod a prime p.
class MatrixFp {
 public:
  MatrixFp(int n, int p) : n_(n), p_(p), a_(static_cast<std::size_t>(n) * n, 0) {
    check_prime(p);
    if (n < 1) throw std::invalid_argument("invalid-params: matrix dimension must be >= 1");
  }

  static MatrixFp identity(int n, int p) {
    MatrixFp m(n, p);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int n() const { return n_; }
  int p() const { return p_; }
  int& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  int at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  friend MatrixFp operator*(const MatrixFp& a, const MatrixFp& b) {
    MatrixFp out(a.n_, a.p_);
    for (int i = 0; i < a.n_; ++i)
      for (int k = 0; k < a.n_; ++k) {
        int v = a.at(i, k);
        if (v == 0) continue;
        for (int j = 0; j < a.n_; ++j)
          out.at(i, j) = (out.at(i, j) + v * b.at(k, j)) % a.p_;
      }
    return out;
  }

  friend MatrixFp operator-(const MatrixFp& a, const MatrixFp& b) {
    MatrixFp out(a.n_, a.p_);
    for (int i = 0; i < a.n_; ++i)
      for (int j = 0; j < a.n_; ++j)
        out.at(i, j) = ((a.at(i, j) - b.at(i, j)) % a.p_ + a.p_) % a.p_;
    return out;
  }

  // Gaussian elimination over F_p.
  int rank() const {
    std::vector<int> m = a_;
    auto e = [&](int i, int j) -> int& { return m[static_cast<std::size_t>(i) * n_ + j]; };
    int rank = 0;
    for (int col = 0; col < n_ && rank < n_; ++col) {
      int pivot = -1;
      for (int r = rank; r < n_; ++r)
        if (e(r, col) != 0) { pivot = r; break; }
      if (pivot < 0) continue;
      for (int j = 0; j < n_; ++j) std::swap(e(pivot, j), e(rank, j));
      int inv = mod_inverse(e(rank, col));
      for (int j = 0; j < n_; ++j) e(rank, j) = e(rank, j) * inv % p_;
      for (int r = 0; r < n_; ++r) {
        if (r == rank || e(r, col) == 0) continue;
        int f = e(r, col);
        for (int j = 0; j < n_; ++j)
          e(r, j) = ((e(r, j) - f * e(rank, j)) % p_ + p_) % p_;
      }
      ++rank;
    }
    return rank;
  }

 private:
  int mod_inverse(int a) const {
    // p is prime: a^{p-2} mod p.
    long long out = 1, base = a % p_;
    for (int e = p_ - 2; e > 0; e >>= 1) {
      if (e & 1) out = out * base % p_;
      base = base * base % p_;
    }
    return static_cast<int>(out);
  }

  int n_, p_;
  std::vector<int> a_;
};

inline MatrixFp random_unipotent(int n, int p, std::mt19937_64& rng) {
  MatrixFp m = MatrixFp::identity(n, p);
  std::uniform_int_distribution<int> entry(0, p - 1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) m.at(i, j) = entry(rng);
  return m;
}

inline long long unipotent_count(int n, int p) {
  long long free_entries = static_cast<long long>(n) * (n - 1) / 2;
  long long count = 1;
  for (long long i = 0; i < free_entries; ++i) {
    count *= p;
    if (count > 100'000'000) return count;  // sentinel past any cap we use
  }
  return count;
}

inline void for_each_unipotent(int n, int p, const std::function<void(const MatrixFp&)>& fn) {
  check_prime(p);
  if (unipotent_count(n, p) > 1'000'000)
    throw std::invalid_argument("enumeration-too-large: p^(n(n-1)/2) exceeds 10^6");
  MatrixFp m = MatrixFp::identity(n, p);
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == slots.size()) { fn(m); return; }
    for (int v = 0; v < p; ++v) {
      m.at(slots[k].first, slots[k].second) = v;
      rec(k + 1);
    }
  };
  rec(0);
}

// Jordan type of a unipotent matrix from the rank sequence of powers of M - I:
// lambda'_k = rank((M-I)^{k-1}) - rank((M-I)^k).
inline Partition jordan_type(const MatrixFp& m) {
  MatrixFp nil = m - MatrixFp::identity(m.n(), m.p());
  std::vector<int> conj;
  MatrixFp pw = MatrixFp::identity(m.n(), m.p());
  int prev = m.n();
  for (int k = 1; prev > 0; ++k) {
    if (k > m.n())
      throw std::invalid_argument("not-unipotent: (M-I)^n has nonzero rank");
    pw = pw * nil;
    int r = pw.rank();
    if (r >= prev)
      throw std::invalid_argument("not-unipotent: rank sequence fails to decrease");
    conj.push_back(prev - r);
    prev = r;
  }
  return conjugate(Partition(std::move(conj)));
}

inline Distribution jordan_distribution_exhaustive(int n, int p) {
  Distribution::Map counts;
  long long total = 0;
  for_each_unipotent(n, p, [&](const MatrixFp& m) {
    Partition lam = jordan_type(m);
    auto [it, fresh] = counts.try_emplace(lam, Rat(0));
    it->second += 1;
    ++total;
  });
  for (auto& [lam, c] : counts) c /= Rat(static_cast<long>(total));
  DistributionMeta meta{Rat(0), Rat(1, p), Alphabet::geometric(p), "oracle", std::nullopt,
                        std::nullopt};
  return Distribution(n, std::move(counts), std::move(meta));
}

inline Distribution jordan_distribution_mc(int n, int p, long trials, std::mt19937_64& rng) {
  if (trials < 1) throw std::invalid_argument("invalid-params: trials must be >= 1");
  Distribution::Map counts;
  for (long i = 0; i < trials; ++i) {
    Partition lam = jordan_type(random_unipotent(n, p, rng));
    auto [it, fresh] = counts.try_emplace(lam, Rat(0));
    it->second += 1;
  }
  for (auto& [lam, c] : counts) c /= Rat(trials);
  DistributionMeta meta{Rat(0), Rat(1, p), Alphabet::geometric(p), "oracle", trials,
                        std::nullopt};
  return Distribution(n, std::move(counts), std::move(meta));
}

// Row-insertion RSK; only the shape of the insertion tableau is needed.
inline Partition rsk_shape(const std::vector<int>& word) {
  std::vector<std::vector<int>> rows;
  for (int x : word) {
    if (x < 1) throw std::invalid_argument("invalid-params: word letters must be >= 1");
    int carry = x;
    for (std::size_t r = 0;; ++r) {
      if (r == rows.size()) {
        rows.push_back({carry});
        break;
      }
      auto it = std::upper_bound(rows[r].begin(), rows[r].end(), carry);
      if (it == rows[r].end()) {
        rows[r].push_back(carry);
        break;
      }
      std::swap(carry, *it);
    }
  }
  std::vector<int> shape;
  shape.reserve(rows.size());
  for (const auto& r : rows) shape.push_back(static_cast<int>(r.size()));
  return Partition(std::move(shape));
}

inline void for_each_word(int n, int letters, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> w(static_cast<std::size_t>(n), 1);
  std::function<void(int)> rec = [&](int k) {
    if (k == n) { fn(w); return; }
    for (int v = 1; v <= letters; ++v) {
      w[static_cast<std::size_t>(k)] = v;
      rec(k + 1);
    }
  };
  rec(0);
}

// Exact law of rsk_shape over i.i.d. words with letter law x.
inline Distribution rsk_distribution_exhaustive(int n, const std::vector<Rat>& xs) {
  Alphabet x = Alphabet::finite(xs);
  int k = static_cast<int>(xs.size());
  double total = std::pow(static_cast<double>(k), n);
  if (total > 2e7) throw std::invalid_argument("enumeration-too-large: k^n words");
  Distribution::Map probs;
  for_each_word(n, k, [&](const std::vector<int>& w) {
    Rat weight(1);
    for (int v : w) weight *= xs[static_cast<std::size_t>(v - 1)];
    auto [it, fresh] = probs.try_emplace(rsk_shape(w), Rat(0));
    it->second += weight;
  });
  DistributionMeta meta{std::nullopt, std::nullopt, x, "oracle", std::nullopt, std::nullopt};
  return Distribution(n, std::move(probs), std::move(meta));
}

inline Distribution rsk_distribution_mc(int n, const std::vector<Rat>& xs, long trials,
                                        std::mt19937_64& rng) {
  Alphabet x = Alphabet::finite(xs);
  if (trials < 1) throw std::invalid_argument("invalid-params: trials must be >= 1");
  // Inverse CDF over the finite letter law with a 64-bit draw is more than
  // exact enough here; exactness only matters for the distribution under test,
  // not the letter sampler. Still, use the exact 128-bit rule for uniformity.
  std::vector<Rat> cum(xs.size());
  Rat acc(0);
  for (std::size_t i = 0; i < xs.size(); ++i) { acc += xs[i]; cum[i] = acc; }
  std::vector<Int> thresholds(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    thresholds[i] = (cum[i].get_num() << 128) / cum[i].get_den();
  Distribution::Map counts;
  std::vector<int> w(static_cast<std::size_t>(n));
  for (long trial = 0; trial < trials; ++trial) {
    for (int j = 0; j < n; ++j) {
      Int draw = (Int(rng()) << 64) | Int(rng());
      int letter = static_cast<int>(xs.size());
      for (std::size_t i = 0; i < thresholds.size(); ++i)
        if (draw < thresholds[i]) { letter = static_cast<int>(i) + 1; break; }
      if (letter > static_cast<int>(xs.size())) letter = static_cast<int>(xs.size());
      w[static_cast<std::size_t>(j)] = letter;
    }
    auto [it, fresh] = counts.try_emplace(rsk_shape(w), Rat(0));
    it->second += 1;
  }
  for (auto& [lam, c] : counts) c /= Rat(trials);
  DistributionMeta meta{std::nullopt, std::nullopt, x, "oracle", trials, std::nullopt};
  return Distribution(n, std::move(counts), std::move(meta));
}

// Charge of a word with partition content, by repeated extraction of standard
// subwords (rightmost 1, then rightmost 2 to its left cyclically, ...).
inline long charge_word(std::vector<int> word) {
  long total = 0;
  while (!word.empty()) {
    int max_letter = 0;
    for (int v : word) max_letter = std::max(max_letter, v);
    std::vector<std::size_t> picked;  // position of each letter 1..max_letter
    std::size_t pos = word.size();    // search strictly left of pos, cyclically
    for (int letter = 1; letter <= max_letter; ++letter) {
      std::size_t found = word.size();
      for (std::size_t off = 0; off < word.size(); ++off) {
        std::size_t i = (pos + word.size() - 1 - off) % word.size();
        if (word[i] == letter) { found = i; break; }
      }
      if (found == word.size())
        throw std::invalid_argument("invalid-params: word content is not a partition");
      picked.push_back(found);
      pos = found;
    }
    // Charge of the standard subword, using original positions.
    long index = 0;
    for (int letter = 2; letter <= max_letter; ++letter) {
      if (picked[static_cast<std::size_t>(letter - 1)] >
          picked[static_cast<std::size_t>(letter - 2)])
        ++index;
      total += index;
    }
    std::vector<bool> remove(word.size(), false);
    for (std::size_t i : picked) remove[i] = true;
    std::vector<int> rest;
    for (std::size_t i = 0; i < word.size(); ++i)
      if (!remove[i]) rest.push_back(word[i]);
    word = std::move(rest);
  }
  return total;
}

// Reading word: rows bottom to top, each left to right.
inline std::vector<int> reading_word(const std::vector<std::vector<int>>& rows) {
  std::vector<int> out;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it)
    out.insert(out.end(), it->begin(), it->end());
  return out;
}

// Enumerate semistandard tableaux of the given shape and content.
inline void for_each_ssyt(const Partition& shape, const Partition& content,
                          const std::function<void(const std::vector<std::vector<int>>&)>& fn) {
  if (shape.size() != content.size())
    throw std::invalid_argument("size-mismatch: |shape| != |content|");
  int nrows = shape.rows();
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(nrows));
  for (int r = 0; r < nrows; ++r) rows[static_cast<std::size_t>(r)].resize(shape.part(r + 1));
  std::vector<int> remaining(static_cast<std::size_t>(content.rows()));
  for (int i = 0; i < content.rows(); ++i) remaining[static_cast<std::size_t>(i)] = content.part(i + 1);
  int max_letter = content.rows();
  std::function<void(int, int)> rec = [&](int r, int c) {
    if (r == nrows) { fn(rows); return; }
    int nr = r, nc = c + 1;
    if (nc >= shape.part(r + 1)) { nr = r + 1; nc = 0; }
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
    if (r > 0 && shape.part(r) > c)
      lo = std::max(lo, rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
    for (int v = lo; v <= max_letter; ++v) {
      if (remaining[static_cast<std::size_t>(v - 1)] == 0) continue;
      rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      --remaining[static_cast<std::size_t>(v - 1)];
      rec(nr, nc);
      ++remaining[static_cast<std::size_t>(v - 1)];
    }
  };
  if (nrows == 0) { fn(rows); return; }
  rec(0, 0);
}

// K_{mu,Lambda}(t) = sum over SSYT of shape mu, content Lambda of t^charge,
// stored in the t slot of the Laurent container.
inline LaurentPoly kostka_foulkes(const Partition& mu, const Partition& content) {
  LaurentPoly out;
  for_each_ssyt(mu, content, [&](const std::vector<std::vector<int>>& rows) {
    out += LaurentPoly::monomial(0, static_cast<int>(charge_word(reading_word(rows))));
  });
  return out;
}

inline Int kostka_number(const Partition& mu, const Partition& content) {
  Rat v = kostka_foulkes(mu, content).evaluate(Rat(0), Rat(1));
  return v.get_num();
}

// s_lambda(x) as an explicit sum over semistandard tableaux with bounded entries.
inline Rat schur_by_tableaux(const Partition& lam, const std::vector<Rat>& xs) {
  int k = static_cast<int>(xs.size());
  Rat out(0);
  int nrows = lam.rows();
  if (nrows > k) return out;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(nrows));
  for (int r = 0; r < nrows; ++r) rows[static_cast<std::size_t>(r)].resize(lam.part(r + 1));
  std::function<void(int, int, Rat)> rec = [&](int r, int c, Rat weight) {
    if (r == nrows) { out += weight; return; }
    int nr = r, nc = c + 1;
    if (nc >= lam.part(r + 1)) { nr = r + 1; nc = 0; }
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
    if (r > 0 && lam.part(r) > c)
      lo = std::max(lo, rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
    for (int v = lo; v <= k; ++v) {
      rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      rec(nr, nc, weight * xs[static_cast<std::size_t>(v - 1)]);
    }
  };
  if (nrows == 0) return Rat(1);
  rec(0, 0, Rat(1));
  return out;
}

// Number of saturated chains from `from` to `to` in the Young lattice.
inline Int young_path_count(const Partition& from, const Partition& to) {
  if (!subdiagram(from, to))
    throw std::invalid_argument("not-contained: lower endpoint must sit inside upper");
  std::map<Partition, Int, EnumLess> memo;
  std::function<const Int&(const Partition&)> rec = [&](const Partition& nu) -> const Int& {
    auto it = memo.find(nu);
    if (it != memo.end()) return it->second;
    Int value;
    if (nu == from) value = 1;
    else {
      value = 0;
      for (const CoverStep& step : covers_down(nu))
        if (subdiagram(from, step.from)) value += rec(step.from);
    }
    return memo.emplace(nu, std::move(value)).first->second;
  };
  return rec(to);
}

}  // namespace bratteli
