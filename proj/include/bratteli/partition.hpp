#pragma once

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bratteli/rational.hpp"

namespace bratteli {

// Integer partition with weakly decreasing positive parts; the empty
// partition is the unique partition of 0.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0)
        throw std::invalid_argument("invalid-partition: parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("invalid-partition: parts must be weakly decreasing");
      size_ += parts_[i];
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  long size() const { return size_; }
  bool empty() const { return parts_.empty(); }

  // 1-based row length, 0 past the last row.
  int part(int i) const {
    if (i < 1) throw std::out_of_range("row index must be >= 1");
    return i <= rows() ? parts_[i - 1] : 0;
  }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  long size_ = 0;
};

inline Partition conjugate(const Partition& lam) {
  std::vector<int> cols;
  if (!lam.empty()) {
    cols.assign(static_cast<std::size_t>(lam.part(1)), 0);
    for (int r = 1; r <= lam.rows(); ++r)
      for (int c = 1; c <= lam.part(r); ++c) ++cols[static_cast<std::size_t>(c - 1)];
  }
  return Partition(std::move(cols));
}

// Column length lambda'_c without building the conjugate.
inline int column_length(const Partition& lam, int c) {
  if (c < 1) throw std::out_of_range("column index must be >= 1");
  int count = 0;
  for (int r = 1; r <= lam.rows(); ++r)
    if (lam.part(r) >= c) ++count; else break;
  return count;
}

inline long n_stat(const Partition& lam) {
  long out = 0;
  for (int r = 1; r <= lam.rows(); ++r) out += static_cast<long>(r - 1) * lam.part(r);
  return out;
}

struct Cell {
  int row = 0, col = 0;  // 1-based
  friend bool operator==(const Cell&, const Cell&) = default;
};

inline bool contains(const Partition& lam, Cell s) {
  return s.row >= 1 && s.col >= 1 && s.row <= lam.rows() && s.col <= lam.part(s.row);
}

inline std::vector<Cell> cells(const Partition& lam) {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(lam.size()));
  for (int r = 1; r <= lam.rows(); ++r)
    for (int c = 1; c <= lam.part(r); ++c) out.push_back({r, c});
  return out;
}

inline int arm(const Partition& lam, Cell s) {
  if (!contains(lam, s)) throw std::invalid_argument("invalid-partition: cell outside diagram");
  return lam.part(s.row) - s.col;
}

inline int leg(const Partition& lam, Cell s) {
  if (!contains(lam, s)) throw std::invalid_argument("invalid-partition: cell outside diagram");
  return column_length(lam, s.col) - s.row;
}

struct ArmLegHook {
  int arm = 0, leg = 0, hook = 0;
  friend bool operator==(const ArmLegHook&, const ArmLegHook&) = default;
};

inline ArmLegHook arm_leg_hook(const Partition& lam, Cell s) {
  int a = arm(lam, s), l = leg(lam, s);
  return {a, l, a + l + 1};
}

inline int co_arm(Cell s) { return s.col - 1; }
inline int co_leg(Cell s) { return s.row - 1; }

// One edge lambda -> Lambda of the branching graph: Lambda is lambda plus a
// single cell at (row, col).
struct CoverStep {
  Partition from, to;
  Cell added;
};

inline CoverStep make_cover_step(const Partition& from, int row) {
  if (row < 1 || row > from.rows() + 1)
    throw std::invalid_argument("invalid-step: row out of range");
  int col = from.part(row) + 1;
  if (row > 1 && from.part(row - 1) < col)
    throw std::invalid_argument("invalid-step: cell not addable");
  std::vector<int> parts = from.parts();
  if (row <= from.rows()) parts[static_cast<std::size_t>(row - 1)] += 1;
  else parts.push_back(1);
  return CoverStep{from, Partition(std::move(parts)), Cell{row, col}};
}

inline CoverStep cover_step(const Partition& from, const Partition& to) {
  if (to.size() != from.size() + 1)
    throw std::invalid_argument("invalid-step: sizes do not differ by one");
  for (int r = 1; r <= to.rows(); ++r) {
    if (to.part(r) == from.part(r) + 1) {
      CoverStep step = make_cover_step(from, r);
      if (step.to == to) return step;
      break;
    }
    if (to.part(r) != from.part(r)) break;
  }
  throw std::invalid_argument("invalid-step: not a cover in the Young lattice");
}

// All Lambda covering lambda, ordered by the row of the added cell.
inline std::vector<CoverStep> covers_up(const Partition& lam) {
  std::vector<CoverStep> out;
  for (int r = 1; r <= lam.rows() + 1; ++r)
    if (r == 1 || lam.part(r) < lam.part(r - 1)) out.push_back(make_cover_step(lam, r));
  return out;
}

// All lambda covered by Lambda (corner removals), ordered by row.
inline std::vector<CoverStep> covers_down(const Partition& big) {
  std::vector<CoverStep> out;
  for (int r = 1; r <= big.rows(); ++r) {
    if (r < big.rows() && big.part(r) == big.part(r + 1)) continue;
    std::vector<int> parts = big.parts();
    parts[static_cast<std::size_t>(r - 1)] -= 1;
    if (parts[static_cast<std::size_t>(r - 1)] == 0) parts.pop_back();
    out.push_back(make_cover_step(Partition(std::move(parts)), r));
  }
  return out;
}

// Cells of `from` sharing the added cell's row (resp. column).
inline std::vector<Cell> row_cells(const CoverStep& step) {
  std::vector<Cell> out;
  for (int c = 1; c <= step.from.part(step.added.row); ++c) out.push_back({step.added.row, c});
  return out;
}

inline std::vector<Cell> col_cells(const CoverStep& step) {
  std::vector<Cell> out;
  for (int r = 1; r < step.added.row; ++r) out.push_back({r, step.added.col});
  return out;
}

// Earlier level first; within a level, reverse lexicographic: (n) first,
// (1,...,1) last.
inline bool enumeration_less(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                      a.parts().begin(), a.parts().end());
}

struct EnumLess {
  bool operator()(const Partition& a, const Partition& b) const {
    return enumeration_less(a, b);
  }
};

inline constexpr int kDefaultEnumerationCap = 60;

inline void check_enumeration_cap(long n, int cap = kDefaultEnumerationCap) {
  if (n < 0) throw std::invalid_argument("invalid-partition: negative size");
  if (n > cap)
    throw std::invalid_argument("cap-exceeded: partition size " + std::to_string(n) +
                                " above cap " + std::to_string(cap));
}

inline std::vector<Partition> enumerate_partitions(int n, int cap = kDefaultEnumerationCap) {
  check_enumeration_cap(n, cap);
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.push_back(Partition(cur));
      return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

// Number of standard Young tableaux, by the hook length formula.
inline Int syt_count(const Partition& lam) {
  Int num;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(lam.size()));
  Int den = 1;
  for (const Cell& s : cells(lam)) den *= arm_leg_hook(lam, s).hook;
  Int out = num / den;
  if (out * den != num) throw std::logic_error("hook product must divide |lambda|!");
  return out;
}

inline std::string partition_to_string(const Partition& lam) {
  std::string out = "[";
  for (int r = 1; r <= lam.rows(); ++r) {
    if (r > 1) out += ",";
    out += std::to_string(lam.part(r));
  }
  return out + "]";
}

inline Partition partition_from_string(std::string_view text) {
  std::string s(text);
  auto fail = [&] { throw std::invalid_argument("invalid-partition: cannot parse " + s); };
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
  skip_ws();
  if (i >= s.size() || s[i] != '[') fail();
  ++i;
  std::vector<int> parts;
  skip_ws();
  if (i < s.size() && s[i] == ']') { ++i; }
  else {
    while (true) {
      skip_ws();
      std::size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (start == i) fail();
      parts.push_back(std::stoi(s.substr(start, i - start)));
      skip_ws();
      if (i < s.size() && s[i] == ',') { ++i; continue; }
      if (i < s.size() && s[i] == ']') { ++i; break; }
      fail();
    }
  }
  skip_ws();
  if (i != s.size()) fail();
  return Partition(std::move(parts));
}

}  // namespace bratteli
