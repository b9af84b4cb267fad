#pragma once

#include "lambdag/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lambdag {

/// Sparse vector: strictly increasing keys (under Less), no zero coefficients.
template <class Key>
using SparseRow = std::vector<std::pair<Key, Rational>>;

/// Row echelon form over Q with keys ordered by Less. Rows are kept with a
/// leading coefficient 1 and pairwise distinct leading keys (pivots); after
/// canonicalize() the form is fully reduced and rows are sorted by pivot.
template <class Key, class Less, class Hash = std::hash<Key>>
class Echelon {
public:
  using Row = SparseRow<Key>;

  std::size_t size() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }
  const std::vector<Row>& rows() const { return rows_; }
  bool is_pivot(const Key& k) const { return pivot_.count(k) != 0; }

  /// Remainder of v modulo the span of the rows. Linear in v.
  Row reduce(const Row& v) const {
    if (rows_.empty() || v.empty()) return v;
    std::map<Key, Rational, Less> acc(v.begin(), v.end());
    auto it = acc.begin();
    while (it != acc.end()) {
      auto p = pivot_.find(it->first);
      if (p == pivot_.end()) {
        ++it;
        continue;
      }
      const Key key = it->first;
      const Rational c = it->second;
      const Row& r = rows_[p->second];
      acc.erase(it);
      for (std::size_t t = 1; t < r.size(); ++t) {
        auto [slot, fresh] = acc.try_emplace(r[t].first);
        if (fresh) {
          slot->second = -c * r[t].second;
        } else {
          slot->second -= c * r[t].second;
          if (sgn(slot->second) == 0) acc.erase(slot);
        }
      }
      it = acc.upper_bound(key);
    }
    return Row(acc.begin(), acc.end());
  }

  bool contains(const Row& v) const { return reduce(v).empty(); }

  /// Adds v to the span. Returns true if the dimension grew.
  bool insert(const Row& v) {
    Row r = reduce(v);
    if (r.empty()) return false;
    push_normalized(std::move(r));
    return true;
  }

  /// Inserts a row already reduced against the current rows (e.g. the
  /// output of reduce()). Must be nonzero.
  void insert_reduced(Row r) { push_normalized(std::move(r)); }

  /// Fully reduced row echelon form, rows sorted by increasing pivot.
  void canonicalize() {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    Less less;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return less(rows_[a][0].first, rows_[b][0].first); });
    // Work from the largest pivot down; rows already visited are fully reduced.
    Echelon done;
    std::vector<Row> out(rows_.size());
    for (std::size_t i = order.size(); i-- > 0;) {
      const Row& r = rows_[order[i]];
      Row tail(r.begin() + 1, r.end());
      Row red = done.reduce(tail);
      Row full;
      full.reserve(red.size() + 1);
      full.push_back(r[0]);
      full.insert(full.end(), red.begin(), red.end());
      done.rows_.push_back(full);
      done.pivot_.emplace(full[0].first, done.rows_.size() - 1);
      out[i] = std::move(full);
    }
    rows_ = std::move(out);
    pivot_.clear();
    for (std::size_t i = 0; i < rows_.size(); ++i) pivot_.emplace(rows_[i][0].first, i);
  }

private:
  void push_normalized(Row r) {
    const Rational lead = r[0].second;
    if (lead != 1)
      for (auto& t : r) t.second /= lead;
    pivot_.emplace(r[0].first, rows_.size());
    rows_.push_back(std::move(r));
  }

  std::vector<Row> rows_;
  std::unordered_map<Key, std::size_t, Hash> pivot_;
};

/// Key for augmented systems: blocks of image coordinates come first,
/// then the coordinate block recording which input vector was used.
struct KernelKey {
  static constexpr std::uint32_t kCoord = 0xffffffffu;
  std::uint32_t block;
  std::uint64_t key;
  bool operator==(const KernelKey&) const = default;
};

struct KernelKeyHash {
  std::size_t operator()(const KernelKey& k) const {
    return std::hash<std::uint64_t>{}(k.key * 0x9e3779b97f4a7c15ull ^ k.block);
  }
};

/// Sparse combination of input vectors: (input index, coefficient).
using Combination = std::vector<std::pair<int, Rational>>;

/// Basis of {c : sum_i c_i images[i] = 0}. Image keys live in blocks other
/// than KernelKey::kCoord and are compared with BlockLess.
template <class BlockLess>
std::vector<Combination> kernel_of(const std::vector<SparseRow<KernelKey>>& images) {
  struct Less {
    bool operator()(const KernelKey& a, const KernelKey& b) const {
      if (a.block != b.block) return a.block < b.block;
      if (a.block == KernelKey::kCoord) return a.key < b.key;
      return BlockLess{}(a.key, b.key);
    }
  };
  Echelon<KernelKey, Less, KernelKeyHash> ech;
  for (std::size_t i = 0; i < images.size(); ++i) {
    SparseRow<KernelKey> row = images[i];
    row.emplace_back(KernelKey{KernelKey::kCoord, i}, Rational(1));
    ech.insert(row);
  }
  std::vector<Combination> out;
  for (const auto& r : ech.rows()) {
    if (r[0].first.block != KernelKey::kCoord) continue;
    Combination c;
    for (const auto& [k, v] : r) c.emplace_back(int(k.key), v);
    out.push_back(std::move(c));
  }
  return out;
}

} // namespace lambdag
