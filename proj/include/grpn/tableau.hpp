#pragma once

// Partitions, multipartitions, standard Young (multi)tableaux and the
// inversion / e / spin statistics on them. Rows are 1-indexed throughout.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "grpn/error.hpp"

namespace grpn {

class Partition {
 public:
  Partition() = default;
  /// Throws InvalidPartition unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int rank() const;
  bool empty() const { return parts_.empty(); }
  int length() const { return static_cast<int>(parts_.size()); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

class MultiPartition {
 public:
  MultiPartition() = default;
  explicit MultiPartition(std::vector<Partition> components)
      : components_(std::move(components)) {}

  std::span<const Partition> components() const { return components_; }
  const Partition& operator[](std::size_t k) const { return components_[k]; }
  std::size_t size() const { return components_.size(); }
  int rank() const;

  friend bool operator==(const MultiPartition&, const MultiPartition&) = default;
  friend auto operator<=>(const MultiPartition&, const MultiPartition&) = default;

 private:
  std::vector<Partition> components_;
};

/// 1-based row/column of a box.
struct Box {
  int row = 0;
  int col = 0;
  friend bool operator==(const Box&, const Box&) = default;
};

/// A Young tableau with distinct positive labels, increasing along rows and
/// down columns. Labels need not be 1..m: components of a multitableau carry
/// arbitrary subsets.
class StandardTableau {
 public:
  StandardTableau() = default;
  /// Throws InvalidTableau if the shape or the ordering is wrong,
  /// DuplicateLabel if a label repeats.
  explicit StandardTableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;
  int size() const;
  bool empty() const { return rows_.empty(); }
  std::vector<int> labels() const;  // sorted
  std::optional<Box> find(int label) const;

  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

/// r-tuple of standard tableaux jointly labeled by exactly {1..n}.
class Multitableau {
 public:
  Multitableau() = default;
  /// Throws InvalidTableau unless the labels are exactly {1..n}.
  explicit Multitableau(std::vector<StandardTableau> components);

  std::span<const StandardTableau> components() const { return components_; }
  const StandardTableau& operator[](std::size_t k) const { return components_[k]; }
  std::size_t num_components() const { return components_.size(); }
  int size() const;
  MultiPartition shape() const;

  friend bool operator==(const Multitableau&, const Multitableau&) = default;

 private:
  std::vector<StandardTableau> components_;
};

std::int64_t inv_tableau(const StandardTableau& t);
/// Pairs (j, i) with j in `earlier`, i in `later`, j > i.
std::int64_t inv_pair(const StandardTableau& earlier, const StandardTableau& later);
std::int64_t inv_multi(const Multitableau& t);
int sign_multi(const Multitableau& t);

/// Boxes in rows 2, 4, 6, ...
int e_tableau(const StandardTableau& t);
int e_multi(const Multitableau& t);

/// sum_k k * |sh(T_k)|, i.e. twice the spin statistic.
std::int64_t twice_spin(const Multitableau& t);
std::int64_t twice_spin(const MultiPartition& shape);

/// Label sets of the nonempty components increase strictly from one to the next.
bool is_ascending_multitableau(const Multitableau& t);

std::vector<Partition> partitions_of(int m);
std::vector<MultiPartition> multipartitions_of(int n, int r);

/// Visits every standard tableau of `shape` filled with `labels` (sorted,
/// |labels| == |shape|).
void for_each_standard_tableau(const Partition& shape, std::span<const int> labels,
                               const std::function<void(const StandardTableau&)>& visit);

inline constexpr int kDefaultMaxTableauRank = 12;

/// Visits every standard multitableau of `shape` exactly once.
/// Throws CapExceeded when |shape| > max_rank.
void for_each_standard_multitableau(const MultiPartition& shape,
                                    const std::function<void(const Multitableau&)>& visit,
                                    int max_rank = kDefaultMaxTableauRank);
std::vector<Multitableau> enumerate_standard_multitableaux(
    const MultiPartition& shape, int max_rank = kDefaultMaxTableauRank);

}  // namespace grpn
