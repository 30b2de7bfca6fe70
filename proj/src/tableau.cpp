#include "grpn/tableau.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace grpn {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] < 1 || (k > 0 && parts_[k] > parts_[k - 1])) {
      throw Error(Errc::InvalidPartition, "parts must be positive and weakly decreasing");
    }
  }
}

int Partition::rank() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int MultiPartition::rank() const {
  int total = 0;
  for (const auto& part : components_) total += part.rank();
  return total;
}

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  std::vector<int> seen;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto& row = rows_[i];
    if (row.empty()) throw Error(Errc::InvalidTableau, "empty row " + std::to_string(i + 1));
    if (i > 0 && row.size() > rows_[i - 1].size()) {
      throw Error(Errc::InvalidTableau, "row lengths must weakly decrease");
    }
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] < 1) throw Error(Errc::InvalidTableau, "labels must be positive");
      if (j > 0 && row[j] <= row[j - 1]) {
        throw Error(Errc::InvalidTableau, "labels must increase along rows");
      }
      if (i > 0 && row[j] <= rows_[i - 1][j]) {
        throw Error(Errc::InvalidTableau, "labels must increase down columns");
      }
      seen.push_back(row[j]);
    }
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw Error(Errc::DuplicateLabel, "a label occurs twice");
  }
}

Partition StandardTableau::shape() const {
  std::vector<int> parts;
  parts.reserve(rows_.size());
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

int StandardTableau::size() const {
  int total = 0;
  for (const auto& row : rows_) total += static_cast<int>(row.size());
  return total;
}

std::vector<int> StandardTableau::labels() const {
  std::vector<int> out;
  for (const auto& row : rows_) out.insert(out.end(), row.begin(), row.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Box> StandardTableau::find(int label) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    auto it = std::find(rows_[i].begin(), rows_[i].end(), label);
    if (it != rows_[i].end()) {
      return Box{static_cast<int>(i) + 1, static_cast<int>(it - rows_[i].begin()) + 1};
    }
  }
  return std::nullopt;
}

Multitableau::Multitableau(std::vector<StandardTableau> components)
    : components_(std::move(components)) {
  std::vector<int> all;
  for (const auto& t : components_) {
    auto labels = t.labels();
    all.insert(all.end(), labels.begin(), labels.end());
  }
  std::sort(all.begin(), all.end());
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (all[k] != static_cast<int>(k) + 1) {
      throw Error(Errc::InvalidTableau, "labels must be exactly {1.." +
                                            std::to_string(all.size()) + "}");
    }
  }
}

int Multitableau::size() const {
  int total = 0;
  for (const auto& t : components_) total += t.size();
  return total;
}

MultiPartition Multitableau::shape() const {
  std::vector<Partition> parts;
  parts.reserve(components_.size());
  for (const auto& t : components_) parts.push_back(t.shape());
  return MultiPartition(std::move(parts));
}

std::int64_t inv_tableau(const StandardTableau& t) {
  // Row of each label, in label order.
  std::vector<std::pair<int, int>> label_row;
  const auto& rows = t.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int label : rows[i]) label_row.emplace_back(label, static_cast<int>(i));
  }
  std::sort(label_row.begin(), label_row.end());
  std::int64_t count = 0;
  for (std::size_t a = 0; a < label_row.size(); ++a) {
    for (std::size_t b = a + 1; b < label_row.size(); ++b) {
      if (label_row[a].second > label_row[b].second) ++count;
    }
  }
  return count;
}

std::int64_t inv_pair(const StandardTableau& earlier, const StandardTableau& later) {
  const auto big = earlier.labels();
  const auto small = later.labels();
  std::int64_t count = 0;
  for (int j : big) {
    for (int i : small) {
      if (i == j) throw Error(Errc::OverlappingLabels, "label " + std::to_string(i) + " in both");
      if (j > i) ++count;
    }
  }
  return count;
}

std::int64_t inv_multi(const Multitableau& t) {
  std::int64_t total = 0;
  const auto comps = t.components();
  for (std::size_t k = 0; k < comps.size(); ++k) {
    total += inv_tableau(comps[k]);
    for (std::size_t l = k + 1; l < comps.size(); ++l) total += inv_pair(comps[k], comps[l]);
  }
  return total;
}

int sign_multi(const Multitableau& t) { return inv_multi(t) % 2 == 0 ? 1 : -1; }

int e_tableau(const StandardTableau& t) {
  int total = 0;
  const auto& rows = t.rows();
  for (std::size_t i = 1; i < rows.size(); i += 2) total += static_cast<int>(rows[i].size());
  return total;
}

int e_multi(const Multitableau& t) {
  int total = 0;
  for (const auto& c : t.components()) total += e_tableau(c);
  return total;
}

std::int64_t twice_spin(const MultiPartition& shape) {
  std::int64_t total = 0;
  for (std::size_t k = 0; k < shape.size(); ++k) {
    total += static_cast<std::int64_t>(k) * shape[k].rank();
  }
  return total;
}

std::int64_t twice_spin(const Multitableau& t) {
  std::int64_t total = 0;
  const auto comps = t.components();
  for (std::size_t k = 0; k < comps.size(); ++k) {
    total += static_cast<std::int64_t>(k) * comps[k].size();
  }
  return total;
}

bool is_ascending_multitableau(const Multitableau& t) {
  int previous_max = 0;
  for (const auto& c : t.components()) {
    if (c.empty()) continue;
    const auto labels = c.labels();
    if (labels.front() <= previous_max) return false;
    previous_max = labels.back();
  }
  return true;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

void multipartitions_rec(int remaining, int slots, std::vector<Partition>& current,
                         std::vector<MultiPartition>& out) {
  if (slots == 1) {
    for (auto& last : partitions_of(remaining)) {
      current.push_back(last);
      out.emplace_back(current);
      current.pop_back();
    }
    return;
  }
  for (int m = remaining; m >= 0; --m) {
    for (auto& part : partitions_of(m)) {
      current.push_back(part);
      multipartitions_rec(remaining - m, slots - 1, current, out);
      current.pop_back();
    }
  }
}

}  // namespace

std::vector<Partition> partitions_of(int m) {
  std::vector<Partition> out;
  if (m < 0) return out;
  std::vector<int> current;
  partitions_rec(m, m, current, out);
  return out;
}

std::vector<MultiPartition> multipartitions_of(int n, int r) {
  std::vector<MultiPartition> out;
  if (r < 1 || n < 0) return out;
  std::vector<Partition> current;
  multipartitions_rec(n, r, current, out);
  return out;
}

void for_each_standard_tableau(const Partition& shape, std::span<const int> labels,
                               const std::function<void(const StandardTableau&)>& visit) {
  if (static_cast<int>(labels.size()) != shape.rank()) {
    throw Error(Errc::ShapeMismatch, "label count differs from the shape's rank");
  }
  const auto parts = shape.parts();
  std::vector<std::vector<int>> rows(parts.size());
  // Place labels in increasing order, each at an outer corner of the filled part.
  std::function<void(std::size_t)> place = [&](std::size_t t) {
    if (t == labels.size()) {
      visit(StandardTableau(rows));
      return;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(rows[i].size()) >= parts[i]) continue;
      if (i > 0 && rows[i - 1].size() <= rows[i].size()) continue;
      rows[i].push_back(labels[t]);
      place(t + 1);
      rows[i].pop_back();
    }
  };
  place(0);
}

void for_each_standard_multitableau(const MultiPartition& shape,
                                    const std::function<void(const Multitableau&)>& visit,
                                    int max_rank) {
  const int n = shape.rank();
  if (n > max_rank) {
    throw Error(Errc::CapExceeded, "rank " + std::to_string(n) + " exceeds cap " +
                                       std::to_string(max_rank));
  }
  const std::size_t r = shape.size();
  std::vector<StandardTableau> chosen(r);
  std::vector<bool> used(n + 1, false);

  std::function<void(std::size_t)> fill_component = [&](std::size_t k) {
    if (k == r) {
      visit(Multitableau(chosen));
      return;
    }
    const int need = shape[k].rank();
    std::vector<int> free_labels;
    for (int v = 1; v <= n; ++v) {
      if (!used[v]) free_labels.push_back(v);
    }
    // Every `need`-subset of the free labels, via a selection mask.
    std::vector<char> mask(free_labels.size(), 0);
    std::fill(mask.begin(), mask.begin() + need, 1);
    do {
      std::vector<int> subset;
      for (std::size_t idx = 0; idx < mask.size(); ++idx) {
        if (mask[idx]) subset.push_back(free_labels[idx]);
      }
      for (int v : subset) used[v] = true;
      for_each_standard_tableau(shape[k], subset, [&](const StandardTableau& t) {
        chosen[k] = t;
        fill_component(k + 1);
      });
      for (int v : subset) used[v] = false;
    } while (std::prev_permutation(mask.begin(), mask.end()));
  };
  fill_component(0);
}

std::vector<Multitableau> enumerate_standard_multitableaux(const MultiPartition& shape,
                                                           int max_rank) {
  std::vector<Multitableau> out;
  for_each_standard_multitableau(shape, [&](const Multitableau& t) { out.push_back(t); },
                                 max_rank);
  return out;
}

}  // namespace grpn
