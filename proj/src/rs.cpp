#include "grpn/rs.hpp"

#include <algorithm>
#include <string>

namespace grpn {

namespace {

using Rows = std::vector<std::vector<int>>;

Box insert_raw(Rows& rows, int x) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto& row = rows[i];
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return Box{static_cast<int>(i) + 1, static_cast<int>(row.size())};
    }
    std::swap(*it, x);
  }
  rows.push_back({x});
  return Box{static_cast<int>(rows.size()), 1};
}

bool is_outer_corner(const Rows& rows, Box b) {
  if (b.row < 1 || b.row > static_cast<int>(rows.size())) return false;
  if (b.col != static_cast<int>(rows[b.row - 1].size())) return false;
  return b.row == static_cast<int>(rows.size()) ||
         static_cast<int>(rows[b.row].size()) < b.col;
}

int reverse_bump_raw(Rows& rows, Box corner) {
  auto& last = rows[corner.row - 1];
  int x = last.back();
  last.pop_back();
  if (last.empty()) rows.pop_back();
  for (int i = corner.row - 2; i >= 0; --i) {
    auto& row = rows[i];
    // Largest entry smaller than x is displaced upwards.
    auto it = std::lower_bound(row.begin(), row.end(), x);
    --it;
    std::swap(*it, x);
  }
  return x;
}

void place_raw(Rows& rows, Box b, int label) {
  if (b.row > static_cast<int>(rows.size())) rows.emplace_back();
  rows[b.row - 1].push_back(label);
}

}  // namespace

InsertResult row_insert(const StandardTableau& t, int x) {
  if (t.find(x)) throw Error(Errc::DuplicateLabel, "label " + std::to_string(x) + " present");
  Rows rows = t.rows();
  const Box box = insert_raw(rows, x);
  return InsertResult{StandardTableau(std::move(rows)), box};
}

std::pair<StandardTableau, int> reverse_bump(const StandardTableau& t, Box corner) {
  Rows rows = t.rows();
  if (!is_outer_corner(rows, corner)) {
    throw Error(Errc::InvalidTableau, "box is not an outer corner");
  }
  const int x = reverse_bump_raw(rows, corner);
  return {StandardTableau(std::move(rows)), x};
}

std::pair<StandardTableau, StandardTableau> rs_classical(std::span<const int> word,
                                                         std::span<const int> positions) {
  if (word.size() != positions.size()) {
    throw Error(Errc::LengthMismatch, "word and position lists differ in length");
  }
  Rows p;
  Rows q;
  for (std::size_t k = 0; k < word.size(); ++k) {
    const Box b = insert_raw(p, word[k]);
    place_raw(q, b, positions[k]);
  }
  return {StandardTableau(std::move(p)), StandardTableau(std::move(q))};
}

std::vector<std::pair<int, int>> rs_classical_inverse(const StandardTableau& p,
                                                      const StandardTableau& q) {
  if (p.shape() != q.shape()) throw Error(Errc::ShapeMismatch, "P and Q differ in shape");
  Rows prows = p.rows();
  Rows qrows = q.rows();
  std::vector<std::pair<int, int>> out;
  while (!qrows.empty()) {
    // The largest recording label always sits in an outer corner.
    Box corner{};
    int best = 0;
    for (std::size_t i = 0; i < qrows.size(); ++i) {
      if (qrows[i].back() > best) {
        best = qrows[i].back();
        corner = Box{static_cast<int>(i) + 1, static_cast<int>(qrows[i].size())};
      }
    }
    if (!is_outer_corner(qrows, corner)) {
      throw Error(Errc::InvalidTableau, "recording tableau is not standard");
    }
    qrows[corner.row - 1].pop_back();
    if (qrows[corner.row - 1].empty()) qrows.pop_back();
    out.emplace_back(best, reverse_bump_raw(prows, corner));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

RSPair rs_map(const GroupElement& w) {
  const int r = w.params().r;
  std::vector<std::vector<int>> words(r);
  std::vector<std::vector<int>> positions(r);
  for (int pos = 1; pos <= w.rank(); ++pos) {
    words[w.color_at(pos)].push_back(w.value_at(pos));
    positions[w.color_at(pos)].push_back(pos);
  }
  std::vector<StandardTableau> ps;
  std::vector<StandardTableau> qs;
  ps.reserve(r);
  qs.reserve(r);
  for (int k = 0; k < r; ++k) {
    auto [p, q] = rs_classical(words[k], positions[k]);
    ps.push_back(std::move(p));
    qs.push_back(std::move(q));
  }
  return RSPair{Multitableau(std::move(ps)), Multitableau(std::move(qs))};
}

GroupElement rs_inverse(const RSPair& pair, const GroupParams& params) {
  const auto r = static_cast<std::size_t>(params.r);
  if (pair.P.num_components() != r || pair.Q.num_components() != r) {
    throw Error(Errc::InvalidTableau, "expected " + std::to_string(r) + " components");
  }
  if (pair.P.size() != params.n || pair.Q.size() != params.n) {
    throw Error(Errc::InvalidTableau, "expected rank " + std::to_string(params.n));
  }
  if (pair.P.shape() != pair.Q.shape()) {
    throw Error(Errc::ShapeMismatch, "P and Q differ in shape");
  }
  std::vector<int> perm(params.n);
  std::vector<int> colors(params.n);
  for (std::size_t k = 0; k < r; ++k) {
    for (auto [pos, value] : rs_classical_inverse(pair.P[k], pair.Q[k])) {
      perm[pos - 1] = value;
      colors[pos - 1] = static_cast<int>(k);
    }
  }
  return make_element(params, std::move(perm), std::move(colors));
}

bool is_ascending_element(const GroupElement& w) {
  const int n = w.rank();
  for (int pos = 1; pos < n; ++pos) {
    if (w.color_at(pos) > w.color_at(pos + 1)) return false;
  }
  // Colors are now sorted by position, so the classes appear as consecutive
  // runs; each nonempty run must sit entirely below the next one.
  int previous_max = 0;
  for (int pos = 1; pos <= n;) {
    int end = pos;
    int lo = w.value_at(pos);
    int hi = lo;
    while (end <= n && w.color_at(end) == w.color_at(pos)) {
      lo = std::min(lo, w.value_at(end));
      hi = std::max(hi, w.value_at(end));
      ++end;
    }
    if (lo <= previous_max) return false;
    previous_max = hi;
    pos = end;
  }
  return true;
}

namespace {

void check_operator_index(const GroupElement& w, int i) {
  if (i < 1 || i >= w.rank()) {
    throw Error(Errc::IndexOutOfRange, "operator index " + std::to_string(i) + " not in [1, " +
                                           std::to_string(w.rank() - 1) + "]");
  }
}

int position_of(const GroupElement& w, int value) {
  const auto perm = w.perm();
  return static_cast<int>(std::find(perm.begin(), perm.end(), value) - perm.begin()) + 1;
}

}  // namespace

bool is_left_admissible(const GroupElement& w, int i) {
  check_operator_index(w, i);
  return w.color_at(position_of(w, i)) != w.color_at(position_of(w, i + 1));
}

bool is_right_admissible(const GroupElement& w, int i) {
  check_operator_index(w, i);
  return w.color_at(i) != w.color_at(i + 1);
}

GroupElement left_admissible(const GroupElement& w, int i) {
  if (!is_left_admissible(w, i)) {
    throw Error(Errc::NotAdmissible, "values " + std::to_string(i) + ", " +
                                         std::to_string(i + 1) + " carry equal colors");
  }
  return multiply(generator(w.params(), i), w);
}

GroupElement right_admissible(const GroupElement& w, int i) {
  if (!is_right_admissible(w, i)) {
    throw Error(Errc::NotAdmissible, "positions " + std::to_string(i) + ", " +
                                         std::to_string(i + 1) + " carry equal colors");
  }
  return multiply(w, generator(w.params(), i));
}

GroupElement apply_move(const GroupElement& w, const AdmissibleMove& move) {
  return move.side == AdmissibleMove::Side::Left ? left_admissible(w, move.index)
                                                 : right_admissible(w, move.index);
}

GroupElement apply_moves(const GroupElement& w, std::span<const AdmissibleMove> moves) {
  GroupElement current = w;
  for (const auto& move : moves) current = apply_move(current, move);
  return current;
}

std::vector<AdmissibleMove> ascending_moves(const GroupElement& w) {
  const int n = w.rank();
  std::vector<int> perm(w.perm().begin(), w.perm().end());
  std::vector<int> colors(w.colors().begin(), w.colors().end());
  std::vector<AdmissibleMove> moves;

  // Adjacent positions with decreasing colors: R_k swaps them.
  for (bool sorted = false; !sorted;) {
    sorted = true;
    for (int k = 0; k + 1 < n; ++k) {
      if (colors[k] > colors[k + 1]) {
        std::swap(perm[k], perm[k + 1]);
        std::swap(colors[k], colors[k + 1]);
        moves.push_back({AdmissibleMove::Side::Right, k + 1});
        sorted = false;
      }
    }
  }

  // value_color[v] is the color at the position holding v. L_v swaps v and
  // v+1 when their colors decrease.
  std::vector<int> value_color(n + 1);
  for (int k = 0; k < n; ++k) value_color[perm[k]] = colors[k];
  for (bool sorted = false; !sorted;) {
    sorted = true;
    for (int v = 1; v < n; ++v) {
      if (value_color[v] > value_color[v + 1]) {
        std::swap(value_color[v], value_color[v + 1]);
        moves.push_back({AdmissibleMove::Side::Left, v});
        sorted = false;
      }
    }
  }
  return moves;
}

GroupElement ascending_representative(const GroupElement& w) {
  const int n = w.rank();
  std::vector<int> order(n);
  for (int k = 0; k < n; ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return w.colors()[a] < w.colors()[b]; });

  // Positions now run through the color classes in order; standardize each
  // class's values into the next block of consecutive integers.
  std::vector<int> perm(n);
  std::vector<int> colors(n);
  int block_start = 1;
  for (int k = 0; k < n;) {
    int end = k;
    while (end < n && w.colors()[order[end]] == w.colors()[order[k]]) ++end;
    std::vector<int> values;
    for (int t = k; t < end; ++t) values.push_back(w.perm()[order[t]]);
    std::vector<int> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    for (int t = k; t < end; ++t) {
      const auto rank = std::lower_bound(sorted.begin(), sorted.end(), values[t - k]) -
                        sorted.begin();
      perm[t] = block_start + static_cast<int>(rank);
      colors[t] = w.colors()[order[t]];
    }
    block_start += end - k;
    k = end;
  }
  return make_element(w.params(), std::move(perm), std::move(colors));
}

}  // namespace grpn
