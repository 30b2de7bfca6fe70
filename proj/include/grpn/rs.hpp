#pragma once

// Schensted insertion, the multitableau Robinson-Schensted bijection on
// G(r,1,n), and the admissible left/right operators that connect each
// element to its ascending representative.

#include <span>
#include <utility>
#include <vector>

#include "grpn/group.hpp"
#include "grpn/tableau.hpp"

namespace grpn {

struct InsertResult {
  StandardTableau tableau;
  Box box;  // the box appended by the insertion
};

/// Row-inserts x with classical bumping. Throws DuplicateLabel.
InsertResult row_insert(const StandardTableau& t, int x);

/// Reverse bumping from the corner `corner`; returns the shrunken tableau and
/// the label that leaves row 1. Throws InvalidTableau if `corner` is not an
/// outer corner.
std::pair<StandardTableau, int> reverse_bump(const StandardTableau& t, Box corner);

/// Classical RS on a word; Q is labeled by positions[k] for word[k].
std::pair<StandardTableau, StandardTableau> rs_classical(std::span<const int> word,
                                                         std::span<const int> positions);

/// Inverse of rs_classical: (position, value) pairs in increasing position.
std::vector<std::pair<int, int>> rs_classical_inverse(const StandardTableau& p,
                                                      const StandardTableau& q);

struct RSPair {
  Multitableau P;
  Multitableau Q;
  friend bool operator==(const RSPair&, const RSPair&) = default;
};

/// Component k is RS of w^(k) = (sigma_i | a_i = k); Q_k records absolute
/// positions i in w.
RSPair rs_map(const GroupElement& w);

/// Inverse of rs_map. Throws ShapeMismatch or InvalidTableau.
GroupElement rs_inverse(const RSPair& pair, const GroupParams& params);

bool is_ascending_element(const GroupElement& w);

/// L_i: values i, i+1 sit at positions of different color.
bool is_left_admissible(const GroupElement& w, int i);
/// R_i: positions i, i+1 carry different colors.
bool is_right_admissible(const GroupElement& w, int i);

/// s_i * w. Throws IndexOutOfRange or NotAdmissible.
GroupElement left_admissible(const GroupElement& w, int i);
/// w * s_i. Throws IndexOutOfRange or NotAdmissible.
GroupElement right_admissible(const GroupElement& w, int i);

struct AdmissibleMove {
  enum class Side { Left, Right };
  Side side;
  int index;
  friend bool operator==(const AdmissibleMove&, const AdmissibleMove&) = default;
};

GroupElement apply_move(const GroupElement& w, const AdmissibleMove& move);
GroupElement apply_moves(const GroupElement& w, std::span<const AdmissibleMove> moves);

/// Admissible moves taking w to ascending_representative(w): right moves
/// stably sort positions by color, then left moves stably sort values by
/// the color of the position holding them.
std::vector<AdmissibleMove> ascending_moves(const GroupElement& w);

/// Canonical ascending element in the admissible class of w.
GroupElement ascending_representative(const GroupElement& w);

}  // namespace grpn
