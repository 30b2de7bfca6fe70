#pragma once

// Colored permutations: elements of G(r,1,n) = Z_r wr S_n and its index-p
// subgroups G(r,p,n), kept as one-line notation [z^a1 s1, ..., z^an sn].

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "grpn/error.hpp"

namespace grpn {

inline constexpr std::uint64_t kDefaultCap = 10'000'000;

struct GroupParams {
  int r = 1;
  int p = 1;
  int n = 1;

  /// Validates r, n >= 1 and p | r.
  static GroupParams make(int r, int p, int n);

  /// The same r and n with p = 1, i.e. the ambient group W_n.
  GroupParams full() const { return GroupParams{r, 1, n}; }

  friend bool operator==(const GroupParams&, const GroupParams&) = default;
  friend auto operator<=>(const GroupParams&, const GroupParams&) = default;
};

/// Exact value +-z^k of a one-dimensional representation, z a primitive
/// r-th root of unity. Stored as computed; comparison canonicalizes.
class OneDimValue {
 public:
  OneDimValue(int sign, int exponent, int r);

  static OneDimValue one(int r) { return OneDimValue(1, 0, r); }

  int sign() const { return sign_; }
  int exponent() const { return exponent_; }
  int modulus() const { return r_; }

  /// Folds -z^k into +z^(k + r/2) when r is even.
  OneDimValue canonical() const;

  OneDimValue operator*(const OneDimValue& other) const;
  OneDimValue& operator*=(const OneDimValue& other) { return *this = *this * other; }

  friend bool operator==(const OneDimValue& a, const OneDimValue& b);

 private:
  int sign_;
  int exponent_;
  int r_;
};

class GroupElement {
 public:
  static GroupElement identity(const GroupParams& params);

  const GroupParams& params() const { return params_; }
  int rank() const { return params_.n; }

  /// perm()[k] is the row of the nonzero entry in column k+1 (values 1..n).
  std::span<const int> perm() const { return perm_; }
  /// colors()[k] is the exponent of that entry (values 0..r-1).
  std::span<const int> colors() const { return colors_; }

  /// 1-based accessors matching one-line notation.
  int value_at(int position) const { return perm_[position - 1]; }
  int color_at(int position) const { return colors_[position - 1]; }

  bool is_identity() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

 private:
  friend GroupElement make_element(const GroupParams&, std::vector<int>, std::vector<int>);
  GroupElement(GroupParams params, std::vector<int> perm, std::vector<int> colors)
      : params_(params), perm_(std::move(perm)), colors_(std::move(colors)) {}

  GroupParams params_;
  std::vector<int> perm_;
  std::vector<int> colors_;
};

GroupElement make_element(const GroupParams& params, std::vector<int> perm,
                          std::vector<int> colors);

/// Matrix product u*v: permutation u.perm o v.perm, colors c_i = a_{v(i)} + b_i.
GroupElement multiply(const GroupElement& u, const GroupElement& v);
inline GroupElement operator*(const GroupElement& u, const GroupElement& v) {
  return multiply(u, v);
}
GroupElement inverse(const GroupElement& w);
GroupElement power(const GroupElement& w, int exponent);

/// s_0 = [z 1, 2, ..., n] and s_j the adjacent transposition (j j+1).
GroupElement generator(const GroupParams& params, int j);

/// Generators {s_0^p, s_0 s_1 s_0^{-1}, s_1, ..., s_{n-1}} of G(r,p,n); the
/// conjugate is omitted when n = 1.
std::vector<GroupElement> subgroup_generators(const GroupParams& params);

/// p | (a_1 + ... + a_n). Throws InvalidP unless p divides r.
bool is_member(const GroupElement& w, int p);

int color_sum(const GroupElement& w);
std::int64_t permutation_inversions(std::span<const int> perm);

/// tau_i^epsilon(w): epsilon = 0 gives sigma_i, epsilon = 1 gives sgn_i.
OneDimValue one_dim_rep(const GroupElement& w, int i, int epsilon);

/// Value of tau_i^epsilon on generator s_j, straight from its definition.
OneDimValue one_dim_rep_on_generator(const GroupParams& params, int j, int i, int epsilon);

/// Generator indices whose product is w. Not minimal.
std::vector<int> word_decompose(const GroupElement& w);
GroupElement evaluate_word(const GroupParams& params, std::span<const int> word);

/// r^n n! / p, saturating at UINT64_MAX.
std::uint64_t group_order(const GroupParams& params);

/// Visits G(r,p,n) once per element: permutations in lexicographic order,
/// colors as a little-endian base-r counter inside each permutation.
void for_each_element(const GroupParams& params,
                      const std::function<void(const GroupElement&)>& visit,
                      std::uint64_t cap = kDefaultCap);
std::vector<GroupElement> enumerate_group(const GroupParams& params,
                                          std::uint64_t cap = kDefaultCap);

}  // namespace grpn
