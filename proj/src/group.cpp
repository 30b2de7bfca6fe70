#include "grpn/group.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace grpn {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::InvalidP: return "InvalidP";
    case Errc::NotAPermutation: return "NotAPermutation";
    case Errc::ColorOutOfRange: return "ColorOutOfRange";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::ParamsMismatch: return "ParamsMismatch";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::InvalidPartition: return "InvalidPartition";
    case Errc::InvalidTableau: return "InvalidTableau";
    case Errc::OverlappingLabels: return "OverlappingLabels";
    case Errc::DuplicateLabel: return "DuplicateLabel";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::NotAdmissible: return "NotAdmissible";
    case Errc::NotAscending: return "NotAscending";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

int mod(long long value, int r) {
  long long m = value % r;
  return static_cast<int>(m < 0 ? m + r : m);
}

void require_same_params(const GroupElement& u, const GroupElement& v) {
  if (u.params() != v.params()) {
    throw Error(Errc::ParamsMismatch, "operands belong to different groups");
  }
}

}  // namespace

GroupParams GroupParams::make(int r, int p, int n) {
  if (r < 1) throw Error(Errc::InvalidParams, "r must be positive, got " + std::to_string(r));
  if (n < 1) throw Error(Errc::InvalidParams, "n must be positive, got " + std::to_string(n));
  if (p < 1 || r % p != 0) {
    throw Error(Errc::InvalidP, "p = " + std::to_string(p) + " does not divide r = " +
                                    std::to_string(r));
  }
  return GroupParams{r, p, n};
}

OneDimValue::OneDimValue(int sign, int exponent, int r) : sign_(sign), r_(r) {
  if (r < 1) throw Error(Errc::InvalidParams, "modulus must be positive");
  if (sign != 1 && sign != -1) throw Error(Errc::InvalidParams, "sign must be +1 or -1");
  exponent_ = mod(exponent, r);
}

OneDimValue OneDimValue::canonical() const {
  if (sign_ == -1 && r_ % 2 == 0) return OneDimValue(1, exponent_ + r_ / 2, r_);
  return *this;
}

OneDimValue OneDimValue::operator*(const OneDimValue& other) const {
  if (r_ != other.r_) throw Error(Errc::ParamsMismatch, "values over different moduli");
  return OneDimValue(sign_ * other.sign_, exponent_ + other.exponent_, r_);
}

bool operator==(const OneDimValue& a, const OneDimValue& b) {
  if (a.r_ != b.r_) return false;
  const OneDimValue ca = a.canonical();
  const OneDimValue cb = b.canonical();
  return ca.sign_ == cb.sign_ && ca.exponent_ == cb.exponent_;
}

GroupElement GroupElement::identity(const GroupParams& params) {
  std::vector<int> perm(params.n);
  std::iota(perm.begin(), perm.end(), 1);
  return GroupElement(params, std::move(perm), std::vector<int>(params.n, 0));
}

bool GroupElement::is_identity() const {
  for (int k = 0; k < params_.n; ++k) {
    if (perm_[k] != k + 1 || colors_[k] != 0) return false;
  }
  return true;
}

GroupElement make_element(const GroupParams& params, std::vector<int> perm,
                          std::vector<int> colors) {
  const auto n = static_cast<std::size_t>(params.n);
  if (perm.size() != n || colors.size() != n) {
    throw Error(Errc::LengthMismatch, "expected " + std::to_string(n) + " entries, got " +
                                          std::to_string(perm.size()) + " values and " +
                                          std::to_string(colors.size()) + " colors");
  }
  std::vector<bool> seen(n + 1, false);
  for (int v : perm) {
    if (v < 1 || v > params.n || seen[v]) {
      throw Error(Errc::NotAPermutation, "value " + std::to_string(v) + " is out of range or repeated");
    }
    seen[v] = true;
  }
  for (int a : colors) {
    if (a < 0 || a >= params.r) {
      throw Error(Errc::ColorOutOfRange, "color " + std::to_string(a) + " not in [0, " +
                                             std::to_string(params.r) + ")");
    }
  }
  return GroupElement(params, std::move(perm), std::move(colors));
}

GroupElement multiply(const GroupElement& u, const GroupElement& v) {
  require_same_params(u, v);
  const GroupParams& params = u.params();
  std::vector<int> perm(params.n);
  std::vector<int> colors(params.n);
  for (int k = 0; k < params.n; ++k) {
    const int t = v.perm()[k] - 1;
    perm[k] = u.perm()[t];
    colors[k] = (u.colors()[t] + v.colors()[k]) % params.r;
  }
  return make_element(params, std::move(perm), std::move(colors));
}

GroupElement inverse(const GroupElement& w) {
  const GroupParams& params = w.params();
  std::vector<int> perm(params.n);
  std::vector<int> colors(params.n);
  for (int k = 0; k < params.n; ++k) {
    const int j = w.perm()[k] - 1;
    perm[j] = k + 1;
    colors[j] = mod(-w.colors()[k], params.r);
  }
  return make_element(params, std::move(perm), std::move(colors));
}

GroupElement power(const GroupElement& w, int exponent) {
  GroupElement base = exponent < 0 ? inverse(w) : w;
  GroupElement result = GroupElement::identity(w.params());
  for (int e = exponent < 0 ? -exponent : exponent; e > 0; --e) result = multiply(result, base);
  return result;
}

GroupElement generator(const GroupParams& params, int j) {
  if (j < 0 || j >= params.n) {
    throw Error(Errc::IndexOutOfRange, "generator index " + std::to_string(j) + " not in [0, " +
                                           std::to_string(params.n) + ")");
  }
  std::vector<int> perm(params.n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<int> colors(params.n, 0);
  if (j == 0) {
    colors[0] = 1 % params.r;
  } else {
    std::swap(perm[j - 1], perm[j]);
  }
  return make_element(params, std::move(perm), std::move(colors));
}

std::vector<GroupElement> subgroup_generators(const GroupParams& params) {
  std::vector<GroupElement> gens;
  const GroupElement s0 = generator(params, 0);
  gens.push_back(power(s0, params.p));
  // s_0 s_1 s_0^{-1} has color sum 0; it equals s_0 s_1 s_0 when r = 2.
  if (params.n >= 2) gens.push_back(s0 * generator(params, 1) * inverse(s0));
  for (int i = 1; i < params.n; ++i) gens.push_back(generator(params, i));
  return gens;
}

int color_sum(const GroupElement& w) {
  long long total = 0;
  for (int a : w.colors()) total += a;
  return mod(total, w.params().r);
}

bool is_member(const GroupElement& w, int p) {
  if (p < 1 || w.params().r % p != 0) {
    throw Error(Errc::InvalidP, "p = " + std::to_string(p) + " does not divide r = " +
                                    std::to_string(w.params().r));
  }
  long long total = 0;
  for (int a : w.colors()) total += a;
  return total % p == 0;
}

std::int64_t permutation_inversions(std::span<const int> perm) {
  std::int64_t count = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++count;
    }
  }
  return count;
}

OneDimValue one_dim_rep(const GroupElement& w, int i, int epsilon) {
  const int r = w.params().r;
  if (i < 0 || i >= r) {
    throw Error(Errc::IndexOutOfRange, "character index " + std::to_string(i) + " not in [0, " +
                                           std::to_string(r) + ")");
  }
  const int sign = (epsilon != 0 && permutation_inversions(w.perm()) % 2 != 0) ? -1 : 1;
  return OneDimValue(sign, static_cast<long long>(i) * color_sum(w) % r, r);
}

OneDimValue one_dim_rep_on_generator(const GroupParams& params, int j, int i, int epsilon) {
  if (j < 0 || j >= params.n || i < 0 || i >= params.r) {
    throw Error(Errc::IndexOutOfRange, "generator or character index out of range");
  }
  if (j == 0) return OneDimValue(1, i, params.r);
  return OneDimValue(epsilon != 0 ? -1 : 1, 0, params.r);
}

std::vector<int> word_decompose(const GroupElement& w) {
  const int n = w.params().n;

  // Bubble-sort the permutation by right multiplication with s_k; the
  // recorded swaps, reversed, spell the permutation part.
  std::vector<int> perm(w.perm().begin(), w.perm().end());
  std::vector<int> swaps;
  for (bool sorted = false; !sorted;) {
    sorted = true;
    for (int k = 0; k + 1 < n; ++k) {
      if (perm[k] > perm[k + 1]) {
        std::swap(perm[k], perm[k + 1]);
        swaps.push_back(k + 1);
        sorted = false;
      }
    }
  }
  std::vector<int> word(swaps.rbegin(), swaps.rend());

  // w = (sigma, 0) * (id, a), and (id, a) is a product over positions i of
  // (s_{i-1} ... s_1) s_0^{a_i} (s_1 ... s_{i-1}).
  for (int pos = 1; pos <= n; ++pos) {
    const int a = w.color_at(pos);
    if (a == 0) continue;
    for (int j = pos - 1; j >= 1; --j) word.push_back(j);
    word.insert(word.end(), a, 0);
    for (int j = 1; j <= pos - 1; ++j) word.push_back(j);
  }
  return word;
}

GroupElement evaluate_word(const GroupParams& params, std::span<const int> word) {
  GroupElement result = GroupElement::identity(params);
  for (int j : word) result = multiply(result, generator(params, j));
  return result;
}

std::uint64_t group_order(const GroupParams& params) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t order = 1;
  auto times = [&](std::uint64_t f) {
    order = (order > kMax / f) ? kMax : order * f;
  };
  for (int k = 0; k < params.n; ++k) times(static_cast<std::uint64_t>(params.r));
  for (int k = 2; k <= params.n; ++k) times(static_cast<std::uint64_t>(k));
  return order == kMax ? kMax : order / static_cast<std::uint64_t>(params.p);
}

void for_each_element(const GroupParams& params,
                      const std::function<void(const GroupElement&)>& visit,
                      std::uint64_t cap) {
  const std::uint64_t full = group_order(params.full());
  if (full > cap) {
    throw Error(Errc::CapExceeded, "r^n n! = " + std::to_string(full) + " exceeds cap " +
                                       std::to_string(cap));
  }
  const int n = params.n;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    std::vector<int> colors(n, 0);
    for (;;) {
      GroupElement w = make_element(params, perm, colors);
      if (params.p == 1 || is_member(w, params.p)) visit(w);
      int k = 0;
      while (k < n && ++colors[k] == params.r) colors[k++] = 0;
      if (k == n) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<GroupElement> enumerate_group(const GroupParams& params, std::uint64_t cap) {
  std::vector<GroupElement> elements;
  for_each_element(params, [&](const GroupElement& w) { elements.push_back(w); }, cap);
  return elements;
}

}  // namespace grpn
