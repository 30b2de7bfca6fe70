#pragma once

// The tableau-side functions pi_i and exhaustive sweeps comparing them with
// the group-side sign characters sgn_i.

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "grpn/group.hpp"
#include "grpn/rs.hpp"
#include "grpn/tableau.hpp"

namespace grpn {

/// (-1)^e(P) * (z^i)^(spin P + spin Q) * sign(P) * sign(Q).
/// Throws ShapeMismatch or IndexOutOfRange.
OneDimValue pi_from_tableaux(const Multitableau& P, const Multitableau& Q, int i, int r);

/// pi_from_tableaux applied to rs_map(w).
OneDimValue pi(const GroupElement& w, int i);

/// For ascending w: u_0, ..., u_{r-1} (the RS-inverse of (P_k, Q_k) on the
/// value block of color k, colors zero) followed by u_r (identity
/// permutation carrying w's colors). Their product is w.
std::vector<GroupElement> decompose_ascending(const GroupElement& w);

struct Counterexample {
  std::uint64_t index = 0;  // enumeration index within the sweep
  GroupElement element;
  int i = 0;
  std::string check;
  std::string expected;
  std::string got;
};

struct VerificationReport {
  std::string sweep;
  GroupParams params;
  std::uint64_t elements_checked = 0;
  std::uint64_t i_values_checked = 0;
  std::uint64_t total_failures = 0;
  std::vector<Counterexample> counterexamples;  // sorted by index
  std::chrono::microseconds elapsed{0};

  bool passed() const { return total_failures == 0; }
};

struct VerifyOptions {
  std::uint64_t cap = kDefaultCap;
  std::size_t max_counterexamples = 10;
  bool stop_on_first = false;
};

/// pi(w, i) == sgn_i(w) for every w in G(r,p,n) and every i in [0, r).
VerificationReport verify_theorem(const GroupParams& params, const VerifyOptions& options = {});

/// w in G(r,p,n) iff twice_spin(P(w)) = 0 mod p, over all of G(r,1,n); then
/// backwards over every same-shape pair with twice_spin = 0 mod p.
VerificationReport verify_membership(const GroupParams& params,
                                     const VerifyOptions& options = {});

/// Over G(r,1,n): tableau invariance and the +-1 inversion change under every
/// admissible L_i and R_i, ascending representatives reached by replaying the
/// move sequence, and pi_i = sgn_i at w iff at the representative.
VerificationReport verify_admissible(const GroupParams& params,
                                     const VerifyOptions& options = {});

}  // namespace grpn
