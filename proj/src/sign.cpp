#include "grpn/sign.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "grpn/notation.hpp"

namespace grpn {

OneDimValue pi_from_tableaux(const Multitableau& P, const Multitableau& Q, int i, int r) {
  if (i < 0 || i >= r) {
    throw Error(Errc::IndexOutOfRange, "character index " + std::to_string(i) + " not in [0, " +
                                           std::to_string(r) + ")");
  }
  if (P.shape() != Q.shape()) throw Error(Errc::ShapeMismatch, "P and Q differ in shape");
  const int sign = (e_multi(P) % 2 == 0 ? 1 : -1) * sign_multi(P) * sign_multi(Q);
  const std::int64_t spin_sum = (twice_spin(P) + twice_spin(Q)) / 2;
  return OneDimValue(sign, static_cast<int>((spin_sum % r) * i % r), r);
}

OneDimValue pi(const GroupElement& w, int i) {
  const RSPair pair = rs_map(w);
  return pi_from_tableaux(pair.P, pair.Q, i, w.params().r);
}

std::vector<GroupElement> decompose_ascending(const GroupElement& w) {
  if (!is_ascending_element(w)) {
    throw Error(Errc::NotAscending, format_element(w) + " is not ascending");
  }
  const GroupParams& params = w.params();
  const RSPair pair = rs_map(w);
  std::vector<GroupElement> factors;
  factors.reserve(params.r + 1);
  for (int k = 0; k < params.r; ++k) {
    std::vector<int> perm(params.n);
    for (int v = 0; v < params.n; ++v) perm[v] = v + 1;
    for (auto [pos, value] : rs_classical_inverse(pair.P[k], pair.Q[k])) perm[pos - 1] = value;
    factors.push_back(make_element(params, std::move(perm), std::vector<int>(params.n, 0)));
  }
  std::vector<int> perm(params.n);
  for (int v = 0; v < params.n; ++v) perm[v] = v + 1;
  factors.push_back(
      make_element(params, std::move(perm), std::vector<int>(w.colors().begin(), w.colors().end())));
  return factors;
}

namespace {

class Sweep {
 public:
  Sweep(std::string name, const GroupParams& params, const VerifyOptions& options)
      : options_(options), start_(std::chrono::steady_clock::now()) {
    report_.sweep = std::move(name);
    report_.params = params;
  }

  bool stopped() const { return options_.stop_on_first && report_.total_failures > 0; }

  void element() { ++report_.elements_checked; }

  /// Counts one check; records a counterexample when `ok` is false.
  template <typename Expected, typename Got>
  void check(bool ok, std::uint64_t index, const GroupElement& w, int i, std::string_view what,
             const Expected& expected, const Got& got) {
    ++report_.i_values_checked;
    if (ok) return;
    ++report_.total_failures;
    if (report_.counterexamples.size() < options_.max_counterexamples) {
      report_.counterexamples.push_back(
          Counterexample{index, w, i, std::string(what), render(expected), render(got)});
    }
  }

  VerificationReport finish() {
    std::stable_sort(report_.counterexamples.begin(), report_.counterexamples.end(),
                     [](const auto& a, const auto& b) { return a.index < b.index; });
    report_.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - start_);
    return std::move(report_);
  }

 private:
  static std::string render(const OneDimValue& v) { return format_value(v); }
  static std::string render(bool b) { return b ? "true" : "false"; }
  static std::string render(std::int64_t x) { return std::to_string(x); }
  static std::string render(const std::string& s) { return s; }
  static std::string render(const char* s) { return s; }
  static std::string render(const GroupElement& w) { return format_element(w); }

  VerifyOptions options_;
  VerificationReport report_;
  std::chrono::steady_clock::time_point start_;
};

bool theorem_holds_at(const GroupElement& w, const RSPair& pair, int i) {
  return pi_from_tableaux(pair.P, pair.Q, i, w.params().r) == one_dim_rep(w, i, 1);
}

}  // namespace

VerificationReport verify_theorem(const GroupParams& params, const VerifyOptions& options) {
  Sweep sweep("theorem", params, options);
  std::uint64_t index = 0;
  for_each_element(
      params,
      [&](const GroupElement& w) {
        const std::uint64_t idx = index++;
        if (sweep.stopped()) return;
        sweep.element();
        const RSPair pair = rs_map(w);
        for (int i = 0; i < params.r; ++i) {
          const OneDimValue expected = one_dim_rep(w, i, 1);
          const OneDimValue got = pi_from_tableaux(pair.P, pair.Q, i, params.r);
          sweep.check(expected == got, idx, w, i, "pi_i = sgn_i", expected, got);
        }
      },
      options.cap);
  return sweep.finish();
}

VerificationReport verify_membership(const GroupParams& params, const VerifyOptions& options) {
  Sweep sweep("membership", params, options);
  const GroupParams full = params.full();
  const int p = params.p;
  std::uint64_t index = 0;

  for_each_element(
      full,
      [&](const GroupElement& w) {
        const std::uint64_t idx = index++;
        if (sweep.stopped()) return;
        sweep.element();
        const bool member = is_member(w, p);
        const bool spin_ok = twice_spin(rs_map(w).P) % p == 0;
        sweep.check(member == spin_ok, idx, w, 0, "member iff 2 spin(P) = 0 mod p", member,
                    spin_ok);
      },
      options.cap);

  // Backwards: every same-shape pair with 2 spin = 0 mod p comes from a member.
  std::int64_t pairs = 0;
  for (const MultiPartition& shape : multipartitions_of(params.n, params.r)) {
    if (twice_spin(shape) % p != 0) continue;
    const auto tableaux = enumerate_standard_multitableaux(shape, params.n);
    for (const auto& P : tableaux) {
      for (const auto& Q : tableaux) {
        if (sweep.stopped()) break;
        const std::uint64_t idx = index++;
        ++pairs;
        sweep.element();
        const RSPair pair{P, Q};
        const GroupElement w = rs_inverse(pair, full);
        sweep.check(is_member(w, p), idx, w, 0, "pair with 2 spin = 0 mod p is a member", true,
                    false);
        sweep.check(rs_map(w) == pair, idx, w, 0, "rs_map(rs_inverse(pair)) = pair", true,
                    false);
      }
    }
  }
  const auto order = static_cast<std::int64_t>(group_order(params));
  sweep.check(pairs == order, index, GroupElement::identity(full), 0,
              "pair count equals |G(r,p,n)|", order, pairs);
  return sweep.finish();
}

VerificationReport verify_admissible(const GroupParams& params, const VerifyOptions& options) {
  Sweep sweep("admissible", params, options);
  const GroupParams full = params.full();
  std::uint64_t index = 0;

  for_each_element(
      full,
      [&](const GroupElement& w) {
        const std::uint64_t idx = index++;
        if (sweep.stopped()) return;
        sweep.element();
        const RSPair pair = rs_map(w);
        const std::int64_t inv_p = inv_multi(pair.P);
        const std::int64_t inv_q = inv_multi(pair.Q);

        for (int i = 1; i < full.n; ++i) {
          if (is_right_admissible(w, i)) {
            const GroupElement moved = right_admissible(w, i);
            const RSPair after = rs_map(moved);
            sweep.check(after.P == pair.P, idx, w, i, "P(R_i w) = P(w)", "unchanged",
                        "changed");
            const std::int64_t delta = inv_multi(after.Q) - inv_q;
            sweep.check(std::abs(delta) == 1, idx, w, i, "|inv Q(R_i w) - inv Q(w)| = 1",
                        std::int64_t{1}, delta);
            for (std::size_t k = 0; k < pair.Q.num_components(); ++k) {
              sweep.check(inv_tableau(after.Q[k]) == inv_tableau(pair.Q[k]), idx, w, i,
                          "inv Q_k fixed by R_i", inv_tableau(pair.Q[k]),
                          inv_tableau(after.Q[k]));
            }
          }
          if (is_left_admissible(w, i)) {
            const GroupElement moved = left_admissible(w, i);
            const RSPair after = rs_map(moved);
            sweep.check(after.Q == pair.Q, idx, w, i, "Q(L_i w) = Q(w)", "unchanged",
                        "changed");
            const std::int64_t delta = inv_multi(after.P) - inv_p;
            sweep.check(std::abs(delta) == 1, idx, w, i, "|inv P(L_i w) - inv P(w)| = 1",
                        std::int64_t{1}, delta);
            for (std::size_t k = 0; k < pair.P.num_components(); ++k) {
              sweep.check(inv_tableau(after.P[k]) == inv_tableau(pair.P[k]), idx, w, i,
                          "inv P_k fixed by L_i", inv_tableau(pair.P[k]),
                          inv_tableau(after.P[k]));
            }
          }
        }

        const GroupElement rep = ascending_representative(w);
        const auto moves = ascending_moves(w);
        const GroupElement replayed = apply_moves(w, moves);
        sweep.check(replayed == rep, idx, w, 0, "replayed moves reach the representative", rep,
                    replayed);
        sweep.check(is_ascending_element(rep), idx, w, 0, "representative is ascending", true,
                    false);
        const RSPair rep_pair = rs_map(rep);
        sweep.check(is_ascending_multitableau(rep_pair.P) && is_ascending_multitableau(rep_pair.Q),
                    idx, w, 0, "ascending element has ascending P and Q", true, false);
        for (int i = 0; i < full.r; ++i) {
          const bool at_w = theorem_holds_at(w, pair, i);
          const bool at_rep = theorem_holds_at(rep, rep_pair, i);
          sweep.check(at_w == at_rep, idx, w, i, "pi_i = sgn_i at w iff at representative",
                      at_w, at_rep);
        }
      },
      options.cap);
  return sweep.finish();
}

}  // namespace grpn
