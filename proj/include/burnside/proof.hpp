#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "burnside/action.hpp"
#include "burnside/rational.hpp"

namespace burnside {

// Exact joint distribution of the three-stage experiment: choose uniformly
// and independently an element g, an orbit, then a point y of that orbit.
// Since y determines its orbit, the experiment marginalizes to pairs (g, y)
// with weight(g, y) = 1 / (|G| * N * |orb(y)|), N the orbit count. Total
// mass is exactly 1.
class ProbabilityModel {
public:
  static ProbabilityModel build(const GroupAction& action);

  const GroupAction& action() const { return action_; }
  const OrbitPartition& partition() const { return partition_; }
  std::size_t orbit_count() const { return partition_.orbit_count; }

  // 1 / (|G| * N * |orb(y)|); constant in g by independence.
  const Rational& weight(std::size_t g, std::uint32_t y) const;

  // P(gy = x): total weight of {(g, y) : act(g, y) = x}.
  const Rational& prob_gy_eq(std::uint32_t x) const;

  // P(y in orb(x)); equals 1/N for every x.
  Rational prob_y_in_orb(std::uint32_t x) const;

  // P(gy = x | y in orb(x)). The conditioning event has probability 1/N > 0.
  Rational prob_gy_eq_given_orb(std::uint32_t x) const;

  // P(gx = x) = |stabilizer(x)| / |G|. Also summed directly from the model
  // over {(g, y) : act(g, x) = x}; the two routes must agree.
  Rational prob_gx_eq_x(std::uint32_t x) const;

  // P(gx = x | y in orb(x)); collapses to P(gx = x) by independence.
  Rational prob_gx_eq_x_given_orb(std::uint32_t x) const;

private:
  explicit ProbabilityModel(GroupAction action);

  void check_point(std::uint32_t x) const;

  GroupAction action_;
  OrbitPartition partition_;
  std::vector<Rational> point_weight_;   // y -> weight(g, y), any g
  std::vector<Rational> prob_gy_eq_;     // x -> P(gy = x), one scan
  Rational total_point_weight_;          // sum_y weight(g, y) = 1/|G|
};

// One proof-step check, an exact componentwise equality: holds iff
// lhs == rhs. Scalar identities use one-element lists. On failure, witness
// pinpoints the first offending x or (x, y, k).
struct IdentityReport {
  std::string identity_name;
  bool holds = false;
  std::vector<Rational> lhs;
  std::vector<Rational> rhs;
  std::optional<std::string> witness;
};

// Checks that h -> k^-1 h^-1 maps {h : act(h,y) = x} injectively onto
// {h : act(h,x) = x}, given act(k, x) = y. lhs/rhs hold the sorted element
// indices of the image and of the stabilizer.
IdentityReport verify_bijection(const GroupAction& action, std::uint32_t y,
                                std::uint32_t x, std::size_t k);

// Runs the whole proof as six exact identity checks, in fixed order:
//   1 total-probability     sum_x P(gy=x) = 1
//   2 chain-rule            P(gy=x) = P(y in orb(x)) * P(gy=x | y in orb(x))
//   3 transporter-bijection verify_bijection for every x, y in orb(x), and
//                           every k with act(k,x) = y
//   4 conditional-collapse  P(gy=x | orb) = P(gx=x | orb) = P(gx=x)
//   5 orbit-uniformity      P(y in orb(x)) = 1/N, and (1/N) sum_x P(gx=x) = 1
//   6 orbit-count           sum_x P(gx=x) = fixed_pairs/|G| = direct count
std::vector<IdentityReport> verify_proof(const GroupAction& action);

}  // namespace burnside
