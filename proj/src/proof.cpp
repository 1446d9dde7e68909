#include "burnside/proof.hpp"

#include <algorithm>
#include <utility>

#include "burnside/counting.hpp"

namespace burnside {

ProbabilityModel::ProbabilityModel(GroupAction action)
    : action_(std::move(action)), partition_(orbit_partition(action_)) {
  const BigInt order(action_.group().order());
  const BigInt orbits(partition_.orbit_count);

  point_weight_.reserve(action_.size());
  for (std::uint32_t y = 0; y < action_.size(); ++y) {
    const BigInt orbit_size(partition_.orbit_members[partition_.orbit_of[y]].size());
    point_weight_.emplace_back(BigInt(1), order * orbits * orbit_size);
    total_point_weight_ += point_weight_.back();
  }

  // P(gy = x) for every x in one pass over the support.
  prob_gy_eq_.assign(action_.size(), Rational(0));
  for (std::size_t g = 0; g < action_.group().order(); ++g) {
    for (std::uint32_t y = 0; y < action_.size(); ++y) {
      prob_gy_eq_[action_.apply(g, y)] += point_weight_[y];
    }
  }
}

ProbabilityModel ProbabilityModel::build(const GroupAction& action) {
  if (action.size() == 0) {
    throw Error("cannot build a probability model over an empty space");
  }
  return ProbabilityModel(action);
}

void ProbabilityModel::check_point(std::uint32_t x) const {
  if (x >= action_.size()) {
    throw OutOfRangeError("point " + std::to_string(x) +
                          " out of range for space of size " +
                          std::to_string(action_.size()));
  }
}

const Rational& ProbabilityModel::weight(std::size_t g, std::uint32_t y) const {
  if (g >= action_.group().order()) {
    throw OutOfRangeError("element index " + std::to_string(g) +
                          " out of range for group of order " +
                          std::to_string(action_.group().order()));
  }
  check_point(y);
  return point_weight_[y];
}

const Rational& ProbabilityModel::prob_gy_eq(std::uint32_t x) const {
  check_point(x);
  return prob_gy_eq_[x];
}

Rational ProbabilityModel::prob_y_in_orb(std::uint32_t x) const {
  check_point(x);
  Rational orbit_weight;
  for (std::uint32_t y : partition_.orbit_members[partition_.orbit_of[x]]) {
    orbit_weight += point_weight_[y];
  }
  return Rational(BigInt(action_.group().order())) * orbit_weight;
}

Rational ProbabilityModel::prob_gy_eq_given_orb(std::uint32_t x) const {
  check_point(x);
  // Joint of {gy = x and y in orb(x)}, summed on its own rather than reusing
  // prob_gy_eq (gy = x already forces y into orb(x), but this keeps the two
  // sides of the chain rule independently computed).
  Rational joint;
  for (std::size_t g = 0; g < action_.group().order(); ++g) {
    for (std::uint32_t y : partition_.orbit_members[partition_.orbit_of[x]]) {
      if (action_.apply(g, y) == x) joint += point_weight_[y];
    }
  }
  return joint / prob_y_in_orb(x);
}

Rational ProbabilityModel::prob_gx_eq_x(std::uint32_t x) const {
  check_point(x);
  const std::size_t stab = stabilizer(action_, x).size();
  const Rational closed_form(BigInt(stab), BigInt(action_.group().order()));
  // The event {gx = x} leaves y free, so the model sum factors through the
  // total point weight; disagreement would mean g is not independent of y.
  const Rational from_model = Rational(BigInt(stab)) * total_point_weight_;
  if (closed_form != from_model) {
    throw ConsistencyError("P(gx=x) routes disagree at x=" + std::to_string(x) +
                           ": " + closed_form.str() + " vs " +
                           from_model.str());
  }
  return closed_form;
}

Rational ProbabilityModel::prob_gx_eq_x_given_orb(std::uint32_t x) const {
  check_point(x);
  Rational orbit_weight;
  for (std::uint32_t y : partition_.orbit_members[partition_.orbit_of[x]]) {
    orbit_weight += point_weight_[y];
  }
  const std::size_t stab = stabilizer(action_, x).size();
  const Rational joint = Rational(BigInt(stab)) * orbit_weight;
  return joint / prob_y_in_orb(x);
}

IdentityReport verify_bijection(const GroupAction& action, std::uint32_t y,
                                std::uint32_t x, std::size_t k) {
  const FiniteGroup& group = action.group();
  if (y >= action.size() || x >= action.size()) {
    throw OutOfRangeError("point out of range for space of size " +
                          std::to_string(action.size()));
  }
  if (k >= group.order()) {
    throw OutOfRangeError("element index " + std::to_string(k) +
                          " out of range for group of order " +
                          std::to_string(group.order()));
  }
  if (action.apply(k, x) != y) {
    throw Error("element " + std::to_string(k) +
                " is not a witness: act(k, " + std::to_string(x) + ") = " +
                std::to_string(action.apply(k, x)) + ", expected " +
                std::to_string(y));
  }

  IdentityReport report;
  report.identity_name = "transporter-bijection(y=" + std::to_string(y) +
                         ", x=" + std::to_string(x) +
                         ", k=" + std::to_string(k) + ")";

  const Permutation& k_inv = group.element(group.inverse_index(k));
  std::vector<std::size_t> image;
  for (std::size_t h : transporter(action, y, x)) {
    const Permutation& h_inv = group.element(group.inverse_index(h));
    auto mapped = group.index_of(compose(k_inv, h_inv));
    if (!mapped) throw ConsistencyError("group not closed under composition");
    image.push_back(*mapped);
  }
  // Sorted with duplicates kept: multiset equality below checks image =
  // stabilizer and injectivity at once.
  std::sort(image.begin(), image.end());

  std::vector<std::size_t> stab = stabilizer(action, x);
  for (std::size_t i : image) report.lhs.emplace_back(BigInt(i));
  for (std::size_t i : stab) report.rhs.emplace_back(BigInt(i));
  report.holds = image == stab;
  if (!report.holds) {
    report.witness = "image of transporter(" + std::to_string(y) + ", " +
                     std::to_string(x) + ") under h -> k^-1 h^-1 (k=" +
                     std::to_string(k) + ") differs from stabilizer(" +
                     std::to_string(x) + ")";
  }
  return report;
}

std::vector<IdentityReport> verify_proof(const GroupAction& action) {
  ProbabilityModel model = ProbabilityModel::build(action);
  const std::size_t m = action.size();
  const Rational one(1);

  std::vector<IdentityReport> reports;

  {
    IdentityReport step;
    step.identity_name = "total-probability";
    Rational total;
    for (std::uint32_t x = 0; x < m; ++x) total += model.prob_gy_eq(x);
    step.lhs = {total};
    step.rhs = {one};
    step.holds = total == one;
    if (!step.holds) step.witness = "sum_x P(gy=x) = " + total.str();
    reports.push_back(std::move(step));
  }

  std::vector<Rational> gy_given_orb(m);
  std::vector<Rational> gx_given_orb(m);
  std::vector<Rational> gx(m);
  // On a corrupted action the independence confirmation inside
  // prob_gx_eq_x can fail; that must surface as a failing step-4 report,
  // not an exception.
  std::optional<std::string> independence_witness;
  for (std::uint32_t x = 0; x < m; ++x) {
    gy_given_orb[x] = model.prob_gy_eq_given_orb(x);
    gx_given_orb[x] = model.prob_gx_eq_x_given_orb(x);
    try {
      gx[x] = model.prob_gx_eq_x(x);
    } catch (const ConsistencyError& e) {
      if (!independence_witness) independence_witness = e.what();
      gx[x] = Rational(BigInt(stabilizer(action, x).size()),
                       BigInt(action.group().order()));
    }
  }

  {
    IdentityReport step;
    step.identity_name = "chain-rule";
    step.holds = true;
    for (std::uint32_t x = 0; x < m; ++x) {
      Rational lhs = model.prob_gy_eq(x);
      Rational rhs = model.prob_y_in_orb(x) * gy_given_orb[x];
      if (lhs != rhs && step.holds) {
        step.holds = false;
        step.witness = "x=" + std::to_string(x) + ": P(gy=x) = " + lhs.str() +
                       " but P(y in orb(x)) * P(gy=x | y in orb(x)) = " +
                       rhs.str();
      }
      step.lhs.push_back(std::move(lhs));
      step.rhs.push_back(std::move(rhs));
    }
    reports.push_back(std::move(step));
  }

  {
    IdentityReport step;
    step.identity_name = "transporter-bijection";
    std::uint64_t checked = 0;
    std::uint64_t passed = 0;
    for (std::uint32_t x = 0; x < m; ++x) {
      for (std::uint32_t y : orbit(action, x)) {
        // Every witness k with act(k, x) = y, not just one.
        for (std::size_t k : transporter(action, x, y)) {
          ++checked;
          IdentityReport sub = verify_bijection(action, y, x, k);
          if (sub.holds) {
            ++passed;
          } else if (!step.witness) {
            step.witness = "x=" + std::to_string(x) +
                           ", y=" + std::to_string(y) +
                           ", k=" + std::to_string(k) + ": " + *sub.witness;
          }
        }
      }
    }
    step.lhs = {Rational(BigInt(checked))};
    step.rhs = {Rational(BigInt(passed))};
    step.holds = checked == passed;
    reports.push_back(std::move(step));
  }

  {
    IdentityReport step;
    step.identity_name = "conditional-collapse";
    step.holds = true;
    if (independence_witness) {
      step.holds = false;
      step.witness = *independence_witness;
    }
    for (std::uint32_t x = 0; x < m; ++x) {
      if (gy_given_orb[x] != gx_given_orb[x] && step.holds) {
        step.holds = false;
        step.witness = "x=" + std::to_string(x) + ": P(gy=x | orb) = " +
                       gy_given_orb[x].str() + " but P(gx=x | orb) = " +
                       gx_given_orb[x].str();
      }
      step.lhs.push_back(gy_given_orb[x]);
      step.rhs.push_back(gx_given_orb[x]);
    }
    for (std::uint32_t x = 0; x < m; ++x) {
      if (gx_given_orb[x] != gx[x] && step.holds) {
        step.holds = false;
        step.witness = "x=" + std::to_string(x) + ": P(gx=x | orb) = " +
                       gx_given_orb[x].str() + " but P(gx=x) = " +
                       gx[x].str();
      }
      step.lhs.push_back(gx_given_orb[x]);
      step.rhs.push_back(gx[x]);
    }
    reports.push_back(std::move(step));
  }

  const Rational uniform(BigInt(1), BigInt(model.orbit_count()));
  Rational gx_sum;
  for (std::uint32_t x = 0; x < m; ++x) gx_sum += gx[x];

  {
    IdentityReport step;
    step.identity_name = "orbit-uniformity";
    step.holds = true;
    for (std::uint32_t x = 0; x < m; ++x) {
      Rational lhs = model.prob_y_in_orb(x);
      if (lhs != uniform && step.holds) {
        step.holds = false;
        step.witness = "x=" + std::to_string(x) + ": P(y in orb(x)) = " +
                       lhs.str() + ", expected " + uniform.str();
      }
      step.lhs.push_back(std::move(lhs));
      step.rhs.push_back(uniform);
    }
    Rational scaled = uniform * gx_sum;
    if (scaled != one && step.holds) {
      step.holds = false;
      step.witness = "(1/N) sum_x P(gx=x) = " + scaled.str();
    }
    step.lhs.push_back(std::move(scaled));
    step.rhs.push_back(one);
    reports.push_back(std::move(step));
  }

  {
    IdentityReport step;
    step.identity_name = "orbit-count";
    const Rational via_pairs(BigInt(fixed_pairs(action)),
                             BigInt(action.group().order()));
    // The lemma average, summed per element without the integer assertion
    // so a corrupted action yields a failing comparison instead of a throw.
    Rational via_lemma;
    for (std::size_t g = 0; g < action.group().order(); ++g) {
      via_lemma += Rational(BigInt(fix_set(action, g).points.size()),
                            BigInt(action.group().order()));
    }
    const Rational direct(BigInt(count_orbits_direct(action)));
    step.lhs = {gx_sum, via_pairs, via_lemma};
    step.rhs = {direct, direct, direct};
    step.holds =
        gx_sum == direct && via_pairs == direct && via_lemma == direct;
    if (!step.holds) {
      step.witness = "sum_x P(gx=x) = " + gx_sum.str() +
                     ", fixed_pairs/|G| = " + via_pairs.str() +
                     ", lemma average = " + via_lemma.str() +
                     ", direct count = " + direct.str();
    }
    reports.push_back(std::move(step));
  }

  return reports;
}

}  // namespace burnside
