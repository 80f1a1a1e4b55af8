#pragma once

#include <map>
#include <variant>

namespace dfw {

struct L1Ball {
  double beta;
};
struct Simplex {};

using Domain = std::variant<L1Ball, Simplex>;

bool is_l1(const Domain& d);
double vertex_magnitude(const Domain& d);  // beta for the l1 ball, 1 for the simplex

/// Sparse weight vector alpha with explicit support. Entries are never
/// stored as exact zeros. The empty support is the alpha = 0 pre-start
/// state, feasible only for the l1 ball.
class Iterate {
 public:
  explicit Iterate(Domain domain) : domain_(std::move(domain)) {}

  static Iterate zero(double beta) { return Iterate(L1Ball{beta}); }
  static Iterate vertex(Domain domain, int j, double weight);

  const Domain& domain() const { return domain_; }
  const std::map<int, double>& support() const { return support_; }
  double at(int j) const;
  int support_size() const { return static_cast<int>(support_.size()); }

  /// alpha <- (1-gamma)*alpha + gamma*coeff*e_j, pruning exact zeros.
  void step_toward_vertex(double gamma, int j, double coeff);

  double l1_norm() const;
  double sum() const;

  /// Throws if the domain invariant is violated.
  void validate() const;

  bool operator==(const Iterate& other) const { return support_ == other.support_; }

 private:
  std::map<int, double> support_;
  Domain domain_;
};

}  // namespace dfw
