#include "dfw/iterate.hpp"

#include <cmath>
#include <stdexcept>

namespace dfw {

bool is_l1(const Domain& d) { return std::holds_alternative<L1Ball>(d); }

double vertex_magnitude(const Domain& d) {
  if (const auto* b = std::get_if<L1Ball>(&d)) return b->beta;
  return 1.0;
}

Iterate Iterate::vertex(Domain domain, int j, double weight) {
  Iterate it(std::move(domain));
  if (weight != 0.0) it.support_[j] = weight;
  return it;
}

double Iterate::at(int j) const {
  auto it = support_.find(j);
  return it == support_.end() ? 0.0 : it->second;
}

void Iterate::step_toward_vertex(double gamma, int j, double coeff) {
  for (auto it = support_.begin(); it != support_.end();) {
    it->second *= (1.0 - gamma);
    if (it->second == 0.0)
      it = support_.erase(it);
    else
      ++it;
  }
  double w = at(j) + gamma * coeff;
  if (w == 0.0)
    support_.erase(j);
  else
    support_[j] = w;
}

double Iterate::l1_norm() const {
  double s = 0.0;
  for (const auto& [j, w] : support_) s += std::abs(w);
  return s;
}

double Iterate::sum() const {
  double s = 0.0;
  for (const auto& [j, w] : support_) s += w;
  return s;
}

void Iterate::validate() const {
  for (const auto& [j, w] : support_) {
    if (w == 0.0) throw std::logic_error("iterate: explicit zero in support");
    if (j < 0) throw std::logic_error("iterate: negative atom index");
  }
  if (const auto* ball = std::get_if<L1Ball>(&domain_)) {
    if (l1_norm() > ball->beta * (1.0 + 1e-12))
      throw std::logic_error("iterate: l1 norm exceeds beta");
  } else {
    for (const auto& [j, w] : support_) {
      if (w < 0.0) throw std::logic_error("iterate: negative simplex weight");
    }
    if (std::abs(sum() - 1.0) > 1e-12)
      throw std::logic_error("iterate: simplex weights do not sum to 1");
  }
}

}  // namespace dfw
