#include "dfw/objectives.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace dfw {

const Column& AtomStore::require(int j) const {
  const Column* c = find(j);
  if (!c) throw std::out_of_range("atom " + std::to_string(j) + " is not visible in this store");
  return *c;
}

FullStore::FullStore(const AtomMatrix& atoms, const std::vector<double>* labels)
    : atoms_(&atoms), labels_(labels) {
  ids_.resize(atoms.count());
  std::iota(ids_.begin(), ids_.end(), 0);
}

const Column* FullStore::find(int j) const {
  if (j < 0 || j >= atoms_->count()) return nullptr;
  return &atoms_->col(j);
}

double FullStore::label(int j) const { return labels_ ? (*labels_)[j] : 0.0; }

NodeStore::NodeStore(int dim, std::vector<int> owned_ids, std::vector<Column> owned_cols,
                     std::vector<double> owned_labels)
    : dim_(dim), owned_ids_(std::move(owned_ids)) {
  for (std::size_t k = 0; k < owned_ids_.size(); ++k) {
    double lab = owned_labels.empty() ? 0.0 : owned_labels[k];
    owned_.emplace(owned_ids_[k], std::make_pair(std::move(owned_cols[k]), lab));
  }
}

const Column* NodeStore::find(int j) const {
  auto it = owned_.find(j);
  if (it != owned_.end()) return &it->second.first;
  auto r = received_.find(j);
  if (r != received_.end()) return &r->second.first;
  return nullptr;
}

double NodeStore::label(int j) const {
  auto it = owned_.find(j);
  if (it != owned_.end()) return it->second.second;
  auto r = received_.find(j);
  if (r != received_.end()) return r->second.second;
  throw std::out_of_range("label: atom not visible");
}

void NodeStore::add_received(int j, Column col, double label) {
  if (owned_.count(j)) return;  // own copy is authoritative
  received_.insert_or_assign(j, std::make_pair(std::move(col), label));
}

void Objective::on_atom_received(int, const Iterate&) {}

double Objective::linesearch_denominator(int, double, double) const {
  throw std::logic_error("objective has no closed-form line search");
}

// ---------------------------------------------------------------------------
// Lasso: f(alpha) = ||y - A alpha||_2^2

LassoObjective::LassoObjective(const AtomStore& store, std::vector<double> target)
    : store_(&store), y_(std::move(target)), cache_(y_.size(), 0.0) {
  if (static_cast<int>(y_.size()) != store.dim())
    throw DimensionError("lasso: target dimension mismatch");
}

const std::vector<double>& LassoObjective::residual_context() const {
  if (ctx_dirty_) {
    grad_ctx_.resize(cache_.size());
    for (std::size_t i = 0; i < cache_.size(); ++i) grad_ctx_[i] = 2.0 * (cache_[i] - y_[i]);
    ctx_dirty_ = false;
  }
  return grad_ctx_;
}

double LassoObjective::value(const Iterate&) const {
  double s = 0.0;
  for (std::size_t i = 0; i < cache_.size(); ++i) {
    double r = y_[i] - cache_[i];
    s += r * r;
  }
  return s;
}

double LassoObjective::grad_entry(int j) const {
  return store_->require(j).dot(residual_context());
}

void LassoObjective::apply_vertex_step(double gamma, int j, double coeff) {
  for (double& z : cache_) z *= (1.0 - gamma);
  store_->require(j).axpy(gamma * coeff, cache_);
  ctx_dirty_ = true;
}

void LassoObjective::rebuild_cache(const Iterate& alpha) {
  std::fill(cache_.begin(), cache_.end(), 0.0);
  for (const auto& [j, w] : alpha.support()) store_->require(j).axpy(w, cache_);
  ctx_dirty_ = true;
}

double LassoObjective::probe(const Iterate&, double gamma, int j, double coeff) const {
  const Column& a = store_->require(j);
  std::vector<double> z(cache_);
  for (double& v : z) v *= (1.0 - gamma);
  a.axpy(gamma * coeff, z);
  double s = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    double r = y_[i] - z[i];
    s += r * r;
  }
  return s;
}

double LassoObjective::linesearch_denominator(int j, double coeff, double) const {
  // ||A(s - alpha)||^2 with As = coeff * a_j and A alpha = cache
  const Column& a = store_->require(j);
  std::vector<double> dir(cache_.size());
  for (std::size_t i = 0; i < dir.size(); ++i) dir[i] = -cache_[i];
  a.axpy(coeff, dir);
  double s = 0.0;
  for (double v : dir) s += v * v;
  return s;
}

// ---------------------------------------------------------------------------
// l1-Adaboost: f(alpha) = log( (1/d) sum_i exp(-(A alpha)_i / T) )

AdaboostObjective::AdaboostObjective(const AtomStore& store, double temperature)
    : store_(&store), temperature_(temperature), cache_(store.dim(), 0.0) {
  if (temperature_ <= 0.0) throw std::invalid_argument("adaboost: temperature must be positive");
}

namespace {
double log_mean_exp_neg(const std::vector<double>& z, double temperature) {
  double m = -std::numeric_limits<double>::infinity();
  for (double v : z) m = std::max(m, -v / temperature);
  double s = 0.0;
  for (double v : z) s += std::exp(-v / temperature - m);
  return m + std::log(s) - std::log(static_cast<double>(z.size()));
}
}  // namespace

const std::vector<double>& AdaboostObjective::weight_context() const {
  if (ctx_dirty_) {
    double m = -std::numeric_limits<double>::infinity();
    for (double v : cache_) m = std::max(m, -v / temperature_);
    w_ctx_.resize(cache_.size());
    double s = 0.0;
    for (std::size_t i = 0; i < cache_.size(); ++i) {
      w_ctx_[i] = std::exp(-cache_[i] / temperature_ - m);
      s += w_ctx_[i];
    }
    for (double& w : w_ctx_) w /= s;
    ctx_dirty_ = false;
  }
  return w_ctx_;
}

double AdaboostObjective::value(const Iterate&) const {
  return log_mean_exp_neg(cache_, temperature_);
}

double AdaboostObjective::grad_entry(int j) const {
  // grad f(alpha)_j = -(1/T) * w . a_j  (chain rule through g; the source
  // formula -w.A matches at T = 1)
  return -store_->require(j).dot(weight_context()) / temperature_;
}

void AdaboostObjective::apply_vertex_step(double gamma, int j, double coeff) {
  for (double& z : cache_) z *= (1.0 - gamma);
  store_->require(j).axpy(gamma * coeff, cache_);
  ctx_dirty_ = true;
}

void AdaboostObjective::rebuild_cache(const Iterate& alpha) {
  std::fill(cache_.begin(), cache_.end(), 0.0);
  for (const auto& [j, w] : alpha.support()) store_->require(j).axpy(w, cache_);
  ctx_dirty_ = true;
}

double AdaboostObjective::probe(const Iterate&, double gamma, int j, double coeff) const {
  std::vector<double> z(cache_);
  for (double& v : z) v *= (1.0 - gamma);
  store_->require(j).axpy(gamma * coeff, z);
  return log_mean_exp_neg(z, temperature_);
}

std::vector<double> AdaboostObjective::weights() const { return weight_context(); }

// ---------------------------------------------------------------------------
// L2-SVM dual: f(alpha) = alpha^T Ktilde alpha over the simplex

SvmDualObjective::SvmDualObjective(const AtomStore& store, KernelSpec kernel,
                                   std::size_t row_cache_rows)
    : store_(&store), kernel_(std::move(kernel)), rows_(row_cache_rows) {
  for (int j : store.base_ids()) cache_[j] = 0.0;
}

double SvmDualObjective::ktilde(int i, int j) const {
  if (i == j) return kernel_.augmented_diag(store_->require(i), store_->label(i));
  return rows_.get(j, i, [&] {
    return kernel_.augmented(store_->require(i), store_->label(i), i, store_->require(j),
                             store_->label(j), j);
  });
}

double SvmDualObjective::value(const Iterate& alpha) const {
  double s = 0.0;
  for (const auto& [j, w] : alpha.support()) s += w * cache_.at(j);
  return s;
}

double SvmDualObjective::grad_entry(int j) const { return 2.0 * cache_.at(j); }

void SvmDualObjective::apply_vertex_step(double gamma, int j, double coeff) {
  for (auto& [l, v] : cache_) v = (1.0 - gamma) * v + gamma * coeff * ktilde(l, j);
}

void SvmDualObjective::rebuild_cache(const Iterate& alpha) {
  for (auto& [l, v] : cache_) {
    double s = 0.0;
    for (const auto& [j, w] : alpha.support()) s += w * ktilde(l, j);
    v = s;
  }
}

double SvmDualObjective::probe(const Iterate& alpha, double gamma, int j, double coeff) const {
  // f((1-g)a + g s) = (1-g)^2 f(a) + 2 g (1-g) coeff (K a)_j + g^2 coeff^2 k_jj
  double f = value(alpha);
  double ka_j = cache_.at(j);
  double kjj = kernel_.augmented_diag(store_->require(j), store_->label(j));
  double om = 1.0 - gamma;
  return om * om * f + 2.0 * gamma * om * coeff * ka_j + gamma * gamma * coeff * coeff * kjj;
}

double SvmDualObjective::linesearch_denominator(int j, double coeff, double support_grad_dot) const {
  // (s-alpha)^T Ktilde (s-alpha) = coeff^2 k_jj - coeff*grad_j + <alpha, grad>/2
  double kjj = kernel_.augmented_diag(store_->require(j), store_->label(j));
  return coeff * coeff * kjj - coeff * grad_entry(j) + 0.5 * support_grad_dot;
}

void SvmDualObjective::on_atom_received(int j, const Iterate& alpha) {
  if (cache_.count(j)) return;
  double s = 0.0;
  for (const auto& [l, w] : alpha.support()) s += w * ktilde(j, l);
  cache_[j] = s;
}

// ---------------------------------------------------------------------------

ObjectiveKind Problem::kind() const {
  if (std::holds_alternative<LassoSpec>(objective)) return ObjectiveKind::Lasso;
  if (std::holds_alternative<SvmSpec>(objective)) return ObjectiveKind::SvmDual;
  return ObjectiveKind::Adaboost;
}

const std::vector<double>* Problem::labels() const {
  if (const auto* svm = std::get_if<SvmSpec>(&objective)) return &svm->labels;
  return nullptr;
}

std::unique_ptr<Objective> make_objective(const Problem& p, const AtomStore& store) {
  if (const auto* lasso = std::get_if<LassoSpec>(&p.objective))
    return std::make_unique<LassoObjective>(store, lasso->target);
  if (const auto* svm = std::get_if<SvmSpec>(&p.objective))
    return std::make_unique<SvmDualObjective>(store, svm->kernel);
  const auto& ada = std::get<AdaboostSpec>(p.objective);
  return std::make_unique<AdaboostObjective>(store, ada.temperature);
}

std::unique_ptr<FullStore> make_full_store(const Problem& p) {
  return std::make_unique<FullStore>(p.atoms, p.labels());
}

std::unique_ptr<NodeStore> make_node_store(const Problem& p, const std::vector<int>& owned_ids) {
  std::vector<Column> cols;
  std::vector<double> labels;
  cols.reserve(owned_ids.size());
  const std::vector<double>* all_labels = p.labels();
  for (int j : owned_ids) {
    cols.push_back(p.atoms.col(j));
    if (all_labels) labels.push_back((*all_labels)[j]);
  }
  return std::make_unique<NodeStore>(p.atoms.dim(), owned_ids, std::move(cols),
                                     std::move(labels));
}

}  // namespace dfw
