#pragma once

#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <variant>
#include <vector>

#include "dfw/atoms.hpp"
#include "dfw/iterate.hpp"
#include "dfw/kernel.hpp"

namespace dfw {

/// Visibility-scoped access to atoms. A node-local store exposes only the
/// columns the node owns plus atoms received over the network, so gradient
/// code cannot reach non-local data by construction.
class AtomStore {
 public:
  virtual ~AtomStore() = default;
  virtual const Column* find(int j) const = 0;
  virtual double label(int j) const = 0;
  virtual int dim() const = 0;
  virtual const std::vector<int>& base_ids() const = 0;

  const Column& require(int j) const;
};

/// Store over the full atom matrix (centralized solver).
class FullStore : public AtomStore {
 public:
  FullStore(const AtomMatrix& atoms, const std::vector<double>* labels);
  const Column* find(int j) const override;
  double label(int j) const override;
  int dim() const override { return atoms_->dim(); }
  const std::vector<int>& base_ids() const override { return ids_; }

 private:
  const AtomMatrix* atoms_;
  const std::vector<double>* labels_;
  std::vector<int> ids_;
};

/// Store over an owned subset plus a growing set of received atoms.
class NodeStore : public AtomStore {
 public:
  NodeStore(int dim, std::vector<int> owned_ids, std::vector<Column> owned_cols,
            std::vector<double> owned_labels);
  const Column* find(int j) const override;
  double label(int j) const override;
  int dim() const override { return dim_; }
  const std::vector<int>& base_ids() const override { return owned_ids_; }

  bool owns(int j) const { return owned_.count(j) > 0; }
  bool sees(int j) const { return find(j) != nullptr; }
  void add_received(int j, Column col, double label);

 private:
  int dim_;
  std::vector<int> owned_ids_;
  std::map<int, std::pair<Column, double>> owned_;
  std::map<int, std::pair<Column, double>> received_;
};

enum class ObjectiveKind { Lasso, SvmDual, Adaboost };

/// Objective f(alpha) = g(A alpha) with a running composite cache so that a
/// Frank-Wolfe step costs one column (or one kernel row) of work.
class Objective {
 public:
  virtual ~Objective() = default;

  virtual ObjectiveKind kind() const = 0;
  virtual double value(const Iterate& alpha) const = 0;
  virtual double grad_entry(int j) const = 0;
  /// cache' = (1-gamma)*cache + gamma*(contribution of coeff*e_j).
  virtual void apply_vertex_step(double gamma, int j, double coeff) = 0;
  virtual void rebuild_cache(const Iterate& alpha) = 0;
  /// f at (1-gamma)*alpha + gamma*coeff*e_j without committing the step.
  virtual double probe(const Iterate& alpha, double gamma, int j, double coeff) const = 0;

  virtual bool has_closed_form_linesearch() const = 0;
  /// q with gamma* = gap / (2q); `support_grad_dot` is <alpha, grad f>.
  virtual double linesearch_denominator(int j, double coeff, double support_grad_dot) const;

  /// Reals broadcast per atom payload: d, or d+1 for a labeled training point.
  virtual int payload_reals() const = 0;
  /// Called when atom j becomes visible through a broadcast.
  virtual void on_atom_received(int j, const Iterate& alpha);
};

class LassoObjective : public Objective {
 public:
  LassoObjective(const AtomStore& store, std::vector<double> target);

  ObjectiveKind kind() const override { return ObjectiveKind::Lasso; }
  double value(const Iterate& alpha) const override;
  double grad_entry(int j) const override;
  void apply_vertex_step(double gamma, int j, double coeff) override;
  void rebuild_cache(const Iterate& alpha) override;
  double probe(const Iterate& alpha, double gamma, int j, double coeff) const override;
  bool has_closed_form_linesearch() const override { return true; }
  double linesearch_denominator(int j, double coeff, double support_grad_dot) const override;
  int payload_reals() const override { return store_->dim(); }

  const std::vector<double>& composite() const { return cache_; }
  const std::vector<double>& target() const { return y_; }

 private:
  const std::vector<double>& residual_context() const;

  const AtomStore* store_;
  std::vector<double> y_;
  std::vector<double> cache_;  // A alpha
  mutable std::vector<double> grad_ctx_;  // 2 (A alpha - y)
  mutable bool ctx_dirty_ = true;
};

class AdaboostObjective : public Objective {
 public:
  AdaboostObjective(const AtomStore& store, double temperature);

  ObjectiveKind kind() const override { return ObjectiveKind::Adaboost; }
  double value(const Iterate& alpha) const override;
  double grad_entry(int j) const override;
  void apply_vertex_step(double gamma, int j, double coeff) override;
  void rebuild_cache(const Iterate& alpha) override;
  double probe(const Iterate& alpha, double gamma, int j, double coeff) const override;
  bool has_closed_form_linesearch() const override { return false; }
  int payload_reals() const override { return store_->dim(); }

  /// Mistake distribution w = exp(-A alpha / T) / sum(...), log-sum-exp shifted.
  std::vector<double> weights() const;
  double temperature() const { return temperature_; }
  const std::vector<double>& composite() const { return cache_; }

 private:
  const std::vector<double>& weight_context() const;

  const AtomStore* store_;
  double temperature_;
  std::vector<double> cache_;  // A alpha
  mutable std::vector<double> w_ctx_;
  mutable bool ctx_dirty_ = true;
};

class SvmDualObjective : public Objective {
 public:
  SvmDualObjective(const AtomStore& store, KernelSpec kernel, std::size_t row_cache_rows = 256);

  ObjectiveKind kind() const override { return ObjectiveKind::SvmDual; }
  double value(const Iterate& alpha) const override;
  double grad_entry(int j) const override;
  void apply_vertex_step(double gamma, int j, double coeff) override;
  void rebuild_cache(const Iterate& alpha) override;
  double probe(const Iterate& alpha, double gamma, int j, double coeff) const override;
  bool has_closed_form_linesearch() const override { return true; }
  double linesearch_denominator(int j, double coeff, double support_grad_dot) const override;
  int payload_reals() const override { return store_->dim() + 1; }
  void on_atom_received(int j, const Iterate& alpha) override;

  double ktilde(int i, int j) const;
  const KernelSpec& kernel() const { return kernel_; }

 private:
  const AtomStore* store_;
  KernelSpec kernel_;
  std::unordered_map<int, double> cache_;  // (Ktilde alpha)_j over visible atoms
  mutable KernelRowCache rows_;
};

struct LassoSpec {
  std::vector<double> target;
};
struct SvmSpec {
  std::vector<double> labels;  // +-1 per atom
  KernelSpec kernel;
};
struct AdaboostSpec {
  double temperature = 1.0;
};
using ObjectiveSpec = std::variant<LassoSpec, SvmSpec, AdaboostSpec>;

/// A full problem instance: atoms, objective family, constraint domain.
struct Problem {
  AtomMatrix atoms;
  ObjectiveSpec objective;
  Domain domain;

  ObjectiveKind kind() const;
  const std::vector<double>* labels() const;
};

std::unique_ptr<Objective> make_objective(const Problem& p, const AtomStore& store);
std::unique_ptr<FullStore> make_full_store(const Problem& p);
std::unique_ptr<NodeStore> make_node_store(const Problem& p, const std::vector<int>& owned_ids);

}  // namespace dfw
