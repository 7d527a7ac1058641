#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <array>
#include <memory>
#include <vector>

#include "tbloc/geometry.hpp"

namespace tbloc {

/// Decay constants (h_j, gamma_j) for j = 0..nu: |d^j h(xi)| <= h_j e^{-gamma_j |xi|}.
struct DecayMetadata {
  std::vector<double> prefactor;
  std::vector<double> exponent;
  int order() const { return static_cast<int>(prefactor.size()) - 1; }
};

/// Dense Hamiltonian/overlap pair with the site -> orbital block map.
struct HamiltonianPair {
  Eigen::MatrixXd H;  // eV
  Eigen::MatrixXd M;  // identity for orthogonal models
  bool orthogonal = true;
  std::vector<int> offset;  // first orbital row of each site
  std::vector<int> norb;    // orbitals per site

  int n() const { return static_cast<int>(H.rows()); }
  int n_sites() const { return static_cast<int>(offset.size()); }
};

/// Value/gradient/Hessian of a pair block w.r.t. the bond vector xi.
struct BlockDerivs {
  Eigen::MatrixXd value;
  std::array<Eigen::MatrixXd, 3> grad;
  std::array<std::array<Eigen::MatrixXd, 3>, 3> hess;
  void resize(int rows, int cols, int order);
};

/// On-site diagonal H block as a function of the local density rho,
/// with derivatives w.r.t. rho.
struct OnsiteDerivs {
  Eigen::VectorXd value, d_rho, d2_rho;
};

/// Two-centre tight-binding model: hopping/overlap kernels per species pair,
/// environment-dependent on-site terms, and decay metadata per (TB).
class TbModel {
 public:
  virtual ~TbModel() = default;

  virtual int n_species() const = 0;
  virtual int species_id(const std::string& name) const = 0;
  virtual int n_orbitals(int species) const = 0;
  virtual int n_electrons(int species) const = 0;
  virtual double cutoff() const = 0;
  virtual int smoothness_order() const { return 2; }
  virtual bool orthogonal() const = 0;
  virtual DecayMetadata decay_metadata() const = 0;

  /// hopping (and overlap unless orthogonal) block for xi = y_j - y_i,
  /// with analytic xi-derivatives up to `order`.
  virtual void pair_block(int sp_i, int sp_j, const Vec3& xi, int order,
                          BlockDerivs& h, BlockDerivs* m) const = 0;

  /// pseudo-density radial kernel phi(r) and derivatives; zero if the
  /// model has no environment-dependent on-site terms.
  virtual bool has_env_onsite() const { return false; }
  virtual std::array<double, 3> density_kernel(int sp_i, int sp_j, double r) const {
    (void)sp_i, (void)sp_j, (void)r;
    return {0.0, 0.0, 0.0};
  }
  virtual void onsite(int sp, double rho, OnsiteDerivs& out) const = 0;
};

/// Single-orbital toy model: on-site eps per species, hopping t0 e^{-kappa r}
/// with a hard cutoff.  Orthogonal; closed-form derivatives.
class ToyModel : public TbModel {
 public:
  ToyModel(std::vector<std::string> species, std::vector<double> eps, double t0,
           double kappa, double r_cut);
  static ToyModel single(double eps, double t0, double kappa, double r_cut) {
    return ToyModel({"A"}, {eps}, t0, kappa, r_cut);
  }

  int n_species() const override { return static_cast<int>(eps_.size()); }
  int species_id(const std::string& name) const override;
  int n_orbitals(int) const override { return 1; }
  int n_electrons(int) const override { return 1; }
  double cutoff() const override { return r_cut_; }
  bool orthogonal() const override { return true; }
  DecayMetadata decay_metadata() const override;
  void pair_block(int sp_i, int sp_j, const Vec3& xi, int order, BlockDerivs& h,
                  BlockDerivs* m) const override;
  void onsite(int sp, double rho, OnsiteDerivs& out) const override;

  double hopping(double r) const;
  double t0() const { return t0_; }
  double kappa() const { return kappa_; }

 private:
  std::vector<std::string> species_;
  std::vector<double> eps_;
  double t0_, kappa_, r_cut_;
};

/// Hamiltonian/overlap assembly over all neighbor-table pairs; entries beyond
/// the model cutoff are exactly zero.  For periodic configurations all image
/// hops are folded in (Gamma-point convention).
HamiltonianPair assemble(const TbModel& model, const Configuration& config);
HamiltonianPair assemble(const TbModel& model, const Configuration& config,
                         const NeighborTable& table);

NeighborTable model_neighbor_table(const TbModel& model, const Configuration& config);

/// rho_l = sum_k phi(r_lk) over neighbors within the model cutoff.
double pseudo_density(const TbModel& model, const Configuration& config,
                      const NeighborTable& table, int site);
Eigen::VectorXd pseudo_densities(const TbModel& model, const Configuration& config,
                                 const NeighborTable& table);

/// Sparse dH/d[y(m)]_axis (and dM); only rows/cols touching m are nonzero.
struct SparseDeriv {
  Eigen::SparseMatrix<double> dH, dM;
};
SparseDeriv model_derivative(const TbModel& model, const Configuration& config,
                             const NeighborTable& table, int m, int axis);
SparseDeriv model_second_derivative(const TbModel& model, const Configuration& config,
                                    const NeighborTable& table, int m1, int a1,
                                    int m2, int a2);

}  // namespace tbloc
