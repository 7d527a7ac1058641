#pragma once

#include <array>
#include <string>
#include <vector>

#include "tbloc/model.hpp"
#include "tbloc/slater_koster.hpp"

namespace tbloc {

constexpr double kBohrInAngstrom = 0.529177210903;
constexpr double kRydbergInEv = 13.605693122994;

/// NRL-form parameters for one species, kept in the units of the source table
/// (energy_scale/length_scale convert to eV and Angstrom).
struct NrlSpecies {
  std::string symbol;
  int n_orb = 9;  // 4 (sp) or 9 (spd)
  int n_electrons = 4;
  double energy_scale = 1.0;  // native energy -> eV
  double length_scale = 1.0;  // native length -> Angstrom
  double lambda = 1.0;        // density exponent (rho uses lambda^2)
  double r_cut = 0.0;         // native length
  double l_c = 0.5, L_c = 5.0;
  bool exp_squared = true;  // decay exponent is coef^2 (NRL table convention)
  std::array<Eigen::Vector4d, 3> onsite{};              // s,p,d: a,b,c,d
  std::array<Eigen::Vector4d, kNumSkChannels> hop{};    // e,f,g,h per channel
  std::array<Eigen::Vector4d, kNumSkChannels> ovl{};    // p,q,r,s per channel
};

/// Non-orthogonal spd tight-binding model in the NRL parameterization:
/// environment-dependent diagonal on-site terms and polynomial-times-
/// exponential bond integrals under the universal cutoff function
/// f_c(r) = theta(R_c - r) / (1 + exp((r - R_c)/l_c + L_c)).
class NrlModel : public TbModel {
 public:
  explicit NrlModel(std::vector<NrlSpecies> species);

  int n_species() const override { return static_cast<int>(species_.size()); }
  int species_id(const std::string& name) const override;
  int n_orbitals(int sp) const override { return species_[sp].n_orb; }
  int n_electrons(int sp) const override { return species_[sp].n_electrons; }
  double cutoff() const override { return cutoff_; }
  bool orthogonal() const override { return false; }
  DecayMetadata decay_metadata() const override;

  void pair_block(int sp_i, int sp_j, const Vec3& xi, int order, BlockDerivs& h,
                  BlockDerivs* m) const override;
  bool has_env_onsite() const override { return true; }
  std::array<double, 3> density_kernel(int sp_i, int sp_j, double r) const override;
  void onsite(int sp, double rho, OnsiteDerivs& out) const override;

  const NrlSpecies& species(int sp) const { return species_[sp]; }

  /// bond integral value in eV (Hamiltonian) or dimensionless (overlap),
  /// at distance r in Angstrom; test hook.
  double bond_integral(int sp, SkChannel ch, double r, bool overlap) const;

 private:
  std::vector<NrlSpecies> species_;
  double cutoff_ = 0.0;  // Angstrom
};

}  // namespace tbloc
