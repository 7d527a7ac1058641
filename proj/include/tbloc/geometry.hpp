#pragma once

#include <Eigen/Dense>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace tbloc {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Periodic cell: rows of `vectors` are the lattice vectors in Angstrom.
struct Cell {
  Mat3 vectors = Mat3::Identity();
  std::array<bool, 3> pbc = {true, true, true};

  Vec3 translation(const Eigen::Vector3i& n) const {
    return vectors.transpose() * n.cast<double>();
  }
  /// Distance between lattice planes normal to direction k (Angstrom).
  double plane_spacing(int k) const;
};

/// Finite set of atomic sites (species label per site, positions in Angstrom),
/// optionally periodic.  Site ids are the dense indices 0..N-1.
class Configuration {
 public:
  Configuration() = default;
  Configuration(std::vector<std::string> species_names, std::vector<int> species,
                Eigen::Matrix<double, Eigen::Dynamic, 3> positions,
                std::optional<Cell> cell, double m_min);

  int size() const { return static_cast<int>(species_.size()); }
  const std::vector<int>& species() const { return species_; }
  int species_of(int site) const { return species_[site]; }
  const std::string& species_name(int id) const { return species_names_[id]; }
  const std::vector<std::string>& species_names() const { return species_names_; }
  const Eigen::Matrix<double, Eigen::Dynamic, 3>& positions() const { return positions_; }
  Vec3 position(int site) const { return positions_.row(site).transpose(); }
  const std::optional<Cell>& cell() const { return cell_; }
  double m_min() const { return m_min_; }

  bool periodic() const;
  /// Minimum-image displacement x_j - x_i (images over the +-1 offset shell).
  Vec3 min_image_delta(int i, int j) const;

  Configuration displaced(const Eigen::Matrix<double, Eigen::Dynamic, 3>& u) const;
  Configuration with_position(int site, const Vec3& x) const;

 private:
  std::vector<std::string> species_names_;
  std::vector<int> species_;
  Eigen::Matrix<double, Eigen::Dynamic, 3> positions_;
  std::optional<Cell> cell_;
  double m_min_ = 0.5;
};

struct AdmissibilityReport {
  bool pass = true;
  double min_distance = 0.0;
  int site_a = -1, site_b = -1;  // closest pair (site_a == site_b: periodic self image)
  double m_min = 0.0;
};

/// True minimum pairwise (minimum-image) distance vs the declared m_min.
AdmissibilityReport check_admissible(const Configuration& config);

/// Displacement field u on a reference configuration, with the decay exponent
/// Upsilon (1/Angstrom) of the weighted finite-difference seminorm.
struct DisplacementField {
  Configuration base;
  Eigen::Matrix<double, Eigen::Dynamic, 3> u;
  double upsilon = 1.0;
};

/// ( sum_l sum_{rho} e^{-2 Upsilon |rho|} |u(l+rho) - u(l)|^2 )^(1/2) over all
/// ordered site pairs of the finite configuration.
double seminorm_l2_upsilon(const DisplacementField& disp);

struct NeighborEntry {
  int j;                  // neighbor site id
  Eigen::Vector3i image;  // lattice image offset
  double r;               // |delta|
  Vec3 delta;             // x_j + T(image) - x_i
};

class NeighborTable {
 public:
  double cutoff = 0.0;
  std::vector<std::vector<NeighborEntry>> lists;

  const std::vector<NeighborEntry>& neighbors(int i) const { return lists[i]; }
  int size() const { return static_cast<int>(lists.size()); }
};

/// All pairs with (image) distance <= cutoff, symmetric and sorted.  For
/// periodic configurations the minimum-image convention requires
/// cutoff <= half the shortest plane spacing; pass multi_image = true to
/// enumerate as many image shells as the cutoff needs instead.
NeighborTable build_neighbor_table(const Configuration& config, double cutoff,
                                   bool multi_image = false);

}  // namespace tbloc
