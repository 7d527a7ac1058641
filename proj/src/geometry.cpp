#include "tbloc/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tbloc {

double Cell::plane_spacing(int k) const {
  // Rows of `vectors` are lattice vectors; columns of inverse are the duals.
  Mat3 inv = vectors.inverse();
  return 1.0 / inv.col(k).norm();
}

Configuration::Configuration(std::vector<std::string> species_names,
                             std::vector<int> species,
                             Eigen::Matrix<double, Eigen::Dynamic, 3> positions,
                             std::optional<Cell> cell, double m_min)
    : species_names_(std::move(species_names)),
      species_(std::move(species)),
      positions_(std::move(positions)),
      cell_(std::move(cell)),
      m_min_(m_min) {
  if (static_cast<int>(species_.size()) != positions_.rows())
    throw std::invalid_argument("species/positions size mismatch");
  for (int s : species_)
    if (s < 0 || s >= static_cast<int>(species_names_.size()))
      throw std::invalid_argument("species id out of range");
  if (m_min_ <= 0.0) throw std::invalid_argument("m_min must be positive");
}

bool Configuration::periodic() const {
  return cell_ && (cell_->pbc[0] || cell_->pbc[1] || cell_->pbc[2]);
}

Vec3 Configuration::min_image_delta(int i, int j) const {
  Vec3 d = position(j) - position(i);
  if (!periodic()) return d;
  Vec3 best = d;
  double best_n = d.squaredNorm();
  const Cell& c = *cell_;
  int r0 = c.pbc[0] ? 1 : 0, r1 = c.pbc[1] ? 1 : 0, r2 = c.pbc[2] ? 1 : 0;
  for (int a = -r0; a <= r0; ++a)
    for (int b = -r1; b <= r1; ++b)
      for (int g = -r2; g <= r2; ++g) {
        Vec3 cand = d + c.translation(Eigen::Vector3i(a, b, g));
        double n = cand.squaredNorm();
        if (n < best_n) {
          best_n = n;
          best = cand;
        }
      }
  return best;
}

Configuration Configuration::displaced(
    const Eigen::Matrix<double, Eigen::Dynamic, 3>& u) const {
  if (u.rows() != positions_.rows())
    throw std::invalid_argument("displacement size mismatch");
  Configuration out = *this;
  out.positions_ += u;
  return out;
}

Configuration Configuration::with_position(int site, const Vec3& x) const {
  Configuration out = *this;
  out.positions_.row(site) = x.transpose();
  return out;
}

AdmissibilityReport check_admissible(const Configuration& config) {
  if (config.size() < 1) throw std::invalid_argument("empty configuration");
  AdmissibilityReport rep;
  rep.m_min = config.m_min();
  rep.min_distance = std::numeric_limits<double>::infinity();
  const int n = config.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double d;
      if (i == j) {
        if (!config.periodic()) continue;
        // nearest periodic self image
        const Cell& c = *config.cell();
        d = std::numeric_limits<double>::infinity();
        int r0 = c.pbc[0] ? 1 : 0, r1 = c.pbc[1] ? 1 : 0, r2 = c.pbc[2] ? 1 : 0;
        for (int a = -r0; a <= r0; ++a)
          for (int b = -r1; b <= r1; ++b)
            for (int g = -r2; g <= r2; ++g) {
              if (a == 0 && b == 0 && g == 0) continue;
              d = std::min(d, c.translation(Eigen::Vector3i(a, b, g)).norm());
            }
        if (!std::isfinite(d)) continue;
      } else {
        d = config.min_image_delta(i, j).norm();
      }
      if (d < rep.min_distance) {
        rep.min_distance = d;
        rep.site_a = i;
        rep.site_b = j;
      }
    }
  }
  if (n == 1 && !config.periodic()) rep.min_distance = std::numeric_limits<double>::infinity();
  rep.pass = rep.min_distance >= config.m_min();
  return rep;
}

double seminorm_l2_upsilon(const DisplacementField& disp) {
  const Configuration& c = disp.base;
  if (disp.u.rows() != c.positions().rows())
    throw std::invalid_argument("displacement size mismatch");
  const int n = c.size();
  double acc = 0.0;
  for (int l = 0; l < n; ++l) {
    for (int k = 0; k < n; ++k) {
      if (k == l) continue;
      double rho = (c.position(k) - c.position(l)).norm();
      double diff2 = (disp.u.row(k) - disp.u.row(l)).squaredNorm();
      acc += std::exp(-2.0 * disp.upsilon * rho) * diff2;
    }
  }
  return std::sqrt(acc);
}

NeighborTable build_neighbor_table(const Configuration& config, double cutoff,
                                   bool multi_image) {
  if (cutoff <= 0.0) throw std::invalid_argument("cutoff must be positive");
  const int n = config.size();
  NeighborTable table;
  table.cutoff = cutoff;
  table.lists.assign(n, {});

  Eigen::Vector3i shells = Eigen::Vector3i::Zero();
  if (config.periodic()) {
    const Cell& c = *config.cell();
    for (int k = 0; k < 3; ++k) {
      if (!c.pbc[k]) continue;
      double h = c.plane_spacing(k);
      if (cutoff > 0.5 * h && !multi_image)
        throw std::invalid_argument(
            "cutoff exceeds half the cell plane spacing; minimum-image is "
            "ambiguous (enable multi-image mode)");
      shells[k] = multi_image ? static_cast<int>(std::ceil(cutoff / h)) + 1 : 1;
    }
  }

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Vec3 d0 = config.position(j) - config.position(i);
      if (!multi_image) {
        // one representative per pair, the minimum image
        if (i == j) continue;  // self images are beyond cutoff <= h/2
        Vec3 best = d0;
        Eigen::Vector3i best_img = Eigen::Vector3i::Zero();
        for (int a = -shells[0]; a <= shells[0]; ++a)
          for (int b = -shells[1]; b <= shells[1]; ++b)
            for (int g = -shells[2]; g <= shells[2]; ++g) {
              Eigen::Vector3i img(a, b, g);
              Vec3 d = d0;
              if (config.cell()) d += config.cell()->translation(img);
              if (d.squaredNorm() < best.squaredNorm() - 1e-14) {
                best = d;
                best_img = img;
              }
            }
        if (best.norm() <= cutoff) table.lists[i].push_back({j, best_img, best.norm(), best});
        continue;
      }
      for (int a = -shells[0]; a <= shells[0]; ++a)
        for (int b = -shells[1]; b <= shells[1]; ++b)
          for (int g = -shells[2]; g <= shells[2]; ++g) {
            Eigen::Vector3i img(a, b, g);
            if (i == j && img == Eigen::Vector3i::Zero()) continue;
            Vec3 d = d0;
            if (config.cell()) d += config.cell()->translation(img);
            double r = d.norm();
            if (r > cutoff) continue;
            table.lists[i].push_back({j, img, r, d});
          }
    }
    std::sort(table.lists[i].begin(), table.lists[i].end(),
              [](const NeighborEntry& x, const NeighborEntry& y) {
                if (x.j != y.j) return x.j < y.j;
                return std::lexicographical_compare(
                    x.image.data(), x.image.data() + 3, y.image.data(),
                    y.image.data() + 3);
              });
  }
  return table;
}

}  // namespace tbloc
