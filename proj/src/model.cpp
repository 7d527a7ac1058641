#include "tbloc/model.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace tbloc {

void BlockDerivs::resize(int rows, int cols, int order) {
  value = Eigen::MatrixXd::Zero(rows, cols);
  if (order >= 1)
    for (auto& g : grad) g = Eigen::MatrixXd::Zero(rows, cols);
  if (order >= 2)
    for (auto& row : hess)
      for (auto& h : row) h = Eigen::MatrixXd::Zero(rows, cols);
}

ToyModel::ToyModel(std::vector<std::string> species, std::vector<double> eps,
                   double t0, double kappa, double r_cut)
    : species_(std::move(species)), eps_(std::move(eps)), t0_(t0), kappa_(kappa),
      r_cut_(r_cut) {
  if (species_.size() != eps_.size())
    throw std::invalid_argument("toy model species/eps mismatch");
  if (r_cut_ <= 0 || kappa_ <= 0) throw std::invalid_argument("toy model parameters");
}

int ToyModel::species_id(const std::string& name) const {
  for (size_t i = 0; i < species_.size(); ++i)
    if (species_[i] == name) return static_cast<int>(i);
  throw std::invalid_argument("unknown species: " + name);
}

double ToyModel::hopping(double r) const {
  return r >= r_cut_ ? 0.0 : t0_ * std::exp(-kappa_ * r);
}

DecayMetadata ToyModel::decay_metadata() const {
  double e0 = 0.0;
  for (double e : eps_) e0 = std::max(e0, std::abs(e));
  double a = std::abs(t0_);
  return {{std::max(a, e0), kappa_ * a, kappa_ * kappa_ * a * (1.0 + 2.0 / kappa_)},
          {kappa_, kappa_, kappa_}};
}

void ToyModel::pair_block(int, int, const Vec3& xi, int order, BlockDerivs& h,
                          BlockDerivs* m) const {
  h.resize(1, 1, order);
  if (m) m->resize(1, 1, order);
  double r = xi.norm();
  if (r >= r_cut_) return;
  double t = t0_ * std::exp(-kappa_ * r);
  h.value(0, 0) = t;
  if (order >= 1) {
    Vec3 u = xi / r;
    Vec3 g = -kappa_ * t * u;
    for (int c = 0; c < 3; ++c) h.grad[c](0, 0) = g[c];
    if (order >= 2) {
      Mat3 hess = kappa_ * kappa_ * t * (u * u.transpose()) -
                  (kappa_ * t / r) * (Mat3::Identity() - u * u.transpose());
      for (int c1 = 0; c1 < 3; ++c1)
        for (int c2 = 0; c2 < 3; ++c2) h.hess[c1][c2](0, 0) = hess(c1, c2);
    }
  }
}

void ToyModel::onsite(int sp, double, OnsiteDerivs& out) const {
  out.value = Eigen::VectorXd::Constant(1, eps_[sp]);
  out.d_rho = Eigen::VectorXd::Zero(1);
  out.d2_rho = Eigen::VectorXd::Zero(1);
}

NeighborTable model_neighbor_table(const TbModel& model, const Configuration& config) {
  // Gamma folding sums every image hop, so periodic assembly always
  // enumerates full image shells.
  return build_neighbor_table(config, model.cutoff(), config.periodic());
}

static std::vector<int> orbital_offsets(const TbModel& model,
                                        const Configuration& config,
                                        std::vector<int>* norb_out) {
  std::vector<int> offset(config.size());
  std::vector<int> norb(config.size());
  int acc = 0;
  for (int i = 0; i < config.size(); ++i) {
    offset[i] = acc;
    norb[i] = model.n_orbitals(config.species_of(i));
    acc += norb[i];
  }
  if (norb_out) *norb_out = std::move(norb);
  return offset;
}

Eigen::VectorXd pseudo_densities(const TbModel& model, const Configuration& config,
                                 const NeighborTable& table) {
  Eigen::VectorXd rho = Eigen::VectorXd::Zero(config.size());
  if (!model.has_env_onsite()) return rho;
  for (int i = 0; i < config.size(); ++i)
    for (const NeighborEntry& e : table.neighbors(i))
      rho[i] += model.density_kernel(config.species_of(i), config.species_of(e.j), e.r)[0];
  return rho;
}

double pseudo_density(const TbModel& model, const Configuration& config,
                      const NeighborTable& table, int site) {
  return pseudo_densities(model, config, table)[site];
}

HamiltonianPair assemble(const TbModel& model, const Configuration& config) {
  return assemble(model, config, model_neighbor_table(model, config));
}

HamiltonianPair assemble(const TbModel& model, const Configuration& config,
                         const NeighborTable& table) {
  AdmissibilityReport adm = check_admissible(config);
  if (!adm.pass) throw std::invalid_argument("configuration violates m_min");

  HamiltonianPair pair;
  pair.orthogonal = model.orthogonal();
  pair.offset = orbital_offsets(model, config, &pair.norb);
  int n = pair.offset.back() + pair.norb.back();
  pair.H = Eigen::MatrixXd::Zero(n, n);
  pair.M = Eigen::MatrixXd::Identity(n, n);

  Eigen::VectorXd rho = pseudo_densities(model, config, table);
  OnsiteDerivs onsite;
  BlockDerivs h, m;
  for (int i = 0; i < config.size(); ++i) {
    int sp_i = config.species_of(i);
    model.onsite(sp_i, rho[i], onsite);
    pair.H.block(pair.offset[i], pair.offset[i], pair.norb[i], pair.norb[i]) =
        onsite.value.asDiagonal();
    for (const NeighborEntry& e : table.neighbors(i)) {
      model.pair_block(sp_i, config.species_of(e.j), e.delta, 0, h,
                       pair.orthogonal ? nullptr : &m);
      pair.H.block(pair.offset[i], pair.offset[e.j], pair.norb[i], pair.norb[e.j]) +=
          h.value;
      if (!pair.orthogonal)
        pair.M.block(pair.offset[i], pair.offset[e.j], pair.norb[i], pair.norb[e.j]) +=
            m.value;
    }
  }
  return pair;
}

// d(rho_l)/d[y(m)]_axis for the sites l whose density depends on y(m)
static std::map<int, double> density_gradient(const TbModel& model,
                                              const Configuration& config,
                                              const NeighborTable& table, int m,
                                              int axis) {
  std::map<int, double> drho;
  if (!model.has_env_onsite()) return drho;
  int sp_m = config.species_of(m);
  for (const NeighborEntry& e : table.neighbors(m)) {
    if (e.j == m) continue;  // self image distances are rigid
    int sp_j = config.species_of(e.j);
    double u_axis = e.delta[axis] / e.r;
    // rho_m term phi(|y_j + T - y_m|)
    drho[m] += model.density_kernel(sp_m, sp_j, e.r)[1] * (-u_axis);
    // rho_j term phi(|y_m - T - y_j|), same bond length
    drho[e.j] += model.density_kernel(sp_j, sp_m, e.r)[1] * (-u_axis);
  }
  return drho;
}

SparseDeriv model_derivative(const TbModel& model, const Configuration& config,
                             const NeighborTable& table, int m, int axis) {
  if (model.smoothness_order() < 1)
    throw std::invalid_argument("model does not declare first derivatives");
  std::vector<int> norb;
  std::vector<int> offset = orbital_offsets(model, config, &norb);
  int n = offset.back() + norb.back();

  std::vector<Eigen::Triplet<double>> th, tm;
  auto add_block = [&](int i, int j, const Eigen::MatrixXd& b,
                       std::vector<Eigen::Triplet<double>>& t) {
    for (int a = 0; a < b.rows(); ++a)
      for (int c = 0; c < b.cols(); ++c)
        if (b(a, c) != 0.0) t.emplace_back(offset[i] + a, offset[j] + c, b(a, c));
  };

  BlockDerivs h, mm;
  BlockDerivs* movl = model.orthogonal() ? nullptr : &mm;
  for (const NeighborEntry& e : table.neighbors(m)) {
    if (e.j == m) continue;
    int sp_m = config.species_of(m), sp_j = config.species_of(e.j);
    // block (m, j): xi = y_j + T - y_m, d/dy_m = -d/dxi
    model.pair_block(sp_m, sp_j, e.delta, 1, h, movl);
    add_block(m, e.j, (-h.grad[axis]).eval(), th);
    if (movl) add_block(m, e.j, (-mm.grad[axis]).eval(), tm);
    // block (j, m): xi' = -delta, d/dy_m = +d/dxi'
    model.pair_block(sp_j, sp_m, -e.delta, 1, h, movl);
    add_block(e.j, m, h.grad[axis], th);
    if (movl) add_block(e.j, m, mm.grad[axis], tm);
  }

  if (model.has_env_onsite()) {
    Eigen::VectorXd rho = pseudo_densities(model, config, table);
    OnsiteDerivs ons;
    for (const auto& [l, d] : density_gradient(model, config, table, m, axis)) {
      model.onsite(config.species_of(l), rho[l], ons);
      for (int a = 0; a < norb[l]; ++a) {
        double v = ons.d_rho[a] * d;
        if (v != 0.0) th.emplace_back(offset[l] + a, offset[l] + a, v);
      }
    }
  }

  SparseDeriv out;
  out.dH.resize(n, n);
  out.dH.setFromTriplets(th.begin(), th.end());
  out.dM.resize(n, n);
  out.dM.setFromTriplets(tm.begin(), tm.end());
  return out;
}

SparseDeriv model_second_derivative(const TbModel& model, const Configuration& config,
                                    const NeighborTable& table, int m1, int a1,
                                    int m2, int a2) {
  if (model.smoothness_order() < 2)
    throw std::invalid_argument("model does not declare second derivatives");
  std::vector<int> norb;
  std::vector<int> offset = orbital_offsets(model, config, &norb);
  int n = offset.back() + norb.back();

  std::vector<Eigen::Triplet<double>> th, tm;
  auto add_block = [&](int i, int j, const Eigen::MatrixXd& b,
                       std::vector<Eigen::Triplet<double>>& t) {
    for (int a = 0; a < b.rows(); ++a)
      for (int c = 0; c < b.cols(); ++c)
        if (b(a, c) != 0.0) t.emplace_back(offset[i] + a, offset[j] + c, b(a, c));
  };

  BlockDerivs h, mm;
  BlockDerivs* movl = model.orthogonal() ? nullptr : &mm;
  if (m1 == m2) {
    for (const NeighborEntry& e : table.neighbors(m1)) {
      if (e.j == m1) continue;
      int sp_m = config.species_of(m1), sp_j = config.species_of(e.j);
      model.pair_block(sp_m, sp_j, e.delta, 2, h, movl);
      add_block(m1, e.j, h.hess[a1][a2], th);
      if (movl) add_block(m1, e.j, mm.hess[a1][a2], tm);
      model.pair_block(sp_j, sp_m, -e.delta, 2, h, movl);
      add_block(e.j, m1, h.hess[a1][a2], th);
      if (movl) add_block(e.j, m1, mm.hess[a1][a2], tm);
    }
  } else {
    for (const NeighborEntry& e : table.neighbors(m1)) {
      if (e.j != m2) continue;
      int sp_1 = config.species_of(m1), sp_2 = config.species_of(m2);
      // block (m1, m2): xi = y_m2 + T - y_m1: mixed derivative sign -1
      model.pair_block(sp_1, sp_2, e.delta, 2, h, movl);
      add_block(m1, m2, (-h.hess[a1][a2]).eval(), th);
      if (movl) add_block(m1, m2, (-mm.hess[a1][a2]).eval(), tm);
      model.pair_block(sp_2, sp_1, -e.delta, 2, h, movl);
      add_block(m2, m1, (-h.hess[a1][a2]).eval(), th);
      if (movl) add_block(m2, m1, (-mm.hess[a1][a2]).eval(), tm);
    }
  }

  if (model.has_env_onsite()) {
    Eigen::VectorXd rho = pseudo_densities(model, config, table);
    std::map<int, double> d1 = density_gradient(model, config, table, m1, a1);
    std::map<int, double> d2 = density_gradient(model, config, table, m2, a2);

    // second derivatives of rho_l
    std::map<int, double> dd;
    auto pair_hess = [&](int sp_i, int sp_j, const NeighborEntry& e) {
      auto k = model.density_kernel(sp_i, sp_j, e.r);
      Vec3 u = e.delta / e.r;
      Mat3 K = k[2] * (u * u.transpose()) +
               (k[1] / e.r) * (Mat3::Identity() - u * u.transpose());
      return K(a1, a2);
    };
    if (m1 == m2) {
      for (const NeighborEntry& e : table.neighbors(m1)) {
        if (e.j == m1) continue;
        dd[m1] += pair_hess(config.species_of(m1), config.species_of(e.j), e);
        dd[e.j] += pair_hess(config.species_of(e.j), config.species_of(m1), e);
      }
    } else {
      for (const NeighborEntry& e : table.neighbors(m1)) {
        if (e.j != m2) continue;
        dd[m1] -= pair_hess(config.species_of(m1), config.species_of(m2), e);
        dd[m2] -= pair_hess(config.species_of(m2), config.species_of(m1), e);
      }
    }

    OnsiteDerivs ons;
    std::map<int, double> affected = dd;
    for (const auto& [l, v] : d1)
      if (d2.count(l)) affected.emplace(l, 0.0);
    for (const auto& [l, unused] : affected) {
      model.onsite(config.species_of(l), rho[l], ons);
      double g1 = d1.count(l) ? d1.at(l) : 0.0;
      double g2 = d2.count(l) ? d2.at(l) : 0.0;
      double curv = dd.count(l) ? dd.at(l) : 0.0;
      for (int a = 0; a < norb[l]; ++a) {
        double v = ons.d2_rho[a] * g1 * g2 + ons.d_rho[a] * curv;
        if (v != 0.0) th.emplace_back(offset[l] + a, offset[l] + a, v);
      }
    }
  }

  SparseDeriv out;
  out.dH.resize(n, n);
  out.dH.setFromTriplets(th.begin(), th.end());
  out.dM.resize(n, n);
  out.dM.setFromTriplets(tm.begin(), tm.end());
  return out;
}

}  // namespace tbloc
