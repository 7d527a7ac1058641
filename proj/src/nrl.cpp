#include "tbloc/nrl.hpp"

#include <cmath>
#include <stdexcept>

#include "tbloc/dual.hpp"

namespace tbloc {

namespace {

using std::exp;
using std::sqrt;

// overlap channels with a Kronecker delta leading term (same angular momentum)
constexpr bool kChannelDelta[kNumSkChannels] = {true,  false, true,  true,  false,
                                                false, false, true,  true,  true};

template <class T>
T cutoff_fn(const NrlSpecies& sp, const T& r_native) {
  return 1.0 / (1.0 + exp((r_native - sp.r_cut) * (1.0 / sp.l_c) + sp.L_c));
}

template <class T>
T bond_value(const NrlSpecies& sp, int ch, const T& r_native, bool overlap) {
  const Eigen::Vector4d& c = overlap ? sp.ovl[ch] : sp.hop[ch];
  double decay = sp.exp_squared ? c[3] * c[3] : c[3];
  T poly = overlap ? (kChannelDelta[ch] ? 1.0 : 0.0) +
                         r_native * (c[0] + r_native * (c[1] + r_native * c[2]))
                   : c[0] + r_native * (c[1] + r_native * c[2]);
  return poly * exp(-decay * r_native) * cutoff_fn(sp, r_native);
}

template <class T>
void nrl_block_impl(const NrlSpecies& sp, const T xi[3], bool overlap,
                    T out[kNumSpdOrbitals][kNumSpdOrbitals]) {
  T r2 = xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2];
  T r = sqrt(r2);
  T r_native = r * (1.0 / sp.length_scale);
  std::array<T, kNumSkChannels> V;
  int n_ch = sp.n_orb >= 9 ? kNumSkChannels : 4;
  for (int ch = 0; ch < kNumSkChannels; ++ch)
    V[ch] = ch < n_ch ? bond_value(sp, ch, r_native, overlap) : T(0.0);
  if (!overlap)
    for (int ch = 0; ch < n_ch; ++ch) V[ch] = V[ch] * sp.energy_scale;
  T ir = 1.0 / r;
  T l = xi[0] * ir, m = xi[1] * ir, n = xi[2] * ir;
  sk_block(V, l, m, n, out);
}

}  // namespace

NrlModel::NrlModel(std::vector<NrlSpecies> species) : species_(std::move(species)) {
  if (species_.empty()) throw std::invalid_argument("NRL model needs a species");
  for (const NrlSpecies& sp : species_) {
    if (sp.n_orb != 4 && sp.n_orb != 9)
      throw std::invalid_argument("NRL orbital set must be sp (4) or spd (9)");
    if (sp.r_cut <= 0) throw std::invalid_argument("NRL cutoff must be positive");
    cutoff_ = std::max(cutoff_, sp.r_cut * sp.length_scale);
  }
}

int NrlModel::species_id(const std::string& name) const {
  for (size_t i = 0; i < species_.size(); ++i)
    if (species_[i].symbol == name) return static_cast<int>(i);
  throw std::invalid_argument("unknown species: " + name);
}

double NrlModel::bond_integral(int sp, SkChannel ch, double r, bool overlap) const {
  const NrlSpecies& s = species_[sp];
  double rn = r / s.length_scale;
  if (rn >= s.r_cut) return 0.0;
  double v = bond_value(s, ch, rn, overlap);
  return overlap ? v : v * s.energy_scale;
}

void NrlModel::pair_block(int sp_i, int sp_j, const Vec3& xi, int order,
                          BlockDerivs& h, BlockDerivs* m) const {
  if (sp_i != sp_j)
    throw std::invalid_argument(
        "NRL parameters for mixed-species pairs are not available");
  const NrlSpecies& sp = species_[sp_i];
  int no = sp.n_orb;
  h.resize(no, no, order);
  if (m) m->resize(no, no, order);
  double r = xi.norm();
  if (r / sp.length_scale >= sp.r_cut) return;  // theta gate: exactly zero

  if (order == 0) {
    double x[3] = {xi[0], xi[1], xi[2]};
    double block[kNumSpdOrbitals][kNumSpdOrbitals];
    nrl_block_impl(sp, x, false, block);
    for (int a = 0; a < no; ++a)
      for (int b = 0; b < no; ++b) h.value(a, b) = block[a][b];
    if (m) {
      nrl_block_impl(sp, x, true, block);
      for (int a = 0; a < no; ++a)
        for (int b = 0; b < no; ++b) m->value(a, b) = block[a][b];
    }
    return;
  }

  Dual2 x[3] = {Dual2::seed(xi[0], 0), Dual2::seed(xi[1], 1), Dual2::seed(xi[2], 2)};
  Dual2 block[kNumSpdOrbitals][kNumSpdOrbitals];
  for (int pass = 0; pass < (m ? 2 : 1); ++pass) {
    BlockDerivs& out = pass == 0 ? h : *m;
    nrl_block_impl(sp, x, pass == 1, block);
    for (int a = 0; a < no; ++a)
      for (int b = 0; b < no; ++b) {
        const Dual2& d = block[a][b];
        out.value(a, b) = d.v;
        for (int c = 0; c < 3; ++c) out.grad[c](a, b) = d.g[c];
        if (order >= 2)
          for (int c1 = 0; c1 < 3; ++c1)
            for (int c2 = 0; c2 < 3; ++c2) out.hess[c1][c2](a, b) = d.h(c1, c2);
      }
  }
}

std::array<double, 3> NrlModel::density_kernel(int sp_i, int, double r) const {
  const NrlSpecies& sp = species_[sp_i];
  double rn = r / sp.length_scale;
  if (rn >= sp.r_cut) return {0.0, 0.0, 0.0};
  double lam2 = sp.lambda * sp.lambda;
  double g = std::exp(-lam2 * rn);
  double g1 = -lam2 * g, g2 = lam2 * lam2 * g;
  double fc = 1.0 / (1.0 + std::exp((rn - sp.r_cut) / sp.l_c + sp.L_c));
  double fc1 = -fc * (1.0 - fc) / sp.l_c;
  double fc2 = -fc1 * (1.0 - 2.0 * fc) / sp.l_c;
  double s = 1.0 / sp.length_scale;
  return {g * fc, (g1 * fc + g * fc1) * s,
          (g2 * fc + 2.0 * g1 * fc1 + g * fc2) * s * s};
}

void NrlModel::onsite(int sp, double rho, OnsiteDerivs& out) const {
  const NrlSpecies& s = species_[sp];
  out.value = Eigen::VectorXd::Zero(s.n_orb);
  out.d_rho = Eigen::VectorXd::Zero(s.n_orb);
  out.d2_rho = Eigen::VectorXd::Zero(s.n_orb);
  for (int orb = 0; orb < s.n_orb; ++orb) {
    int ch = orb == 0 ? 0 : (orb <= 3 ? 1 : 2);
    const Eigen::Vector4d& c = s.onsite[ch];
    if (rho <= 0.0) {
      out.value[orb] = c[0] * s.energy_scale;
      continue;
    }
    double p13 = std::cbrt(rho);  // rho^{1/3}
    double p23 = p13 * p13, p43 = p23 * p23;
    out.value[orb] = (c[0] + c[1] * p23 + c[2] * p43 + c[3] * rho * rho) * s.energy_scale;
    out.d_rho[orb] = ((2.0 / 3.0) * c[1] / p13 + (4.0 / 3.0) * c[2] * p13 +
                      2.0 * c[3] * rho) * s.energy_scale;
    out.d2_rho[orb] = (-(2.0 / 9.0) * c[1] / (p13 * rho) +
                       (4.0 / 9.0) * c[2] / p23 + 2.0 * c[3]) * s.energy_scale;
  }
}

DecayMetadata NrlModel::decay_metadata() const {
  // declared exponent: the slowest channel decay; prefactors from a sampled
  // envelope of the block and its first two derivative tensors
  double gamma = std::numeric_limits<double>::infinity();
  for (const NrlSpecies& sp : species_) {
    int n_ch = sp.n_orb >= 9 ? kNumSkChannels : 4;
    for (int ch = 0; ch < n_ch; ++ch) {
      double dh = sp.exp_squared ? sp.hop[ch][3] * sp.hop[ch][3] : sp.hop[ch][3];
      double dm = sp.exp_squared ? sp.ovl[ch][3] * sp.ovl[ch][3] : sp.ovl[ch][3];
      gamma = std::min(gamma, std::min(dh, dm) / sp.length_scale);
    }
  }
  gamma *= 0.9;  // slack for the polynomial factor

  std::array<double, 3> pref = {0.0, 0.0, 0.0};
  BlockDerivs h, m;
  for (int isp = 0; isp < n_species(); ++isp) {
    const NrlSpecies& sp = species_[isp];
    double onsite_max = 0.0;
    OnsiteDerivs ons;
    onsite(isp, 0.0, ons);
    onsite_max = ons.value.cwiseAbs().maxCoeff();
    pref[0] = std::max(pref[0], onsite_max);
    Vec3 dir = Vec3(0.36, 0.48, 0.8);
    for (double r = 0.8; r < sp.r_cut * sp.length_scale; r += 0.1) {
      pair_block(isp, isp, r * dir, 2, h, &m);
      double e = std::exp(gamma * r);
      pref[0] = std::max(pref[0], h.value.cwiseAbs().maxCoeff() * e);
      for (int c = 0; c < 3; ++c)
        pref[1] = std::max(pref[1], h.grad[c].cwiseAbs().maxCoeff() * e);
      for (int c1 = 0; c1 < 3; ++c1)
        for (int c2 = 0; c2 < 3; ++c2)
          pref[2] = std::max(pref[2], h.hess[c1][c2].cwiseAbs().maxCoeff() * e);
    }
  }
  for (double& p : pref) p *= 1.05;
  return {{pref[0], pref[1], pref[2]}, {gamma, gamma, gamma}};
}

}  // namespace tbloc
