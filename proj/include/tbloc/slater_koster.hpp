#pragma once

#include <array>

namespace tbloc {

/// Two-centre bond-integral channels, in the conventional order.
enum SkChannel {
  kSsSigma = 0,
  kSpSigma,
  kPpSigma,
  kPpPi,
  kSdSigma,
  kPdSigma,
  kPdPi,
  kDdSigma,
  kDdPi,
  kDdDelta,
  kNumSkChannels
};

constexpr int kNumSpdOrbitals = 9;

/// Orbital order: s, px, py, pz, dxy, dyz, dzx, dx2-y2, d3z2-r2.
/// Fills the 9x9 two-centre block <a at 0|H|b at r*(l,m,n)> from the ten
/// channel integrals and the unit direction cosines.  Lower categories are
/// obtained from the table at the reversed direction, so the returned block
/// satisfies E_ba(d) = E_ab(-d) exactly.
///
/// Slater-Koster transformation table; generic scalar so that dual-number
/// evaluation yields analytic direction derivatives.
template <class T>
void sk_block(const std::array<T, kNumSkChannels>& V, const T& l, const T& m,
              const T& n, T out[kNumSpdOrbitals][kNumSpdOrbitals]) {
  const T l2 = l * l, m2 = m * m, n2 = n * n;
  const T lm = l * m, mn = m * n, nl = n * l;
  const double s3 = 1.7320508075688772;  // sqrt(3)
  const T lmm = l2 - m2;                 // l^2 - m^2
  const T nzz = n2 - 0.5 * (l2 + m2);    // n^2 - (l^2+m^2)/2

  // upper block (a <= b in category order); indices: s=0, p=1..3, d=4..8
  T e[kNumSpdOrbitals][kNumSpdOrbitals];

  e[0][0] = V[kSsSigma];
  e[0][1] = l * V[kSpSigma];
  e[0][2] = m * V[kSpSigma];
  e[0][3] = n * V[kSpSigma];

  e[1][1] = l2 * V[kPpSigma] + (1.0 - l2) * V[kPpPi];
  e[2][2] = m2 * V[kPpSigma] + (1.0 - m2) * V[kPpPi];
  e[3][3] = n2 * V[kPpSigma] + (1.0 - n2) * V[kPpPi];
  e[1][2] = lm * (V[kPpSigma] - V[kPpPi]);
  e[1][3] = nl * (V[kPpSigma] - V[kPpPi]);
  e[2][3] = mn * (V[kPpSigma] - V[kPpPi]);

  e[0][4] = s3 * lm * V[kSdSigma];
  e[0][5] = s3 * mn * V[kSdSigma];
  e[0][6] = s3 * nl * V[kSdSigma];
  e[0][7] = 0.5 * s3 * lmm * V[kSdSigma];
  e[0][8] = nzz * V[kSdSigma];

  e[1][4] = s3 * l2 * m * V[kPdSigma] + m * (1.0 - 2.0 * l2) * V[kPdPi];
  e[1][5] = s3 * lm * n * V[kPdSigma] - 2.0 * lm * n * V[kPdPi];
  e[1][6] = s3 * l2 * n * V[kPdSigma] + n * (1.0 - 2.0 * l2) * V[kPdPi];
  e[1][7] = 0.5 * s3 * l * lmm * V[kPdSigma] + l * (1.0 - lmm) * V[kPdPi];
  e[1][8] = l * nzz * V[kPdSigma] - s3 * l * n2 * V[kPdPi];

  e[2][4] = s3 * m2 * l * V[kPdSigma] + l * (1.0 - 2.0 * m2) * V[kPdPi];
  e[2][5] = s3 * m2 * n * V[kPdSigma] + n * (1.0 - 2.0 * m2) * V[kPdPi];
  e[2][6] = s3 * lm * n * V[kPdSigma] - 2.0 * lm * n * V[kPdPi];
  e[2][7] = 0.5 * s3 * m * lmm * V[kPdSigma] - m * (1.0 + lmm) * V[kPdPi];
  e[2][8] = m * nzz * V[kPdSigma] - s3 * m * n2 * V[kPdPi];

  e[3][4] = s3 * lm * n * V[kPdSigma] - 2.0 * lm * n * V[kPdPi];
  e[3][5] = s3 * n2 * m * V[kPdSigma] + m * (1.0 - 2.0 * n2) * V[kPdPi];
  e[3][6] = s3 * n2 * l * V[kPdSigma] + l * (1.0 - 2.0 * n2) * V[kPdPi];
  e[3][7] = 0.5 * s3 * n * lmm * V[kPdSigma] - n * lmm * V[kPdPi];
  e[3][8] = n * nzz * V[kPdSigma] + s3 * n * (l2 + m2) * V[kPdPi];

  e[4][4] = 3.0 * l2 * m2 * V[kDdSigma] + (l2 + m2 - 4.0 * l2 * m2) * V[kDdPi] +
            (n2 + l2 * m2) * V[kDdDelta];
  e[5][5] = 3.0 * m2 * n2 * V[kDdSigma] + (m2 + n2 - 4.0 * m2 * n2) * V[kDdPi] +
            (l2 + m2 * n2) * V[kDdDelta];
  e[6][6] = 3.0 * n2 * l2 * V[kDdSigma] + (n2 + l2 - 4.0 * n2 * l2) * V[kDdPi] +
            (m2 + n2 * l2) * V[kDdDelta];
  e[4][5] = 3.0 * l * m2 * n * V[kDdSigma] + nl * (1.0 - 4.0 * m2) * V[kDdPi] +
            nl * (m2 - 1.0) * V[kDdDelta];
  e[4][6] = 3.0 * l2 * mn * V[kDdSigma] + mn * (1.0 - 4.0 * l2) * V[kDdPi] +
            mn * (l2 - 1.0) * V[kDdDelta];
  e[5][6] = 3.0 * m * n2 * l * V[kDdSigma] + lm * (1.0 - 4.0 * n2) * V[kDdPi] +
            lm * (n2 - 1.0) * V[kDdDelta];
  e[4][7] = 1.5 * lm * lmm * V[kDdSigma] + 2.0 * lm * (m2 - l2) * V[kDdPi] +
            0.5 * lm * lmm * V[kDdDelta];
  e[5][7] = 1.5 * mn * lmm * V[kDdSigma] - mn * (1.0 + 2.0 * lmm) * V[kDdPi] +
            mn * (1.0 + 0.5 * lmm) * V[kDdDelta];
  e[6][7] = 1.5 * nl * lmm * V[kDdSigma] + nl * (1.0 - 2.0 * lmm) * V[kDdPi] -
            nl * (1.0 - 0.5 * lmm) * V[kDdDelta];
  e[4][8] = s3 * lm * nzz * V[kDdSigma] - 2.0 * s3 * lm * n2 * V[kDdPi] +
            0.5 * s3 * lm * (1.0 + n2) * V[kDdDelta];
  e[5][8] = s3 * mn * nzz * V[kDdSigma] + s3 * mn * (l2 + m2 - n2) * V[kDdPi] -
            0.5 * s3 * mn * (l2 + m2) * V[kDdDelta];
  e[6][8] = s3 * nl * nzz * V[kDdSigma] + s3 * nl * (l2 + m2 - n2) * V[kDdPi] -
            0.5 * s3 * nl * (l2 + m2) * V[kDdDelta];
  e[7][7] = 0.75 * lmm * lmm * V[kDdSigma] + (l2 + m2 - lmm * lmm) * V[kDdPi] +
            (n2 + 0.25 * lmm * lmm) * V[kDdDelta];
  e[7][8] = 0.5 * s3 * lmm * nzz * V[kDdSigma] + s3 * n2 * (m2 - l2) * V[kDdPi] +
            0.25 * s3 * (1.0 + n2) * lmm * V[kDdDelta];
  e[8][8] = nzz * nzz * V[kDdSigma] + 3.0 * n2 * (l2 + m2) * V[kDdPi] +
            0.75 * (l2 + m2) * (l2 + m2) * V[kDdDelta];

  // parity: s-p and p-d entries are odd, the rest even
  for (int a = 0; a < kNumSpdOrbitals; ++a)
    for (int b = a; b < kNumSpdOrbitals; ++b) {
      out[a][b] = e[a][b];
      bool odd = (a == 0 && b >= 1 && b <= 3) || (a >= 1 && a <= 3 && b >= 4);
      out[b][a] = odd ? -e[a][b] : e[a][b];
    }
}

}  // namespace tbloc
