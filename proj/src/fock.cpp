#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "qes/rabi.hpp"

namespace qes {

std::vector<double> fock_spectrum(double omega0, double g, int cutoff, int parity) {
  if (cutoff < 2) throw std::invalid_argument("fock_spectrum: cutoff too small");
  if (parity != 0 && parity != 1) throw std::invalid_argument("fock_spectrum: parity must be 0 or 1");
  // Photon numbers n ≡ parity (mod 2), n < cutoff; spin up block first.
  std::vector<int> photons;
  for (int n = parity; n < cutoff; n += 2) photons.push_back(n);
  const auto m = static_cast<Eigen::Index>(photons.size());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(2 * m, 2 * m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const double n = photons[static_cast<std::size_t>(i)];
    h(i, i) = omega0 / 2 + n;
    h(m + i, m + i) = -omega0 / 2 + n;
    if (i + 1 < m) {
      // ⟨n+2| b⁺² |n⟩ = √((n+1)(n+2)); σx couples the two spin blocks.
      const double amplitude = 2 * g * std::sqrt((n + 1) * (n + 2));
      h(i + 1, m + i) = h(m + i, i + 1) = amplitude;
      h(m + i + 1, i) = h(i, m + i + 1) = amplitude;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::EigenvaluesOnly);
  const auto& values = solver.eigenvalues();
  return {values.data(), values.data() + values.size()};
}

}  // namespace qes
