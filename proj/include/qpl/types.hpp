#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <complex>

namespace qpl {

using Complex = std::complex<double>;
using DenseMatrix = Eigen::MatrixXcd;
using DenseVector = Eigen::VectorXcd;
using SparseCd = Eigen::SparseMatrix<Complex>;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

// Internal electronic levels. The hot transition (ground <-> excited_hot)
// is driven on the phonon-adding sideband, the cold one on the
// phonon-removing sideband. Ordering is fixed for basis indexing.
enum class Level : int {
  Ground = 0,
  ExcitedHot = 1,
  ExcitedCold = 2,
};

inline constexpr int kSpinDim = 3;

// Dimensions of the composite spin (x) phonon space. Basis ordering is
// spin-major: composite index = spin_index * fock_cutoff + fock_index.
struct SpaceDims {
  int spin_dim = kSpinDim;
  int fock_cutoff = 0;

  // Throws InvalidDimensionError unless fock_cutoff >= 2.
  static SpaceDims of(int fock_cutoff);

  int composite() const { return spin_dim * fock_cutoff; }

  friend bool operator==(const SpaceDims&, const SpaceDims&) = default;
};

// One record of the numerical tolerances used for state validation.
struct Tolerances {
  double hermiticity = 1e-10;
  double trace = 1e-8;
  double positivity = 1e-8;  // min eigenvalue >= -positivity
};

}  // namespace qpl
