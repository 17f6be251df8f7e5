#pragma once

#include <cstdint>
#include <random>

#include "spinportrait/spin.hpp"

namespace spinportrait {

using Rng = std::mt19937_64;

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the phases
/// of R's diagonal moved into Q.
UnitaryOp haar_unitary(int dim, Rng& rng);

/// Uniform direction on the sphere.
Direction random_direction(Rng& rng);

/// Normalized Haar-random pure state vector.
ComplexVector random_state_vector(int dim, Rng& rng);

/// G G^dagger / Tr(G G^dagger) for a complex Gaussian G (Ginibre ensemble,
/// full rank with probability 1).
DensityMatrix random_density_matrix(Spin spin, Rng& rng);

DensityMatrix random_pure_state(Spin spin, Rng& rng);

}  // namespace spinportrait
