#pragma once

#include <cmath>
#include <stdexcept>

#include "spectral/eigen.hpp"
#include "spectral/graph.hpp"

namespace spectral {

// Second-smallest Laplacian eigenvalue; ~0 for disconnected selections.
inline double algebraic_connectivity(const EdgeSelection &sel) {
    if (sel.graph().n() < 2) throw std::invalid_argument("algebraic_connectivity: n >= 2 required");
    return eigenvalues(laplacian(sel))[1];
}

// lambda2 and lambda3 in one eigensolve (power budget checks need both).
inline std::pair<double, double> lambda2_lambda3(const EdgeSelection &sel) {
    if (sel.graph().n() < 3) throw std::invalid_argument("lambda2_lambda3: n >= 3 required");
    Vector ev = eigenvalues(laplacian(sel));
    return {ev[1], ev[2]};
}

// Unit eigenvector of lambda2, orthogonal to the all-ones vector.
inline Vector fiedler_vector(const EdgeSelection &sel) {
    if (sel.graph().n() < 2) throw std::invalid_argument("fiedler_vector: n >= 2 required");
    return spectrum(laplacian(sel)).vector(1);
}

// max over unit f with f.1 = 0 of ||L^+ f||, attained at the Fiedler
// vector, hence equal to 1/lambda2. Unbounded for disconnected input.
inline double worst_case_compliance(const EdgeSelection &sel) {
    if (!is_connected(sel))
        throw std::invalid_argument("worst_case_compliance: selection is disconnected");
    return 1.0 / algebraic_connectivity(sel);
}

// Advisory spectral connectivity test; union-find is authoritative.
inline bool spectrally_connected(const EdgeSelection &sel) {
    return algebraic_connectivity(sel) > 1e-6 * (1.0 + sel.graph().max_weight());
}

} // namespace spectral
