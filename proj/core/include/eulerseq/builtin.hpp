#pragma once

#include "eulerseq/io.hpp"

namespace eulerseq::builtin {

// The bundled example documents (also shipped under data/). The conic is the
// quadric cone k[x,z,y]/(z^2 - x*y) with its divisor {0} + {inf}; the ICIS
// ring is the codimension-2 singularity with weights (8,8,5,2,2,2) and its
// Veronese-reduced hypersurface form.
io::json conic_ring_doc(const Field& f);
io::json icis_ring_doc();
io::json icis_reduced_ring_doc();
io::json conic_divisor_doc(const Field& f);
io::json point_divisor_doc(const Field& f);       // {0}
io::json half_point_divisor_doc(const Field& f);  // (1/2){0}
io::json half_third_divisor_doc(const Field& f);  // (1/2){0} + (1/3){inf}

// The degree -1 derivation of the ICIS ring, as generator images.
HomogeneousDerivation icis_eta(const GradedRing& ring);

}  // namespace eulerseq::builtin
