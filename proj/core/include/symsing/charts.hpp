#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "symsing/dataset.hpp"
#include "symsing/groebner.hpp"
#include "symsing/poly.hpp"
#include "symsing/report.hpp"

namespace symsing {

// A presented affine ring: a polynomial ring plus defining relations.
struct RingPresentation {
  Ring ring;
  std::vector<Polynomial> relations;
};

// Affine chart of a blow-up along an ideal, taken where the k-th ideal
// generator is nonzero. Variables are the ambient ones followed by one tag
// u_i per other generator, standing for g_i/g_k; relations are the ambient
// ones plus g_i - u_i*g_k, saturated at g_k.
struct ChartPresentation {
  Ring ring;
  std::vector<Polynomial> relations;
  size_t denominator;  // index of g_k among the ideal generators
  std::vector<size_t> tag_of;  // variable index of u_i, ring.nvars() for i==k
};

ChartPresentation chart_presentation(const RingPresentation& ambient,
                                     const std::vector<Polynomial>& ideal_gens,
                                     size_t k,
                                     const GroebnerOptions& opt = {});

// Images of the twelve chart variables under the three chart symmetries: the
// anti-symplectic involution, the order-two twist, and the order-three
// scaling. Together they generate the order-12 symmetry group of the chart.
std::vector<Polynomial> chart_symmetry_phi(const Ring& chart);
std::vector<Polynomial> chart_symmetry_tau(const Ring& chart);
std::vector<Polynomial> chart_symmetry_chi(const Ring& chart);

// The two syzygies that make h and the (14,2)-ratio redundant on the first
// smooth chart, checked as polynomial identities in x,y,X,Y.
Report verify_x24_syzygies(const Dataset& data);

// The traceless 3x3 matrix presentation of the second chart: trace zero,
// all nine 2x2 minors vanish through the ratio dictionary, and the rank-one
// factorization over the chart denominator holds entrywise.
Report verify_a2_isomorphism(const Dataset& data);

// The five-variable hypersurface presentation of the third chart: the
// reparametrized generators satisfy the displayed relation identically and
// the Jacobian criterion certifies smoothness.
Report verify_x93(const Dataset& data, const GroebnerOptions& opt = {});

// Isolatedness evidence for the fourth chart: every ambient generator lies
// in the radical of the ideal spanned by the chart relations and the eight
// recorded boundary ratios, and that ideal is proper.
Report verify_isolatedness_yogh(const Dataset& data,
                                const GroebnerOptions& opt = {});

// Dimension bounds for the recorded subvarieties containing the preimage of
// the origin in each of the four charts; each must have dimension at most 2.
Report verify_preimage_dimensions(const Dataset& data,
                                  const GroebnerOptions& opt = {});

// The divisor ideal J on the fourth chart: generators parse with the stated
// weights, the six-ideal orbit under the chart symmetries closes up, and the
// divisor has dimension three.
Report verify_ideal_j_and_chart(const Dataset& data,
                                const GroebnerOptions& opt = {});

}  // namespace symsing
