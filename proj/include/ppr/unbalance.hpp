#pragma once

#include <string>
#include <vector>

#include "ppr/graph.hpp"

namespace ppr {

// Squared cosine between the √-weight vector over Ē and the all-ones vector:
// (Σ_Ē √A_uv)² / (2m·‖A‖₁). Equals 1 iff all weights are equal; the smaller,
// the more unbalanced the graph.
double cos2_phi(const WeightedGraph& g);

// Per-node variant: (Σ_{x∈N(v)}√A_xv)² / (n(v)·d(v)).
double cos2_phi_node(const WeightedGraph& g, NodeId v);

// (1-α)/(2m) · Σ_v n(v)·cos²φ_v — the expected-cost ratio of edge-granular
// push over node-granular push under the normalized additive error policy.
double mean_superiority_factor(const WeightedGraph& g, double alpha);

// (√(ab) + √((1-a)(1-b)))²
double ab_gamma(double a, double b);

struct AbUnbalance {
  std::vector<double> b;            // per node: weight share of the ⌈a·n(v)⌉ heaviest edges
  std::vector<double> effective_a;  // per node: ⌈a·n(v)⌉/n(v), the realized fraction
  double max_violation;             // max over nodes of Σ√A_uv - allowance(a_v, b_v)
};

// Per-node (a,b) profile at prefix fraction a: b from the heaviest
// ⌈a·n(v)⌉ edges and the realized fraction a_v = ⌈a·n(v)⌉/n(v), with the
// bound check Σ√A_uv ≤ (√(a_v·b_v)+√((1-a_v)(1-b_v)))·√(n(v)d(v)). The
// realized fraction is the one the bound is stated for: a degree-1 node is
// (1,1)-unbalanced no matter how small a is. Degree-0 nodes get a = b = 1.
AbUnbalance ab_unbalance(const WeightedGraph& g, double a_fraction);

struct AbProfileEntry {
  double a;
  double b_min;
  double b_max;
  double gamma_max;
  double max_violation;
};

struct UnbalanceReport {
  double cos2_phi = 0.0;
  std::vector<double> per_node_cos2;
  double mean_factor = 0.0;  // Σ_v n(v)·cos²φ_v / (2m)
  std::vector<AbProfileEntry> ab_profile;

  std::string to_json() const;
};

UnbalanceReport build_unbalance_report(const WeightedGraph& g,
                                       const std::vector<double>& a_sweep = {0.1, 0.25, 0.5});

}  // namespace ppr
