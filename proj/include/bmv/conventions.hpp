#pragma once

#include <array>

namespace bmv {

// Sign and weight tables that fix the conventions of the closed-form route.
// Branch order for every table is (RR, RL, LR, LL).
//
// The canonical table is the only physically meaningful one. Other values
// exist so the self-check can be run against deliberately corrupted
// conventions and prove that it notices; the matrix evolution never reads
// this table.
struct SignConventions {
  // Signs of the four branches after the input splitters act on |L>1|R>2.
  std::array<double, 4> split_signs{+1.0, +1.0, -1.0, -1.0};
  // xi = sum w_k phi_k, Delta = (sum w_k phi_k) / 2.
  std::array<double, 4> xi_weights{+1.0, -1.0, -1.0, +1.0};
  std::array<double, 4> delta1_weights{+1.0, +1.0, -1.0, -1.0};
  std::array<double, 4> delta2_weights{-1.0, +1.0, -1.0, +1.0};

  friend bool operator==(const SignConventions&, const SignConventions&) = default;
};

inline constexpr SignConventions kCanonicalConventions{};

}  // namespace bmv
