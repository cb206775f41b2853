// Copyright 2026 The gso authors
// SPDX-License-Identifier: Apache-2.0
//
// Two-mode entanglement from squeezed inputs: the balanced beam splitter,
// partial transposition, logarithmic negativity, and the bound tying a
// channel's asymptotic squeezing to the entanglement it can produce.

#pragma once

#include "gso/channel.hpp"
#include "gso/common.hpp"
#include "gso/phasespace.hpp"

namespace gso {

// Balanced two-mode beam splitter, block form
// [[sqrt(1/2) I2, sqrt(1/2) I2], [-sqrt(1/2) I2, sqrt(1/2) I2]].
PassiveOp balanced_beam_splitter();

// Lambda gamma Lambda with Lambda = diag(1, 1, 1, -1): momentum of the
// second mode negated. Requires exactly two modes.
Matrix partial_transpose(const CovMatrix& g);

// E_N = sum_i max(0, -ln nu_i) over the symplectic eigenvalues nu_i of the
// partial transpose. Natural logarithm. Input must be a valid two-mode CM.
double log_negativity(const CovMatrix& g, const Tolerances& tol = {});

// Rotate g1's softest direction onto Q, g2's onto P, stack the two modes and
// mix them on the balanced beam splitter.
CovMatrix entangle_canonical(const CovMatrix& g1, const CovMatrix& g2);

// Best log-negativity producible from the channel's optimal squeezing:
// -ln(s_opt), where s_opt is the fixed point (steps = 0) or the squeezing
// after `steps` optimal rounds from vacuum. Negative when s_opt > 1.
struct EntanglementBound {
  FixedPointStatus status = FixedPointStatus::Ok;
  double s_opt = std::numeric_limits<double>::quiet_NaN();
  double value = std::numeric_limits<double>::quiet_NaN();
  explicit operator bool() const { return status == FixedPointStatus::Ok; }
};
EntanglementBound entanglement_bound(const GaussianChannel& ch, int steps = 0,
                                     const Tolerances& tol = {});

}  // namespace gso
