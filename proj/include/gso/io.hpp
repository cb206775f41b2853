// Copyright 2026 The gso authors
// SPDX-License-Identifier: Apache-2.0
//
// File formats. States are {"n_modes": N, "matrix": [[...]]}, channels
// {"n_modes": N, "X": [[...]], "Y": [[...]]}, general channels
// {"n_modes": N, "A": [[...]], "B": [[...]], "C": [[...]]}, models
// {"n_modes": N, "H": [[...]], "nu": x}. Matrices are row-major 2N x 2N.
//
// Structural problems (bad JSON, wrong types, wrong dimensions) raise
// ParseError; semantic validity (uncertainty relation, complete positivity)
// is the caller's check.

#pragma once

#include "gso/channel.hpp"
#include "gso/common.hpp"
#include "gso/dynamics.hpp"
#include "gso/general_channel.hpp"
#include "gso/phasespace.hpp"

#include <stdexcept>
#include <string>

namespace gso {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CovMatrix parse_state(const std::string& text);
GaussianChannel parse_channel(const std::string& text);
GeneralChannel parse_general_channel(const std::string& text);
LindbladModel parse_model(const std::string& text);

CovMatrix load_state(const std::string& path);
GaussianChannel load_channel(const std::string& path);
GeneralChannel load_general_channel(const std::string& path);
LindbladModel load_model(const std::string& path);

std::string state_to_json(const CovMatrix& g);
std::string channel_to_json(const GaussianChannel& ch);

// Reads a whole file; ParseError when it cannot be opened.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace gso
