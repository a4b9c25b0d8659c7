// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 parcs contributors
//
// Shared aliases and the error taxonomy used across the library.
#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace parcs {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RealMat = Eigen::MatrixXd;
using RealVec = Eigen::VectorXd;

// Caller handed us unusable parameters or data. The CLI maps this to exit 1.
struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A requested computation exceeds a built-in guard (e.g. exhaustive subset
// enumeration past its limit). The CLI maps this to exit 1.
struct ResourceLimit : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Numeric or I/O failure while executing a valid request. Exit 2 in the CLI.
struct RuntimeFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw InvalidInput(message);
}

}  // namespace parcs
