// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfsi Authors

#pragma once

#include <string>
#include <string_view>

#include "gfsi/lattice.hpp"
#include "gfsi/signal.hpp"
#include "gfsi/symplectic.hpp"

namespace gfsi::app {

// Flat mini-specs:
//   window:    gaussian:m=M | hermite:k=K,m=M
//   lattice:   square:delta=D | square45:delta=D | hex:delta=D
//              | basis:a,b,c,d,delta=D   (generator rescaled to density D)
//   transform: rotate:tau=T | flow:tau=T,m=M | shear:p=P | modular:a,b,c,d
//              | word:F1;F2;...  with Fi in {J, V=P, M=L, R=T}; the last factor
//                acts first
// Parse failures throw ErrorKind::config.

struct WindowSpec {
  enum class Kind { gaussian, hermite } kind = Kind::gaussian;
  int k = 0;
  double m = 1.0;
  std::string text;

  SampledSignal sample(const GridSpec& grid) const;
};

struct LatticeSpec {
  std::string kind;  // square, square45, hex, basis
  double delta = 1.0;
  Lattice lattice;
  std::string text;
};

struct TransformSpec {
  std::string kind;  // rotate, flow, shear, modular, word
  SymplecticMat matrix;
  std::string text;
};

WindowSpec parse_window(std::string_view text);
LatticeSpec parse_lattice(std::string_view text);
TransformSpec parse_transform(std::string_view text);

}  // namespace gfsi::app
