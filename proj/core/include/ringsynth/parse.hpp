#pragma once

#include <string>
#include <string_view>

#include "ringsynth/errors.hpp"
#include "ringsynth/spec.hpp"

namespace ringsynth {

// Parses a single formula. Operators: ! & | -> <-> G F X U W W[k]; atoms are
// signal names with an optional _i / _j / _<digits> index suffix; true and
// false are literals. line0 offsets reported positions.
Fml parse_formula(std::string_view text, int line0 = 1, int col0 = 1);

// Parses a spec file:
//   [ROLE] generic-process | zero-process | monolithic-after-hub
//   [INPUTS] local: a, b; global: c
//   [OUTPUTS] tok, snd, g            (or local:/global: parts)
//   [ASSUME] <name:> <formula>       (one per line, optional label)
//   [GUARANTEE] <name:> <formula>
// '#' starts a comment. Unlabeled formulas get A1.., G1.. names in order.
ParamSpec parse_spec(std::string_view text);

ParamSpec parse_spec_file(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace ringsynth
