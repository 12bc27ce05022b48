/* Copyright 2026 The Supersep Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef SUPERSEP_IO_HPP_
#define SUPERSEP_IO_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "supersep/optics.hpp"

namespace supersep::io {

// Quantities with an explicit unit suffix; a bare number is rejected with
// InvalidInput. Results are SI (metres, radians, kg, m/s).
double parse_length(std::string_view text);    // nm um mm cm m
double parse_angle(std::string_view text);     // rad mrad deg
double parse_mass(std::string_view text);      // kg g u
double parse_velocity(std::string_view text);  // m/s mm/s km/s

// Plain number (for dimensionless quantities such as alpha or a charge in
// natural units). Accepts "p/q" fractions.
double parse_number(std::string_view text);
long parse_integer(std::string_view text);
bool parse_bool(std::string_view text);

// "lo:hi" with units on both ends.
optics::Window parse_window(std::string_view text);

// Shortest form that is never lossy: printf("%.17g").
std::string format_double(double v);

struct CsvTable {
  std::vector<std::string> comments;  // without the leading '#'
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

// Comment lines first ("# ..."), then the column header, then rows.
void write_csv(std::ostream& os, const CsvTable& table);

// Inverse of write_csv. Throws InvalidInput on ragged or non-numeric rows.
CsvTable read_csv(std::istream& is);

}  // namespace supersep::io

#endif  // SUPERSEP_IO_HPP_
