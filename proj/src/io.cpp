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

#include "supersep/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

#include "supersep/error.hpp"

namespace supersep::io {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

// Parses a leading floating-point literal; returns it and the rest.
std::pair<double, std::string_view> split_number(std::string_view text) {
  text = trim(text);
  double v = 0.0;
  const char* first = text.data();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), v);
  if (ec != std::errc{} || ptr == first)
    throw InvalidInput("expected a number in '" + std::string(text) + "'");
  if (!std::isfinite(v))
    throw InvalidInput("non-finite number in '" + std::string(text) + "'");
  return {v, trim(std::string_view(ptr, text.data() + text.size() - ptr))};
}

struct Unit {
  std::string_view suffix;
  double scale;
};

template <std::size_t N>
double parse_with_units(std::string_view text, const Unit (&units)[N],
                        const char* what) {
  auto [v, unit] = split_number(text);
  if (unit.empty())
    throw InvalidInput(std::string(what) + " '" + std::string(trim(text)) +
                       "' needs a unit suffix");
  for (const auto& u : units)
    if (unit == u.suffix) return v * u.scale;
  throw InvalidInput("unknown " + std::string(what) + " unit '" +
                     std::string(unit) + "'");
}

}  // namespace

double parse_length(std::string_view text) {
  static constexpr Unit units[] = {
      {"nm", 1e-9}, {"um", 1e-6}, {"mm", 1e-3}, {"cm", 1e-2}, {"m", 1.0}};
  return parse_with_units(text, units, "length");
}

double parse_angle(std::string_view text) {
  static constexpr Unit units[] = {
      {"rad", 1.0}, {"mrad", 1e-3}, {"deg", 3.14159265358979323846 / 180.0}};
  return parse_with_units(text, units, "angle");
}

double parse_mass(std::string_view text) {
  static constexpr Unit units[] = {
      {"kg", 1.0}, {"g", 1e-3}, {"u", 1.66053906660e-27}};
  return parse_with_units(text, units, "mass");
}

double parse_velocity(std::string_view text) {
  static constexpr Unit units[] = {
      {"m/s", 1.0}, {"mm/s", 1e-3}, {"km/s", 1e3}};
  return parse_with_units(text, units, "velocity");
}

double parse_number(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    const double num = parse_number(text.substr(0, slash));
    const double den = parse_number(text.substr(slash + 1));
    if (den == 0.0) throw InvalidInput("zero denominator");
    return num / den;
  }
  auto [v, rest] = split_number(text);
  if (!rest.empty())
    throw InvalidInput("unexpected trailing text in '" + std::string(text) +
                       "'");
  return v;
}

long parse_integer(std::string_view text) {
  text = trim(text);
  long v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw InvalidInput("expected an integer, got '" + std::string(text) + "'");
  return v;
}

bool parse_bool(std::string_view text) {
  text = trim(text);
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw InvalidInput("expected true/false, got '" + std::string(text) + "'");
}

optics::Window parse_window(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw InvalidInput("window must be 'lo:hi'");
  optics::Window w{parse_length(text.substr(0, colon)),
                   parse_length(text.substr(colon + 1))};
  if (!(w.hi > w.lo)) throw InvalidInput("window must satisfy lo < hi");
  return w;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& os, const CsvTable& table) {
  for (const auto& c : table.comments) os << "# " << c << '\n';
  for (std::size_t i = 0; i < table.columns.size(); ++i)
    os << (i ? "," : "") << table.columns[i];
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      os << (i ? "," : "") << format_double(row[i]);
    os << '\n';
  }
}

CsvTable read_csv(std::istream& is) {
  CsvTable t;
  std::string line;
  bool have_header = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::string_view c(line);
      c.remove_prefix(1);
      if (!c.empty() && c.front() == ' ') c.remove_prefix(1);
      t.comments.emplace_back(c);
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!have_header) {
      t.columns = std::move(cells);
      have_header = true;
      continue;
    }
    if (cells.size() != t.columns.size())
      throw InvalidInput("ragged CSV row: " + line);
    std::vector<double> row;
    row.reserve(cells.size());
    for (const auto& c : cells) row.push_back(parse_number(c));
    t.rows.push_back(std::move(row));
  }
  if (!have_header) throw InvalidInput("CSV has no column header");
  return t;
}

}  // namespace supersep::io
