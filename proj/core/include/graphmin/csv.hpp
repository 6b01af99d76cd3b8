// Copyright 2026 The graphmin Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Text formatting and file plumbing shared by the CSV writers and the CLI.

#ifndef GRAPHMIN_CSV_HPP_
#define GRAPHMIN_CSV_HPP_

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace graphmin {

// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

// Fixed notation with `decimals` digits after the point.
std::string format_fixed(double value, int decimals);

// Parses a double written by format_double/format_fixed. Throws
// std::invalid_argument on malformed text.
double parse_double(std::string_view text);

// Splits one CSV record on commas (no quoting; our files never need it).
std::vector<std::string_view> split_csv(std::string_view line);

// Writes via a sibling temporary file and renames it into place, so a
// reader never sees a half-written file. Throws std::runtime_error naming
// the path on I/O failure.
void write_file_atomically(const std::filesystem::path& path,
                           const std::function<void(std::ostream&)>& writer);

std::string read_file(const std::filesystem::path& path);

}  // namespace graphmin

#endif  // GRAPHMIN_CSV_HPP_
