// Copyright 2026 The wcrte Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WCRTE_TEXT_IO_H_
#define WCRTE_TEXT_IO_H_

#include <string>
#include <string_view>
#include <vector>

namespace wcrte {

// Parses one decimal value per line. Blank lines and lines starting with '#'
// (after leading whitespace) are skipped; trailing "# ..." comments are
// allowed. The decimal separator is always '.', independent of the locale.
// Throws ParseError naming the line number and offending token.
std::vector<double> parse_values(std::string_view text);

// Reads a file with parse_values. Throws ParseError if the file cannot be
// opened or holds fewer than min_count values.
std::vector<double> read_values_file(const std::string& path,
                                     std::size_t min_count = 2);

// Locale-independent decimal parse of the whole token; ParseError otherwise.
double parse_double(std::string_view token);

// Shortest representation that round-trips.
std::string format_double(double value);

// Reads a whole file; ParseError if it cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace wcrte

#endif  // WCRTE_TEXT_IO_H_
