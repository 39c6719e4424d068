// SPDX-License-Identifier: Apache-2.0
//
// iasim: mmWave vehicle-to-vehicle initial access simulator
// Copyright (C) 2026 The iasim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace iasim::csv {

std::vector<std::string> split(std::string_view line, char sep);
std::string_view trim(std::string_view s);

// Strict numeric parsing; throws std::invalid_argument on trailing junk.
double to_double(std::string_view s);
long long to_int(std::string_view s);

// Shortest round-trip decimal representation.
std::string fmt(double v);

// Visits every non-blank, non-'#' line with its 1-based line number.
void for_each_line(const std::filesystem::path& path,
                   const std::function<void(std::string_view, std::size_t)>& visit);

}  // namespace iasim::csv
