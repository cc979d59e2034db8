/*
Copyright 2026 The socval Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace socval::text {

/// Shortest decimal that round-trips to the same double.
std::string format_double(double value);

std::vector<std::string_view> split(std::string_view line, char sep);

/// Strict parsers: the whole field must be consumed. Throw FormatError with
/// `what` in the message.
double parse_double(std::string_view field, std::string_view what);
std::uint64_t parse_uint(std::string_view field, std::string_view what);

/// Whole-file helpers; throw IoError when the file cannot be read or written.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

/// Splits on LF, dropping a trailing CR from each line.
std::vector<std::string_view> lines(std::string_view contents);

} // namespace socval::text
