// Copyright 2026 The hyperideal Authors
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

#ifndef HYPERIDEAL_DOCUMENT_HPP_
#define HYPERIDEAL_DOCUMENT_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "hyperideal/hyper_ring.hpp"

namespace hyperideal {

// Reads a hyperring document (JSON). Keys of f and g may list their element
// names in any order; each multiset must appear exactly once.
HyperRingSpec parse_spec(std::string_view document);
HyperRingSpec load_spec(const std::filesystem::path& path);

// Canonical form: fixed field order, table keys in lexicographic order of
// their sorted index tuples, one entry per line. Byte-stable.
std::string serialize_spec(const HyperRingSpec& spec);

// Comma-joined element names, no whitespace. Throws UnknownElement naming
// the first unknown name, EmptySubset for an empty list.
SubsetMask parse_subset(const HyperRing& ring, std::string_view text);
std::string format_subset(const HyperRing& ring, SubsetMask s);
std::string format_tuple(const HyperRing& ring, std::span<const Element> t);

}  // namespace hyperideal

#endif  // HYPERIDEAL_DOCUMENT_HPP_
