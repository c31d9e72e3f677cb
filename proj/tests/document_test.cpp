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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "json.hpp"
#include "support.hpp"

namespace hyperideal {
namespace {

using testing::paper;

std::string z2_document() { return serialize_spec(fixture("z2").spec()); }

ErrorCode code_of(const std::string& document) {
  try {
    parse_spec(document);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "document was accepted";
  return ErrorCode::InternalContradiction;
}

std::string edit(const std::string& doc, const std::string& from, const std::string& to) {
  const auto pos = doc.find(from);
  EXPECT_NE(pos, std::string::npos) << from;
  std::string out = doc;
  out.replace(pos, from.size(), to);
  return out;
}

TEST(Document, RoundTripIsByteStable) {
  for (const auto& name : fixture_names()) {
    const HyperRingSpec spec = fixture(name).spec();
    const std::string once = serialize_spec(spec);
    const HyperRingSpec back = parse_spec(once);
    EXPECT_EQ(back, spec) << name;
    EXPECT_EQ(serialize_spec(back), once) << name;
  }
}

TEST(Document, CanonicalLayout) {
  const std::string doc = z2_document();
  EXPECT_EQ(doc,
            "{\n"
            "  \"name\": \"z2\",\n"
            "  \"m\": 2,\n"
            "  \"n\": 2,\n"
            "  \"elements\": [\"0\", \"1\"],\n"
            "  \"zero\": \"0\",\n"
            "  \"one\": \"1\",\n"
            "  \"f\": {\n"
            "    \"0,0\": [\"0\"],\n"
            "    \"0,1\": [\"1\"],\n"
            "    \"1,1\": [\"0\"]\n"
            "  },\n"
            "  \"g\": {\n"
            "    \"0,0\": \"0\",\n"
            "    \"0,1\": \"0\",\n"
            "    \"1,1\": \"1\"\n"
            "  }\n"
            "}\n");
}

TEST(Document, AcceptsUnsortedKeysAndAnyFieldOrder) {
  nlohmann::json j = nlohmann::json::parse(z2_document());
  j["f"].erase("0,1");
  j["f"]["1,0"] = {"1"};
  const HyperRingSpec spec = parse_spec(j.dump());
  EXPECT_EQ(spec, fixture("z2").spec());
}

TEST(Document, RejectsDuplicates) {
  const std::string doc = z2_document();
  EXPECT_EQ(code_of(edit(doc, "\"1,1\": [\"0\"]", "\"1,1\": [\"0\"], \"1,1\": [\"1\"]")),
            ErrorCode::DuplicateEntry);
  EXPECT_EQ(code_of(edit(doc, "\"1,1\": [\"0\"]", "\"1,1\": [\"0\"], \"1,0\": [\"1\"]")),
            ErrorCode::DuplicateEntry);
  EXPECT_EQ(code_of(edit(doc, "[\"0\", \"1\"]", "[\"0\", \"0\"]")), ErrorCode::DuplicateEntry);
}

TEST(Document, NamesTheOffendingKey) {
  const std::string doc = edit(z2_document(), "    \"0,1\": [\"1\"],\n", "");
  try {
    parse_spec(doc);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MissingEntry);
    EXPECT_NE(std::string(e.what()).find("'0,1'"), std::string::npos) << e.what();
  }
}

TEST(Document, RejectsMalformedInput) {
  const std::string doc = z2_document();
  EXPECT_EQ(code_of("{"), ErrorCode::MalformedDocument);
  EXPECT_EQ(code_of("[]"), ErrorCode::MalformedDocument);
  EXPECT_EQ(code_of(edit(doc, "\"1,1\": \"1\"", "\"1,1\": \"7\"")), ErrorCode::UnknownElement);
  EXPECT_EQ(code_of(edit(doc, "\"1,1\": [\"0\"]", "\"1,1\": []")), ErrorCode::EmptyHyperValue);
  EXPECT_EQ(code_of(edit(doc, "\"m\": 2", "\"m\": 1")), ErrorCode::ArityOutOfRange);
  EXPECT_EQ(code_of(edit(doc, "\"n\": 2", "\"n\": 17")), ErrorCode::ArityOutOfRange);
  EXPECT_EQ(code_of(edit(doc, "\"1,1\": \"1\"", "\"1,1,1\": \"1\"")), ErrorCode::ArityMismatch);
  EXPECT_EQ(code_of(edit(doc, "\"one\": \"1\"", "\"one\": \"0\"")), ErrorCode::MalformedDocument);
  EXPECT_EQ(code_of(edit(doc, "\"one\": \"1\",\n", "")), ErrorCode::MissingEntry);
  EXPECT_EQ(code_of(edit(doc, "[\"0\", \"1\"]", "[\"0\", \"a b\"]")),
            ErrorCode::MalformedDocument);
}

TEST(Document, LoadsFromDisk) {
  const auto path = std::filesystem::temp_directory_path() / "hyperideal_doc_test.json";
  {
    std::ofstream(path) << serialize_spec(paper_example_spec());
  }
  EXPECT_EQ(load_spec(path), paper_example_spec());
  std::filesystem::remove(path);
  EXPECT_THROW(load_spec(path), Error);
}

TEST(Subsets, ParseAndFormat) {
  const HyperRing r = paper();
  EXPECT_EQ(format_subset(r, parse_subset(r, "2,0")), "{0,2}");
  EXPECT_EQ(format_subset(r, parse_subset(r, "1")), "{1}");
  const Element t[] = {Element(1), Element(1), Element(2)};
  EXPECT_EQ(format_tuple(r, t), "(1,1,2)");
  try {
    parse_subset(r, "");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptySubset);
  }
  for (const char* bad : {"3", "0,,1", "0, 1"}) {
    try {
      parse_subset(r, bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::UnknownElement) << bad;
    }
  }
}

TEST(Subsets, ProductElementNames) {
  const HyperRing r = fixture("z2xz3");
  EXPECT_EQ(r.order(), 6U);
  EXPECT_EQ(r.element_name(Element(4)), "1|1");
  EXPECT_EQ(format_subset(r, parse_subset(r, "0|0,1|0")), "{0|0,1|0}");
}

}  // namespace
}  // namespace hyperideal
