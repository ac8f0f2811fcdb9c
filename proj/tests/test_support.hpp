// Copyright 2026 The SciPress Authors.
//
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

#ifndef SCIPRESS_TESTS_TEST_SUPPORT_HPP_
#define SCIPRESS_TESTS_TEST_SUPPORT_HPP_

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include <unistd.h>

#include "scipress/corpus.hpp"
#include "scipress/error.hpp"

namespace scipress::testing {

inline std::string DataPath(const std::string& name) {
  return std::string(SCIPRESS_DATA_DIR) + "/" + name;
}

inline std::string GoldenPath(const std::string& name) {
  return std::string(SCIPRESS_GOLDEN_DIR) + "/" + name;
}

inline nlohmann::json InstanceJson(const std::string& id, const std::string& abstract,
                                   const std::string& summary,
                                   const std::string& intro = "") {
  nlohmann::json j = {{"id", id},
                      {"article", {{"title", "t"}, {"abstract", abstract}, {"source", "arxiv"}}},
                      {"press", {{"summary", summary}}}};
  if (!intro.empty()) {
    j["article"]["sections"] = {{{"heading", "Introduction"}, {"text", intro}}};
  }
  return j;
}

inline AlignedInstance MakeInstance(const std::string& id, const std::string& abstract,
                                    const std::string& summary,
                                    const std::string& intro = "") {
  return ParseInstance(InstanceJson(id, abstract, summary, intro));
}

// Fresh per-test scratch directory under the system temp dir.
inline std::filesystem::path ScratchDir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() /
             ("scipress_test_" + name + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

inline std::string Slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void Spit(const std::filesystem::path& p, const std::string& s) {
  std::ofstream(p, std::ios::binary) << s;
}

}  // namespace scipress::testing

#define EXPECT_SCIPRESS_ERROR(stmt, expected_code)                        \
  do {                                                                    \
    try {                                                                 \
      stmt;                                                               \
      ADD_FAILURE() << "no error from " #stmt;                            \
    } catch (const ::scipress::Error& e) {                                \
      EXPECT_EQ(e.code(), expected_code) << e.what();                     \
    }                                                                     \
  } while (0)

#endif  // SCIPRESS_TESTS_TEST_SUPPORT_HPP_
