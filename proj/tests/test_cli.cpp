// Copyright 2026 The ptoric Authors.
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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ptoric/cli.hpp"

using namespace ptoric;

namespace {

const std::string kSamples = PTORIC_SAMPLES_DIR;

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "ptoric");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return kSamples + "/" + name + ".json"; }

std::string write_temp(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("ptoric_test_" + name + ".json");
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST(Cli, InfoToy) {
  const auto r = run({"info", "--polytope", sample("toy_triangle")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("n: 21\n"), std::string::npos);
  EXPECT_NE(r.out.find("k: 5\n"), std::string::npos);
  EXPECT_NE(r.out.find("simple (H1): yes"), std::string::npos);
  EXPECT_NE(r.out.find("(H2): yes"), std::string::npos);
}

TEST(Cli, InfoQuadrilateralFailsH2) {
  const auto r = run({"info", "--polytope", sample("quadrilateral"), "--q", "7"});
  EXPECT_EQ(r.code, cli::kHypothesis);
  EXPECT_NE(r.out.find("[vertex (3,2) |det| = 7]"), std::string::npos) << r.out;
}

TEST(Cli, InfoUnitSquare) {
  const auto r = run({"info", "--polytope", sample("unit_square"), "--q", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("n: 16\n"), std::string::npos);
}

TEST(Cli, MatrixCsv) {
  const auto r = run({"matrix", "--polytope", sample("segment"), "--q", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1,1,1,0\n1,2,0,1\n");
  const auto toy = run({"matrix", "--polytope", sample("toy_triangle")});
  std::istringstream in(toy.out);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 20);
  }
  EXPECT_EQ(rows, 5);
}

TEST(Cli, MatrixJsonRoundTrip) {
  const auto r = run({"matrix", "--polytope", sample("toy_triangle"), "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto back = matrix_from_json(json::parse(r.out));
  const auto direct = generator_matrix(load_document(sample("toy_triangle")).polytope(), Field(4));
  EXPECT_EQ(back.entries, direct.entries);
  EXPECT_EQ(back.columns, direct.columns);
  EXPECT_EQ(back.row_points, direct.row_points);
  EXPECT_EQ(back.row_faces, direct.row_faces);
  EXPECT_EQ(matrix_to_json(back).dump(), r.out.substr(0, r.out.size() - 1));
}

TEST(Cli, InvalidDocuments) {
  EXPECT_EQ(run({"matrix", "--polytope", "/nonexistent.json", "--q", "3"}).code, cli::kValidation);
  EXPECT_EQ(run({"matrix", "--polytope", write_temp("garbage", "{not json"), "--q", "3"}).code, cli::kValidation);
  EXPECT_EQ(run({"matrix", "--polytope", write_temp("flat", R"({"vertices": [[0,0],[1,1],[2,2]]})"), "--q", "3"}).code,
            cli::kValidation);
  EXPECT_EQ(run({"matrix", "--polytope", write_temp("noq", R"({"vertices": [[0],[1]]})")}).code, cli::kValidation);
  EXPECT_EQ(run({"matrix", "--polytope", sample("segment"), "--q", "6"}).code, cli::kValidation);
  EXPECT_EQ(run({"matrix", "--polytope", sample("segment"), "--format", "xml"}).code, cli::kValidation);
  EXPECT_EQ(run({"bogus"}).code, cli::kValidation);
  EXPECT_EQ(run({"matrix", "--polytope", sample("quadrilateral"), "--q", "7"}).code, cli::kHypothesis);
}

TEST(Cli, Dim) {
  const auto r = run({"dim", "--polytope", sample("hirzebruch")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "n: 64\nk: 18\n");
}

TEST(Cli, BoundToyAndSegment) {
  const auto toy = run({"bound", "--polytope", sample("toy_triangle")});
  EXPECT_EQ(toy.code, 0);
  EXPECT_NE(toy.out.find("lambda: 5\n"), std::string::npos);
  EXPECT_NE(toy.out.find("bound[lex]: 8 at (0,1) (1,0)\n"), std::string::npos) << toy.out;
  const auto seg = run({"bound", "--polytope", sample("segment"), "--order", "lex"});
  EXPECT_EQ(seg.code, 0);
  EXPECT_NE(seg.out.find("lambda: 3\n"), std::string::npos);
  EXPECT_NE(seg.out.find("best: 3 (lex)"), std::string::npos);
  const auto none = run({"bound", "--polytope", sample("toy_triangle"), "--lambda-max", "4"});
  EXPECT_EQ(none.code, 0);
  EXPECT_NE(none.out.find("best: none"), std::string::npos);
}

TEST(Cli, VerifyToy) {
  const auto r = run({"verify", "--polytope", sample("toy_triangle")});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("d 8 >= bound 8"), std::string::npos);
}

TEST(Cli, VerifyDetectsInjectedFault) {
  const auto r = run({"verify", "--polytope", sample("toy_triangle"), "--inject-fault"});
  EXPECT_EQ(r.code, cli::kVerifyFailed);
  EXPECT_NE(r.out.find("FAIL  block triangularity"), std::string::npos);
}

TEST(Cli, VerifyBudgetRefusal) {
  const auto r = run({"verify", "--polytope", sample("hirzebruch")});
  EXPECT_EQ(r.code, cli::kBudget);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("SKIP  exhaustive distance"), std::string::npos);
}

TEST(Cli, VerifyCorpus) {
  const auto r = run({"verify", "--corpus", "30", "--q", "5", "--seed", "0"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("failed 0"), std::string::npos);
}

TEST(Cli, Subcode) {
  const auto r = run({"subcode", "--polytope", sample("toy_triangle"), "--rows", "3,4", "--cols", "torus"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 2);
  const auto v = run({"subcode", "--polytope", sample("segment"), "--cols", "dim:0"});
  EXPECT_EQ(v.out, "1,0\n0,1\n");
  const auto range = run({"subcode", "--polytope", sample("segment"), "--rows", "1", "--cols", "0-1,3"});
  EXPECT_EQ(range.out, "1,2,1\n");
  EXPECT_EQ(run({"subcode", "--polytope", sample("segment"), "--rows", "7"}).code, cli::kValidation);
  EXPECT_EQ(run({"subcode", "--polytope", sample("segment"), "--cols", "x"}).code, cli::kValidation);
}

TEST(Cli, IndexLists) {
  EXPECT_EQ(cli::parse_index_list("all", 3), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(cli::parse_index_list("4,1-2", 9), (std::vector<std::size_t>{4, 1, 2}));
  EXPECT_THROW(cli::parse_index_list("3-1", 9), ValidationError);
  EXPECT_THROW(cli::parse_index_list("a", 9), ValidationError);
}

TEST(Document, RoundTrip) {
  const auto d = load_document(sample("toy_triangle"));
  const auto again = parse_document(document_to_json(d));
  EXPECT_EQ(again.polytope(), d.polytope());
  EXPECT_EQ(again.q, d.q);
  PolytopeDocument full;
  full.dim = 2;
  full.vertices = d.polytope().vertices();
  full.facets = d.polytope().facets();
  EXPECT_EQ(parse_document(document_to_json(full)).polytope(), d.polytope());
}
