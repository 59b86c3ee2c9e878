//
// SPDX-License-Identifier: Apache-2.0
//

#include "lgm/ingest.hpp"

#include <set>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "lgm/synthetic.hpp"

namespace lgm {
namespace {

std::size_t error_line(const std::string &text) {
  try {
    parse_database(text);
  } catch (const ParseError &e) {
    return e.line();
  }
  return 0;
}

TEST(ParseDatabase, SingleEdge) {
  auto db = parse_database("t # 0\nv 0 A\nv 1 B\ne 0 1 _\n");
  ASSERT_EQ(db.size(), 1u);
  const auto &g = db.graphs[0];
  EXPECT_EQ(g.id(), 0u);
  EXPECT_EQ(g.vertex_count(), 2u);
  ASSERT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.edges()[0].label, kUnlabeled);
  EXPECT_EQ(db.vertex_labels.symbol(g.label(1)), "B");
}

TEST(ParseDatabase, KeepsDeclaredIdsAndOrder) {
  auto db = parse_database("# comment\n\nt # 9\nv 0 A\nt # 3\nv 0 B\nv 1 B\n"
                           "e 1 0 x\n");
  ASSERT_EQ(db.size(), 2u);
  EXPECT_EQ(db.graphs[0].id(), 9u);
  EXPECT_EQ(db.graphs[1].id(), 3u);
  EXPECT_EQ(db.graphs[1].edges()[0], (Edge{0, 1, db.edge_labels.find("x").value()}));
  EXPECT_EQ(db.max_vertex_count(), 2u);
}

TEST(ParseDatabase, ReportsErrorLines) {
  EXPECT_EQ(error_line("t # 0\nv 0 A\nv 1 A\nv 2 A\ne 2 2 x\n"), 5u);
  EXPECT_EQ(error_line("t # 0\nv 0 A\nv 2 A\n"), 3u);
  EXPECT_EQ(error_line("t # 0\nv 0 A\nv 1 A\ne 0 1 _\ne 1 0 x\n"), 5u);
  EXPECT_EQ(error_line("t # 0\nv 0 A\ne 0 1 _\n"), 3u);
  EXPECT_EQ(error_line("t # 0\nt # 0\n"), 2u);
  EXPECT_EQ(error_line("v 0 A\n"), 1u);
  EXPECT_EQ(error_line("t # 0\nq 1\n"), 2u);
  EXPECT_EQ(error_line("t # x\n"), 1u);
  EXPECT_EQ(error_line("t # 0\nv 0\n"), 2u);
}

TEST(ParseDatabase, RoundTripsCanonicalFiles) {
  synthetic::Rng rng(61);
  synthetic::RandomDatabaseOptions opt;
  opt.max_edge_labels = 3;
  for (int trial = 0; trial < 200; ++trial) {
    const auto text = to_string(synthetic::random_database(rng, opt));
    ASSERT_EQ(to_string(parse_database(text)), text);
  }
}

TEST(PatternFile, ReadsMineOutput) {
  auto db = parse_database("t # 4\nv 0 A\nv 1 B\ne 0 1 _\n");
  std::ostringstream out;
  std::vector<GraphId> ids{4, 7};
  write_pattern_record(out, 0, Pattern({0, 1}, {Edge{0, 1}}), 2, 3, ids,
                       db.vertex_labels, db.edge_labels);
  EXPECT_EQ(out.str(), "p # 0 support=2 occ=3 graphs=4,7\nv 0 A\nv 1 B\ne 0 1 _\n");
  std::istringstream in(out.str());
  auto file = parse_pattern_file(in);
  ASSERT_EQ(file.records.size(), 1u);
  EXPECT_EQ(file.records[0].support, 2u);
  EXPECT_EQ(file.records[0].occurrence_count, 3u);
  EXPECT_EQ(file.records[0].graph_ids, ids);
  EXPECT_EQ(file.records[0].pattern.size(), 1u);

  std::istringstream isolated("p # 0 support=1 occ=1 graphs=0\nv 0 A\n");
  EXPECT_THROW(parse_pattern_file(isolated), ParseError);
  std::istringstream bad_header("p # 0 support=1 graphs=0\n");
  EXPECT_THROW(parse_pattern_file(bad_header), ParseError);
}

TEST(ClassFile, ParsesAndRejectsDuplicates) {
  std::istringstream good("0 P\n1 N\n");
  auto classes = parse_class_file(good);
  EXPECT_EQ(classes.at(0), GraphClass::kPositive);
  EXPECT_EQ(classes.at(1), GraphClass::kNegative);
  std::istringstream dup("0 P\n0 N\n");
  EXPECT_THROW(parse_class_file(dup), ParseError);
  std::istringstream bad("0 X\n");
  EXPECT_THROW(parse_class_file(bad), ParseError);
}

TEST(ResidueClass, SixClassesCoverTwentyAminoAcids) {
  std::map<int, std::string> members;
  for (char aa : kStandardAminoAcids) {
    auto c = residue_class(aa);
    ASSERT_TRUE(c.has_value()) << aa;
    members[*c] += aa;
  }
  EXPECT_EQ(members.size(), 6u);
  EXPECT_EQ(members[1], "ACILMV");
  EXPECT_EQ(members[2], "FHWY");
  EXPECT_EQ(members[3], "NQST");
  EXPECT_EQ(members[4], "KR");
  EXPECT_EQ(members[5], "DE");
  EXPECT_EQ(members[6], "GP");
  EXPECT_FALSE(residue_class('B'));
  EXPECT_FALSE(residue_class('X'));
}

TEST(ContactGraph, LabelsAndGeometry) {
  Alphabet labels;
  std::vector<ResidueRecord> ak{{0, 'A', 0, 0, 0}, {1, 'K', 10, 0, 0}};
  auto g = build_contact_graph(0, ak, labels);
  EXPECT_EQ(labels.symbol(g.label(0)), "1");
  EXPECT_EQ(labels.symbol(g.label(1)), "4");
  EXPECT_EQ(g.edge_count(), 0u);

  std::vector<ResidueRecord> line{
      {0, 'G', 0, 0, 0}, {1, 'G', 4, 0, 0}, {2, 'G', 8, 0, 0}};
  auto h = build_contact_graph(1, line, labels);
  EXPECT_EQ(h.edges(), (std::vector<Edge>{Edge{0, 1}, Edge{1, 2}}));

  std::vector<ResidueRecord> boundary{{0, 'D', 0, 0, 0}, {1, 'E', 3, 4, 0}};
  EXPECT_EQ(build_contact_graph(2, boundary, labels).edge_count(), 1u);
  EXPECT_EQ(build_contact_graph(2, boundary, labels, {5.0, false}).edge_count(),
            0u);

  std::vector<ResidueRecord> unknown{{0, 'Z', 0, 0, 0}};
  EXPECT_THROW(build_contact_graph(3, unknown, labels), std::invalid_argument);
}

TEST(ContactGraph, ParsesResidueTables) {
  std::istringstream in("t # 5\n0 A 0 0 0\n1 W 0 0 3.5\n2 R 0 0 12\n");
  auto proteins = parse_residues(in);
  ASSERT_EQ(proteins.size(), 1u);
  auto db = build_contact_database(proteins);
  EXPECT_EQ(to_string(db), "t # 5\nv 0 1\nv 1 2\nv 2 4\ne 0 1 _\n");

  std::istringstream skipped("t # 0\n1 A 0 0 0\n");
  EXPECT_THROW(parse_residues(skipped), ParseError);
  std::istringstream unknown("t # 0\n0 J 0 0 0\n");
  EXPECT_THROW(parse_residues(unknown), ParseError);
}

TEST(GapEdges, CountsOnEdgelessGraphs) {
  for (VertexId n = 1; n <= 12; ++n) {
    LinearGraph g(0, std::vector<Label>(n, 0), {});
    EXPECT_EQ(add_gap_edges(g, 1, kUnlabeled).edge_count(), n - 1);
    if (n >= 2) {
      EXPECT_EQ(add_gap_edges(g, 2, kUnlabeled).edge_count(), 2 * n - 3);
    }
    for (std::size_t k = 1; k <= 5; ++k)
      EXPECT_EQ(add_gap_edges(g, k, kUnlabeled).edge_count(),
                k >= n ? n * (n - 1) / 2 : k * n - k * (k + 1) / 2);
  }
}

TEST(GapEdges, KeepsExistingLabelsAndIsIdempotent) {
  auto db = parse_database("t # 0\nv 0 A\nv 1 A\nv 2 A\nv 3 A\ne 0 1 c\n"
                           "e 0 3 c\n");
  auto gapped = add_gap_edges(db, GapSpec{2, "g"});
  const auto &g = gapped.graphs[0];
  const auto c = gapped.edge_labels.find("c").value();
  const auto gap = gapped.edge_labels.find("g").value();
  EXPECT_EQ(g.edge_label(0, 1), c);
  EXPECT_EQ(g.edge_label(0, 3), c);
  EXPECT_EQ(g.edge_label(1, 2), gap);
  EXPECT_EQ(g.edge_label(1, 3), gap);
  EXPECT_EQ(g.edge_count(), 6u);
  EXPECT_EQ(to_string(add_gap_edges(gapped, GapSpec{2, "g"})),
            to_string(gapped));
  // The input database is left as it was.
  EXPECT_EQ(db.graphs[0].edge_count(), 2u);

  LinearGraph single(0, {0}, {});
  EXPECT_EQ(add_gap_edges(single, 3, kUnlabeled).edge_count(), 0u);
  EXPECT_THROW(add_gap_edges(db, GapSpec{0, "g"}), std::invalid_argument);
  EXPECT_THROW(add_gap_edges(db, GapSpec{1, "a b"}), std::invalid_argument);
}

} // namespace
} // namespace lgm
