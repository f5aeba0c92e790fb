#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "tidykit/catalog.hpp"
#include "tidykit/group.hpp"

using namespace tidykit;
using namespace tidykit::catalog;

namespace {

template <class F>
std::string thrown_code(F&& f) {
  try {
    f();
  } catch (const GroupError& e) {
    return e.code();
  }
  return "";
}

std::string z6_text() {
  std::ostringstream out;
  out << "# additive table mod 6\n";
  out << "cayley 6\n";
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) out << (i + j) % 6 << " ";
    out << "\n";
  }
  return out.str();
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content)
      : path("/tmp/tidykit_test_" + name) {
    std::ofstream(path) << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("cayley text parses with comments and free layout") {
  Group g = parse_group_text(z6_text(), "z6");
  CHECK(g.order() == 6);
  CHECK(g.label() == "z6");
  CHECK(g.ord(1) == 6);

  // The same table with all entries on one line.
  std::string flat = "cayley 2\n0 1 1 0\n";
  CHECK(parse_group_text(flat, "z2").order() == 2);

  // Entries split across arbitrary lines with inline comments.
  std::string ragged =
      "cayley 3 # header\n0 1 2 # row\n1\n2 0 2 0 # rest\n1\n";
  CHECK(parse_group_text(ragged, "z3").order() == 3);
}

TEST_CASE("perm text parses generator lines") {
  std::string s3 = "perm 3\n1 0 2\n0 2 1\n";
  Group g = parse_group_text(s3, "s3");
  CHECK(g.order() == 6);
  CHECK(are_isomorphic(g, build_family("dihedral:6")));
}

TEST_CASE("group text rejections") {
  CHECK(thrown_code([] { parse_group_text("", "x"); }) == "bad_parameter");
  CHECK(thrown_code([] { parse_group_text("matrix 3\n", "x"); }) ==
        "bad_parameter");
  CHECK(thrown_code([] { parse_group_text("cayley\n", "x"); }) ==
        "bad_parameter");
  CHECK(thrown_code([] { parse_group_text("cayley 2\n0 1 1\n", "x"); }) ==
        "bad_parameter");
  CHECK(thrown_code([] { parse_group_text("cayley 2\n0 1 1 0 0\n", "x"); }) ==
        "bad_parameter");
  CHECK(thrown_code([] { parse_group_text("cayley 2\n0 1 1 7\n", "x"); }) ==
        "bad_parameter");
  CHECK(thrown_code([] { parse_group_text("cayley 2\n0 1 one 0\n", "x"); }) ==
        "bad_parameter");
  CHECK(thrown_code([] { parse_group_text("perm 3\n1 0\n", "x"); }) ==
        "bad_parameter");
  CHECK(thrown_code([] { parse_group_text("perm 3\n", "x"); }) ==
        "bad_parameter");
  // Valid tokens, but not a group: the second row repeats an element.
  CHECK(thrown_code([] {
          parse_group_text("cayley 2\n0 1 1 1\n", "x");
        }) == "not_a_group");
}

TEST_CASE("group files load with basename labels") {
  TempFile f("z6.grp", z6_text());
  Group g = load_group_file(f.path);
  CHECK(g.order() == 6);
  CHECK(g.label() == "tidykit_test_z6.grp");
  CHECK(thrown_code([] { load_group_file("/nonexistent/nope.grp"); }) ==
        "bad_parameter");
}

TEST_CASE("family descriptors round-trip through CorpusSpec") {
  CorpusSpec::Family plain{"s4", {}};
  CHECK(plain.descriptor() == "s4");
  CorpusSpec::Family args{"metacyclic", {"7", "9", "2"}};
  CHECK(args.descriptor() == "metacyclic:7,9,2");
  CorpusSpec::Family prod{"direct_product", {"dihedral:8", "cyclic:3"}};
  CHECK(prod.descriptor() == "direct_product:dihedral:8;cyclic:3");
}

TEST_CASE("corpus specs parse from json") {
  std::string text = R"({
    "families": [
      {"name": "cyclic", "params": [6]},
      {"name": "direct_product", "params": ["dihedral:6", "cyclic:3"]}
    ],
    "ingest": ["/tmp/nowhere.grp"],
    "max_order": 100,
    "dedup": true
  })";
  CorpusSpec spec = corpus_spec_from_json(text);
  REQUIRE(spec.families.size() == 2);
  CHECK(spec.families[0].descriptor() == "cyclic:6");
  CHECK(spec.families[1].descriptor() ==
        "direct_product:dihedral:6;cyclic:3");
  REQUIRE(spec.ingest.size() == 1);
  CHECK(spec.max_order == 100);
  CHECK(spec.dedup);

  CHECK(thrown_code([] { corpus_spec_from_json("not json at all"); }) ==
        "bad_parameter");
  CHECK(thrown_code([] { corpus_spec_from_json("[1, 2]"); }) ==
        "bad_parameter");
  CHECK(thrown_code([] {
          corpus_spec_from_json(R"({"families": [{"params": [1]}]})");
        }) == "bad_parameter");
}

TEST_CASE("corpus building honors max_order, dedup, and ingest") {
  CorpusSpec spec;
  spec.families.push_back({"dicyclic", {"8"}});
  spec.families.push_back({"generalized_quaternion", {"8"}});
  spec.families.push_back({"cyclic", {"30"}});

  auto all = build_corpus(spec);
  CHECK(all.size() == 3);

  spec.dedup = true;
  auto deduped = build_corpus(spec);
  CHECK(deduped.size() == 2);

  spec.max_order = 10;
  auto capped = build_corpus(spec);
  CHECK(capped.size() == 1);
  CHECK(capped[0].order() == 8);

  TempFile f("ingest.grp", z6_text());
  CorpusSpec with_file;
  with_file.families.push_back({"cyclic", {"4"}});
  with_file.ingest.push_back(f.path);
  auto combined = build_corpus(with_file);
  REQUIRE(combined.size() == 2);
  CHECK(combined[0].order() == 4);
  CHECK(combined[1].order() == 6);
}

TEST_CASE("checked-in default corpus file matches the built-in spec") {
  std::ifstream in(std::string(TIDYKIT_SOURCE_DIR) +
                   "/data/default_corpus.json");
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  CorpusSpec from_file = corpus_spec_from_json(buf.str());
  CorpusSpec builtin = default_corpus_spec();
  REQUIRE(from_file.families.size() == builtin.families.size());
  for (std::size_t i = 0; i < builtin.families.size(); ++i)
    CHECK(from_file.families[i].descriptor() ==
          builtin.families[i].descriptor());
  CHECK(from_file.ingest == builtin.ingest);
  CHECK(from_file.max_order == builtin.max_order);
  CHECK(from_file.dedup == builtin.dedup);
}

TEST_CASE("the default corpus materializes fully and stays in bounds") {
  CorpusSpec spec = default_corpus_spec();
  CHECK(spec.families.size() == 132);
  auto corpus = build_corpus(spec);
  CHECK(corpus.size() == 132);
  for (const Group& g : corpus) CHECK(g.order() <= 2048);
}
