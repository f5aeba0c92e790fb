#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tidykit/catalog.hpp"

namespace tidykit::catalog {

namespace {

[[noreturn]] void fail(const char* code, const std::string& msg) {
  throw GroupError(code, msg);
}

// Lines with '#' comments stripped, tokenized per line.
std::vector<std::vector<std::string>> token_lines(const std::string& text) {
  std::vector<std::vector<std::string>> out;
  std::istringstream all(text);
  std::string line;
  while (std::getline(all, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (!toks.empty()) out.push_back(std::move(toks));
  }
  return out;
}

int parse_index(const std::string& tok, int bound, const char* what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    fail("bad_parameter", std::string(what) + ": \"" + tok + "\" is not a number");
  }
  if (used != tok.size())
    fail("bad_parameter", std::string(what) + ": \"" + tok + "\" is not a number");
  if (v < 0 || v >= bound)
    fail("bad_parameter", std::string(what) + ": index " + tok +
                              " out of range [0, " + std::to_string(bound) + ")");
  return v;
}

}  // namespace

Group parse_group_text(const std::string& text, const std::string& label,
                       bool force_full_validation) {
  auto lines = token_lines(text);
  if (lines.empty() || lines[0].size() != 2)
    fail("bad_parameter",
         "expected a header line \"cayley <n>\" or \"perm <m>\"");
  const std::string& kind = lines[0][0];
  if (kind == "cayley") {
    int n = parse_index(lines[0][1], max_group_order() + 1, "cayley order");
    if (n < 1) fail("bad_parameter", "cayley order must be at least 1");
    std::vector<std::string> toks;
    for (std::size_t i = 1; i < lines.size(); ++i)
      toks.insert(toks.end(), lines[i].begin(), lines[i].end());
    if (toks.size() != std::size_t(n) * std::size_t(n))
      fail("bad_parameter", "cayley table needs " + std::to_string(n * n) +
                                " entries, got " + std::to_string(toks.size()));
    std::vector<std::vector<int>> table(
        static_cast<std::size_t>(n),
        std::vector<int>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        table[i][j] =
            parse_index(toks[std::size_t(i) * n + j], n, "cayley entry");
    return from_cayley_table(table, label, force_full_validation);
  }
  if (kind == "perm") {
    int m = parse_index(lines[0][1], 1 << 20, "perm degree");
    if (m < 1) fail("bad_parameter", "perm degree must be at least 1");
    std::vector<std::vector<int>> gens;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      if (lines[i].size() != std::size_t(m))
        fail("bad_parameter",
             "perm generator line " + std::to_string(i) + " has " +
                 std::to_string(lines[i].size()) + " entries, expected " +
                 std::to_string(m));
      std::vector<int> img(static_cast<std::size_t>(m));
      for (int j = 0; j < m; ++j)
        img[j] = parse_index(lines[i][j], m, "perm image");
      gens.push_back(std::move(img));
    }
    if (gens.empty()) fail("bad_parameter", "perm file has no generators");
    return from_permutation_generators(gens, label);
  }
  fail("bad_parameter", "unknown header \"" + kind +
                            "\"; expected \"cayley\" or \"perm\"");
}

Group load_group_file(const std::string& path, bool force_full_validation) {
  std::ifstream in(path);
  if (!in) fail("bad_parameter", "cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  auto slash = path.find_last_of('/');
  std::string label =
      slash == std::string::npos ? path : path.substr(slash + 1);
  return parse_group_text(buf.str(), label, force_full_validation);
}

std::string CorpusSpec::Family::descriptor() const {
  if (params.empty()) return name;
  char sep = name == "direct_product" ? ';' : ',';
  std::string out = name + ":";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += sep;
    out += params[i];
  }
  return out;
}

namespace {

CorpusSpec::Family fam(std::string name, std::vector<std::string> params = {}) {
  return CorpusSpec::Family{std::move(name), std::move(params)};
}

}  // namespace

CorpusSpec default_corpus_spec() {
  CorpusSpec spec;
  spec.dedup = false;
  spec.max_order = 0;
  auto& f = spec.families;

  for (int n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 15, 16, 18, 20, 21,
                24, 27, 30, 32, 36, 48, 60, 64, 72, 81, 100, 128})
    f.push_back(fam("cyclic", {std::to_string(n)}));
  for (int n : {6, 8, 10, 12, 14, 16, 18, 20, 24, 32, 36, 48, 64, 128})
    f.push_back(fam("dihedral", {std::to_string(n)}));
  for (int n : {8, 16, 32, 64, 128})
    f.push_back(fam("generalized_quaternion", {std::to_string(n)}));
  for (int n : {12, 20, 24, 28})
    f.push_back(fam("dicyclic", {std::to_string(n)}));
  for (auto [p, r] : {std::pair{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2},
                      {3, 3}, {3, 4}, {5, 2}, {7, 2}})
    f.push_back(fam("elementary_abelian",
                    {std::to_string(p), std::to_string(r)}));
  for (int p : {3, 5, 7}) f.push_back(fam("extraspecial", {std::to_string(p)}));
  for (int p : {2, 3}) f.push_back(fam("wreath_pp", {std::to_string(p)}));

  f.push_back(fam("a4"));
  f.push_back(fam("s4"));
  f.push_back(fam("sl2_3"));
  f.push_back(fam("binary_octahedral"));

  for (auto [p, q, r] :
       {std::tuple{5, 4, 2},   {5, 4, 3},   {7, 3, 2},  {7, 3, 4},
        {7, 6, 3},             {11, 5, 3},  {13, 3, 3}, {13, 4, 5},
        {13, 12, 2},           {17, 4, 4},  {19, 3, 7}, {19, 9, 4},
        {23, 11, 2},           {29, 7, 16}, {31, 5, 2}, {37, 9, 7}})
    f.push_back(fam("frobenius_metacyclic", {std::to_string(p),
                                             std::to_string(q),
                                             std::to_string(r)}));
  for (auto [p, m, r] : {std::tuple{7, 9, 2}, {5, 8, 4}, {13, 8, 5}})
    f.push_back(fam("metacyclic", {std::to_string(p), std::to_string(m),
                                   std::to_string(r)}));
  for (auto [p, r, m] : {std::tuple{3, 2, 2}, {3, 2, 4}, {5, 2, 2},
                         {3, 3, 2}, {7, 2, 2}, {3, 2, 8}})
    f.push_back(fam("inversion_ext", {std::to_string(p), std::to_string(r),
                                      std::to_string(m)}));

  f.push_back(fam("e9_q8"));
  f.push_back(fam("z15_q8"));
  f.push_back(fam("f169_dic3"));
  f.push_back(fam("sign_ext_s4", {"1"}));
  f.push_back(fam("sign_ext_s4", {"2"}));
  f.push_back(fam("sign_ext_2o", {"1"}));

  auto dp = [&](std::vector<std::string> factors) {
    f.push_back(fam("direct_product", std::move(factors)));
  };
  dp({"generalized_quaternion:8", "cyclic:3"});
  dp({"generalized_quaternion:8", "cyclic:9"});
  dp({"generalized_quaternion:8", "elementary_abelian:3,2"});
  dp({"generalized_quaternion:8", "cyclic:5"});
  dp({"generalized_quaternion:8", "cyclic:15"});
  dp({"dihedral:8", "cyclic:3"});
  dp({"dihedral:8", "cyclic:9"});
  dp({"dihedral:8", "cyclic:25"});
  dp({"generalized_quaternion:16", "cyclic:3"});
  dp({"generalized_quaternion:16", "cyclic:24"});
  dp({"dihedral:16", "cyclic:3"});
  dp({"cyclic:4", "cyclic:2"});
  dp({"cyclic:9", "cyclic:3"});
  dp({"cyclic:4", "cyclic:2", "cyclic:3"});
  dp({"cyclic:9", "cyclic:3", "cyclic:2"});
  dp({"elementary_abelian:2,2", "cyclic:3"});
  dp({"elementary_abelian:2,3", "cyclic:3"});
  dp({"elementary_abelian:3,2", "cyclic:2"});
  dp({"dihedral:6", "cyclic:3"});
  dp({"s4", "cyclic:3"});
  dp({"sl2_3", "cyclic:3"});
  dp({"sl2_3", "elementary_abelian:3,2"});
  dp({"dihedral:6", "cyclic:5"});
  dp({"frobenius_metacyclic:5,4,2", "cyclic:3"});
  dp({"frobenius_metacyclic:5,4,2", "cyclic:9"});
  dp({"frobenius_metacyclic:7,3,2", "cyclic:5"});
  dp({"extraspecial:3", "cyclic:2"});
  dp({"extraspecial:3", "cyclic:4"});
  dp({"wreath_pp:3", "cyclic:2"});
  dp({"a4", "cyclic:5"});
  dp({"s4", "cyclic:5"});
  return spec;
}

CorpusSpec corpus_spec_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    fail("bad_parameter", std::string("corpus spec is not valid JSON: ") +
                              e.what());
  }
  if (!j.is_object()) fail("bad_parameter", "corpus spec must be an object");
  CorpusSpec spec;
  if (j.contains("max_order")) {
    if (!j["max_order"].is_number_integer())
      fail("bad_parameter", "max_order must be an integer");
    spec.max_order = j["max_order"].get<int>();
  }
  if (j.contains("dedup")) {
    if (!j["dedup"].is_boolean()) fail("bad_parameter", "dedup must be a bool");
    spec.dedup = j["dedup"].get<bool>();
  }
  if (j.contains("families")) {
    if (!j["families"].is_array())
      fail("bad_parameter", "families must be an array");
    for (const auto& e : j["families"]) {
      if (!e.is_object() || !e.contains("name") || !e["name"].is_string())
        fail("bad_parameter", "each family needs a string name");
      CorpusSpec::Family fm;
      fm.name = e["name"].get<std::string>();
      if (e.contains("params")) {
        if (!e["params"].is_array())
          fail("bad_parameter", "family params must be an array");
        for (const auto& p : e["params"]) {
          if (p.is_number_integer())
            fm.params.push_back(std::to_string(p.get<long long>()));
          else if (p.is_string())
            fm.params.push_back(p.get<std::string>());
          else
            fail("bad_parameter", "family params must be numbers or strings");
        }
      }
      spec.families.push_back(std::move(fm));
    }
  }
  if (j.contains("ingest")) {
    if (!j["ingest"].is_array())
      fail("bad_parameter", "ingest must be an array of paths");
    for (const auto& p : j["ingest"]) {
      if (!p.is_string()) fail("bad_parameter", "ingest entries must be paths");
      spec.ingest.push_back(p.get<std::string>());
    }
  }
  return spec;
}

std::vector<Group> build_corpus(const CorpusSpec& spec) {
  std::vector<Group> out;
  auto admit = [&](Group g) {
    if (spec.max_order > 0 && g.order() > spec.max_order) return;
    if (spec.dedup && g.order() <= 96) {
      for (const Group& have : out)
        if (have.order() == g.order() && are_isomorphic(have, g)) return;
    }
    out.push_back(std::move(g));
  };
  for (const auto& f : spec.families) admit(build_family(f.descriptor()));
  for (const auto& path : spec.ingest) admit(load_group_file(path));
  return out;
}

}  // namespace tidykit::catalog
