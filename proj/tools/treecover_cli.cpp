#include <chrono>
#include <filesystem>
#include <iomanip>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "treecover/generators.hpp"
#include "treecover/oracle.hpp"
#include "treecover/treenum.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitClass = 2;
constexpr int kExitInvariant = 3;

tc::Graph read_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw tc::GraphError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return tc::load_graph(ss.str());
}

json report_to_json(const tc::Ctx& ctx, const tc::ElementReport& rep) {
  json j;
  j["tau"] = rep.tau;
  j["tau_literal"] = rep.tau_literal;
  j["proper_cover_exists"] = rep.proper;
  j["simple"] = rep.simple;
  j["spine"] = rep.elem.spine;
  j["closed"] = rep.elem.closed;
  j["edges"] = tc::element_edges(ctx, rep.elem).size();
  if (!rep.simple) {
    j["sub_elements"] = rep.n;
    j["extra"] = rep.extra;
    j["residual_tau"] = rep.residual_tau;
    j["residual_chords"] = rep.residual_chords;
    json kids = json::array();
    for (const auto& ch : rep.children) kids.push_back(report_to_json(ctx, ch));
    j["children"] = kids;
  }
  return j;
}

void print_cover(const tc::Graph& g, const tc::TreeCover& cover) {
  for (size_t i = 0; i < cover.parts.size(); ++i) {
    std::cout << "part " << i << ":";
    for (int e : cover.parts[i])
      std::cout << " " << g.edges[e].first << "-" << g.edges[e].second;
    std::cout << "\n";
  }
}

void print_dot(const tc::Graph& g, const tc::TreeCover& cover) {
  static const char* palette[] = {"red",    "blue",   "green",  "orange",
                                  "purple", "brown",  "cyan",   "magenta",
                                  "gold",   "gray"};
  std::vector<int> part_of(g.m(), -1);
  for (size_t i = 0; i < cover.parts.size(); ++i)
    for (int e : cover.parts[i]) part_of[e] = (int)i;
  std::cout << "graph cover {\n";
  for (int e = 0; e < g.m(); ++e) {
    std::cout << "  " << g.edges[e].first << " -- " << g.edges[e].second;
    if (part_of[e] >= 0)
      std::cout << " [color=" << palette[part_of[e] % 10] << " label="
                << part_of[e] << "]";
    std::cout << ";\n";
  }
  std::cout << "}\n";
}

int run_compute(const std::string& path, bool as_json, bool witness, bool dot) {
  tc::Graph g = read_graph(path);
  tc::Ctx ctx = tc::build_ctx(g);
  tc::ElementReport rep = tc::analyze_graph(ctx);
  tc::TreeCover cover;
  if (witness || dot) {
    cover = tc::construct_cover_element(ctx, rep, false);
    if (!tc::validate_cover(g, tc::element_edges(ctx, rep.elem), cover))
      throw tc::InternalInvariant("witness failed validation");
  }
  if (as_json) {
    std::cout << report_to_json(ctx, rep).dump(2) << "\n";
  } else {
    std::cout << "tau=" << rep.tau << "\n";
  }
  if (witness) print_cover(g, cover);
  if (dot) print_dot(g, cover);
  return kExitOk;
}

int run_cover(const std::string& path, bool dot) {
  tc::Graph g = read_graph(path);
  tc::Ctx ctx = tc::build_ctx(g);
  tc::ElementReport rep = tc::analyze_graph(ctx);
  tc::TreeCover cover = tc::construct_cover_element(ctx, rep, false);
  if (!tc::validate_cover(g, tc::element_edges(ctx, rep.elem), cover))
    throw tc::InternalInvariant("witness failed validation");
  if (dot)
    print_dot(g, cover);
  else
    print_cover(g, cover);
  return kExitOk;
}

int run_decompose(const std::string& path) {
  tc::Graph g = read_graph(path);
  tc::Ctx ctx = tc::build_ctx(g);
  json j;
  j["schema"] = 1;
  j["root"] = ctx.bct.root;
  json blocks = json::array();
  for (size_t b = 0; b < ctx.bd.blocks.size(); ++b) {
    json jb;
    jb["index"] = b;
    jb["edges"] = ctx.bd.blocks[b];
    jb["outer_cycle"] = ctx.emb[b].outer_cycle;
    json chords = json::array();
    for (int e : ctx.emb[b].chord_edges)
      chords.push_back({g.edges[e].first, g.edges[e].second});
    jb["chords"] = chords;
    blocks.push_back(jb);
  }
  j["blocks"] = blocks;
  j["cut_vertices"] = ctx.bd.cut_vertices;
  json tree = json::array();
  for (size_t b = 0; b < ctx.bd.blocks.size(); ++b)
    if (ctx.bct.parent[(int)b] >= 0)
      tree.push_back({{"parent", ctx.bct.parent[(int)b]},
                      {"child", b},
                      {"cut_vertex", ctx.bct.parent_cut[(int)b]}});
  j["tree_edges"] = tree;
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int run_gen(const std::string& family, int n, std::uint64_t seed,
            const std::string& out) {
  tc::Graph g;
  if (family == "cycle")
    g = tc::gen_cycle(n);
  else if (family == "fan")
    g = tc::gen_fan(n);
  else if (family == "necklace")
    g = tc::gen_necklace(n);
  else if (family == "gap")
    g = tc::gen_gap_family(n);
  else if (family == "random")
    g = tc::gen_random_cut_outerplanar(seed, std::max(1, n), 8);
  else
    throw tc::GraphError("unknown family: " + family);
  std::string text = tc::serialize_graph(g);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) throw tc::GraphError("cannot write " + out);
    f << text;
  }
  return kExitOk;
}

struct VerifyRow {
  std::string instance;
  int algo_tau = -1;
  long long step4_literal_tau = -1;
  int oracle_tau = -1;  // -1: out of oracle range
  bool match = true;
};

VerifyRow verify_one(const std::string& name, const tc::Graph& g,
                     int oracle_max_edges) {
  VerifyRow row;
  row.instance = name;
  tc::Ctx ctx = tc::build_ctx(g);
  tc::ElementReport rep = tc::analyze_graph(ctx);
  row.algo_tau = rep.tau;
  row.step4_literal_tau = rep.tau_literal;
  if (g.m() <= oracle_max_edges) {
    row.oracle_tau = tc::bf_tree_number(g, oracle_max_edges);
    row.match = row.oracle_tau == row.algo_tau;
  }
  return row;
}

int run_verify(const std::string& corpus_dir, int max_edges, int seeds) {
  std::vector<std::pair<std::string, tc::Graph>> instances;
  if (!corpus_dir.empty()) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(corpus_dir))
      throw tc::GraphError("not a directory: " + corpus_dir);
    std::vector<std::string> files;
    for (auto& ent : fs::directory_iterator(corpus_dir))
      if (ent.is_regular_file()) files.push_back(ent.path().string());
    std::sort(files.begin(), files.end());
    for (auto& f : files)
      instances.push_back({fs::path(f).filename().string(), read_graph(f)});
  } else {
    int idx = 0;
    for (const tc::Graph& g : tc::corpus_small(max_edges)) {
      std::ostringstream nm;
      nm << "corpus[" << std::setw(4) << std::setfill('0') << idx++ << "]";
      instances.push_back({nm.str(), g});
    }
    for (int n = 1; n <= 3; ++n) {
      std::ostringstream nm;
      nm << "necklace(" << n << ")";
      instances.push_back({nm.str(), tc::gen_necklace(n)});
    }
    for (int s = 0; s < seeds; ++s) {
      tc::Graph g = tc::gen_random_cut_outerplanar(1000 + s, 3, 6);
      if (g.m() > max_edges + 4) continue;
      std::ostringstream nm;
      nm << "random(" << 1000 + s << ")";
      instances.push_back({nm.str(), g});
    }
  }
  std::sort(instances.begin(), instances.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  json rows = json::array();
  bool mismatch = false;
  for (auto& [name, g] : instances) {
    VerifyRow row = verify_one(name, g, 16);
    json jr;
    jr["instance"] = row.instance;
    jr["algo_tau"] = row.algo_tau;
    jr["step4_literal_tau"] = row.step4_literal_tau;
    if (row.oracle_tau >= 0)
      jr["oracle_tau"] = row.oracle_tau;
    else
      jr["oracle_tau"] = nullptr;
    jr["match"] = row.match;
    rows.push_back(jr);
    if (!row.match) mismatch = true;
  }
  json out;
  out["rows"] = rows;
  out["mismatches"] = mismatch;
  std::cout << out.dump(2) << "\n";
  return mismatch ? kExitInput : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tree covers of cut-outerplanar graphs"};
  app.require_subcommand(1);

  std::string path, out_path, corpus_dir, family = "random";
  bool flag_json = false, flag_witness = false, flag_dot = false;
  int gen_n = 3, max_edges = 12, seeds = 0;
  std::uint64_t seed = 1;

  auto* c_compute = app.add_subcommand("compute", "compute the tree number");
  c_compute->add_option("input", path, "edge list file")->required();
  c_compute->add_flag("--json", flag_json, "full analysis as JSON");
  c_compute->add_flag("--witness", flag_witness, "print a validated cover");
  c_compute->add_flag("--dot", flag_dot, "DOT output with parts as colors");

  auto* c_cover = app.add_subcommand("cover", "emit a witness tree cover");
  c_cover->add_option("input", path, "edge list file")->required();
  c_cover->add_flag("--dot", flag_dot, "DOT output with parts as colors");

  auto* c_dec = app.add_subcommand("decompose", "blocks and embeddings");
  c_dec->add_option("input", path, "edge list file")->required();

  auto* c_verify = app.add_subcommand("verify", "algorithm vs. oracle sweep");
  c_verify->add_option("--corpus", corpus_dir, "directory of edge lists");
  c_verify->add_option("--max-edges", max_edges, "sweep size bound");
  c_verify->add_option("--seeds", seeds, "extra random instances");

  auto* c_gen = app.add_subcommand("gen", "write a generated instance");
  c_gen->add_option("--family", family, "cycle|fan|necklace|random|gap")
      ->required();
  c_gen->add_option("--n", gen_n, "size parameter");
  c_gen->add_option("--seed", seed, "random seed");
  c_gen->add_option("--out", out_path, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*c_compute) return run_compute(path, flag_json, flag_witness, flag_dot);
    if (*c_cover) return run_cover(path, flag_dot);
    if (*c_dec) return run_decompose(path);
    if (*c_verify) return run_verify(corpus_dir, max_edges, seeds);
    if (*c_gen) return run_gen(family, gen_n, seed, out_path);
  } catch (const tc::ClassRejection& e) {
    std::cerr << "class rejection: " << e.what() << "\n";
    return kExitClass;
  } catch (const tc::NotOuterplanar& e) {
    std::cerr << "class rejection: " << e.what() << "\n";
    return kExitClass;
  } catch (const tc::InternalInvariant& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
