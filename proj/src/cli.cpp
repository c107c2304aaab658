#include "zagreb/cli.hpp"

#include "zagreb/canonical.hpp"
#include "zagreb/enumerate.hpp"
#include "zagreb/error.hpp"
#include "zagreb/families.hpp"
#include "zagreb/io.hpp"
#include "zagreb/report.hpp"
#include "zagreb/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

namespace zagreb::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

class UsageError : public Error {
public:
  using Error::Error;
};

struct Options {
  std::optional<int> n;
  std::optional<int> m;
  std::optional<int> n_max;
  std::string claim;
  std::string family;
  std::string kind;
  std::string index;
  std::string format;
  std::string out;
  std::string out_dir;
  std::string graph;
  std::string digraph;
  int threads = 1;
  bool slow = false;
  bool count = false;
};

int require(const std::optional<int> &v, const char *flag, const std::string &why) {
  if (!v)
    throw UsageError(std::string(flag) + " is required " + why);
  return *v;
}

void forbid(bool present, const char *flag, const std::string &why) {
  if (present)
    throw UsageError(std::string(flag) + " is not allowed " + why);
}

Format format_or(const Options &o, Format fallback) {
  if (o.format.empty())
    return fallback;
  try {
    return parse_format(o.format);
  } catch (const RangeError &e) {
    throw UsageError(e.what());
  }
}

std::string read_input(const std::string &path, std::istream &in) {
  if (path == "-")
    return std::string(std::istreambuf_iterator<char>(in), {});
  return read_source(path);
}

ordered_json graph_json(const Graph &g) {
  ordered_json edges = ordered_json::array();
  for (const Edge &e : g.edges())
    edges.push_back({e.u, e.v});
  return {{"n", g.order()}, {"edges", std::move(edges)}};
}

ordered_json digraph_json(const Digraph &d) {
  ordered_json arcs = ordered_json::array();
  for (const Arc &a : d.arcs())
    arcs.push_back({a.tail, a.head});
  return {{"n", d.order()}, {"arcs", std::move(arcs)}};
}

// A construct/distribution family resolved to graphs or digraphs.
struct FamilyMembers {
  std::vector<Graph> graphs;
  std::vector<Digraph> digraphs;
};

FamilyMembers resolve_family(const Options &o) {
  const std::string &f = o.family;
  const std::string ctx = "for --family " + f;
  FamilyMembers r;
  if (f == "cycle") {
    forbid(o.m.has_value(), "--m", ctx);
    r.graphs.push_back(cycle_graph(require(o.n, "--n", ctx)));
  } else if (f == "star") {
    forbid(o.m.has_value(), "--m", ctx);
    r.graphs.push_back(star_graph(require(o.n, "--n", ctx) - 1));
  } else if (f == "g1" || f == "u42" || f == "c4-two-pendants") {
    forbid(o.n.has_value() || o.m.has_value(), "--n/--m", ctx);
    r.graphs.push_back(make_named(f));
  } else if (f == "t") {
    r.graphs.push_back(t_nm(require(o.n, "--n", ctx), require(o.m, "--m", ctx)));
  } else if (f == "u") {
    r.graphs.push_back(u_nm(require(o.n, "--n", ctx), require(o.m, "--m", ctx)));
  } else if (f == "u-orient") {
    const auto four = u_extremal_orientations(require(o.n, "--n", ctx), require(o.m, "--m", ctx));
    r.digraphs.assign(four.begin(), four.end());
  } else if (f == "extremal-set") {
    r.digraphs = extremal_set(require(o.n, "--n", ctx), require(o.m, "--m", ctx));
  } else {
    throw UsageError("unknown family '" + f + "'");
  }
  return r;
}

std::string emit_members(const FamilyMembers &fm, Format format) {
  if (format == Format::csv)
    throw UsageError("graphs cannot be written as csv");
  if (format == Format::json) {
    ordered_json arr = ordered_json::array();
    for (const Graph &g : fm.graphs)
      arr.push_back(graph_json(g));
    for (const Digraph &d : fm.digraphs)
      arr.push_back(digraph_json(d));
    if (arr.size() == 1)
      return arr.front().dump(2) + "\n";
    return arr.dump(2) + "\n";
  }
  std::vector<std::string> docs;
  for (const Graph &g : fm.graphs)
    docs.push_back(format_edge_list(g));
  for (const Digraph &d : fm.digraphs)
    docs.push_back(format_digraph(d));
  return join_documents(docs);
}

struct Outcome {
  std::string text;
  int status = kExitOk;
};

Outcome do_construct(const Options &o) {
  if (o.family.empty())
    throw UsageError("construct needs --family");
  return {emit_members(resolve_family(o), format_or(o, Format::edgelist))};
}

Outcome do_enumerate(const Options &o, std::ostream &err) {
  const std::string ctx = "for enumerate";
  const int n = require(o.n, "--n", ctx);
  std::vector<Graph> graphs;
  if (o.kind == "tree" || o.kind == "unicyclic") {
    const GraphKind kind = o.kind == "tree" ? GraphKind::tree : GraphKind::unicyclic;
    if (o.m)
      graphs = graphs_in_class({kind, n, *o.m});
    else
      graphs = kind == GraphKind::tree ? all_trees(n) : all_unicyclic(n);
  } else if (o.kind == "connected") {
    forbid(o.m.has_value(), "--m", "for --kind connected");
    graphs = all_connected(n);
  } else {
    throw UsageError("enumerate needs --kind tree|unicyclic|connected");
  }
  if (o.count)
    return {std::to_string(graphs.size()) + "\n"};
  if (!o.out_dir.empty()) {
    std::filesystem::create_directories(o.out_dir);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const auto path = std::filesystem::path(o.out_dir) / ("graph_" + std::to_string(i) + ".txt");
      std::ofstream f(path);
      if (!f)
        throw ParseError("cannot write '" + path.string() + "'");
      f << format_edge_list(graphs[i]);
    }
    err << "wrote " << graphs.size() << " files to " << o.out_dir << "\n";
    return {};
  }
  FamilyMembers fm;
  fm.graphs = std::move(graphs);
  const Format format = format_or(o, Format::edgelist);
  if (format == Format::json) {
    ordered_json arr = ordered_json::array();
    for (const Graph &g : fm.graphs)
      arr.push_back(graph_json(g));
    return {arr.dump(2) + "\n"};
  }
  return {emit_members(fm, format)};
}

Outcome do_compute(const Options &o, std::istream &in) {
  if (o.index.empty())
    throw UsageError("compute needs --index");
  if (o.graph.empty() == o.digraph.empty())
    throw UsageError("compute needs exactly one of --graph and --digraph");
  const Format format = format_or(o, Format::text);
  if (format != Format::text && format != Format::json)
    throw UsageError("compute writes text or json");
  ordered_json result;
  result["index"] = o.index;
  if (!o.digraph.empty()) {
    const Digraph d = parse_digraph(read_input(o.digraph, in));
    if (o.index == "m1")
      result["value"] = m1_digraph(d);
    else if (o.index == "sink-source")
      result["value"] = is_sink_source(d);
    else if (o.index == "canonical")
      result["value"] = canonical_code_digraph(d).to_hex();
    else
      throw UsageError("index '" + o.index + "' does not apply to digraphs");
  } else {
    const Graph g = parse_edge_list(read_input(o.graph, in));
    if (o.index == "m1") {
      result["value"] = m1_undirected(g);
    } else if (o.index == "matching") {
      result["value"] = matching_number(g);
    } else if (o.index == "bipartite") {
      result["value"] = is_bipartite(g);
    } else if (o.index == "unicyclic") {
      result["value"] = is_unicyclic(g);
    } else if (o.index == "diametrical-path") {
      result["value"] = diametrical_path(g);
    } else if (o.index == "canonical") {
      result["value"] = canonical_code(g).to_hex();
    } else if (o.index == "max-orient") {
      const OrientationMaximum r = max_over_orientations(g);
      result["value"] = r.value;
      result["labeled_achievers"] = r.achievers.size();
    } else {
      throw UsageError("unknown index '" + o.index + "'");
    }
  }
  if (format == Format::json)
    return {result.dump(2) + "\n"};
  std::string text = result["value"].dump();
  if (result.contains("labeled_achievers"))
    text += " " + result["labeled_achievers"].dump();
  return {text + "\n"};
}

Outcome do_distribution(const Options &o, std::istream &in) {
  Graph g;
  if (!o.graph.empty()) {
    forbid(!o.family.empty(), "--family", "together with --graph");
    g = parse_edge_list(read_input(o.graph, in));
  } else if (!o.family.empty()) {
    const FamilyMembers fm = resolve_family(o);
    if (fm.graphs.size() != 1)
      throw UsageError("distribution needs a graph family, not '" + o.family + "'");
    g = fm.graphs.front();
  } else {
    throw UsageError("distribution needs --family or --graph");
  }
  return {emit_histogram(distribution(g), format_or(o, Format::csv))};
}

int exit_status(const std::vector<Certificate> &certs) {
  for (const Certificate &c : certs)
    if (c.status == Status::fail)
      return kExitFail;
  return kExitOk;
}

Outcome do_verify(const Options &o) {
  const std::string &claim = o.claim;
  const std::string ctx = "for --claim " + claim;
  const Format format = format_or(o, Format::json);
  if (format == Format::edgelist)
    throw UsageError("certificates are written as json, csv or text");
  VerifyOptions vo;
  vo.threads = o.threads;
  std::vector<Certificate> certs;
  bool single = false;

  if (claim == "theorem1") {
    forbid(o.n.has_value() != o.m.has_value(), "--n or --m alone", ctx);
    if (o.n) {
      forbid(o.n_max.has_value() || o.slow, "--n-max/--slow", "with --n and --m");
      certs.push_back(verify_theorem1(*o.n, *o.m, vo));
      single = true;
    } else {
      const int n_max = o.n_max.value_or(o.slow ? 12 : 10);
      for (int n = 4; n <= n_max; ++n)
        for (int m = 2; 2 * m <= n; ++m)
          certs.push_back(verify_theorem1(n, m, vo));
    }
  } else if (claim == "theorem2") {
    forbid(o.n.has_value(), "--n", ctx);
    if (o.m) {
      certs.push_back(verify_theorem2(*o.m, vo));
      single = true;
    } else {
      const int n_max = o.n_max.value_or(o.slow ? 12 : 10);
      for (int m = 2; 2 * m <= n_max; ++m)
        certs.push_back(verify_theorem2(m, vo));
    }
  } else if (claim == "trees") {
    forbid(o.n.has_value(), "--n", ctx);
    const int lo = o.m.value_or(1);
    const int hi = o.m.value_or(std::min(6, o.n_max.value_or(12) / 2));
    for (int m = lo; m <= hi; ++m)
      for (Certificate &c : verify_tree_lemmas(m, vo))
        certs.push_back(std::move(c));
  } else if (claim == "u42" || claim == "g1") {
    forbid(o.n.has_value() || o.m.has_value() || o.n_max.has_value(), "--n/--m/--n-max", ctx);
    certs.push_back(claim == "u42" ? verify_u42_lemma() : verify_g1_lemma());
    single = true;
  } else if (claim == "properties") {
    forbid(o.n.has_value() || o.m.has_value(), "--n/--m", ctx);
    certs = property_suite(o.n_max.value_or(10), vo);
  } else if (claim == "all") {
    forbid(o.n.has_value() || o.m.has_value(), "--n/--m", ctx);
    const int n_max = o.n_max.value_or(o.slow ? 12 : 10);
    certs = verify_all(n_max, vo);
    certs.push_back(summarize(certs, n_max));
  } else {
    throw UsageError("verify needs --claim theorem1|theorem2|trees|u42|g1|properties|all");
  }

  const int status = exit_status(certs);
  if (single)
    return {emit_certificate(certs.front(), format), status};
  return {emit_certificates(certs, format), status};
}

void write_output(const Options &o, const std::string &text, std::ostream &out) {
  if (o.out.empty() || o.out == "-") {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f)
    throw ParseError("cannot write '" + o.out + "'");
  f << text;
}

} // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Exact first Zagreb index engine for graphs and their orientations", "zagreb"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App *sub) {
    sub->add_option("--format", o.format, "json, csv, text or edgelist");
    sub->add_option("--out", o.out, "write to this file instead of standard output");
  };
  auto add_nm = [&](CLI::App *sub) {
    sub->add_option("--n", o.n, "vertex count");
    sub->add_option("--m", o.m, "matching number");
  };

  auto *construct = app.add_subcommand("construct", "write a named graph or digraph family member");
  construct->add_option("--family", o.family,
                        "cycle|star|g1|u42|c4-two-pendants|t|u|u-orient|extremal-set");
  add_nm(construct);
  add_common(construct);

  auto *enumerate = app.add_subcommand("enumerate", "list graphs of a class up to isomorphism");
  enumerate->add_option("--kind", o.kind, "tree|unicyclic|connected");
  add_nm(enumerate);
  enumerate->add_option("--out-dir", o.out_dir, "write one edge-list file per graph");
  enumerate->add_flag("--count", o.count, "print only the number of graphs");
  add_common(enumerate);

  auto *compute = app.add_subcommand("compute", "evaluate an index or predicate on one graph");
  compute->add_option("--index", o.index,
                      "m1|matching|bipartite|unicyclic|diametrical-path|canonical|max-orient|sink-source");
  compute->add_option("--graph", o.graph, "edge-list file, or - for standard input");
  compute->add_option("--digraph", o.digraph, "digraph file, or - for standard input");
  add_common(compute);

  auto *dist = app.add_subcommand("distribution", "histogram of M1 over all orientations");
  dist->add_option("--family", o.family, "graph family");
  dist->add_option("--graph", o.graph, "edge-list file, or - for standard input");
  add_nm(dist);
  add_common(dist);

  auto *verify = app.add_subcommand("verify", "exhaustively check a claim and emit certificates");
  verify->add_option("--claim", o.claim, "theorem1|theorem2|trees|u42|g1|properties|all");
  add_nm(verify);
  verify->add_option("--n-max", o.n_max, "largest vertex count to sweep");
  verify->add_flag("--slow", o.slow, "extend default sweeps to n = 12");
  verify->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1, 256));
  add_common(verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    Outcome r;
    if (construct->parsed())
      r = do_construct(o);
    else if (enumerate->parsed())
      r = do_enumerate(o, err);
    else if (compute->parsed())
      r = do_compute(o, in);
    else if (dist->parsed())
      r = do_distribution(o, in);
    else
      r = do_verify(o);
    write_output(o, r.text, out);
    return r.status;
  } catch (const UsageError &e) {
    err << "usage error: " << e.what() << "\n";
  } catch (const ParseError &e) {
    err << "input error: " << e.what() << "\n";
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

} // namespace zagreb::cli
