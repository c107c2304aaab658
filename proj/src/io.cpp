#include "zagreb/io.hpp"

#include "zagreb/error.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace zagreb {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> content_lines(std::string_view text) {
  std::vector<std::string_view> out;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty() || line.front() == '#')
      continue;
    out.push_back(line);
  }
  return out;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    if (line[pos] == ' ' || line[pos] == '\t') {
      ++pos;
      continue;
    }
    if (line[pos] == '>') {
      out.push_back(line.substr(pos, 1));
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '>')
      ++end;
    out.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

int parse_int(std::string_view tok, std::size_t line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("line " + std::to_string(line_no) + ": expected an integer, got '" +
                     std::string(tok) + "'");
  return value;
}

int parse_order(const std::vector<std::string_view> &lines) {
  if (lines.empty())
    throw ParseError("empty input: expected the vertex count on the first line");
  const auto head = tokens(lines.front());
  if (head.size() != 1)
    throw ParseError("line 1: expected a single vertex count");
  const int n = parse_int(head.front(), 1);
  if (n < 0)
    throw ParseError("line 1: negative vertex count");
  return n;
}

} // namespace

Graph parse_edge_list(std::string_view text) {
  const auto lines = content_lines(text);
  const int n = parse_order(lines);
  std::vector<Edge> es;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto tok = tokens(lines[i]);
    if (tok.size() != 2)
      throw ParseError("line " + std::to_string(i + 1) + ": expected 'u v'");
    es.push_back({parse_int(tok[0], i + 1), parse_int(tok[1], i + 1)});
  }
  try {
    return Graph::from_edges(n, es);
  } catch (const Error &e) {
    throw ParseError(std::string("invalid edge list: ") + e.what());
  }
}

Digraph parse_digraph(std::string_view text) {
  const auto lines = content_lines(text);
  const int n = parse_order(lines);
  std::vector<Arc> as;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto tok = tokens(lines[i]);
    if (tok.size() != 3 || tok[1] != ">")
      throw ParseError("line " + std::to_string(i + 1) + ": expected 'u > v'");
    as.push_back({parse_int(tok[0], i + 1), parse_int(tok[2], i + 1)});
  }
  try {
    return Digraph::from_arcs(n, as);
  } catch (const Error &e) {
    throw ParseError(std::string("invalid digraph: ") + e.what());
  }
}

std::string format_edge_list(const Graph &g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (const Edge &e : g.edges())
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

std::string format_digraph(const Digraph &d) {
  std::string out = std::to_string(d.order()) + "\n";
  for (const Arc &a : d.arcs())
    out += std::to_string(a.tail) + " > " + std::to_string(a.head) + "\n";
  return out;
}

std::vector<std::string> split_documents(std::string_view text) {
  std::vector<std::string> docs;
  std::string current;
  auto flush = [&] {
    if (!content_lines(current).empty())
      docs.push_back(current);
    current.clear();
  };
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (trim(raw) == "---") {
      flush();
      continue;
    }
    current.append(raw);
    current.push_back('\n');
  }
  flush();
  return docs;
}

std::string join_documents(const std::vector<std::string> &docs) {
  std::string out;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (i > 0)
      out += "---\n";
    out += docs[i];
  }
  return out;
}

std::string read_source(const std::string &path) {
  if (path == "-")
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

} // namespace zagreb
