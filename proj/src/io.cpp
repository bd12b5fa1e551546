#include "setval/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "json.hpp"
#include "setval/error.hpp"

namespace setval {

namespace {

using nlohmann::json;

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

// Calls fn(line_number, line) for each line that is neither blank nor a comment.
template <typename Fn>
void for_each_content_line(std::string_view text, Fn fn) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    const auto first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line[first] != '#') fn(line_no, line);
    if (end == text.size()) break;
    start = end + 1;
  }
}

bool valid_name(std::string_view name) {
  if (name.empty() || name.front() == '#') return false;
  for (char c : name) {
    if (c == ':' || std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::size_t parse_count(std::string_view token, std::size_t line, const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(token) + "'");
  }
  return value;
}

SetLabel label_from_elements(const GroundSet& ground, const std::vector<std::size_t>& raw, std::size_t line,
                             const std::string& name) {
  std::set<std::size_t> seen;
  std::vector<Element> elements;
  for (std::size_t e : raw) {
    if (e < 1 || e > ground.size()) {
      throw ParseError(line, "element " + std::to_string(e) + " of '" + name + "' outside 1.." +
                                 std::to_string(ground.size()));
    }
    if (!seen.insert(e).second) {
      throw ParseError(line, "element " + std::to_string(e) + " repeated in '" + name + "'");
    }
    elements.push_back(static_cast<Element>(e));
  }
  return SetLabel::from_elements(ground, elements);
}

void require_injective(const ValuationDocument& doc) {
  std::unordered_map<SetLabel, std::string, SetLabelHash> owner;
  for (const auto& [name, label] : doc.labels) {
    auto [it, inserted] = owner.emplace(label, name);
    if (!inserted) {
      throw Error(ErrorCode::NotInjective, "'" + it->second + "' and '" + name + "' share a label");
    }
  }
}

}  // namespace

SignedGraphDocument parse_signed_graph(std::string_view text) {
  std::vector<std::string> names;
  std::unordered_map<std::string, VertexId> index;
  auto intern = [&](std::string_view name, std::size_t line) {
    if (!valid_name(name)) throw ParseError(line, "invalid vertex name '" + std::string(name) + "'");
    auto [it, inserted] = index.emplace(std::string(name), static_cast<VertexId>(names.size()));
    if (inserted) names.emplace_back(name);
    return it->second;
  };

  struct Record {
    Edge edge;
    Sign sign;
    std::size_t line;
  };
  std::vector<Record> records;
  bool saw_content = false;

  for_each_content_line(text, [&](std::size_t line, std::string_view content) {
    const auto tokens = split_tokens(content);
    if (tokens.front() == "vertices:") {
      if (saw_content) throw ParseError(line, "vertex header must precede all edges");
      saw_content = true;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (index.contains(std::string(tokens[i]))) {
          throw ParseError(line, "vertex '" + std::string(tokens[i]) + "' listed twice");
        }
        intern(tokens[i], line);
      }
      return;
    }
    saw_content = true;
    if (tokens.size() != 3) {
      throw ParseError(line, "expected 'u v sign', got " + std::to_string(tokens.size()) + " fields");
    }
    std::optional<Sign> sign;
    if (tokens[2].size() == 1) sign = sign_from_char(tokens[2][0]);
    if (!sign) throw ParseError(line, "sign must be '+' or '-', got '" + std::string(tokens[2]) + "'");
    const VertexId a = intern(tokens[0], line);
    const VertexId b = intern(tokens[1], line);
    if (a == b) {
      throw Error(ErrorCode::SelfLoopRejected,
                  "line " + std::to_string(line) + ": self-loop at '" + std::string(tokens[0]) + "'");
    }
    records.push_back({make_edge(a, b), *sign, line});
  });

  std::map<Edge, std::pair<Sign, std::size_t>> signature;
  SignedGraphDocument doc;
  for (const Record& r : records) {
    auto [it, inserted] = signature.emplace(r.edge, std::make_pair(r.sign, r.line));
    if (inserted) continue;
    if (it->second.first != r.sign) {
      throw Error(ErrorCode::DuplicateEdgeConflict,
                  "line " + std::to_string(r.line) + ": edge '" + names[r.edge.u] + " " + names[r.edge.v] +
                      "' already given sign " + to_char(it->second.first) + " on line " +
                      std::to_string(it->second.second));
    }
    ++doc.duplicate_edges;
  }

  std::vector<std::pair<VertexId, VertexId>> pairs;
  std::vector<Sign> signs;
  for (const auto& [edge, entry] : signature) {
    pairs.emplace_back(edge.u, edge.v);
    signs.push_back(entry.first);
  }
  // std::map iterates in the same (u, v) order Graph uses for EdgeIds.
  doc.graph = SignedGraph(Graph(names.size(), pairs), std::move(signs));
  doc.names = std::move(names);
  return doc;
}

std::string serialize_signed_graph(const SignedGraph& sg, std::span<const std::string> names) {
  if (names.size() != sg.vertex_count()) {
    throw Error(ErrorCode::PreconditionViolated, std::to_string(names.size()) + " names for " +
                                                     std::to_string(sg.vertex_count()) + " vertices");
  }
  std::set<std::string_view> distinct;
  std::string out = "vertices:";
  for (const std::string& name : names) {
    if (!valid_name(name) || !distinct.insert(name).second) {
      throw Error(ErrorCode::PreconditionViolated, "bad or repeated vertex name '" + name + "'");
    }
    out += ' ';
    out += name;
  }
  out += '\n';
  const auto edges = sg.graph().edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out += names[edges[i].u];
    out += ' ';
    out += names[edges[i].v];
    out += ' ';
    out += to_char(sg.signs()[i]);
    out += '\n';
  }
  return out;
}

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t v = 0; v < n; ++v) out.push_back("v" + std::to_string(v));
  return out;
}

ValuationDocument parse_valuation_text(std::string_view text) {
  std::optional<GroundSet> ground;
  ValuationDocument doc;
  for_each_content_line(text, [&](std::size_t line, std::string_view content) {
    const auto colon = content.find(':');
    if (colon == std::string_view::npos) throw ParseError(line, "expected 'name: elements'");
    const auto key_tokens = split_tokens(content.substr(0, colon));
    const auto values = split_tokens(content.substr(colon + 1));
    if (key_tokens.size() != 1) throw ParseError(line, "expected a single name before ':'");
    const std::string name(key_tokens.front());

    if (!ground) {
      if (name != "m" || values.size() != 1) throw ParseError(line, "first entry must be 'm: <ground size>'");
      const std::size_t m = parse_count(values.front(), line, "ground-set size");
      if (m == 0) throw ParseError(line, "ground-set size must be positive");
      ground.emplace(m);
      return;
    }
    if (!valid_name(name)) throw ParseError(line, "invalid vertex name '" + name + "'");
    std::vector<std::size_t> raw;
    for (auto token : values) raw.push_back(parse_count(token, line, "element"));
    SetLabel label = label_from_elements(*ground, raw, line, name);
    if (!doc.labels.emplace(name, std::move(label)).second) {
      throw ParseError(line, "vertex '" + name + "' labeled twice");
    }
  });
  if (!ground) throw ParseError(0, "missing 'm: <ground size>' line");
  doc.ground = *ground;
  require_injective(doc);
  return doc;
}

ValuationDocument parse_valuation_json(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(0, e.what());
  }
  if (!root.is_object() || !root.contains("ground_size") || !root.contains("labels")) {
    throw ParseError(0, "expected an object with 'ground_size' and 'labels'");
  }
  const json& size = root["ground_size"];
  if (!size.is_number_unsigned() || size.get<std::size_t>() == 0) {
    throw ParseError(0, "'ground_size' must be a positive integer");
  }
  const json& labels = root["labels"];
  if (!labels.is_object()) throw ParseError(0, "'labels' must be an object");

  ValuationDocument doc;
  doc.ground = GroundSet(size.get<std::size_t>());
  for (const auto& [name, elements] : labels.items()) {
    if (!valid_name(name)) throw ParseError(0, "invalid vertex name '" + name + "'");
    if (!elements.is_array()) throw ParseError(0, "label of '" + name + "' must be an array");
    std::vector<std::size_t> raw;
    for (const json& e : elements) {
      if (!e.is_number_unsigned()) throw ParseError(0, "elements of '" + name + "' must be positive integers");
      raw.push_back(e.get<std::size_t>());
    }
    doc.labels.emplace(name, label_from_elements(doc.ground, raw, 0, name));
  }
  require_injective(doc);
  return doc;
}

ValuationDocument parse_valuation(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_valuation_json(text);
  return parse_valuation_text(text);
}

std::string serialize_valuation_text(const ValuationDocument& doc) {
  std::string out = "m: " + std::to_string(doc.ground.size()) + "\n";
  for (const auto& [name, label] : doc.labels) {
    out += name;
    out += ':';
    for (Element e : label.elements()) {
      out += ' ';
      out += std::to_string(e);
    }
    out += '\n';
  }
  return out;
}

std::string serialize_valuation_json(const ValuationDocument& doc) {
  json labels = json::object();
  for (const auto& [name, label] : doc.labels) labels[name] = label.elements();
  json root = {{"ground_size", doc.ground.size()}, {"labels", std::move(labels)}};
  return root.dump(2) + "\n";
}

ValuationDocument to_document(const SetValuation& val, std::span<const std::string> names) {
  if (names.size() != val.size()) {
    throw Error(ErrorCode::PreconditionViolated,
                std::to_string(names.size()) + " names for " + std::to_string(val.size()) + " labels");
  }
  ValuationDocument doc;
  doc.ground = val.ground();
  for (std::size_t v = 0; v < names.size(); ++v) {
    if (!doc.labels.emplace(names[v], val.labels()[v]).second) {
      throw Error(ErrorCode::PreconditionViolated, "vertex name '" + names[v] + "' repeated");
    }
  }
  return doc;
}

SetValuation to_valuation(const ValuationDocument& doc, std::span<const std::string> names) {
  std::unordered_map<std::string_view, VertexId> index;
  for (VertexId v = 0; v < names.size(); ++v) index.emplace(names[v], v);
  for (const auto& [name, label] : doc.labels) {
    if (!index.contains(name)) throw Error(ErrorCode::InvalidVertex, "label for unknown vertex '" + name + "'");
  }
  std::vector<SetLabel> labels;
  labels.reserve(names.size());
  for (const std::string& name : names) {
    auto it = doc.labels.find(name);
    if (it == doc.labels.end()) throw Error(ErrorCode::MissingLabel, "vertex '" + name + "' has no label");
    labels.push_back(it->second);
  }
  return SetValuation(doc.ground, std::move(labels));
}

std::string report_text(const SuiteReport& report) {
  std::ostringstream out;
  const FamilyDescriptor& f = report.family;
  out << "family: n <= " << f.max_n << ", m <= " << f.max_m << (f.connected_only ? ", connected" : "")
      << ", budget " << f.budget;
  if (f.random_instances > 0) {
    out << ", random " << f.random_instances << " (n <= " << f.random_max_n << ", m <= " << f.random_max_m
        << ", seed " << f.seed << ")";
  }
  out << '\n';
  out << "graphs: " << report.graphs << ", labeled instances: " << report.labeled_instances
      << ", signatures: " << report.signatures << ", random instances: " << report.random_instances << '\n';
  for (const CheckTally& c : report.checks) {
    out << (c.failed == 0 ? "PASS " : "FAIL ") << c.name << ": " << c.checked << " checked, " << c.failed
        << " counterexamples\n";
    for (const std::string& ce : c.counterexamples) out << "  " << ce << '\n';
  }
  out << (report.passed() ? "result: no counterexamples\n" : "result: counterexamples found\n");
  return out.str();
}

std::string report_json(const SuiteReport& report) {
  const FamilyDescriptor& f = report.family;
  json checks = json::array();
  for (const CheckTally& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"checked", c.checked},
                      {"failed", c.failed},
                      {"counterexamples", c.counterexamples}});
  }
  json root = {
      {"family",
       {{"max_n", f.max_n},
        {"max_m", f.max_m},
        {"budget", f.budget},
        {"connected_only", f.connected_only},
        {"random_instances", f.random_instances},
        {"random_max_n", f.random_max_n},
        {"random_max_m", f.random_max_m},
        {"seed", f.seed}}},
      {"graphs", report.graphs},
      {"labeled_instances", report.labeled_instances},
      {"signatures", report.signatures},
      {"random_instances", report.random_instances},
      {"checks", std::move(checks)},
      {"passed", report.passed()},
  };
  return root.dump(2) + "\n";
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::IoError, "error reading '" + path + "'");
  return buffer.str();
}

void write_output(const std::string& path, std::string_view content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw Error(ErrorCode::IoError, "error writing '" + path + "'");
}

}  // namespace setval
