#pragma once

// Labeling JSON documents and vertex-sequence files.

#include <cctype>
#include <istream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "radiolab/errors.hpp"
#include "radiolab/graph.hpp"
#include "radiolab/radio.hpp"

namespace radiolab {

using Json = nlohmann::ordered_json;

// {"n": int, "diameter": int, "labels": [int; n], "span": int}
inline Json labeling_to_json(const RadioLabeling& f, int diam) {
  Json j;
  j["n"] = f.size();
  j["diameter"] = diam;
  j["labels"] = f.labels();
  j["span"] = f.span();
  return j;
}

inline RadioLabeling labeling_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("labels") || !j["labels"].is_array()) {
    throw ParseError(0, "labeling document needs a \"labels\" array");
  }
  std::vector<int> labels;
  for (const auto& x : j["labels"]) {
    if (!x.is_number_integer()) throw ParseError(0, "labels must be integers");
    labels.push_back(x.get<int>());
  }
  if (j.contains("n") && j["n"].get<std::size_t>() != labels.size()) {
    throw ParseError(0, "\"n\" disagrees with the number of labels");
  }
  RadioLabeling f(std::move(labels));
  if (j.contains("span") && j["span"].get<int>() != f.span()) {
    throw ParseError(0, "\"span\" disagrees with the largest label");
  }
  return f;
}

inline RadioLabeling read_labeling(std::istream& in) {
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, e.what());
  }
  return labeling_from_json(j);
}

struct VertexSequence {
  std::vector<Vertex> vertices;  // without the closing repeat
  bool closed = false;           // last entry repeated the first
};

// Whitespace-separated vertex ids; commas and parentheses are ignored so
// "(0, 1, 2, 0)" reads the same as "0 1 2 0".
inline VertexSequence parse_sequence(std::istream& in) {
  VertexSequence seq;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    for (char& c : line) {
      if (c == ',' || c == '(' || c == ')') c = ' ';
    }
    std::istringstream tokens(line);
    std::string tok;
    while (tokens >> tok) {
      std::size_t used = 0;
      long long value = -1;
      try {
        value = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || value < 0 || value > std::numeric_limits<int>::max()) {
        throw ParseError(lineno, "bad vertex '" + tok + "'");
      }
      seq.vertices.push_back(static_cast<Vertex>(value));
    }
  }
  if (seq.vertices.size() >= 2 && seq.vertices.front() == seq.vertices.back()) {
    seq.vertices.pop_back();
    seq.closed = true;
  }
  return seq;
}

inline VertexSequence parse_sequence(const std::string& text) {
  std::istringstream in(text);
  return parse_sequence(in);
}

}  // namespace radiolab
