#ifndef DELJOIN_IO_HPP
#define DELJOIN_IO_HPP

// File formats and inline specifiers.
//
// Complex:    {"name": str, "vertices": [str], "facets": [[str]]}
// Z2Complex:  the same plus "involution": [[str, str]] (orbits)
// CellComplex (export only): {"name", "source", "cells": [{"dim", "pairs": [[[str],[str]]]}]}
//
// Writers emit facets only, each sorted, in lexicographic order, so equal
// complexes produce identical bytes.

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "complex.hpp"
#include "deleted.hpp"
#include "z2complex.hpp"

namespace deljoin {

using Object = std::variant<SimplicialComplex, Z2Complex, CellComplex>;

class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::string quoted(const std::string& s) { return nlohmann::json(s).dump(); }

inline std::string label_array(const std::vector<std::string>& labels) {
  std::string out = "[";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ", ";
    out += quoted(labels[i]);
  }
  return out + "]";
}

inline void write_complex_body(std::ostream& os, const SimplicialComplex& k) {
  os << "  \"name\": " << quoted(k.name()) << ",\n";
  os << "  \"vertices\": " << label_array(k.vertices()) << ",\n";
  const auto facets = k.facets();
  os << "  \"facets\": [";
  for (std::size_t i = 0; i < facets.size(); ++i) os << (i ? ",\n    " : "\n    ") << label_array(facets[i]);
  os << (facets.empty() ? "]" : "\n  ]");
}

}  // namespace detail

inline std::string to_json_text(const SimplicialComplex& k) {
  std::ostringstream os;
  os << "{\n";
  detail::write_complex_body(os, k);
  os << "\n}\n";
  return os.str();
}

inline std::string to_json_text(const Z2Complex& x) {
  std::ostringstream os;
  os << "{\n";
  detail::write_complex_body(os, x.complex());
  const auto orbits = x.orbits();
  os << ",\n  \"involution\": [";
  for (std::size_t i = 0; i < orbits.size(); ++i)
    os << (i ? ",\n    " : "\n    ") << detail::label_array({orbits[i].first, orbits[i].second});
  os << (orbits.empty() ? "]" : "\n  ]") << "\n}\n";
  return os.str();
}

inline std::string to_json_text(const CellComplex& x) {
  std::ostringstream os;
  os << "{\n  \"name\": " << detail::quoted(x.name()) << ",\n  \"source\": " << detail::quoted(x.source().name())
     << ",\n  \"cells\": [";
  for (int d = 0; d <= x.dim(); ++d) {
    os << (d ? ",\n" : "\n") << "    {\"dim\": " << d << ", \"pairs\": [";
    const auto& cells = x.cells(d);
    for (std::size_t i = 0; i < cells.size(); ++i)
      os << (i ? ",\n      " : "\n      ") << "[" << detail::label_array(x.source().labels(cells[i].first)) << ", "
         << detail::label_array(x.source().labels(cells[i].second)) << "]";
    os << (cells.empty() ? "]}" : "\n    ]}");
  }
  os << (x.dim() < 0 ? "]" : "\n  ]") << "\n}\n";
  return os.str();
}

inline std::string to_json_text(const Object& o) {
  return std::visit([](const auto& v) { return to_json_text(v); }, o);
}

// Parses a complex or Z2-complex document; faces are closed and validated.
inline std::variant<SimplicialComplex, Z2Complex> from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SpecError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw SpecError("complex document must be a JSON object");
  if (j.contains("cells")) throw SpecError("cell complex files are export-only");
  auto strings = [](const nlohmann::json& a, const char* what) {
    if (!a.is_array()) throw SpecError(std::string(what) + " must be an array");
    std::vector<std::string> out;
    for (const auto& e : a) {
      if (!e.is_string()) throw SpecError(std::string(what) + " entries must be strings");
      out.push_back(e.get<std::string>());
    }
    return out;
  };
  if (!j.contains("vertices") || !j.contains("facets")) throw SpecError("complex needs \"vertices\" and \"facets\"");
  const std::string name = j.value("name", std::string("unnamed"));
  auto vertices = strings(j["vertices"], "vertices");
  std::vector<std::vector<std::string>> facets;
  if (!j["facets"].is_array()) throw SpecError("facets must be an array");
  for (const auto& f : j["facets"]) {
    auto facet = strings(f, "facet");
    if (facet.empty()) throw SpecError("facets must be nonempty");
    facets.push_back(std::move(facet));
  }
  auto complex = SimplicialComplex::from_facets(name, std::move(vertices), facets);
  if (!j.contains("involution")) return complex;
  std::vector<std::pair<std::string, std::string>> orbits;
  if (!j["involution"].is_array()) throw SpecError("involution must be an array");
  for (const auto& o : j["involution"]) {
    auto pair = strings(o, "involution orbit");
    if (pair.size() != 2) throw SpecError("involution orbits must have two labels");
    orbits.emplace_back(pair[0], pair[1]);
  }
  return Z2Complex::from_orbits(std::move(complex), orbits);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------------------
// Inline specifiers:
//   skeleton:n:k  simplex:n  boundary:n  points:m  point  cycle:n  crosspoly:n
//   join(A,B)  cone(A)  deljoin(A)  delprod(A)  z2join(X,Y)
// anything else is read as a file path.

namespace detail {

inline int parse_int(const std::string& s, const std::string& spec) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw SpecError("bad integer '" + s + "' in specifier '" + spec + "'");
  return std::stoi(s);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// Splits "A,B" at top-level commas.
inline std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace detail

inline Object parse_object(const std::string& spec);

inline SimplicialComplex as_complex(const Object& o, const std::string& spec) {
  if (auto k = std::get_if<SimplicialComplex>(&o)) return *k;
  if (auto z = std::get_if<Z2Complex>(&o)) return z->complex();
  throw SpecError("'" + spec + "' is a cell complex; a simplicial complex is required");
}

inline Z2Complex as_z2(const Object& o, const std::string& spec) {
  if (auto z = std::get_if<Z2Complex>(&o)) return *z;
  throw SpecError("'" + spec + "' has no involution; a Z2-complex is required");
}

inline SimplicialComplex parse_complex(const std::string& spec) { return as_complex(parse_object(spec), spec); }
inline Z2Complex parse_z2(const std::string& spec) { return as_z2(parse_object(spec), spec); }

inline Object parse_object(const std::string& spec) {
  const auto open = spec.find('(');
  if (open != std::string::npos && !spec.empty() && spec.back() == ')') {
    const std::string fn = spec.substr(0, open);
    const auto args = detail::split_args(spec.substr(open + 1, spec.size() - open - 2));
    auto want = [&](std::size_t n) {
      if (args.size() != n) throw SpecError("'" + fn + "' takes " + std::to_string(n) + " argument(s) in '" + spec + "'");
    };
    if (fn == "join") {
      want(2);
      const Object a = parse_object(args[0]);
      const Object b = parse_object(args[1]);
      if (std::holds_alternative<Z2Complex>(a) && std::holds_alternative<Z2Complex>(b))
        return z2_join(std::get<Z2Complex>(a), std::get<Z2Complex>(b));
      return join(as_complex(a, args[0]), as_complex(b, args[1]));
    }
    if (fn == "z2join") {
      want(2);
      return z2_join(parse_z2(args[0]), parse_z2(args[1]));
    }
    if (fn == "cone") {
      want(1);
      return cone(parse_complex(args[0]));
    }
    if (fn == "deljoin") {
      want(1);
      return deleted_join(parse_complex(args[0]));
    }
    if (fn == "delprod") {
      want(1);
      return deleted_product(parse_complex(args[0]));
    }
    throw SpecError("unknown constructor '" + fn + "' in '" + spec + "'");
  }

  const auto parts = detail::split(spec, ':');
  const std::string& head = parts[0];
  auto arity = [&](std::size_t n) {
    if (parts.size() != n + 1) throw SpecError("'" + head + "' takes " + std::to_string(n) + " parameter(s) in '" + spec + "'");
  };
  if (head == "skeleton") {
    arity(2);
    return simplex_skeleton(detail::parse_int(parts[1], spec), detail::parse_int(parts[2], spec));
  }
  if (head == "simplex") {
    arity(1);
    return full_simplex(detail::parse_int(parts[1], spec));
  }
  if (head == "boundary") {
    arity(1);
    const int n = detail::parse_int(parts[1], spec);
    if (n < 1) throw SpecError("boundary:n needs n >= 1");
    return simplex_skeleton(n, n - 1).renamed("boundary:" + parts[1]);
  }
  if (head == "points") {
    arity(1);
    return discrete_points(detail::parse_int(parts[1], spec));
  }
  if (head == "point" && parts.size() == 1) return discrete_points(1).renamed("point");
  if (head == "edge" && parts.size() == 1) return full_simplex(1).renamed("edge");
  if (head == "cycle") {
    arity(1);
    return cycle_graph(detail::parse_int(parts[1], spec));
  }
  if (head == "crosspoly") {
    arity(1);
    return cross_polytope_boundary(detail::parse_int(parts[1], spec));
  }

  const auto doc = from_json_text(read_file(spec));
  if (auto k = std::get_if<SimplicialComplex>(&doc)) return *k;
  return std::get<Z2Complex>(doc);
}

}  // namespace deljoin

#endif  // DELJOIN_IO_HPP
