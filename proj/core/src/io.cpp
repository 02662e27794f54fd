#include "morsekit/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace morsekit::io {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// Applies fn(line_number, trimmed_line) to every content line.
template <typename Fn>
void for_content_lines(const std::string& path, Fn&& fn) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    fn(lineno, line);
  }
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError(path, 0, "cannot open file for writing");
  return out;
}

Edge parse_edge_token(const std::string& path, int lineno, const std::string& text) {
  auto pos = text.find('>');
  if (pos == std::string::npos || pos == 0 || pos + 1 == text.size() ||
      text.find('>', pos + 1) != std::string::npos)
    throw ParseError(path, lineno, "malformed edge token '" + text + "' (expected 'u>v')");
  return {text.substr(0, pos), text.substr(pos + 1)};
}

}  // namespace

ParseError::ParseError(const std::string& file, int line, const std::string& message)
    : std::runtime_error(file + ":" + std::to_string(line) + ": " + message),
      file_(file),
      line_(line) {}

Simplex parse_simplex(const std::string& text) {
  if (text.size() < 3 || text.front() != '{' || text.back() != '}')
    throw std::invalid_argument("malformed simplex '" + text + "' (expected '{v1,v2,...}')");
  std::vector<std::string> toks;
  std::string cur;
  for (std::size_t i = 1; i + 1 < text.size(); ++i) {
    char ch = text[i];
    if (ch == ',') {
      toks.push_back(cur);
      cur.clear();
    } else if (std::isspace(static_cast<unsigned char>(ch)) || ch == '{' || ch == '}') {
      throw std::invalid_argument("malformed simplex '" + text + "'");
    } else {
      cur += ch;
    }
  }
  toks.push_back(cur);
  for (const auto& t : toks)
    if (t.empty()) throw std::invalid_argument("empty vertex token in '" + text + "'");
  auto sorted = toks;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("duplicate vertex in '" + text + "'");
  return Simplex(toks);
}

SimplicialComplex read_smax(const std::string& path) {
  std::vector<std::vector<std::string>> faces;
  for_content_lines(path, [&](int lineno, const std::string& line) {
    auto toks = split_ws(line);
    auto sorted = toks;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end())
      throw ParseError(path, lineno, "duplicate vertex '" + *dup + "' in simplex");
    faces.push_back(std::move(toks));
  });
  return SimplicialComplex::from_maximal(faces);
}

std::string smax_string(const SimplicialComplex& K) {
  std::string out;
  for (const auto& s : K.maximal_simplices()) {
    const auto& verts = s.vertices();
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (i) out += ' ';
      out += verts[i];
    }
    out += '\n';
  }
  return out;
}

void write_smax(const std::string& path, const SimplicialComplex& K) {
  open_out(path) << smax_string(K);
}

DirectedGraph read_dgr(const std::string& path) {
  DirectedGraph G;
  for_content_lines(path, [&](int lineno, const std::string& line) {
    auto toks = split_ws(line);
    if (toks.size() != 2)
      throw ParseError(path, lineno, "expected 'u v', got " + std::to_string(toks.size()) +
                                         " token(s)");
    if (!G.add_edge(toks[0], toks[1]))
      throw ParseError(path, lineno, "duplicate edge " + toks[0] + " -> " + toks[1]);
  });
  return G;
}

std::string dgr_string(const DirectedGraph& G) {
  std::string out;
  for (const auto& [u, v] : G.edges()) out += u + " " + v + "\n";
  return out;
}

void write_dgr(const std::string& path, const DirectedGraph& G) {
  open_out(path) << dgr_string(G);
}

GradientFile read_grad(const std::string& path) {
  GradientFile out;
  bool in_critical = false;
  for_content_lines(path, [&](int lineno, const std::string& line) {
    if (line == "critical:") {
      if (in_critical) throw ParseError(path, lineno, "repeated 'critical:' section");
      in_critical = true;
      return;
    }
    try {
      if (in_critical) {
        out.critical.push_back(parse_simplex(line));
        return;
      }
      auto sep = line.find(" -> ");
      if (sep == std::string::npos)
        throw std::invalid_argument("expected '{...} -> {...}'");
      Simplex face = parse_simplex(trim(line.substr(0, sep)));
      Simplex coface = parse_simplex(trim(line.substr(sep + 4)));
      out.pairs.push_back({std::move(face), std::move(coface)});
    } catch (const std::invalid_argument& e) {
      throw ParseError(path, lineno, e.what());
    }
  });
  return out;
}

std::string grad_string(const SimplicialComplex& K, const std::vector<GradientPair>& pairs) {
  std::set<Simplex> matched;
  for (const auto& p : pairs) {
    for (const auto& s : {p.face, p.coface}) {
      if (!K.contains(s))
        throw std::invalid_argument("simplex " + s.str() + " is not in the complex");
      if (!matched.insert(s).second)
        throw std::invalid_argument("simplex " + s.str() + " appears in two pairs");
    }
  }
  auto sorted = pairs;
  std::sort(sorted.begin(), sorted.end());
  std::string out;
  for (const auto& p : sorted) out += p.face.str() + " -> " + p.coface.str() + "\n";
  out += "critical:\n";
  for (const auto& s : K.simplices())
    if (!matched.count(s)) out += s.str() + "\n";
  return out;
}

void write_grad(const std::string& path, const SimplicialComplex& K,
                const std::vector<GradientPair>& pairs) {
  open_out(path) << grad_string(K, pairs);
}

std::map<Edge, GadgetNames> read_atlas(const std::string& path) {
  struct Partial {
    std::optional<Simplex> omega, eta, phi, psi, gamma;
    std::optional<std::string> q, r, s, t, u, v, w;
  };
  std::map<Edge, Partial> partial;

  for_content_lines(path, [&](int lineno, const std::string& line) {
    auto toks = split_ws(line);
    if (toks.size() != 3)
      throw ParseError(path, lineno, "expected '<edge> <role> <value>'");
    Edge e = parse_edge_token(path, lineno, toks[0]);
    Partial& p = partial[e];
    const std::string& role = toks[1];
    const std::string& value = toks[2];
    try {
      auto set_cell = [&](std::optional<Simplex>& slot) {
        if (slot) throw std::invalid_argument("repeated role '" + role + "'");
        slot = parse_simplex(value);
      };
      auto set_vertex = [&](std::optional<std::string>& slot) {
        if (slot) throw std::invalid_argument("repeated role '" + role + "'");
        slot = value;
      };
      if (role == "omega") set_cell(p.omega);
      else if (role == "eta") set_cell(p.eta);
      else if (role == "phi") set_cell(p.phi);
      else if (role == "psi") set_cell(p.psi);
      else if (role == "gamma") set_cell(p.gamma);
      else if (role == "q") set_vertex(p.q);
      else if (role == "r") set_vertex(p.r);
      else if (role == "s") set_vertex(p.s);
      else if (role == "t") set_vertex(p.t);
      else if (role == "u") set_vertex(p.u);
      else if (role == "v") set_vertex(p.v);
      else if (role == "w") set_vertex(p.w);
      else throw std::invalid_argument("unknown role '" + role + "'");
    } catch (const std::invalid_argument& e2) {
      throw ParseError(path, lineno, e2.what());
    }
  });

  std::map<Edge, GadgetNames> out;
  for (auto& [e, p] : partial) {
    if (!(p.omega && p.eta && p.phi && p.psi && p.gamma && p.q && p.r && p.s && p.t && p.u &&
          p.v && p.w))
      throw ParseError(path, 0, "incomplete roles for edge " + edge_token(e));
    out.emplace(e, GadgetNames{std::move(*p.omega), std::move(*p.eta), std::move(*p.phi),
                               std::move(*p.psi), std::move(*p.gamma), std::move(*p.q),
                               std::move(*p.r), std::move(*p.s), std::move(*p.t),
                               std::move(*p.u), std::move(*p.v), std::move(*p.w)});
  }
  return out;
}

std::string atlas_string(const std::map<Edge, GadgetNames>& names) {
  std::string out;
  for (const auto& [e, n] : names) {
    const std::string tok = edge_token(e);
    out += tok + " eta " + n.eta.str() + "\n";
    out += tok + " gamma " + n.gamma.str() + "\n";
    out += tok + " omega " + n.omega.str() + "\n";
    out += tok + " phi " + n.phi.str() + "\n";
    out += tok + " psi " + n.psi.str() + "\n";
    out += tok + " q " + n.q + "\n";
    out += tok + " r " + n.r + "\n";
    out += tok + " s " + n.s + "\n";
    out += tok + " t " + n.t + "\n";
    out += tok + " u " + n.u + "\n";
    out += tok + " v " + n.v + "\n";
    out += tok + " w " + n.w + "\n";
  }
  return out;
}

void write_atlas(const std::string& path, const std::map<Edge, GadgetNames>& names) {
  open_out(path) << atlas_string(names);
}

std::map<std::string, long long> read_audit(const std::string& path) {
  std::map<std::string, long long> out;
  for_content_lines(path, [&](int lineno, const std::string& line) {
    auto eq = line.find('=');
    if (eq == std::string::npos || eq == 0)
      throw ParseError(path, lineno, "expected 'key=value'");
    std::string key = line.substr(0, eq);
    std::string val = line.substr(eq + 1);
    std::size_t used = 0;
    long long parsed = 0;
    try {
      parsed = std::stoll(val, &used);
    } catch (const std::exception&) {
      throw ParseError(path, lineno, "value of '" + key + "' is not an integer");
    }
    if (used != val.size())
      throw ParseError(path, lineno, "value of '" + key + "' is not an integer");
    if (!out.emplace(key, parsed).second)
      throw ParseError(path, lineno, "duplicate key '" + key + "'");
  });
  return out;
}

std::string audit_string(const std::map<std::string, long long>& kv) {
  std::string out;
  for (const auto& [k, v] : kv) out += k + "=" + std::to_string(v) + "\n";
  return out;
}

void write_audit(const std::string& path, const std::map<std::string, long long>& kv) {
  open_out(path) << audit_string(kv);
}

}  // namespace morsekit::io
