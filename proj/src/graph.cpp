#include "cospectra/graph.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace cospectra {

namespace {

long long as_int(const VertexKey& key, const char* what) {
  if (const long long* v = std::get_if<long long>(&key)) return *v;
  throw InvalidKey(std::string(what) + ": expected an integer key");
}

const std::vector<long long>& as_vec(const VertexKey& key, const char* what) {
  if (const auto* v = std::get_if<std::vector<long long>>(&key)) return *v;
  throw InvalidKey(std::string(what) + ": expected a coordinate vector key");
}

const TreePath& as_path(const VertexKey& key, const char* what) {
  if (const auto* v = std::get_if<TreePath>(&key)) return *v;
  throw InvalidKey(std::string(what) + ": expected a tree path key");
}

DinfKey as_dinf(const VertexKey& key, const char* what) {
  if (const auto* v = std::get_if<DinfKey>(&key)) return *v;
  throw InvalidKey(std::string(what) + ": expected a D-infinity key");
}

void check_tree_path(const BranchingSeq& b, const TreePath& p) {
  for (std::size_t r = 0; r < p.size(); ++r)
    if (p[r] < 0 || p[r] >= b.at((long long)r))
      throw InvalidKey("tree path digit out of range at depth " + std::to_string(r));
}

}  // namespace

std::string render_key(const VertexKey& key) {
  struct Visitor {
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(const std::vector<long long>& v) const {
      std::string s = "(";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
      }
      return s + ")";
    }
    std::string operator()(const TreePath& p) const {
      if (p.empty()) return "root";
      bool compact = std::all_of(p.begin(), p.end(), [](int d) { return d <= 9; });
      std::string s;
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (i && !compact) s += '.';
        s += std::to_string(p[i]);
      }
      return s;
    }
    std::string operator()(const DinfKey& k) const {
      return k.prime ? "0'" : std::to_string(k.n);
    }
  };
  return std::visit(Visitor{}, key);
}

VertexKey parse_key(const GraphFamily& family, const std::string& text) {
  auto parse_int = [&](const std::string& s) -> long long {
    try {
      std::size_t used = 0;
      long long v = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::logic_error&) {
      throw InvalidKey("bad integer key: " + s);
    }
  };
  switch (family.kind) {
    case GraphFamily::Kind::Ray: {
      long long n = parse_int(text);
      if (n < 0) throw InvalidKey("ray vertices are nonnegative: " + text);
      return n;
    }
    case GraphFamily::Kind::Line:
      return parse_int(text);
    case GraphFamily::Kind::Finite: {
      long long n = parse_int(text);
      if (n < 0 || (family.finite && n >= family.finite->size()))
        throw InvalidKey("vertex out of range: " + text);
      return n;
    }
    case GraphFamily::Kind::DInfinity: {
      if (text == "0'") return DinfKey{true, 0};
      long long n = parse_int(text);
      if (n < 0) throw InvalidKey("two-ended keys are 0', 0, 1, ...: " + text);
      return DinfKey{false, n};
    }
    case GraphFamily::Kind::Lattice: {
      std::string body = text;
      if (body.size() >= 2 && body.front() == '(' && body.back() == ')')
        body = body.substr(1, body.size() - 2);
      std::vector<long long> v;
      std::stringstream ss(body);
      std::string item;
      while (std::getline(ss, item, ',')) v.push_back(parse_int(item));
      if ((int)v.size() != family.degree)
        throw InvalidKey("lattice key " + text + " needs " + std::to_string(family.degree) +
                         " coordinates");
      return v;
    }
    case GraphFamily::Kind::RootedTree:
    case GraphFamily::Kind::RegularTree:
    case GraphFamily::Kind::Ssrt: {
      if (text.empty() || text == "root") return TreePath{};
      TreePath p;
      if (text.find('.') != std::string::npos) {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, '.')) p.push_back((int)parse_int(item));
      } else {
        for (char c : text) {
          if (c < '0' || c > '9') throw InvalidKey("bad tree path: " + text);
          p.push_back(c - '0');
        }
      }
      const BranchingSeq b = branching_of(family);
      for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] < 0 || p[i] >= b.at((long long)i))
          throw InvalidKey("child index " + std::to_string(p[i]) + " out of range at depth " +
                           std::to_string(i));
      return p;
    }
  }
  throw InvalidKey("unknown family kind");
}

VertexKey origin_key(const GraphFamily& family) {
  switch (family.kind) {
    case GraphFamily::Kind::Ray:
    case GraphFamily::Kind::Line:
    case GraphFamily::Kind::Finite:
      return (long long)0;
    case GraphFamily::Kind::DInfinity:
      return DinfKey{false, 0};
    case GraphFamily::Kind::Lattice:
      return std::vector<long long>((std::size_t)family.degree, 0);
    case GraphFamily::Kind::RootedTree:
    case GraphFamily::Kind::RegularTree:
    case GraphFamily::Kind::Ssrt:
      return TreePath{};
  }
  throw InvalidKey("unknown family kind");
}

void FiniteGraph::add_edge(int u, int v, int m) {
  if (u < 0 || v < 0 || u >= size() || v >= size())
    throw InvalidParameter("add_edge: vertex out of range");
  if (m < 1) throw InvalidParameter("add_edge: multiplicity must be >= 1");
  if (!multi && (u == v || m > 1))
    throw InvalidParameter("loops and parallel edges need a multigraph");
  auto insert = [&](int a, int b) {
    auto& row = adj[(std::size_t)a];
    auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(b, 0));
    if (it != row.end() && it->first == b) {
      if (!multi) throw InvalidParameter("duplicate edge " + std::to_string(a) + "-" + std::to_string(b));
      it->second += m;
    } else {
      row.insert(it, {b, m});
    }
  };
  insert(u, v);
  if (u != v) insert(v, u);
}

int FiniteGraph::multiplicity(int u, int v) const {
  if (u < 0 || v < 0 || u >= size() || v >= size()) return 0;
  const auto& row = adj[(std::size_t)u];
  auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(v, 0));
  if (it != row.end() && it->first == v) return it->second;
  return 0;
}

int FiniteGraph::degree(int v) const {
  if (v < 0 || v >= size()) throw InvalidParameter("degree: vertex out of range");
  int d = 0;
  for (auto [u, m] : adj[(std::size_t)v]) {
    (void)u;
    d += m;
  }
  return d;
}

bool FiniteGraph::connected() const {
  if (size() == 0) return true;
  std::vector<char> seen((std::size_t)size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [u, m] : adj[(std::size_t)v]) {
      (void)m;
      if (!seen[(std::size_t)u]) {
        seen[(std::size_t)u] = 1;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == size();
}

std::vector<VertexKey> neighbors(const GraphFamily& family, const VertexKey& key) {
  std::vector<VertexKey> out;
  switch (family.kind) {
    case GraphFamily::Kind::Ray: {
      long long n = as_int(key, "ray");
      if (n < 0) throw InvalidKey("ray keys are >= 0");
      if (n > 0) out.push_back(n - 1);
      out.push_back(n + 1);
      break;
    }
    case GraphFamily::Kind::Line: {
      long long n = as_int(key, "line");
      out.push_back(n - 1);
      out.push_back(n + 1);
      break;
    }
    case GraphFamily::Kind::DInfinity: {
      DinfKey k = as_dinf(key, "dinfinity");
      if (k.prime) {
        if (k.n != 0) throw InvalidKey("only the origin has a primed twin");
        out.push_back(DinfKey{false, 1});
      } else if (k.n < 0) {
        throw InvalidKey("dinfinity keys are >= 0");
      } else if (k.n == 0) {
        out.push_back(DinfKey{false, 1});
      } else if (k.n == 1) {
        out.push_back(DinfKey{true, 0});
        out.push_back(DinfKey{false, 0});
        out.push_back(DinfKey{false, 2});
      } else {
        out.push_back(DinfKey{false, k.n - 1});
        out.push_back(DinfKey{false, k.n + 1});
      }
      break;
    }
    case GraphFamily::Kind::Lattice: {
      const auto& v = as_vec(key, "lattice");
      if ((int)v.size() != family.degree)
        throw InvalidKey("lattice key has wrong dimension");
      for (std::size_t i = 0; i < v.size(); ++i) {
        for (long long step : {-1LL, 1LL}) {
          auto w = v;
          w[i] += step;
          out.push_back(std::move(w));
        }
      }
      std::sort(out.begin(), out.end());
      break;
    }
    case GraphFamily::Kind::RootedTree:
    case GraphFamily::Kind::RegularTree:
    case GraphFamily::Kind::Ssrt: {
      const BranchingSeq b = branching_of(family);
      const TreePath& p = as_path(key, "tree");
      check_tree_path(b, p);
      if (!p.empty()) {
        TreePath parent(p.begin(), p.end() - 1);
        out.push_back(std::move(parent));
      }
      int children = b.at((long long)p.size());
      for (int c = 0; c < children; ++c) {
        TreePath child = p;
        child.push_back(c);
        out.push_back(std::move(child));
      }
      break;
    }
    case GraphFamily::Kind::Finite: {
      long long n = as_int(key, "finite");
      if (n < 0 || n >= family.finite->size()) throw InvalidKey("finite key out of range");
      for (auto [u, m] : family.finite->adj[(std::size_t)n]) {
        (void)m;
        if (u != (int)n) out.push_back((long long)u);
      }
      break;
    }
  }
  return out;
}

FiniteGraph ball(const GraphFamily& family, const VertexKey& center, int radius,
                 long long budget) {
  if (radius < 0) throw InvalidParameter("ball radius must be >= 0");
  neighbors(family, center);  // validates the key
  std::map<VertexKey, int> position;
  std::vector<VertexKey> keys;
  std::vector<int> levels;
  std::vector<VertexKey> frontier{center};
  position[center] = 0;
  keys.push_back(center);
  levels.push_back(0);
  for (int depth = 1; depth <= radius && !frontier.empty(); ++depth) {
    std::map<VertexKey, char> next;
    for (const VertexKey& v : frontier)
      for (VertexKey& u : neighbors(family, v))
        if (!position.count(u)) next.emplace(std::move(u), 0);
    frontier.clear();
    for (auto& [key, unused] : next) {
      (void)unused;
      if ((long long)keys.size() + 1 > budget)
        throw SizeLimitExceeded("ball exceeds vertex budget of " + std::to_string(budget));
      position[key] = (int)keys.size();
      keys.push_back(key);
      levels.push_back(depth);
      frontier.push_back(key);
    }
  }

  const bool is_multi = family.kind == GraphFamily::Kind::Finite && family.finite->multi;
  FiniteGraph g((int)keys.size(), is_multi);
  g.labels = keys;
  g.level = levels;
  g.boundary.assign(keys.size(), 0);
  for (int v = 0; v < g.size(); ++v) {
    int present = 0;
    for (const VertexKey& u : neighbors(family, keys[(std::size_t)v])) {
      auto it = position.find(u);
      if (it == position.end()) continue;
      ++present;
      if (it->second > v) {
        int m = 1;
        if (is_multi)
          m = family.finite->multiplicity((int)as_int(keys[(std::size_t)v], "finite"),
                                          (int)as_int(u, "finite"));
        g.add_edge(v, it->second, m);
      }
    }
    if (is_multi) {
      long long p = as_int(keys[(std::size_t)v], "finite");
      int loop = family.finite->multiplicity((int)p, (int)p);
      if (loop > 0) g.add_edge(v, v, loop);
    }
    if (levels[(std::size_t)v] == radius &&
        present < (int)neighbors(family, keys[(std::size_t)v]).size())
      g.boundary[(std::size_t)v] = 1;
  }
  return g;
}

WalkCount closed_walk_count(const GraphFamily& family, const VertexKey& key, int n,
                            long long budget) {
  if (n < 0) throw InvalidParameter("walk length must be >= 0");
  if (n == 0) return 1;
  FiniteGraph g = ball(family, key, (n + 1) / 2, budget);
  std::vector<WalkCount> x((std::size_t)g.size(), WalkCount(0));
  x[0] = 1;
  for (int step = 0; step < n; ++step) x = adjacency_apply(g, x);
  return x[0];
}

void export_edge_list(const FiniteGraph& g, std::ostream& out) {
  out << "# vertices " << g.size() << "\n";
  for (int u = 0; u < g.size(); ++u) {
    for (auto [v, m] : g.adj[(std::size_t)u]) {
      if (v < u) continue;
      if (u == v)
        out << u << " " << v << " " << m << "\n";
      else if (m == 1)
        out << u << " " << v << "\n";
      else
        out << u << " " << v << " " << m << "\n";
    }
  }
}

FiniteGraph import_edge_list(std::istream& in, bool multi) {
  struct Entry {
    int u, v, m;
  };
  std::vector<Entry> entries;
  long long declared = -1;
  long long max_index = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (std::size_t hash = line.find('#'); hash != std::string::npos) {
      std::stringstream hs(line.substr(hash + 1));
      std::string word;
      if (hs >> word && word == "vertices") {
        long long n;
        if (hs >> n) declared = n;
      }
      line = line.substr(0, hash);
    }
    std::stringstream ss(line);
    long long u, v;
    if (!(ss >> u)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos)
        throw ParseError("line " + std::to_string(line_no) + ": expected \"u v [m]\"");
      continue;  // blank or comment-only line
    }
    if (!(ss >> v)) throw ParseError("line " + std::to_string(line_no) + ": expected \"u v [m]\"");
    long long m = 1;
    ss >> m;
    std::string trailing;
    if (ss >> trailing) throw ParseError("line " + std::to_string(line_no) + ": trailing tokens");
    if (u < 0 || v < 0) throw ParseError("line " + std::to_string(line_no) + ": negative vertex");
    if (m < 1) throw ParseError("line " + std::to_string(line_no) + ": multiplicity must be >= 1");
    max_index = std::max({max_index, u, v});
    entries.push_back({(int)u, (int)v, (int)m});
  }
  long long n = std::max(declared, max_index + 1);
  if (n < 0) n = 0;
  if (declared >= 0 && max_index >= declared)
    throw ParseError("edge refers to vertex " + std::to_string(max_index) +
                     " but header declares " + std::to_string(declared));
  FiniteGraph g((int)n, multi);
  for (const Entry& e : entries) {
    if (!multi && e.u == e.v)
      throw ParseError("loop " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                       " needs multigraph mode");
    g.add_edge(e.u, e.v, e.m);
  }
  return g;
}

}  // namespace cospectra
