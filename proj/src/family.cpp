#include "cospectra/family.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

#include "cospectra/graph.hpp"

namespace cospectra {

namespace {

void check_entries(const std::vector<int>& entries, const char* what) {
  for (int d : entries)
    if (d < 2) throw InvalidParameter(std::string(what) + " entries must be >= 2");
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw ParseError(std::string("bad ") + what + " list: " + text);
    }
  }
  if (out.empty()) throw ParseError(std::string("empty ") + what + " list");
  return out;
}

}  // namespace

BranchingSeq::BranchingSeq(std::vector<int> pre, std::vector<int> per)
    : prefix(std::move(pre)), period(std::move(per)) {
  if (period.empty()) throw InvalidParameter("branching period must be non-empty");
  check_entries(prefix, "branching prefix");
  check_entries(period, "branching period");
}

int BranchingSeq::at(long long r) const {
  if (r < 0) throw InvalidParameter("branching index must be >= 0");
  if (r < (long long)prefix.size()) return prefix[(std::size_t)r];
  return period[(std::size_t)((r - (long long)prefix.size()) % (long long)period.size())];
}

BranchingSeq BranchingSeq::tail(long long n) const {
  if (n < 0) throw InvalidParameter("tail index must be >= 0");
  BranchingSeq out;
  if (n <= (long long)prefix.size()) {
    out.prefix.assign(prefix.begin() + (std::ptrdiff_t)n, prefix.end());
    out.period = period;
    return out;
  }
  long long shift = (n - (long long)prefix.size()) % (long long)period.size();
  out.prefix.clear();
  out.period.assign(period.begin() + (std::ptrdiff_t)shift, period.end());
  out.period.insert(out.period.end(), period.begin(), period.begin() + (std::ptrdiff_t)shift);
  return out;
}

BranchingSeq BranchingSeq::canonical() const {
  BranchingSeq out = *this;
  // Primitive period: smallest divisor length that tiles the period.
  std::size_t p = out.period.size();
  for (std::size_t q = 1; q <= p; ++q) {
    if (p % q != 0) continue;
    bool tiles = true;
    for (std::size_t i = q; i < p && tiles; ++i) tiles = out.period[i] == out.period[i - q];
    if (tiles) {
      out.period.resize(q);
      break;
    }
  }
  // Absorb prefix entries that already follow the periodic pattern: the last
  // prefix entry can be dropped iff it equals the last period entry once the
  // period is rotated one step to the right.
  while (!out.prefix.empty() && out.prefix.back() == out.period.back()) {
    out.prefix.pop_back();
    std::rotate(out.period.rbegin(), out.period.rbegin() + 1, out.period.rend());
  }
  return out;
}

bool BranchingSeq::same_sequence(const BranchingSeq& other) const {
  BranchingSeq a = canonical(), b = other.canonical();
  return a.prefix == b.prefix && a.period == b.period;
}

GraphFamily GraphFamily::ray() { return GraphFamily{Kind::Ray, 0, {}, nullptr}; }
GraphFamily GraphFamily::line() { return GraphFamily{Kind::Line, 0, {}, nullptr}; }
GraphFamily GraphFamily::dinfinity() { return GraphFamily{Kind::DInfinity, 0, {}, nullptr}; }

GraphFamily GraphFamily::lattice(int d) {
  if (d < 1) throw InvalidParameter("lattice dimension must be >= 1");
  return GraphFamily{Kind::Lattice, d, {}, nullptr};
}

GraphFamily GraphFamily::rooted_tree(int d) {
  if (d < 2) throw InvalidParameter("rooted tree branching must be >= 2");
  GraphFamily f{Kind::RootedTree, d, {}, nullptr};
  f.branching = BranchingSeq({}, {d});
  return f;
}

GraphFamily GraphFamily::regular_tree(int d) {
  if (d < 3) throw InvalidParameter("regular tree degree must be >= 3");
  GraphFamily f{Kind::RegularTree, d, {}, nullptr};
  f.branching = BranchingSeq({d}, {d - 1});
  return f;
}

GraphFamily GraphFamily::ssrt(BranchingSeq b) {
  GraphFamily f{Kind::Ssrt, 0, {}, nullptr};
  f.branching = std::move(b);
  return f;
}

GraphFamily GraphFamily::finite_graph(FiniteGraph g) {
  GraphFamily f{Kind::Finite, 0, {}, nullptr};
  f.finite = std::make_shared<const FiniteGraph>(std::move(g));
  return f;
}

int max_degree(const GraphFamily& family) {
  switch (family.kind) {
    case GraphFamily::Kind::Ray:
    case GraphFamily::Kind::Line:
      return 2;
    case GraphFamily::Kind::DInfinity:
      return 3;
    case GraphFamily::Kind::Lattice:
      return 2 * family.degree;
    case GraphFamily::Kind::RootedTree:
      return family.degree + 1;
    case GraphFamily::Kind::RegularTree:
      return family.degree;
    case GraphFamily::Kind::Ssrt: {
      // Root has d_0 edges, a depth-r vertex (r >= 1) has d_r + 1.
      const BranchingSeq& b = family.branching;
      int best = b.at(0);
      for (std::size_t i = 1; i < b.prefix.size(); ++i) best = std::max(best, b.prefix[i] + 1);
      for (int d : b.period) best = std::max(best, d + 1);
      return best;
    }
    case GraphFamily::Kind::Finite: {
      int best = 0;
      for (int v = 0; v < family.finite->size(); ++v) best = std::max(best, family.finite->degree(v));
      return best;
    }
  }
  throw InvalidParameter("unknown family kind");
}

BranchingSeq branching_of(const GraphFamily& family) {
  switch (family.kind) {
    case GraphFamily::Kind::RootedTree:
    case GraphFamily::Kind::RegularTree:
    case GraphFamily::Kind::Ssrt:
      return family.branching;
    default:
      throw InvalidParameter("family is not a spherically symmetric rooted tree");
  }
}

std::vector<BranchingSeq> rotations(const BranchingSeq& seq) {
  if (!seq.prefix.empty())
    throw NonPeriodic("rotations require a purely periodic branching sequence");
  std::vector<BranchingSeq> out;
  const std::size_t p = seq.period.size();
  for (std::size_t k = 0; k < p; ++k) {
    std::vector<int> per(seq.period.begin() + (std::ptrdiff_t)k, seq.period.end());
    per.insert(per.end(), seq.period.begin(), seq.period.begin() + (std::ptrdiff_t)k);
    out.emplace_back(std::vector<int>{}, std::move(per));
  }
  return out;
}

std::string family_name(const GraphFamily& family) {
  switch (family.kind) {
    case GraphFamily::Kind::Ray: return "ray";
    case GraphFamily::Kind::Line: return "line";
    case GraphFamily::Kind::DInfinity: return "dinfinity";
    case GraphFamily::Kind::Lattice: return "lattice";
    case GraphFamily::Kind::RootedTree: return "rootedtree";
    case GraphFamily::Kind::RegularTree: return "tree";
    case GraphFamily::Kind::Ssrt: return "ssrt";
    case GraphFamily::Kind::Finite: return "finite";
  }
  throw InvalidParameter("unknown family kind");
}

std::string family_to_json(const GraphFamily& family) {
  nlohmann::ordered_json j;
  j["family"] = family_name(family);
  switch (family.kind) {
    case GraphFamily::Kind::Lattice:
    case GraphFamily::Kind::RootedTree:
    case GraphFamily::Kind::RegularTree:
      j["params"] = {{"d", family.degree}};
      break;
    case GraphFamily::Kind::Ssrt:
      j["params"] = {{"prefix", family.branching.prefix}, {"period", family.branching.period}};
      break;
    case GraphFamily::Kind::Finite:
      j["params"] = {{"vertices", family.finite->size()}};
      break;
    default:
      break;
  }
  return j.dump();
}

GraphFamily family_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("bad family JSON: ") + e.what());
  }
  if (!j.contains("family") || !j["family"].is_string())
    throw ParseError("family JSON needs a \"family\" string");
  const std::string name = j["family"];
  auto param_d = [&]() -> int {
    if (!j.contains("params") || !j["params"].contains("d"))
      throw ParseError("family " + name + " needs params.d");
    return j["params"]["d"].get<int>();
  };
  if (name == "ray") return GraphFamily::ray();
  if (name == "line") return GraphFamily::line();
  if (name == "dinfinity") return GraphFamily::dinfinity();
  if (name == "lattice") return GraphFamily::lattice(param_d());
  if (name == "rootedtree") return GraphFamily::rooted_tree(param_d());
  if (name == "tree") return GraphFamily::regular_tree(param_d());
  if (name == "ssrt") {
    if (!j.contains("params")) throw ParseError("ssrt needs params.prefix/period");
    std::vector<int> prefix, period;
    if (j["params"].contains("prefix")) prefix = j["params"]["prefix"].get<std::vector<int>>();
    if (j["params"].contains("period")) period = j["params"]["period"].get<std::vector<int>>();
    return GraphFamily::ssrt(BranchingSeq(prefix, period));
  }
  if (name == "finite") throw ParseError("finite families are imported from edge lists, not JSON");
  throw ParseError("unknown family: " + name);
}

GraphFamily parse_family(const std::string& text) {
  std::string name = text, args;
  if (std::size_t colon = text.find(':'); colon != std::string::npos) {
    name = text.substr(0, colon);
    args = text.substr(colon + 1);
  }
  auto need_int = [&]() -> int {
    try {
      std::size_t used = 0;
      int v = std::stoi(args, &used);
      if (used != args.size()) throw std::invalid_argument(args);
      return v;
    } catch (const std::logic_error&) {
      throw ParseError("family " + name + " needs an integer parameter, got: " + args);
    }
  };
  if (name == "ray") return GraphFamily::ray();
  if (name == "line") return GraphFamily::line();
  if (name == "dinfinity") return GraphFamily::dinfinity();
  if (name == "lattice") return GraphFamily::lattice(need_int());
  if (name == "rootedtree") return GraphFamily::rooted_tree(need_int());
  if (name == "tree") return GraphFamily::regular_tree(need_int());
  if (name == "ssrt") {
    std::vector<int> prefix, period;
    if (std::size_t bar = args.find('|'); bar != std::string::npos) {
      if (bar > 0) prefix = parse_int_list(args.substr(0, bar), "branching prefix");
      period = parse_int_list(args.substr(bar + 1), "branching period");
    } else {
      period = parse_int_list(args, "branching period");
    }
    return GraphFamily::ssrt(BranchingSeq(prefix, period));
  }
  throw ParseError("unknown family: " + name);
}

}  // namespace cospectra
