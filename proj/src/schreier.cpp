#include "cospectra/schreier.hpp"

#include <map>

#include "cospectra/errors.hpp"
#include "cospectra/linalg.hpp"

namespace cospectra {

Generator parse_generator(const std::string& text) {
  if (text == "a") return Generator::A;
  if (text == "a-" || text == "a^-1" || text == "A") return Generator::AInv;
  if (text == "b") return Generator::B;
  if (text == "b-" || text == "b^-1" || text == "B") return Generator::BInv;
  throw ParseError("unknown generator '" + text + "' (expected a, a-, b, b-)");
}

std::string generator_name(Generator g) {
  switch (g) {
    case Generator::A:
      return "a";
    case Generator::AInv:
      return "a-";
    case Generator::B:
      return "b";
    case Generator::BInv:
      return "b-";
  }
  return "?";
}

namespace {

void validate_word(const std::string& w) {
  for (char c : w)
    if (c != '0' && c != '1' && c != '2') throw InvalidWord("word digits must be 0, 1 or 2");
}

std::string act_unchecked(Generator g, const std::string& w) {
  if (w.empty()) return w;
  std::string out = w;
  switch (g) {
    case Generator::A:
      out[0] = static_cast<char>('0' + (w[0] - '0' + 1) % 3);
      return out;
    case Generator::AInv:
      out[0] = static_cast<char>('0' + (w[0] - '0' + 2) % 3);
      return out;
    case Generator::B:
      if (w[0] == '0') return "0" + act_unchecked(Generator::A, w.substr(1));
      if (w[0] == '1') return out;
      return "2" + act_unchecked(Generator::B, w.substr(1));
    case Generator::BInv:
      if (w[0] == '0') return "0" + act_unchecked(Generator::AInv, w.substr(1));
      if (w[0] == '1') return out;
      return "2" + act_unchecked(Generator::BInv, w.substr(1));
  }
  throw InvalidWord("unknown generator");
}

long long word_index(const std::string& w) {
  long long idx = 0;
  for (char c : w) idx = idx * 3 + (c - '0');
  return idx;
}

std::string word_of(long long idx, int n) {
  std::string w(static_cast<size_t>(n), '0');
  for (int i = n - 1; i >= 0; --i) {
    w[static_cast<size_t>(i)] = static_cast<char>('0' + idx % 3);
    idx /= 3;
  }
  return w;
}

}  // namespace

std::string act(Generator g, const std::string& word) {
  validate_word(word);
  return act_unchecked(g, word);
}

FiniteGraph schreier_level(int n, long long budget) {
  if (n < 1) throw InvalidParameter("schreier level must be >= 1");
  long long count = 1;
  for (int i = 0; i < n; ++i) {
    count *= 3;
    if (count > budget) throw SizeLimitExceeded("3^n exceeds the vertex budget");
  }

  FiniteGraph g(static_cast<int>(count), /*multi=*/true);
  g.labels.resize(static_cast<size_t>(count));
  g.level.assign(static_cast<size_t>(count), n);
  for (long long v = 0; v < count; ++v) {
    const std::string w = word_of(v, n);
    TreePath path;
    for (char c : w) path.push_back(c - '0');
    g.labels[static_cast<size_t>(v)] = VertexKey{std::move(path)};
  }

  // A[u][v] = #{s in S : s(v) = u}; count each unordered pair once (the v < u
  // side; the reverse count is equal because S is symmetric).
  std::map<std::pair<int, int>, int> mult;
  for (long long v = 0; v < count; ++v) {
    const std::string w = word_of(v, n);
    for (Generator s : {Generator::A, Generator::AInv, Generator::B, Generator::BInv}) {
      const long long u = word_index(act_unchecked(s, w));
      if (u >= v) mult[{static_cast<int>(v), static_cast<int>(u)}] += 1;
    }
  }
  for (const auto& [edge, m] : mult) g.add_edge(edge.first, edge.second, m);
  return g;
}

std::vector<double> level_spectrum(int n, long long budget) {
  const FiniteGraph g = schreier_level(n, budget);
  if (g.size() > 2400) throw SizeLimitExceeded("level spectrum needs a dense solve; 3^n is too large");
  return dense_spectrum(g);
}

}  // namespace cospectra
