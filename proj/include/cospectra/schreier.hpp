#pragma once

#include <string>
#include <vector>

#include "cospectra/graph.hpp"

namespace cospectra {

// Fabrykowski-Gupta generators and their inverses: a cycles the three main
// branches of the ternary rooted tree, b = (a, 1, b) by wreath recursion.
enum class Generator { A, AInv, B, BInv };

Generator parse_generator(const std::string& text);  // "a", "a-", "b", "b-"
std::string generator_name(Generator g);

// Applies a generator to a level-n word over {0,1,2}; the empty word is fixed
// by everything.  InvalidWord on any other character.
std::string act(Generator g, const std::string& word);

// Orbit graph on all 3^n words (lexicographic order): the adjacency entry at
// (u, v) counts the generators with s(v) = u, so the matrix is the sum of the
// four permutation matrices - loops and multi-edges included, every row sums
// to 4.
FiniteGraph schreier_level(int n, long long budget = 100'000);

// Sorted eigenvalues of the level-n adjacency (dense solve; n <= 7).
std::vector<double> level_spectrum(int n, long long budget = 100'000);

}  // namespace cospectra
