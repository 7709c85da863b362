#pragma once

#include <cstdint>
#include <vector>

#include "lqspec/ifs.hpp"
#include "lqspec/poly.hpp"
#include "lqspec/rng.hpp"

namespace lqspec::test {

// Dense random polynomial of total degree <= deg with coefficients in [-1, 1].
inline Poly2 random_poly(Rng& rng, unsigned deg, bool with_y = true) {
  std::vector<Term> terms;
  for (unsigned i = 0; i <= deg; ++i)
    for (unsigned j = 0; i + j <= deg && (with_y || j == 0); ++j)
      terms.push_back({i, j, 2.0 * rng.uniform() - 1.0});
  return Poly2(std::move(terms));
}

inline Word random_word(Rng& rng, std::size_t letters, std::size_t len) {
  Word w(len);
  for (auto& l : w) l = static_cast<Letter>(rng.index(letters));
  return w;
}

inline Point random_point(Rng& rng) { return {rng.uniform(), rng.uniform()}; }

// Interior point kept away from the boundary by margin.
inline Point interior_point(Rng& rng, double margin = 0.01) {
  return {margin + (1.0 - 2.0 * margin) * rng.uniform(),
          margin + (1.0 - 2.0 * margin) * rng.uniform()};
}

// Every word of length k in lexicographic order.
inline std::vector<Word> all_words(std::size_t letters, std::size_t k) {
  std::vector<Word> out{Word{}};
  for (std::size_t n = 0; n < k; ++n) {
    std::vector<Word> next;
    for (const Word& w : out)
      for (std::size_t i = 0; i < letters; ++i) {
        Word c = w;
        c.push_back(static_cast<Letter>(i));
        next.push_back(std::move(c));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace lqspec::test
