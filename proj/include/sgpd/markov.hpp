/*
 *   Copyright 2026 The sgpd Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// The semigroupoid of admissible words of a 0-1 matrix.

#ifndef SGPD_MARKOV_HPP_
#define SGPD_MARKOV_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgpd/table.hpp"

namespace sgpd {

  using Letter = std::uint32_t;
  using Word   = std::vector<Letter>;

  class Matrix01 {
   public:
    // Labels default to "1", "2", ...  Throws EmptyAlphabet, InvalidArgument.
    explicit Matrix01(std::vector<std::vector<int>> const& rows,
                      std::vector<std::string>             labels = {});

    [[nodiscard]] std::size_t size() const noexcept {
      return _labels.size();
    }
    [[nodiscard]] bool operator()(Letter i, Letter j) const {
      return _a.at(i * size() + j) != 0;
    }
    [[nodiscard]] std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }
    [[nodiscard]] std::string const& label(Letter i) const {
      return _labels.at(i);
    }
    // Throws UnknownLetter.
    [[nodiscard]] Letter letter(std::string_view label) const;
    [[nodiscard]] bool   row_is_zero(Letter i) const;
    [[nodiscard]] bool   has_zero_rows() const;

    // Words are written by concatenating labels, or with '.' between labels
    // when some label is longer than one character.
    [[nodiscard]] std::string word_name(Word const& w) const;
    // Throws UnknownLetter, InadmissibleWord.
    [[nodiscard]] Word parse_word(std::string_view text) const;
    [[nodiscard]] bool admissible(Word const& w) const;

    friend bool operator==(Matrix01 const&, Matrix01 const&) = default;

   private:
    std::vector<std::string> _labels;
    std::vector<std::uint8_t> _a;
  };

  struct MarkovTruncation {
    std::shared_ptr<Matrix01 const>          matrix;
    std::size_t                              max_len = 0;
    // Element i of the table is words[i]; ordered by length, then
    // lexicographically.
    std::vector<Word>                        words;
    std::shared_ptr<SemigroupoidTable const> table;

    [[nodiscard]] ElementId id_of(Word const& w) const;
  };

  // Throws InvalidArgument when max_len is zero.
  MarkovTruncation build_markov(Matrix01 const& matrix, std::size_t max_len);

  // Sum over lengths 1..max_len of the number of admissible words.
  std::uint64_t admissible_word_count(Matrix01 const& matrix, std::size_t max_len);

  // True iff neither word is an initial segment of the other.  Throws
  // InadmissibleWord.
  bool word_disjoint(Matrix01 const& matrix, Word const& a, Word const& b);

  // prod_{x in X} A(x, j) * prod_{y in Y} (1 - A(y, j)).  Throws UnknownLetter.
  int a_xyj(Matrix01 const&            matrix,
            std::vector<Letter> const& X,
            std::vector<Letter> const& Y,
            Letter                     j);

  std::vector<Letter> letters_of_lambda_fg(Matrix01 const&            matrix,
                                           std::vector<Letter> const& X,
                                           std::vector<Letter> const& Y);

  // Letters i, i2 (rows) and j, j2 (columns) with A(i,j) = A(i2,j) =
  // A(i2,j2) = 1 and A(i,j2) = 0.
  struct GraphObstruction {
    Letter i, j, i2, j2;
  };

  struct GraphRealization {
    // Vertex of each letter's source and range.
    std::vector<std::uint32_t> source;
    std::vector<std::uint32_t> range;
    std::size_t                vertices = 0;
  };

  struct GraphabilityResult {
    bool                            graphable = false;
    std::optional<GraphObstruction> obstruction;
    std::optional<GraphRealization> realization;
  };

  // Block criterion, cross-checked against graphable_by_search; throws
  // std::logic_error if they ever disagree.
  GraphabilityResult graphable(Matrix01 const& matrix);

  // Exhaustive search over all source/range assignments (up to renaming of
  // vertices).
  std::optional<GraphRealization> graphable_by_search(Matrix01 const& matrix);

  // Finite partitions of the words beginning with x, with members of length
  // at most max_len.  Sorted.
  std::vector<std::vector<Word>> enumerate_prefix_partitions(Matrix01 const& matrix,
                                                             Letter          x,
                                                             std::size_t max_len);

  // Independent check that H is a finite partition of the words beginning
  // with x: pairwise disjoint, and covering every such word.
  struct PrefixPartitionCheck {
    bool                                 ok = true;
    std::optional<std::pair<Word, Word>> intersecting;
    std::optional<Word>                  uncovered;
  };

  PrefixPartitionCheck is_prefix_partition(Matrix01 const&          matrix,
                                           Letter                   x,
                                           std::vector<Word> const& H);

  struct LemmaWitness {
    std::vector<Word> partition;
    std::string       reason;
    std::optional<std::pair<Word, Word>> intersecting;
  };

  // Checks that a partition H of the words beginning with x decomposes by
  // second letter: either H = {x}, or every member has length at least two,
  // every j with A(x, j) = 1 is hit, and each H_j with its first letter
  // removed is a partition of the words beginning with j.  H is first
  // validated as a partition.
  std::optional<LemmaWitness> check_first_letter_decomposition(
      Matrix01 const&          matrix,
      Letter                   x,
      std::vector<Word> const& H);

  // Runs the decomposition check on every enumerated partition.  Throws
  // SpringRow when row x is zero.
  std::optional<LemmaWitness> first_letter_partition_lemma_check(
      Matrix01 const& matrix,
      Letter          x,
      std::size_t     max_len);

  std::string format_words(Matrix01 const& matrix, std::vector<Word> const& ws);

}  // namespace sgpd

#endif  // SGPD_MARKOV_HPP_
