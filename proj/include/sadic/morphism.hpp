#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sadic {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;

// Ordered list of distinct symbol names. Copies share storage.
class Alphabet {
 public:
  Alphabet();
  explicit Alphabet(std::vector<std::string> symbols);

  std::size_t size() const { return data_->symbols.size(); }
  const std::string& symbol(Letter a) const { return data_->symbols.at(a); }
  const std::vector<std::string>& symbols() const { return data_->symbols; }

  std::optional<Letter> find(std::string_view name) const;
  Letter index_of(std::string_view name) const;  // throws UnknownSymbol

  // Space separated symbol names.
  std::string format(std::span<const Letter> w) const;
  // Splits on whitespace; a token-free string of single-character symbols is split per character.
  Word parse(std::string_view text) const;

  friend bool operator==(const Alphabet& x, const Alphabet& y);

 private:
  struct Data {
    std::vector<std::string> symbols;
    std::unordered_map<std::string, Letter> index;
  };
  std::shared_ptr<const Data> data_;
};

struct ColumnMap {
  std::size_t index = 0;
  std::vector<Letter> map;

  std::size_t image_size() const;
  friend bool operator==(const ColumnMap&, const ColumnMap&) = default;
};

// rows = target letters, cols = source letters
class IncidenceMatrix {
 public:
  IncidenceMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint64_t& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  std::uint64_t at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  bool positive() const;

  static IncidenceMatrix identity(std::size_t n);
  friend IncidenceMatrix operator*(const IncidenceMatrix& x, const IncidenceMatrix& y);
  friend bool operator==(const IncidenceMatrix&, const IncidenceMatrix&) = default;

 private:
  std::size_t rows_, cols_;
  std::vector<std::uint64_t> entries_;
};

class Morphism {
 public:
  Morphism(Alphabet source, Alphabet target, std::size_t length, std::vector<Word> images);
  // images given in source order, parsed with target.parse
  static Morphism from_strings(Alphabet source, Alphabet target,
                               const std::vector<std::string>& images);
  static Morphism identity(const Alphabet& a);

  const Alphabet& source() const { return source_; }
  const Alphabet& target() const { return target_; }
  std::size_t length() const { return length_; }

  std::span<const Letter> image(Letter a) const {
    return {images_.data() + static_cast<std::size_t>(a) * length_, length_};
  }
  Letter at(Letter a, std::size_t j) const { return images_[a * length_ + j]; }
  Word apply(std::span<const Letter> w) const;
  const std::vector<Letter>& flat() const { return images_; }

  friend bool operator==(const Morphism& x, const Morphism& y);

 private:
  Alphabet source_, target_;
  std::size_t length_;
  std::vector<Letter> images_;
};

Morphism compose(const Morphism& outer, const Morphism& inner);
std::vector<ColumnMap> columns(const Morphism& m);
Morphism from_columns(const Alphabet& source, const Alphabet& target,
                      const std::vector<ColumnMap>& cols);
IncidenceMatrix incidence_matrix(const Morphism& m);
bool is_injective_on_letters(const Morphism& m);
std::optional<std::size_t> primitive_power(const IncidenceMatrix& m,
                                           std::optional<std::size_t> cap = std::nullopt);
Morphism sliding_block_recode(const Morphism& m, std::size_t window,
                              const std::vector<Word>& legal_words);

std::string describe(const Morphism& m);

}  // namespace sadic
