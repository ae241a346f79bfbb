#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sadic/directive.hpp"

namespace sadic {

enum class ParseErrorKind { Syntax, UnknownSymbol, UnknownName, Duplicate, LengthMismatch, ChainingError, Invalid };
std::string_view to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, const std::string& msg);
  ParseErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_, column_;
};

struct SequenceFile {
  std::vector<std::pair<std::string, Alphabet>> alphabets;
  std::vector<std::pair<std::string, Morphism>> morphisms;
  std::vector<std::pair<std::string, DirectiveSequence>> sequences;

  // empty name: the first sequence
  const DirectiveSequence& sequence(std::string_view name = {}) const;
  const Morphism& morphism(std::string_view name) const;
};

SequenceFile parse_sequence_file(std::string_view text);
SequenceFile load_sequence_file(const std::string& path);
std::string write_sequence_file(const DirectiveSequence& ds, std::string_view name = "S");

}  // namespace sadic
