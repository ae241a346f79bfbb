#include "sadic/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "sadic/errors.hpp"

namespace sadic {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::string strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return std::string(line.substr(0, hash));
}

std::vector<Token> split_ws(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back({line.substr(i, j - i), i + 1});
    i = j;
  }
  return out;
}

// header lines also break on [ ] , :
std::vector<Token> split_header(const std::string& line) {
  std::vector<Token> out;
  for (const Token& t : split_ws(line)) {
    std::string cur;
    std::size_t start = t.column;
    for (std::size_t k = 0; k < t.text.size(); ++k) {
      char c = t.text[k];
      if (c == '[' || c == ']' || c == ',' || c == ':') {
        if (!cur.empty()) out.push_back({cur, start});
        out.push_back({std::string(1, c), t.column + k});
        cur.clear();
        start = t.column + k + 1;
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) out.push_back({cur, start});
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) lines_.push_back(strip_comment(line));
  }

  SequenceFile run() {
    for (line_ = 0; line_ < lines_.size(); ++line_) {
      auto toks = split_ws(lines_[line_]);
      if (toks.empty()) continue;
      const std::string& kw = toks[0].text;
      if (kw == "alphabet")
        alphabet(toks);
      else if (kw == "morphism")
        morphism();
      else if (kw == "sequence")
        sequence();
      else
        error(ParseErrorKind::Syntax, toks[0], "expected 'alphabet', 'morphism' or 'sequence'");
    }
    return std::move(file_);
  }

 private:
  [[noreturn]] void error(ParseErrorKind kind, const Token& at, const std::string& msg) {
    throw ParseError(kind, line_ + 1, at.column, msg);
  }
  [[noreturn]] void error_eol(ParseErrorKind kind, const std::string& msg) {
    throw ParseError(kind, line_ + 1, lines_[line_].size() + 1, msg);
  }

  void expect(const std::vector<Token>& toks, std::size_t i, std::string_view what) {
    if (i >= toks.size()) error_eol(ParseErrorKind::Syntax, "expected '" + std::string(what) + "'");
    if (toks[i].text != what) error(ParseErrorKind::Syntax, toks[i], "expected '" + std::string(what) + "'");
  }

  const Token& need(const std::vector<Token>& toks, std::size_t i, std::string_view what) {
    if (i >= toks.size()) error_eol(ParseErrorKind::Syntax, "expected " + std::string(what));
    return toks[i];
  }

  template <class T>
  bool taken(const std::vector<std::pair<std::string, T>>& v, const std::string& name) {
    for (const auto& [n, x] : v)
      if (n == name) return true;
    return false;
  }

  const Alphabet& find_alphabet(const Token& t) {
    for (const auto& [n, a] : file_.alphabets)
      if (n == t.text) return a;
    error(ParseErrorKind::UnknownName, t, "unknown alphabet '" + t.text + "'");
  }

  void alphabet(const std::vector<Token>& toks) {
    const Token& name = need(toks, 1, "alphabet name");
    expect(toks, 2, "=");
    if (toks.size() < 4) error_eol(ParseErrorKind::Syntax, "alphabet needs at least one symbol");
    if (taken(file_.alphabets, name.text)) error(ParseErrorKind::Duplicate, name, "alphabet '" + name.text + "' redefined");
    std::vector<std::string> syms;
    for (std::size_t i = 3; i < toks.size(); ++i) {
      if (toks[i].text == "->") error(ParseErrorKind::Syntax, toks[i], "'->' is not a valid symbol");
      for (const auto& s : syms)
        if (s == toks[i].text) error(ParseErrorKind::Duplicate, toks[i], "symbol '" + s + "' repeated");
      syms.push_back(toks[i].text);
    }
    file_.alphabets.emplace_back(name.text, Alphabet(std::move(syms)));
  }

  void morphism() {
    auto toks = split_header(lines_[line_]);
    const Token& name = need(toks, 1, "morphism name");
    expect(toks, 2, ":");
    const Alphabet src = find_alphabet(need(toks, 3, "source alphabet"));
    expect(toks, 4, "->");
    const Alphabet tgt = find_alphabet(need(toks, 5, "target alphabet"));
    expect(toks, 6, "length");
    const Token& lt = need(toks, 7, "length");
    std::size_t len = 0;
    auto [p, ec] = std::from_chars(lt.text.data(), lt.text.data() + lt.text.size(), len);
    if (ec != std::errc{} || p != lt.text.data() + lt.text.size() || len == 0)
      error(ParseErrorKind::Syntax, lt, "length must be a positive integer");
    if (toks.size() > 8) error(ParseErrorKind::Syntax, toks[8], "unexpected token");
    if (taken(file_.morphisms, name.text)) error(ParseErrorKind::Duplicate, name, "morphism '" + name.text + "' redefined");

    std::vector<std::optional<Word>> images(src.size());
    for (++line_;; ++line_) {
      if (line_ >= lines_.size()) {
        --line_;
        error_eol(ParseErrorKind::Syntax, "missing 'end' for morphism '" + name.text + "'");
      }
      auto rule = split_ws(lines_[line_]);
      if (rule.empty()) continue;
      if (rule[0].text == "end") {
        if (rule.size() > 1) error(ParseErrorKind::Syntax, rule[1], "unexpected token after 'end'");
        for (Letter a = 0; a < src.size(); ++a)
          if (!images[a]) error(ParseErrorKind::Invalid, rule[0], "no image for '" + src.symbol(a) + "'");
        break;
      }
      auto a = src.find(rule[0].text);
      if (!a) error(ParseErrorKind::UnknownSymbol, rule[0], "'" + rule[0].text + "' is not in the source alphabet");
      if (images[*a]) error(ParseErrorKind::Duplicate, rule[0], "second image for '" + rule[0].text + "'");
      expect(rule, 1, "->");
      Word w;
      for (std::size_t i = 2; i < rule.size(); ++i) {
        auto b = tgt.find(rule[i].text);
        if (!b) error(ParseErrorKind::UnknownSymbol, rule[i], "'" + rule[i].text + "' is not in the target alphabet");
        w.push_back(*b);
      }
      if (w.size() != len) {
        const Token& at = rule.size() > 2 ? rule[2] : rule[1];
        error(ParseErrorKind::LengthMismatch, at,
              "image has " + std::to_string(w.size()) + " symbols, declared length is " + std::to_string(len));
      }
      images[*a] = std::move(w);
    }
    std::vector<Word> flat;
    for (auto& w : images) flat.push_back(std::move(*w));
    file_.morphisms.emplace_back(name.text, Morphism(src, tgt, len, std::move(flat)));
  }

  std::vector<Morphism> name_list(const std::vector<Token>& toks, std::size_t& i) {
    expect(toks, i, "[");
    ++i;
    std::vector<Morphism> out;
    for (;; ++i) {
      const Token& t = need(toks, i, "']'");
      if (t.text == "]") break;
      if (t.text == ",") continue;
      bool found = false;
      for (const auto& [n, m] : file_.morphisms)
        if (n == t.text) {
          out.push_back(m);
          found = true;
          break;
        }
      if (!found) error(ParseErrorKind::UnknownName, t, "unknown morphism '" + t.text + "'");
    }
    ++i;
    return out;
  }

  void sequence() {
    auto toks = split_header(lines_[line_]);
    const Token& name = need(toks, 1, "sequence name");
    expect(toks, 2, "=");
    if (taken(file_.sequences, name.text)) error(ParseErrorKind::Duplicate, name, "sequence '" + name.text + "' redefined");
    std::size_t i = 3;
    std::vector<Morphism> prefix;
    if (i < toks.size() && toks[i].text == "prefix") {
      ++i;
      prefix = name_list(toks, i);
    }
    expect(toks, i, "cycle");
    const Token& cycle_tok = toks[i];
    ++i;
    auto cycle = name_list(toks, i);
    if (i < toks.size()) error(ParseErrorKind::Syntax, toks[i], "unexpected token");
    if (cycle.empty()) error(ParseErrorKind::Invalid, cycle_tok, "cycle must be non-empty");
    try {
      file_.sequences.emplace_back(name.text, DirectiveSequence(std::move(prefix), std::move(cycle)));
    } catch (const Error& e) {
      auto kind = e.code() == ErrorCode::AlphabetMismatch ? ParseErrorKind::ChainingError : ParseErrorKind::Invalid;
      error(kind, name, e.what());
    }
  }

  std::vector<std::string> lines_;
  std::size_t line_ = 0;
  SequenceFile file_;
};

}  // namespace

std::string_view to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::Syntax: return "SyntaxError";
    case ParseErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ParseErrorKind::UnknownName: return "UnknownName";
    case ParseErrorKind::Duplicate: return "Duplicate";
    case ParseErrorKind::LengthMismatch: return "LengthMismatch";
    case ParseErrorKind::ChainingError: return "ChainingError";
    case ParseErrorKind::Invalid: return "Invalid";
  }
  return "ParseError";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, const std::string& msg)
    : std::runtime_error(std::string(to_string(kind)) + " at " + std::to_string(line) + ":" +
                         std::to_string(column) + ": " + msg),
      kind_(kind),
      line_(line),
      column_(column) {}

const DirectiveSequence& SequenceFile::sequence(std::string_view name) const {
  if (sequences.empty()) fail(ErrorCode::InvalidArgument, "file declares no sequence");
  if (name.empty()) return sequences.front().second;
  for (const auto& [n, s] : sequences)
    if (n == name) return s;
  fail(ErrorCode::InvalidArgument, "no sequence named '" + std::string(name) + "'");
}

const Morphism& SequenceFile::morphism(std::string_view name) const {
  for (const auto& [n, m] : morphisms)
    if (n == name) return m;
  fail(ErrorCode::InvalidArgument, "no morphism named '" + std::string(name) + "'");
}

SequenceFile parse_sequence_file(std::string_view text) { return Parser(text).run(); }

SequenceFile load_sequence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_sequence_file(buf.str());
}

std::string write_sequence_file(const DirectiveSequence& ds, std::string_view name) {
  std::vector<Alphabet> alphas;
  auto alpha_name = [&](const Alphabet& a) {
    for (std::size_t i = 0; i < alphas.size(); ++i)
      if (alphas[i] == a) return "A" + std::to_string(i);
    alphas.push_back(a);
    return "A" + std::to_string(alphas.size() - 1);
  };
  std::vector<Morphism> morphs;
  std::vector<std::string> refs;
  std::ostringstream body;
  auto add = [&](const Morphism& m) {
    for (std::size_t i = 0; i < morphs.size(); ++i)
      if (morphs[i] == m) return "m" + std::to_string(i);
    std::string mn = "m" + std::to_string(morphs.size());
    morphs.push_back(m);
    std::string src = alpha_name(m.source()), tgt = alpha_name(m.target());
    body << "morphism " << mn << " : " << src << " -> " << tgt << " length " << m.length() << "\n";
    for (Letter a = 0; a < m.source().size(); ++a)
      body << "  " << m.source().symbol(a) << " -> " << m.target().format(m.image(a)) << "\n";
    body << "end\n\n";
    return mn;
  };
  std::string prefix, cycle;
  for (const auto& m : ds.prefix()) prefix += (prefix.empty() ? "" : " ") + add(m);
  for (const auto& m : ds.cycle()) cycle += (cycle.empty() ? "" : " ") + add(m);
  std::ostringstream out;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    out << "alphabet A" << i << " =";
    for (const auto& s : alphas[i].symbols()) out << ' ' << s;
    out << "\n";
  }
  out << "\n" << body.str();
  out << "sequence " << name << " = prefix [" << prefix << "] cycle [" << cycle << "]\n";
  return out.str();
}

}  // namespace sadic
