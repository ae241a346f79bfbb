#include "sadic/morphism.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "sadic/errors.hpp"

namespace sadic {

Alphabet::Alphabet() : Alphabet(std::vector<std::string>{"0"}) {}

Alphabet::Alphabet(std::vector<std::string> symbols) {
  if (symbols.empty()) fail(ErrorCode::InvalidArgument, "alphabet must be non-empty");
  auto d = std::make_shared<Data>();
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (symbols[i].empty()) fail(ErrorCode::InvalidArgument, "empty symbol name");
    if (!d->index.emplace(symbols[i], static_cast<Letter>(i)).second)
      fail(ErrorCode::InvalidArgument, "duplicate symbol '" + symbols[i] + "'");
  }
  d->symbols = std::move(symbols);
  data_ = std::move(d);
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  auto it = data_->index.find(std::string(name));
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

Letter Alphabet::index_of(std::string_view name) const {
  auto a = find(name);
  if (!a) fail(ErrorCode::UnknownSymbol, "'" + std::string(name) + "'");
  return *a;
}

std::string Alphabet::format(std::span<const Letter> w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += symbol(w[i]);
  }
  return out;
}

Word Alphabet::parse(std::string_view text) const {
  Word w;
  bool spaced = std::any_of(text.begin(), text.end(),
                            [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
  if (!spaced) {
    if (auto a = find(text)) return {*a};
    for (char c : text) w.push_back(index_of(std::string_view(&c, 1)));
    return w;
  }
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) w.push_back(index_of(tok));
  return w;
}

bool operator==(const Alphabet& x, const Alphabet& y) {
  return x.data_ == y.data_ || x.data_->symbols == y.data_->symbols;
}

std::size_t ColumnMap::image_size() const {
  std::vector<Letter> v = map;
  std::sort(v.begin(), v.end());
  return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
}

IncidenceMatrix::IncidenceMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

IncidenceMatrix IncidenceMatrix::identity(std::size_t n) {
  IncidenceMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool IncidenceMatrix::positive() const {
  return std::all_of(entries_.begin(), entries_.end(), [](auto e) { return e > 0; });
}

IncidenceMatrix operator*(const IncidenceMatrix& x, const IncidenceMatrix& y) {
  if (x.cols_ != y.rows_) fail(ErrorCode::InvalidArgument, "matrix shapes do not chain");
  IncidenceMatrix r(x.rows_, y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i)
    for (std::size_t k = 0; k < x.cols_; ++k) {
      std::uint64_t a = x.at(i, k);
      if (!a) continue;
      for (std::size_t j = 0; j < y.cols_; ++j) {
        std::uint64_t p, s;
        if (__builtin_mul_overflow(a, y.at(k, j), &p) ||
            __builtin_add_overflow(r.at(i, j), p, &s))
          fail(ErrorCode::Overflow, "incidence matrix entry exceeds 64 bits");
        r.at(i, j) = s;
      }
    }
  return r;
}

Morphism::Morphism(Alphabet source, Alphabet target, std::size_t length, std::vector<Word> images)
    : source_(std::move(source)), target_(std::move(target)), length_(length) {
  if (length_ == 0) fail(ErrorCode::InvalidMorphism, "length must be positive");
  if (images.size() != source_.size())
    fail(ErrorCode::InvalidMorphism, "expected " + std::to_string(source_.size()) + " images, got " +
                                         std::to_string(images.size()));
  images_.reserve(source_.size() * length_);
  for (std::size_t a = 0; a < images.size(); ++a) {
    if (images[a].size() != length_)
      fail(ErrorCode::InvalidMorphism, "image of '" + source_.symbol(static_cast<Letter>(a)) +
                                           "' has length " + std::to_string(images[a].size()) +
                                           ", expected " + std::to_string(length_));
    for (Letter b : images[a]) {
      if (b >= target_.size()) fail(ErrorCode::InvalidMorphism, "image letter out of range");
      images_.push_back(b);
    }
  }
}

Morphism Morphism::from_strings(Alphabet source, Alphabet target,
                                const std::vector<std::string>& images) {
  std::vector<Word> w;
  for (const auto& s : images) w.push_back(target.parse(s));
  std::size_t len = w.empty() ? 0 : w.front().size();
  return Morphism(std::move(source), std::move(target), len, std::move(w));
}

Morphism Morphism::identity(const Alphabet& a) {
  std::vector<Word> w;
  for (Letter i = 0; i < a.size(); ++i) w.push_back({i});
  return Morphism(a, a, 1, std::move(w));
}

Word Morphism::apply(std::span<const Letter> w) const {
  Word out;
  out.reserve(w.size() * length_);
  for (Letter a : w) {
    auto im = image(a);
    out.insert(out.end(), im.begin(), im.end());
  }
  return out;
}

bool operator==(const Morphism& x, const Morphism& y) {
  return x.length_ == y.length_ && x.source_ == y.source_ && x.target_ == y.target_ &&
         x.images_ == y.images_;
}

Morphism compose(const Morphism& outer, const Morphism& inner) {
  if (!(inner.target() == outer.source()))
    fail(ErrorCode::AlphabetMismatch, "inner target does not equal outer source");
  std::vector<Word> images;
  images.reserve(inner.source().size());
  for (Letter a = 0; a < inner.source().size(); ++a) images.push_back(outer.apply(inner.image(a)));
  return Morphism(inner.source(), outer.target(), outer.length() * inner.length(),
                  std::move(images));
}

std::vector<ColumnMap> columns(const Morphism& m) {
  std::vector<ColumnMap> cols(m.length());
  for (std::size_t j = 0; j < m.length(); ++j) {
    cols[j].index = j;
    cols[j].map.resize(m.source().size());
    for (Letter a = 0; a < m.source().size(); ++a) cols[j].map[a] = m.at(a, j);
  }
  return cols;
}

Morphism from_columns(const Alphabet& source, const Alphabet& target,
                      const std::vector<ColumnMap>& cols) {
  std::vector<Word> images(source.size(), Word(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].index != j || cols[j].map.size() != source.size())
      fail(ErrorCode::InvalidArgument, "column list is not in index order or has wrong width");
    for (Letter a = 0; a < source.size(); ++a) images[a][j] = cols[j].map[a];
  }
  return Morphism(source, target, cols.size(), std::move(images));
}

IncidenceMatrix incidence_matrix(const Morphism& m) {
  IncidenceMatrix r(m.target().size(), m.source().size());
  for (Letter a = 0; a < m.source().size(); ++a)
    for (Letter b : m.image(a)) ++r.at(b, a);
  return r;
}

bool is_injective_on_letters(const Morphism& m) {
  std::set<Word> seen;
  for (Letter a = 0; a < m.source().size(); ++a) {
    auto im = m.image(a);
    if (!seen.emplace(im.begin(), im.end()).second) return false;
  }
  return true;
}

std::optional<std::size_t> primitive_power(const IncidenceMatrix& m, std::optional<std::size_t> cap) {
  if (m.rows() != m.cols()) fail(ErrorCode::InvalidArgument, "primitive_power needs a square matrix");
  std::size_t s = m.rows();
  std::size_t limit = cap.value_or((s - 1) * (s - 1) + 1);
  if (limit == 0) fail(ErrorCode::InvalidArgument, "cap must be at least 1");
  // boolean pattern only
  std::vector<char> base(s * s), cur(s * s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) base[i * s + j] = m.at(i, j) > 0;
  cur = base;
  for (std::size_t k = 1; k <= limit; ++k) {
    if (std::all_of(cur.begin(), cur.end(), [](char c) { return c != 0; })) return k;
    std::vector<char> next(s * s, 0);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t l = 0; l < s; ++l)
        if (cur[i * s + l])
          for (std::size_t j = 0; j < s; ++j) next[i * s + j] |= base[l * s + j];
    cur.swap(next);
  }
  return std::nullopt;
}

Morphism sliding_block_recode(const Morphism& m, std::size_t window,
                              const std::vector<Word>& legal_words) {
  if (!(m.source() == m.target()))
    fail(ErrorCode::AlphabetMismatch, "sliding block recoding needs a substitution");
  if (window == 0) fail(ErrorCode::InvalidArgument, "window must be at least 1");
  std::set<Word> legal(legal_words.begin(), legal_words.end());
  std::vector<Word> words(legal.begin(), legal.end());
  std::map<Word, Letter> code;
  std::vector<std::string> names;
  for (const Word& w : words) {
    if (w.size() != window) fail(ErrorCode::InvalidArgument, "legal word of wrong length");
    std::string name = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) name += ',';
      name += m.source().symbol(w[i]);
    }
    name += ')';
    code.emplace(w, static_cast<Letter>(names.size()));
    names.push_back(std::move(name));
  }
  Alphabet alpha(names);
  std::vector<Word> images;
  for (const Word& w : words) {
    Word b = m.apply(w);
    Word img;
    for (std::size_t i = 0; i < m.length(); ++i) {
      Word piece(b.begin() + i, b.begin() + i + window);
      auto it = code.find(piece);
      if (it == code.end())
        fail(ErrorCode::IllegalWindow, "window " + m.source().format(piece) + " is not legal");
      img.push_back(it->second);
    }
    images.push_back(std::move(img));
  }
  return Morphism(alpha, alpha, m.length(), std::move(images));
}

std::string describe(const Morphism& m) {
  std::string out;
  for (Letter a = 0; a < m.source().size(); ++a) {
    if (a) out += ", ";
    out += m.source().symbol(a) + " -> " + m.target().format(m.image(a));
  }
  return out;
}

}  // namespace sadic
