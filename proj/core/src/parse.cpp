#include "k3count/parse.hpp"

#include <cctype>
#include <charconv>
#include <string>

namespace k3count {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SingularityDescriptor parse_all() {
    SingularityDescriptor d = parse_token();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return d;
  }

 private:
  SingularityDescriptor parse_token() {
    skip_space();
    if (eat_word("branches")) return parse_branches();
    if (eat_word("node")) return SingularityDescriptor::node();
    if (eat_word("smooth")) return SingularityDescriptor::smooth();
    if (eat_word("pq")) {
      expect('(');
      const int p = parse_int();
      expect(',');
      const int q = parse_int();
      expect(')');
      return SingularityDescriptor::planar_pq(p, q);
    }
    if (eat_word("sg")) {
      expect('(');
      std::vector<int> gens{parse_int()};
      while (peek(',')) {
        ++pos_;
        gens.push_back(parse_int());
      }
      expect(')');
      return SingularityDescriptor::semigroup(
          NumericalSemigroup::from_generators(std::move(gens)));
    }
    if (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == 'A' || c == 'D' || c == 'E') {
        ++pos_;
        if (pos_ >= text_.size() || !std::isdigit(uchar(text_[pos_]))) {
          fail("expected an index after '" + std::string(1, c) + "'");
        }
        const int index = parse_int();
        const AdeFamily family = c == 'A'   ? AdeFamily::A
                                 : c == 'D' ? AdeFamily::D
                                            : AdeFamily::E;
        return SingularityDescriptor::ade(family, index);
      }
    }
    fail("unknown singularity token");
  }

  SingularityDescriptor parse_branches() {
    expect('[');
    std::vector<SingularityDescriptor> bs{parse_token()};
    skip_space();
    while (peek(';')) {
      ++pos_;
      bs.push_back(parse_token());
      skip_space();
    }
    expect(']');
    return SingularityDescriptor::branches(std::move(bs));
  }

  static unsigned char uchar(char c) { return static_cast<unsigned char>(c); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(uchar(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  // Keyword followed by a non-identifier character.
  bool eat_word(std::string_view word) {
    if (text_.substr(pos_, word.size()) != word) return false;
    const std::size_t end = pos_ + word.size();
    if (end < text_.size() && std::isalnum(uchar(text_[end]))) return false;
    pos_ = end;
    return true;
  }

  int parse_int() {
    skip_space();
    int value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || first == last || *first == '-' || *first == '+') {
      fail("expected a non-negative integer");
    }
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" +
                     std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

SingularityDescriptor parse_singularity(std::string_view token) {
  return Parser(token).parse_all();
}

std::vector<std::string_view> split_curve(std::string_view text) {
  std::vector<std::string_view> out;
  if (trim(text).empty()) return out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(' || c == '[') {
      ++depth;
    } else if (c == ')' || c == ']') {
      if (--depth < 0) throw ParseError("unbalanced brackets in '" +
                                        std::string(text) + "'");
    } else if (c == ',' && depth == 0) {
      out.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) {
    throw ParseError("unbalanced brackets in '" + std::string(text) + "'");
  }
  out.push_back(trim(text.substr(start)));
  for (auto tok : out) {
    if (tok.empty()) {
      throw ParseError("empty token in '" + std::string(text) + "'");
    }
  }
  return out;
}

std::vector<SingularityDescriptor> parse_curve(std::string_view text) {
  std::vector<SingularityDescriptor> out;
  for (auto tok : split_curve(text)) out.push_back(parse_singularity(tok));
  return out;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string_view item = trim(text.substr(
        start, comma == std::string_view::npos ? text.size() - start
                                               : comma - start));
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw ParseError("not an integer list: '" + std::string(text) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace k3count
