#include "crn/parser.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace crn {

namespace {

struct Token {
  enum Kind { Ident, Number, Arrow, RevArrow, Plus, Colon, LBracket, RBracket, Equals, Comma, End };
  Kind kind = End;
  std::string text;
  int column = 0;
};

class LineLexer {
 public:
  LineLexer(std::string_view line, int line_no) : line_(line), line_no_(line_no) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& message, int column) const {
    throw ParseError(line_no_, column, message);
  }
  [[noreturn]] void fail(const std::string& message) const { fail(message, current_.column); }

 private:
  void advance() {
    while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
    current_.column = static_cast<int>(pos_) + 1;
    if (pos_ >= line_.size() || line_[pos_] == '#') {
      current_.kind = Token::End;
      current_.text.clear();
      return;
    }
    char c = line_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < line_.size() &&
             (std::isalnum(static_cast<unsigned char>(line_[pos_])) || line_[pos_] == '_'))
        ++pos_;
      current_.kind = Token::Ident;
      current_.text = std::string(line_.substr(start, pos_ - start));
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_]))) ++pos_;
      if (pos_ < line_.size() && line_[pos_] == '.')
        fail("decimal literals are not supported; use an integer or a fraction p/q",
             static_cast<int>(pos_) + 1);
      if (pos_ < line_.size() && line_[pos_] == '/') {
        ++pos_;
        if (pos_ >= line_.size() || !std::isdigit(static_cast<unsigned char>(line_[pos_])))
          fail("expected digits after '/'", static_cast<int>(pos_) + 1);
        while (pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_]))) ++pos_;
      }
      current_.kind = Token::Number;
      current_.text = std::string(line_.substr(start, pos_ - start));
      return;
    }
    if (line_.compare(pos_, 3, "<->") == 0) {
      current_.kind = Token::RevArrow;
      pos_ += 3;
      return;
    }
    if (line_.compare(pos_, 2, "->") == 0) {
      current_.kind = Token::Arrow;
      pos_ += 2;
      return;
    }
    switch (c) {
      case '+': current_.kind = Token::Plus; break;
      case ':': current_.kind = Token::Colon; break;
      case '[': current_.kind = Token::LBracket; break;
      case ']': current_.kind = Token::RBracket; break;
      case '=': current_.kind = Token::Equals; break;
      case ',': current_.kind = Token::Comma; break;
      default:
        fail(std::string("unexpected character '") + c + "'", static_cast<int>(pos_) + 1);
    }
    ++pos_;
  }

  std::string_view line_;
  int line_no_;
  size_t pos_ = 0;
  Token current_;
};

struct RawReaction {
  std::string label;
  Complex reactant;
  Complex product;
  std::optional<Rational> rate;
  int line = 0;
  int column = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NetworkDocument run() {
    std::istringstream stream{std::string(text_)};
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
      ++line_no;
      LineLexer lex(line, line_no);
      if (lex.peek().kind == Token::End) continue;
      parse_reaction_line(lex, line_no);
    }
    return finish(line_no);
  }

 private:
  Rational parse_number(LineLexer& lex, bool positive_required, const char* what) {
    Token t = lex.peek();
    if (t.kind != Token::Number) lex.fail(std::string("expected ") + what);
    lex.take();
    auto value = parse_rational(t.text);
    if (!value) lex.fail(std::string("invalid ") + what, t.column);
    if (positive_required && *value <= 0)
      lex.fail(std::string(what) + " must be positive", t.column);
    return *value;
  }

  Complex parse_complex(LineLexer& lex) {
    Complex c;
    // "0" alone denotes the empty complex.
    if (lex.peek().kind == Token::Number && lex.peek().text == "0") {
      Token zero = lex.take();
      if (lex.peek().kind == Token::Ident)
        lex.fail("zero coefficient", zero.column);
      if (lex.peek().kind == Token::Plus)
        lex.fail("the zero complex cannot be combined with other terms");
      return c;
    }
    while (true) {
      Rational coeff = 1;
      Token t = lex.peek();
      if (t.kind == Token::Number) {
        lex.take();
        auto value = parse_rational(t.text);
        if (!value) lex.fail("invalid coefficient", t.column);
        if (*value == 0) lex.fail("zero coefficient", t.column);
        coeff = *value;
      }
      Token name = lex.peek();
      if (name.kind != Token::Ident) lex.fail("expected species name");
      lex.take();
      c.add(builder_.species(name.text), coeff);
      if (lex.peek().kind != Token::Plus) break;
      lex.take();
    }
    return c;
  }

  void parse_reaction_line(LineLexer& lex, int line_no) {
    RawReaction raw;
    raw.line = line_no;
    raw.column = lex.peek().column;

    // Optional "LABEL:" prefix needs one token of lookahead; probe by
    // re-lexing the identifier if no colon follows.
    if (lex.peek().kind == Token::Ident) {
      Token ident = lex.take();
      if (lex.peek().kind == Token::Colon) {
        lex.take();
        raw.label = ident.text;
      } else {
        // Not a label: the identifier starts the reactant complex.
        Complex c;
        c.add(builder_.species(ident.text), 1);
        while (lex.peek().kind == Token::Plus) {
          lex.take();
          extend_complex(c, lex);
        }
        finish_reaction(lex, raw, std::move(c));
        return;
      }
    }
    finish_reaction(lex, raw, parse_complex(lex));
  }

  void extend_complex(Complex& c, LineLexer& lex) {
    Rational coeff = 1;
    Token t = lex.peek();
    if (t.kind == Token::Number) {
      lex.take();
      auto value = parse_rational(t.text);
      if (!value) lex.fail("invalid coefficient", t.column);
      if (*value == 0) lex.fail("zero coefficient", t.column);
      coeff = *value;
    }
    Token name = lex.peek();
    if (name.kind != Token::Ident) lex.fail("expected species name");
    lex.take();
    c.add(builder_.species(name.text), coeff);
  }

  void finish_reaction(LineLexer& lex, RawReaction raw, Complex reactant) {
    raw.reactant = std::move(reactant);
    Token arrow = lex.peek();
    if (arrow.kind != Token::Arrow && arrow.kind != Token::RevArrow)
      lex.fail("expected '->' or '<->'");
    lex.take();
    raw.product = parse_complex(lex);

    std::optional<Rational> reverse_rate;
    bool reversible = arrow.kind == Token::RevArrow;
    if (lex.peek().kind == Token::LBracket) {
      Token open = lex.take();
      Token key = lex.peek();
      if (key.kind != Token::Ident || key.text != "k") lex.fail("expected 'k' after '['");
      lex.take();
      if (lex.peek().kind != Token::Equals) lex.fail("expected '='");
      lex.take();
      raw.rate = parse_number(lex, true, "rate constant");
      if (lex.peek().kind == Token::Comma) {
        lex.take();
        if (!reversible)
          lex.fail("a one-way reaction takes a single rate constant", open.column);
        reverse_rate = parse_number(lex, true, "rate constant");
      } else if (reversible) {
        lex.fail("a reversible reaction takes two rate constants [k=FWD,BWD]", open.column);
      }
      if (lex.peek().kind != Token::RBracket) lex.fail("expected ']'");
      lex.take();
    }
    if (lex.peek().kind != Token::End) lex.fail("unexpected trailing input");

    if (reversible) {
      RawReaction forward = raw;
      RawReaction backward = raw;
      if (!raw.label.empty()) {
        forward.label = raw.label + "_f";
        backward.label = raw.label + "_b";
      }
      std::swap(backward.reactant, backward.product);
      backward.rate = reverse_rate;
      add(std::move(forward));
      add(std::move(backward));
    } else {
      add(std::move(raw));
    }
  }

  void add(RawReaction raw) {
    if (!raw.label.empty() && !labels_.insert(raw.label).second)
      throw ParseError(raw.line, raw.column, "duplicate label '" + raw.label + "'");
    try {
      builder_.reaction(raw.reactant, raw.product, raw.label);
    } catch (const NetworkError& e) {
      throw ParseError(raw.line, raw.column, e.what());
    }
    rates_.push_back(raw.rate);
    lines_.push_back(raw.line);
  }

  NetworkDocument finish(int last_line) {
    NetworkDocument doc;
    try {
      doc.network = builder_.build();
    } catch (const NetworkError& e) {
      throw ParseError(last_line, 1, e.what());
    }
    size_t with_rate = 0;
    for (const auto& r : rates_)
      if (r) ++with_rate;
    if (with_rate == rates_.size()) {
      std::vector<Rational> rates;
      rates.reserve(rates_.size());
      for (const auto& r : rates_) rates.push_back(*r);
      doc.rates = std::move(rates);
    } else if (with_rate != 0) {
      for (size_t i = 0; i < rates_.size(); ++i) {
        if (!rates_[i])
          throw ParseError(lines_[i], 1,
                           "rate constants must be given for every reaction or none");
      }
    }
    return doc;
  }

  std::string_view text_;
  NetworkBuilder builder_;
  std::vector<std::optional<Rational>> rates_;
  std::vector<int> lines_;
  std::set<std::string> labels_;
};

}  // namespace

std::map<int, std::string> NetworkDocument::source_labels() const {
  std::map<int, std::string> out;
  for (const Reaction& rx : network.reactions())
    if (!rx.label.empty()) out.emplace(rx.index, rx.label);
  return out;
}

NetworkDocument parse_network(std::string_view text) { return Parser(text).run(); }

NetworkDocument parse_network_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, 0, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_network(buffer.str());
}

std::string format_network(const NetworkDocument& doc) {
  std::string out;
  const Network& net = doc.network;
  for (int i = 0; i < net.reaction_count(); ++i) {
    const Reaction& rx = net.reaction_at(i);
    if (!rx.label.empty()) {
      out += rx.label;
      out += ": ";
    }
    out += net.reaction_text(i);
    if (doc.rates) {
      out += " [k=";
      out += to_string((*doc.rates)[i]);
      out += "]";
    }
    out += '\n';
  }
  return out;
}

}  // namespace crn
