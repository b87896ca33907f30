#include "jordantype/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace jt {

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, LBracket, RBracket, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      out.push_back({Tok::Int, std::string(src.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) ++i;
      out.push_back({Tok::Ident, std::string(src.substr(start, i - start)), start});
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '[': kind = Tok::LBracket; break;
      case ']': kind = Tok::RBracket; break;
      default:
        throw SyntaxError(start, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(1, c), start});
    ++i;
  }
  out.push_back({Tok::End, "", src.size()});
  return out;
}

std::string upper(const std::string& s) {
  std::string out = s;
  for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

void add_to(RawPoly& p, const Monomial& m, const mpq_class& c) {
  if (c == 0) return;
  auto it = p.find(m);
  if (it == p.end()) {
    p.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

RawPoly multiply(const RawPoly& a, const RawPoly& b) {
  RawPoly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) add_to(out, mono_mul(ma, mb), ca * cb);
  return out;
}

class Parser {
 public:
  Parser(std::string_view src, const RingSpec& ring, const ParseOptions& options)
      : tokens_(lex(src)), ring_(ring), options_(options) {}

  RawPoly parse() {
    RawPoly p = expr();
    if (peek().kind != Tok::End) throw SyntaxError(peek().pos, "unexpected '" + peek().text + "'");
    return p;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }
  void expect(Tok kind, const char* what) {
    if (!accept(kind)) throw SyntaxError(peek().pos, std::string("expected ") + what);
  }

  Monomial one() const { return Monomial(ring_.nvars(), 0); }
  RawPoly constant(const mpq_class& c) const {
    RawPoly p;
    add_to(p, one(), c);
    return p;
  }

  RawPoly expr() {
    RawPoly acc;
    bool negate = false;
    if (accept(Tok::Minus)) negate = true;
    else accept(Tok::Plus);
    RawPoly t = term();
    for (const auto& [m, c] : t) add_to(acc, m, negate ? mpq_class(-c) : c);
    for (;;) {
      if (accept(Tok::Plus)) {
        for (const auto& [m, c] : term()) add_to(acc, m, c);
      } else if (accept(Tok::Minus)) {
        for (const auto& [m, c] : term()) add_to(acc, m, -c);
      } else {
        break;
      }
    }
    return acc;
  }

  bool starts_atom(Tok kind) const {
    return kind == Tok::Int || kind == Tok::Ident || kind == Tok::LParen;
  }

  RawPoly term() {
    RawPoly acc = factor();
    for (;;) {
      if (accept(Tok::Star)) {
        acc = multiply(acc, factor());
      } else if (peek().kind == Tok::Slash) {
        std::size_t at = take().pos;
        RawPoly d = factor();
        if (d.size() != 1 || d.begin()->first != one())
          throw SyntaxError(at, "division is only allowed by a nonzero constant");
        mpq_class inv = 1 / d.begin()->second;
        for (auto& [m, c] : acc) c *= inv;
      } else if (starts_atom(peek().kind)) {
        acc = multiply(acc, factor());
      } else {
        break;
      }
    }
    return acc;
  }

  RawPoly factor() {
    if (accept(Tok::Minus)) {
      RawPoly p = factor();
      for (auto& [m, c] : p) c = -c;
      return p;
    }
    return power();
  }

  RawPoly power() {
    std::size_t at = peek().pos;
    RawPoly base = atom();
    if (!accept(Tok::Caret)) return base;
    bool bracket = accept(Tok::LBracket);
    if (bracket && !options_.dual)
      throw SyntaxError(tokens_[pos_ - 1].pos, "divided-power exponents are only valid in dual mode");
    const Token& t = peek();
    if (t.kind != Tok::Int) throw SyntaxError(t.pos, "expected an integer exponent");
    take();
    if (t.text.size() > 6) throw SyntaxError(t.pos, "exponent too large");
    int k = std::stoi(t.text);
    if (bracket) expect(Tok::RBracket, "']'");
    if (options_.dual) {
      if (base.size() != 1)
        throw SyntaxError(at, "in dual mode only a single term may be raised to a power");
      Monomial m = base.begin()->first;
      for (auto& e : m) e *= k;
      mpq_class c;
      mpz_class num, den;
      mpz_pow_ui(num.get_mpz_t(), base.begin()->second.get_num_mpz_t(), k);
      mpz_pow_ui(den.get_mpz_t(), base.begin()->second.get_den_mpz_t(), k);
      c = mpq_class(num, den);
      c.canonicalize();
      RawPoly out;
      add_to(out, m, c);
      return out;
    }
    RawPoly out = constant(1);
    for (int i = 0; i < k; ++i) out = multiply(out, base);
    return out;
  }

  RawPoly atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Int: {
        take();
        return constant(mpq_class(mpz_class(t.text)));
      }
      case Tok::Ident: {
        take();
        return identifier(t);
      }
      case Tok::LParen: {
        take();
        RawPoly p = expr();
        expect(Tok::RParen, "')'");
        return p;
      }
      case Tok::End:
        throw SyntaxError(t.pos, "unexpected end of input");
      default:
        throw SyntaxError(t.pos, "unexpected '" + t.text + "'");
    }
  }

  std::optional<std::size_t> variable(const std::string& name) const {
    int i = ring_.index_of(name);
    if (i >= 0) return static_cast<std::size_t>(i);
    if (options_.dual) {
      for (std::size_t v = 0; v < ring_.nvars(); ++v)
        if (upper(ring_.variables[v]) == name) return v;
    }
    return std::nullopt;
  }

  RawPoly identifier(const Token& t) {
    if (auto it = options_.constants.find(t.text); it != options_.constants.end())
      return constant(it->second);
    if (auto v = variable(t.text)) {
      Monomial m = one();
      m[*v] = 1;
      RawPoly p;
      add_to(p, m, 1);
      return p;
    }
    // Implicit product of one-letter variables.
    Monomial m = one();
    for (std::size_t i = 0; i < t.text.size(); ++i) {
      std::string letter(1, t.text[i]);
      auto v = std::isalpha(static_cast<unsigned char>(t.text[i])) ? variable(letter) : std::nullopt;
      if (!v) throw Error(ErrorCode::UnknownVariable, "unknown variable \"" + t.text +
                                                          "\" at position " + std::to_string(t.pos));
      ++m[*v];
    }
    RawPoly p;
    add_to(p, m, 1);
    return p;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const RingSpec& ring_;
  const ParseOptions& options_;
};

}  // namespace

RawPoly parse_raw(std::string_view src, const RingSpec& ring, const ParseOptions& options) {
  return Parser(src, ring, options).parse();
}

mpq_class parse_rational(std::string_view text) {
  RingSpec none;
  none.variables = {};
  Parser p(text, none, ParseOptions{});
  RawPoly r = p.parse();
  if (r.empty()) return 0;
  if (r.size() != 1 || !r.begin()->first.empty())
    throw Error(ErrorCode::InvalidArgs, "expected a rational constant, got \"" + std::string(text) + "\"");
  return r.begin()->second;
}

}  // namespace jt
