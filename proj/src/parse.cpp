#include "linkforge/parse.hpp"

#include <cctype>
#include <cstdlib>
#include <string>
#include <vector>

namespace linkforge {

namespace {

struct Tok {
  enum Kind { Num, I, T, E, Plus, Minus, Star, Caret, LParen, RParen, End };
  Kind kind;
  Scalar num;      // Kind::Num
  long ival = -1;  // integer value when the number is a plain nonneg int
};

class Lexer {
 public:
  Lexer(const std::string& s, Backend b) : s_(s), b_(b) { advance(); }

  const Tok& peek() const { return tok_; }
  Tok take() {
    Tok t = tok_;
    advance();
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg + " at position " + std::to_string(pos_));
  }

  void advance() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (pos_ >= s_.size()) {
      tok_ = {Tok::End, Scalar()};
      return;
    }
    char c = s_[pos_];
    switch (c) {
      case '+': tok_ = {Tok::Plus, Scalar()}; ++pos_; return;
      case '-': tok_ = {Tok::Minus, Scalar()}; ++pos_; return;
      case '*': tok_ = {Tok::Star, Scalar()}; ++pos_; return;
      case '^': tok_ = {Tok::Caret, Scalar()}; ++pos_; return;
      case '(': tok_ = {Tok::LParen, Scalar()}; ++pos_; return;
      case ')': tok_ = {Tok::RParen, Scalar()}; ++pos_; return;
      case 'i': tok_ = {Tok::I, Scalar()}; ++pos_; return;
      case 't': tok_ = {Tok::T, Scalar()}; ++pos_; return;
      case 'e': tok_ = {Tok::E, Scalar()}; ++pos_; return;
      default: break;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) fail("unexpected character");
    tok_ = lex_number();
  }

  Tok lex_number() {
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    bool is_int = true;
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        fail("malformed rational");
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      std::string txt = s_.substr(start, pos_ - start);
      mpq_class q(txt);
      q.canonicalize();
      Scalar v = b_ == Backend::Exact
                     ? Scalar::exact(q, 0)
                     : Scalar::approx(q.get_d());
      return {Tok::Num, v};
    }
    if (pos_ < s_.size() && s_[pos_] == '.') {
      is_int = false;
      ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
    }
    // `e` is an exponent only when digits follow (optionally signed);
    // otherwise it is the dual-unit marker.
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      size_t p = pos_ + 1;
      if (p < s_.size() && (s_[p] == '+' || s_[p] == '-')) ++p;
      if (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) {
        is_int = false;
        pos_ = p;
        while (pos_ < s_.size() &&
               std::isdigit(static_cast<unsigned char>(s_[pos_])))
          ++pos_;
      }
    }
    std::string txt = s_.substr(start, pos_ - start);
    Tok t;
    t.kind = Tok::Num;
    if (is_int) {
      t.num = b_ == Backend::Exact ? Scalar::exact(mpq_class(txt), 0)
                                   : Scalar::approx(std::strtod(txt.c_str(), nullptr));
      if (txt.size() <= 9) t.ival = std::strtol(txt.c_str(), nullptr, 10);
    } else if (b_ == Backend::Exact) {
      t.num = Scalar::exact(decimal_to_rational(txt), 0);
    } else {
      t.num = Scalar::approx(std::strtod(txt.c_str(), nullptr));
    }
    return t;
  }

  static mpq_class decimal_to_rational(const std::string& txt) {
    std::string digits;
    long frac = 0, expo = 0;
    size_t p = 0;
    for (; p < txt.size() && std::isdigit(static_cast<unsigned char>(txt[p])); ++p)
      digits += txt[p];
    if (p < txt.size() && txt[p] == '.') {
      for (++p; p < txt.size() && std::isdigit(static_cast<unsigned char>(txt[p]));
           ++p, ++frac)
        digits += txt[p];
    }
    if (p < txt.size() && (txt[p] == 'e' || txt[p] == 'E'))
      expo = std::strtol(txt.c_str() + p + 1, nullptr, 10);
    mpq_class q(digits.empty() ? "0" : digits, 10);
    long shift = expo - frac;
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(shift)));
    if (shift >= 0)
      q *= mpq_class(pow10);
    else
      q /= mpq_class(pow10);
    q.canonicalize();
    return q;
  }

  const std::string& s_;
  Backend b_;
  size_t pos_ = 0;
  Tok tok_;
};

class Parser {
 public:
  Parser(const std::string& s, Backend b) : lex_(s, b), b_(b) {}

  MPoly parse() {
    MPoly p = expr();
    if (lex_.peek().kind != Tok::End) throw ParseError("trailing input");
    return p;
  }

 private:
  MPoly expr() {
    MPoly acc(b_);
    bool neg = false;
    if (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus)
      neg = lex_.take().kind == Tok::Minus;
    acc = signed_term(neg);
    while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
      bool m = lex_.take().kind == Tok::Minus;
      acc = acc + signed_term(m);
    }
    return acc;
  }

  MPoly signed_term(bool neg) {
    MPoly t = term();
    if (!neg) return t;
    Scalar m1 = -Scalar::one(b_);
    return MPoly(t.Z.scaled(m1), t.W.scaled(m1));
  }

  static bool starts_factor(Tok::Kind k) {
    return k == Tok::Num || k == Tok::I || k == Tok::T || k == Tok::LParen;
  }

  MPoly term() {
    CPoly prod = CPoly::one(b_);
    bool any = false;
    MPoly whole(b_);  // set when a parenthesized dual expression is the term
    bool have_whole = false;
    for (;;) {
      Tok::Kind k = lex_.peek().kind;
      if (k == Tok::Star) {
        lex_.take();
        continue;
      }
      if (k == Tok::E) {
        lex_.take();
        if (have_whole) throw ParseError("misplaced dual unit");
        return MPoly(CPoly(b_), prod);  // a bare `e` term contributes eta*1
      }
      if (!starts_factor(k)) break;
      if (have_whole) throw ParseError("dual part inside a product");
      MPoly f = factor();
      if (!f.W.is_zero()) {
        if (any) throw ParseError("dual part inside a product");
        whole = f;
        have_whole = true;
      } else {
        prod = prod * f.Z;
      }
      any = true;
    }
    if (!any) throw ParseError("expected a term");
    if (have_whole) return whole;
    return MPoly(prod, CPoly(b_));
  }

  MPoly factor() {
    MPoly a = atom();
    while (lex_.peek().kind == Tok::Caret) {
      lex_.take();
      Tok n = lex_.take();
      if (n.kind != Tok::Num || n.ival < 0)
        throw ParseError("exponent must be a nonnegative integer");
      if (!a.W.is_zero()) throw ParseError("cannot raise a dual expression");
      a = MPoly(a.Z.pow(static_cast<int>(n.ival)), CPoly(b_));
    }
    return a;
  }

  MPoly atom() {
    Tok t = lex_.take();
    switch (t.kind) {
      case Tok::Num:
        return MPoly(CPoly::constant(t.num), CPoly(b_));
      case Tok::I:
        return MPoly(CPoly::constant(Scalar::imag_unit(b_)), CPoly(b_));
      case Tok::T:
        return MPoly(CPoly(b_, {Scalar::zero(b_), Scalar::one(b_)}), CPoly(b_));
      case Tok::LParen: {
        MPoly inner = expr();
        if (lex_.take().kind != Tok::RParen) throw ParseError("expected ')'");
        return inner;
      }
      default:
        throw ParseError("expected a value");
    }
  }

  Lexer lex_;
  Backend b_;
};

// True when the coefficient prints as a single signless token sequence
// that can be juxtaposed with a monomial without parentheses.
bool needs_parens(const std::string& s) {
  for (size_t p = 1; p < s.size(); ++p)
    if (s[p] == '+' || (s[p] == '-' && !(s[p - 1] == 'e' || s[p - 1] == 'E')))
      return true;
  return false;
}

std::string monomial(int k) {
  if (k == 0) return "";
  if (k == 1) return "t";
  return "t^" + std::to_string(k);
}

}  // namespace

MPoly parse_motion_poly(const std::string& text, Backend b) {
  return Parser(text, b).parse();
}

CPoly parse_cpoly(const std::string& text, Backend b) {
  MPoly p = parse_motion_poly(text, b);
  if (!p.W.is_zero()) throw ParseError("unexpected dual part");
  return p.Z;
}

KElement parse_k_element(const std::string& text, Backend b) {
  MPoly p = parse_motion_poly(text, b);
  if (p.degree() > 0) throw ParseError("expected a constant");
  return {p.Z.coeff(0), p.W.coeff(0)};
}

Scalar parse_scalar(const std::string& text, Backend b) {
  return CPoly(parse_cpoly(text, b)).coeff(0);
}

Backend detect_backend(const std::string& text) {
  return text.find('.') == std::string::npos ? Backend::Exact : Backend::Approx;
}

std::string cpoly_str(const CPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    Scalar c = p.coeff(k);
    if (c.is_zero()) continue;
    std::string cs = c.str();
    std::string piece;
    if (k > 0 && cs == "1") {
      piece = monomial(k);
    } else if (k > 0 && cs == "-1") {
      piece = "-" + monomial(k);
    } else if (needs_parens(cs)) {
      piece = "(" + cs + ")" + monomial(k);
    } else {
      piece = cs + monomial(k);
    }
    if (out.empty()) {
      out = piece;
    } else if (piece[0] == '-') {
      out += piece;
    } else {
      out += "+" + piece;
    }
  }
  return out;
}

std::string mpoly_str(const MPoly& p) {
  if (p.W.is_zero()) return cpoly_str(p.Z);
  std::string w = "(" + cpoly_str(p.W) + ")e";
  if (p.Z.is_zero()) return w;
  return "(" + cpoly_str(p.Z) + ")+" + w;
}

std::string k_element_str(const KElement& k) {
  return mpoly_str(MPoly(CPoly::constant(k.z), CPoly::constant(k.w)));
}

}  // namespace linkforge
