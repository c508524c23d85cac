#include "centlat/expr.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "centlat/error.hpp"
#include "centlat/families.hpp"
#include "centlat/serialize.hpp"

namespace centlat {

namespace {

constexpr std::string_view kFamilies[] = {"cyclic", "dihedral", "quaternion", "semidihedral", "cover_dq", "cover_qsd"};

enum class Tok { kIdent, kInt, kString, kLParen, kRParen, kComma, kLBracket, kRBracket, kStar, kCaret, kMinus, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

struct ParseFailure {
  ParseError error;
};

std::string describe(Tok t) {
  switch (t) {
    case Tok::kIdent: return "IDENT";
    case Tok::kInt: return "INT";
    case Tok::kString: return "STRING";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kComma: return "','";
    case Tok::kLBracket: return "'['";
    case Tok::kRBracket: return "']'";
    case Tok::kStar: return "'*'";
    case Tok::kCaret: return "'^'";
    case Tok::kMinus: return "'-'";
    case Tok::kEnd: return "end of input";
  }
  return "?";
}

[[noreturn]] void fail(std::size_t line, std::size_t col, std::vector<std::string> expected, std::string msg) {
  throw ParseFailure{{line, col, std::move(expected), std::move(msg)}};
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0, line = 1, line_start = 0;
  auto col = [&](std::size_t pos) { return pos - line_start; };
  while (i < s.size()) {
    const char c = s[i];
    if (c == '\n') {
      ++i;
      ++line;
      line_start = i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' || s[i] == '.')) ++i;
      out.push_back({Tok::kIdent, std::string(s.substr(start, i - start)), line, col(start)});
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::kInt, std::string(s.substr(start, i - start)), line, col(start)});
    } else if (c == '"') {
      std::string text;
      ++i;
      bool closed = false;
      while (i < s.size()) {
        if (s[i] == '\\' && i + 1 < s.size()) {
          text += s[i + 1];
          i += 2;
        } else if (s[i] == '"') {
          ++i;
          closed = true;
          break;
        } else if (s[i] == '\n') {
          break;
        } else {
          text += s[i++];
        }
      }
      if (!closed) fail(line, col(start), {"'\"'"}, "unterminated string");
      out.push_back({Tok::kString, std::move(text), line, col(start)});
    } else {
      Tok kind;
      switch (c) {
        case '(': kind = Tok::kLParen; break;
        case ')': kind = Tok::kRParen; break;
        case ',': kind = Tok::kComma; break;
        case '[': kind = Tok::kLBracket; break;
        case ']': kind = Tok::kRBracket; break;
        case '*': kind = Tok::kStar; break;
        case '^': kind = Tok::kCaret; break;
        case '-': kind = Tok::kMinus; break;
        default: fail(line, col(start), {}, std::string("unexpected character '") + c + "'");
      }
      ++i;
      out.push_back({kind, std::string(1, c), line, col(start)});
    }
  }
  out.push_back({Tok::kEnd, "", line, col(i)});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  ExprPtr parse() {
    auto e = expr();
    expect(Tok::kEnd);
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }

  [[noreturn]] void unexpected(std::vector<std::string> expected) const {
    const auto& t = peek();
    std::string got = t.kind == Tok::kEnd ? "end of input" : "'" + t.text + "'";
    fail(t.line, t.column, std::move(expected), "unexpected " + got);
  }

  const Token& expect(Tok kind) {
    if (peek().kind != kind) unexpected({describe(kind)});
    return toks_[pos_++];
  }

  std::size_t integer() {
    const auto& t = expect(Tok::kInt);
    try {
      return static_cast<std::size_t>(std::stoull(t.text));
    } catch (const std::exception&) {
      fail(t.line, t.column, {"INT"}, "integer out of range");
    }
  }

  long long signed_integer() {
    bool negative = false;
    if (peek().kind == Tok::kMinus) {
      negative = true;
      ++pos_;
    } else if (peek().kind != Tok::kInt) {
      unexpected({"INT", "'-'"});
    }
    const auto& t = peek();
    const auto v = integer();
    if (v > static_cast<std::size_t>(std::numeric_limits<long long>::max()))
      fail(t.line, t.column, {"INT"}, "integer out of range");
    return negative ? -static_cast<long long>(v) : static_cast<long long>(v);
  }

  ExprPtr expr() {
    static const std::vector<std::string> kExprStart{"cyclic",   "dihedral", "quaternion", "semidihedral",
                                                     "cover_dq", "cover_qsd", "product",   "semidirect",
                                                     "quotient", "table"};
    if (peek().kind != Tok::kIdent) unexpected(kExprStart);
    const std::string head = peek().text;
    const bool family = std::find(std::begin(kFamilies), std::end(kFamilies), head) != std::end(kFamilies);
    if (!family && head != "product" && head != "semidirect" && head != "quotient" && head != "table")
      unexpected(kExprStart);
    ++pos_;
    expect(Tok::kLParen);
    GroupExpr out;
    if (family) {
      out.node = FamilyExpr{head, integer()};
    } else if (head == "product") {
      auto l = expr();
      expect(Tok::kComma);
      auto r = expr();
      out.node = ProductExpr{std::move(l), std::move(r)};
    } else if (head == "semidirect") {
      const auto m = integer();
      expect(Tok::kComma);
      const auto k = integer();
      expect(Tok::kComma);
      const auto a = integer();
      out.node = SemidirectExpr{m, k, a};
    } else if (head == "quotient") {
      auto inner = expr();
      expect(Tok::kComma);
      expect(Tok::kLBracket);
      std::vector<Word> words;
      if (peek().kind != Tok::kRBracket) {
        words.push_back(word());
        while (peek().kind == Tok::kComma) {
          ++pos_;
          words.push_back(word());
        }
        if (peek().kind != Tok::kRBracket) unexpected({"','", "']'", "'*'", "'^'"});
      }
      expect(Tok::kRBracket);
      out.node = QuotientExpr{std::move(inner), std::move(words)};
    } else {
      out.node = TableExpr{expect(Tok::kString).text};
    }
    expect(Tok::kRParen);
    return std::make_shared<const GroupExpr>(std::move(out));
  }

  Word word() {
    Word w;
    w.terms.push_back(term());
    while (peek().kind == Tok::kStar) {
      ++pos_;
      w.terms.push_back(term());
    }
    return w;
  }

  Term term() {
    Term t{expect(Tok::kIdent).text, std::nullopt};
    if (peek().kind == Tok::kCaret) {
      ++pos_;
      t.exponent = signed_integer();
    }
    return t;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::size_t checked_order(std::size_t order, std::size_t cap, const std::string& what) {
  if (order > cap)
    throw Error(ErrorKind::kOrderCapExceeded,
                what + " has order " + std::to_string(order) + ", above cap " + std::to_string(cap));
  return order;
}

}  // namespace

bool operator==(const GroupExpr& a, const GroupExpr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, FamilyExpr>) return x.family == y.family && x.n == y.n;
        if constexpr (std::is_same_v<T, ProductExpr>) return *x.left == *y.left && *x.right == *y.right;
        if constexpr (std::is_same_v<T, SemidirectExpr>) return x.m == y.m && x.k == y.k && x.a == y.a;
        if constexpr (std::is_same_v<T, QuotientExpr>) return *x.inner == *y.inner && x.words == y.words;
        if constexpr (std::is_same_v<T, TableExpr>) return x.path == y.path;
      },
      a.node);
}

std::variant<ExprPtr, ParseError> parse_group_expr_detailed(std::string_view text) {
  try {
    return Parser(lex(text)).parse();
  } catch (const ParseFailure& f) {
    return f.error;
  }
}

ExprPtr parse_group_expr(std::string_view text) {
  auto r = parse_group_expr_detailed(text);
  if (auto* e = std::get_if<ParseError>(&r)) {
    std::string msg = "line " + std::to_string(e->line) + ", column " + std::to_string(e->column) + ": " + e->message;
    if (!e->expected.empty()) {
      msg += "; expected ";
      for (std::size_t i = 0; i < e->expected.size(); ++i) msg += (i ? " | " : "") + e->expected[i];
    }
    throw Error(ErrorKind::kParseError, msg);
  }
  return std::get<ExprPtr>(r);
}

std::string to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.terms.size(); ++i) {
    if (i) out += "*";
    out += w.terms[i].generator;
    if (w.terms[i].exponent) out += "^" + std::to_string(*w.terms[i].exponent);
  }
  return out;
}

std::string to_string(const GroupExpr& e) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FamilyExpr>) {
          return x.family + "(" + std::to_string(x.n) + ")";
        } else if constexpr (std::is_same_v<T, ProductExpr>) {
          return "product(" + to_string(*x.left) + ", " + to_string(*x.right) + ")";
        } else if constexpr (std::is_same_v<T, SemidirectExpr>) {
          return "semidirect(" + std::to_string(x.m) + ", " + std::to_string(x.k) + ", " + std::to_string(x.a) + ")";
        } else if constexpr (std::is_same_v<T, QuotientExpr>) {
          std::string out = "quotient(" + to_string(*x.inner) + ", [";
          for (std::size_t i = 0; i < x.words.size(); ++i) out += (i ? ", " : "") + to_string(x.words[i]);
          return out + "])";
        } else {
          return "table(" + quote(x.path) + ")";
        }
      },
      e.node);
}

Element eval_word(const FiniteGroup& g, const Word& w) {
  Element acc = g.identity();
  for (const auto& t : w.terms) {
    auto gen = g.generator(t.generator);
    if (!gen) {
      std::string known;
      for (const auto& x : g.generators()) known += (known.empty() ? "" : ", ") + x.label;
      throw Error(ErrorKind::kUnknownGenerator, "'" + t.generator + "' (known: " + known + ")");
    }
    acc = g.mul(acc, g.pow(*gen, t.exponent.value_or(1)));
  }
  return acc;
}

Evaluated eval_group_expr(const GroupExpr& e, std::size_t order_cap) {
  return std::visit(
      [&](const auto& x) -> Evaluated {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FamilyExpr>) {
          if (x.family == "cover_dq" || x.family == "cover_qsd") {
            const bool dq = x.family == "cover_dq";
            if (x.n < (dq ? 3u : 4u) || x.n > 30)
              throw Error(ErrorKind::kUnsupportedParameter, x.family + " requires n >= " + (dq ? "3" : "4"));
            checked_order(std::size_t{1} << (x.n + 1), order_cap, x.family + "(" + std::to_string(x.n) + ")");
            return {cover_group(dq ? CoverKind::kDQ : CoverKind::kQSD, static_cast<int>(x.n)).group, std::nullopt};
          }
          checked_order(x.n, order_cap, x.family + "(" + std::to_string(x.n) + ")");
          Family f = Family::kCyclic;
          if (x.family == "dihedral") f = Family::kDihedral;
          if (x.family == "quaternion") f = Family::kQuaternion;
          if (x.family == "semidihedral") f = Family::kSemidihedral;
          return {make_family(f, x.n), std::nullopt};
        } else if constexpr (std::is_same_v<T, ProductExpr>) {
          auto l = eval_group_expr(*x.left, order_cap);
          auto r = eval_group_expr(*x.right, order_cap);
          return {direct_product(l.group, r.group, order_cap), std::nullopt};
        } else if constexpr (std::is_same_v<T, SemidirectExpr>) {
          if (x.m != 0 && x.k > order_cap / x.m)
            throw Error(ErrorKind::kOrderCapExceeded, "semidirect product above cap " + std::to_string(order_cap));
          return {semidirect_cyclic(x.m, x.k, static_cast<long long>(x.a)), std::nullopt};
        } else if constexpr (std::is_same_v<T, QuotientExpr>) {
          auto inner = eval_group_expr(*x.inner, order_cap);
          std::vector<Element> seed;
          for (const auto& w : x.words) seed.push_back(eval_word(inner.group, w));
          auto n = closure(inner.group, seed);
          auto q = quotient(inner.group, n);
          return {std::move(q.group), std::move(q.projection)};
        } else {
          auto g = load_group_file(x.path);
          checked_order(g.order(), order_cap, "table(" + x.path + ")");
          return {std::move(g), std::nullopt};
        }
      },
      e.node);
}

}  // namespace centlat
