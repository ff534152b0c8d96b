#include "stratos/formula.hpp"

#include <cctype>
#include <vector>

#include "stratos/errors.hpp"

namespace stratos {
namespace fml {
namespace {
FormulaPtr make(Op op, std::string name, std::optional<Time> time, FormulaPtr l, FormulaPtr r) {
  auto f = std::make_shared<Formula>();
  f->op = op;
  f->name = std::move(name);
  f->time = time;
  f->left = std::move(l);
  f->right = std::move(r);
  return f;
}
}  // namespace

FormulaPtr truth(bool value) { return make(value ? Op::kTrue : Op::kFalse, "", {}, nullptr, nullptr); }
FormulaPtr atom(std::string name, std::optional<Time> time) {
  return make(Op::kAtom, std::move(name), time, nullptr, nullptr);
}
FormulaPtr negate(FormulaPtr f) { return make(Op::kNot, "", {}, std::move(f), nullptr); }
FormulaPtr conj(FormulaPtr a, FormulaPtr b) { return make(Op::kAnd, "", {}, std::move(a), std::move(b)); }
FormulaPtr disj(FormulaPtr a, FormulaPtr b) { return make(Op::kOr, "", {}, std::move(a), std::move(b)); }
FormulaPtr implies(FormulaPtr a, FormulaPtr b) {
  return make(Op::kImplies, "", {}, std::move(a), std::move(b));
}
FormulaPtr past(FormulaPtr f) { return make(Op::kPast, "", {}, std::move(f), nullptr); }
FormulaPtr future(FormulaPtr f) { return make(Op::kFuture, "", {}, std::move(f), nullptr); }
FormulaPtr box(std::string agent, FormulaPtr f, std::optional<Time> index) {
  return make(Op::kBox, std::move(agent), index, std::move(f), nullptr);
}
FormulaPtr diamond(std::string agent, FormulaPtr f, std::optional<Time> index) {
  return make(Op::kDiamond, std::move(agent), index, std::move(f), nullptr);
}
FormulaPtr at(FormulaPtr f, Time t) { return make(Op::kAt, "", t, std::move(f), nullptr); }
}  // namespace fml

namespace {

enum class Tok { kEnd, kLParen, kRParen, kComma, kAt, kNot, kAnd, kOr, kArrow, kBox, kDiamond, kIdent, kQuoted, kInt };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;  // 1-based
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'';
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    auto two = s.substr(i, 2);
    if (two == "->") { out.push_back({Tok::kArrow, "->", col}); i += 2; continue; }
    if (two == "[]") { out.push_back({Tok::kBox, "[]", col}); i += 2; continue; }
    if (two == "<>") { out.push_back({Tok::kDiamond, "<>", col}); i += 2; continue; }
    switch (c) {
      case '(': out.push_back({Tok::kLParen, "(", col}); ++i; continue;
      case ')': out.push_back({Tok::kRParen, ")", col}); ++i; continue;
      case ',': out.push_back({Tok::kComma, ",", col}); ++i; continue;
      case '@': out.push_back({Tok::kAt, "@", col}); ++i; continue;
      case '!': case '~': out.push_back({Tok::kNot, "!", col}); ++i; continue;
      case '&': out.push_back({Tok::kAnd, "&", col}); ++i; continue;
      case '|': out.push_back({Tok::kOr, "|", col}); ++i; continue;
      default: break;
    }
    if (c == '"') {
      std::size_t end = s.find('"', i + 1);
      if (end == std::string_view::npos) throw SyntaxError(col, "unterminated quoted atom");
      if (end == i + 1) throw SyntaxError(col, "empty quoted atom");
      out.push_back({Tok::kQuoted, std::string(s.substr(i + 1, end - i - 1)), col});
      i = end + 1;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::kInt, std::string(s.substr(i, j - i)), col});
      i = j;
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < s.size() &&
             (ident_char(s[j]) || (s[j] == '-' && (j + 1 >= s.size() || s[j + 1] != '>'))))
        ++j;
      out.push_back({Tok::kIdent, std::string(s.substr(i, j - i)), col});
      i = j;
      continue;
    }
    throw SyntaxError(col, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::kEnd, "", s.size() + 1});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  FormulaPtr parse() {
    FormulaPtr f = implies();
    if (peek().kind != Tok::kEnd) fail(peek(), "unexpected '" + peek().text + "'");
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(const Token& t, const std::string& what) {
    if (t.kind == Tok::kEnd) {
      std::size_t col = open_.empty() ? t.column : open_.back();
      throw SyntaxError(col, open_.empty() ? "unexpected end of input"
                                           : "unexpected end of input inside '('");
    }
    throw SyntaxError(t.column, what);
  }

  void expect(Tok k, const char* what) {
    if (!accept(k)) fail(peek(), std::string("expected ") + what);
  }

  Time time_literal() {
    const Token& t = peek();
    if (t.kind != Tok::kInt) fail(t, "expected a time");
    ++pos_;
    try {
      return static_cast<Time>(std::stoi(t.text));
    } catch (const std::out_of_range&) {
      throw SyntaxError(t.column, "time literal out of range");
    }
  }

  FormulaPtr implies() {
    FormulaPtr l = disjunction();
    if (accept(Tok::kArrow)) return fml::implies(l, implies());
    return l;
  }

  FormulaPtr disjunction() {
    FormulaPtr l = conjunction();
    while (accept(Tok::kOr)) l = fml::disj(l, conjunction());
    return l;
  }

  FormulaPtr conjunction() {
    FormulaPtr l = unary();
    while (accept(Tok::kAnd)) l = fml::conj(l, unary());
    return l;
  }

  FormulaPtr modality(bool is_box) {
    const Token& open = peek();
    expect(Tok::kLParen, "'(' after modality");
    open_.push_back(open.column);
    const Token& agent = peek();
    if (agent.kind != Tok::kIdent && agent.kind != Tok::kQuoted) fail(agent, "expected an agent");
    ++pos_;
    std::optional<Time> index;
    if (accept(Tok::kComma)) index = time_literal();
    expect(Tok::kRParen, "')'");
    open_.pop_back();
    FormulaPtr body = unary();
    return is_box ? fml::box(agent.text, body, index) : fml::diamond(agent.text, body, index);
  }

  FormulaPtr unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kNot: ++pos_; return fml::negate(unary());
      case Tok::kBox: ++pos_; return modality(true);
      case Tok::kDiamond: ++pos_; return modality(false);
      case Tok::kIdent:
        if (t.text == "P") { ++pos_; return fml::past(unary()); }
        if (t.text == "F") { ++pos_; return fml::future(unary()); }
        break;
      default: break;
    }
    return primary();
  }

  FormulaPtr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kIdent:
        ++pos_;
        if (t.text == "true") return fml::truth(true);
        if (t.text == "false") return fml::truth(false);
        return timed_atom(t.text);
      case Tok::kQuoted:
        ++pos_;
        return timed_atom(t.text);
      case Tok::kLParen: {
        ++pos_;
        open_.push_back(t.column);
        FormulaPtr inner = implies();
        expect(Tok::kRParen, "')'");
        open_.pop_back();
        if (accept(Tok::kAt)) return fml::at(inner, time_literal());
        return inner;
      }
      default:
        fail(t, t.kind == Tok::kEnd ? "unexpected end of input" : "unexpected '" + t.text + "'");
    }
  }

  FormulaPtr timed_atom(const std::string& name) {
    if (accept(Tok::kAt)) return fml::atom(name, time_literal());
    return fml::atom(name);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<std::size_t> open_;
};

int precedence(const Formula& f) {
  switch (f.op) {
    case Op::kImplies: return 1;
    case Op::kOr: return 2;
    case Op::kAnd: return 3;
    default: return 4;
  }
}

bool plain_identifier(const std::string& s) {
  if (s.empty() || !ident_start(s[0])) return false;
  if (s == "P" || s == "F" || s == "true" || s == "false") return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (ident_char(s[i])) continue;
    if (s[i] == '-' && (i + 1 >= s.size() || s[i + 1] != '>')) continue;
    return false;
  }
  return true;
}

std::string name_text(const std::string& s) { return plain_identifier(s) ? s : "\"" + s + "\""; }

void print(const Formula& f, int min_prec, std::string& out) {
  bool wrap = precedence(f) < min_prec;
  if (wrap) out += '(';
  switch (f.op) {
    case Op::kTrue: out += "true"; break;
    case Op::kFalse: out += "false"; break;
    case Op::kAtom:
      out += name_text(f.name);
      if (f.time) out += "@" + std::to_string(*f.time);
      break;
    case Op::kNot: out += '!'; print(*f.left, 4, out); break;
    case Op::kPast: out += "P "; print(*f.left, 4, out); break;
    case Op::kFuture: out += "F "; print(*f.left, 4, out); break;
    case Op::kBox:
    case Op::kDiamond:
      out += f.op == Op::kBox ? "[](" : "<>(";
      out += name_text(f.name);
      if (f.time) out += "," + std::to_string(*f.time);
      out += ") ";
      print(*f.left, 4, out);
      break;
    case Op::kAt:
      out += '(';
      print(*f.left, 0, out);
      out += ")@" + std::to_string(*f.time);
      break;
    case Op::kAnd: print(*f.left, 3, out); out += " & "; print(*f.right, 4, out); break;
    case Op::kOr: print(*f.left, 2, out); out += " | "; print(*f.right, 3, out); break;
    case Op::kImplies: print(*f.left, 2, out); out += " -> "; print(*f.right, 1, out); break;
  }
  if (wrap) out += ')';
}

}  // namespace

FormulaPtr parse_formula(std::string_view text) { return Parser(lex(text)).parse(); }

std::string to_string(const Formula& f) {
  std::string out;
  print(f, 0, out);
  return out;
}

bool structurally_equal(const Formula& a, const Formula& b) {
  if (a.op != b.op || a.name != b.name || a.time != b.time) return false;
  if (static_cast<bool>(a.left) != static_cast<bool>(b.left)) return false;
  if (static_cast<bool>(a.right) != static_cast<bool>(b.right)) return false;
  if (a.left && !structurally_equal(*a.left, *b.left)) return false;
  if (a.right && !structurally_equal(*a.right, *b.right)) return false;
  return true;
}

void resolve(const Formula& f, const Universe& u, const std::set<std::string>& agents) {
  if (f.time && !u.time_axis().contains(*f.time))
    throw ResolutionError("time " + std::to_string(*f.time) + " is outside 0.." +
                          std::to_string(u.t_max()));
  switch (f.op) {
    case Op::kAtom:
      if (!u.has_proposition(f.name)) throw ResolutionError("unknown proposition '" + f.name + "'");
      break;
    case Op::kBox:
    case Op::kDiamond:
      if (!agents.count(f.name)) throw ResolutionError("unknown agent '" + f.name + "'");
      break;
    default: break;
  }
  if (f.left) resolve(*f.left, u, agents);
  if (f.right) resolve(*f.right, u, agents);
}

bool contains_future(const Formula& f) {
  if (f.op == Op::kFuture) return true;
  return (f.left && contains_future(*f.left)) || (f.right && contains_future(*f.right));
}

}  // namespace stratos
