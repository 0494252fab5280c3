#include "dgahom/parser.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace dgahom {

namespace {

std::string first_message(const std::vector<Diagnostic>& ds) {
  return ds.empty() ? std::string("parse error") : format_diagnostic(ds.front());
}

}  // namespace

ParseError::ParseError(std::vector<Diagnostic> diagnostics)
    : Error(ErrorKind::Parse, first_message(diagnostics)), diagnostics_(std::move(diagnostics)) {}

std::string format_diagnostic(const Diagnostic& d, std::string_view origin) {
  std::ostringstream os;
  if (!origin.empty()) os << origin << ":";
  os << d.line << ":" << d.column << ": " << d.message;
  return os.str();
}

namespace {

enum class Tok { Ident, Number, Symbol, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int column = 0;
};

struct LineError {
  Diagnostic diag;
};

[[noreturn]] void fail(int line, int column, std::string message) {
  throw LineError{Diagnostic{line, column, std::move(message)}};
}

std::vector<Token> tokenize(std::string_view s, int line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    const int col = static_cast<int>(i) + 1;
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '.')) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), col});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Number, std::string(s.substr(i, j - i)), col});
      i = j;
    } else if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      out.push_back({Tok::Symbol, "->", col});
      i += 2;
    } else if (std::string_view("+-*^()=:/").find(c) != std::string_view::npos) {
      out.push_back({Tok::Symbol, std::string(1, c), col});
      ++i;
    } else {
      fail(line, col, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", static_cast<int>(s.size()) + 1});
  return out;
}

struct Cursor {
  const std::vector<Token>& toks;
  std::size_t pos = 0;
  int line = 0;

  const Token& peek() const { return toks[pos]; }
  const Token& next() { return toks[pos < toks.size() - 1 ? pos++ : pos]; }
  bool at_symbol(std::string_view s) const { return peek().kind == Tok::Symbol && peek().text == s; }
  bool at_end() const { return peek().kind == Tok::End; }
  void expect_symbol(std::string_view s) {
    if (!at_symbol(s)) fail(line, peek().column, "expected '" + std::string(s) + "'" + found());
    next();
  }
  std::string expect_ident(std::string_view what) {
    if (peek().kind != Tok::Ident) fail(line, peek().column, "expected " + std::string(what) + found());
    return next().text;
  }
  long expect_integer(std::string_view what) {
    bool negative = false;
    if (at_symbol("-")) {
      negative = true;
      next();
    }
    if (peek().kind != Tok::Number) fail(line, peek().column, "expected " + std::string(what) + found());
    const Token& t = next();
    if (t.text.size() > 9) fail(line, t.column, std::string(what) + " is too large");
    long v = std::stol(t.text);
    return negative ? -v : v;
  }
  void expect_end() {
    if (!at_end()) fail(line, peek().column, "unexpected '" + peek().text + "'");
  }
  std::string found() const {
    return at_end() ? " at end of line" : ", found '" + peek().text + "'";
  }
};

// Identifiers resolve to generators of the ring or to declared scalar unknowns.
class ExpressionParser {
 public:
  ExpressionParser(Cursor& cur, RingPtr ring, const std::map<std::string, std::uint32_t>& unknowns)
      : cur_(cur), ring_(std::move(ring)), unknowns_(unknowns) {}

  ParamElement parse() {
    ParamElement e = expr();
    cur_.expect_end();
    return e;
  }

 private:
  ParamElement expr() {
    ParamElement acc = term();
    while (cur_.at_symbol("+") || cur_.at_symbol("-")) {
      const bool minus = cur_.next().text == "-";
      ParamElement t = term();
      if (minus)
        acc -= t;
      else
        acc += t;
    }
    return acc;
  }

  ParamElement term() {
    ParamElement acc = unary();
    while (cur_.at_symbol("*")) {
      cur_.next();
      acc = mul(acc, unary());
    }
    return acc;
  }

  ParamElement unary() {
    if (cur_.at_symbol("-")) {
      cur_.next();
      return -unary();
    }
    if (cur_.at_symbol("+")) {
      cur_.next();
      return unary();
    }
    return power();
  }

  ParamElement power() {
    const Token start = cur_.peek();
    const bool number = start.kind == Tok::Number;
    ParamElement base = primary();
    if (!cur_.at_symbol("^")) return base;
    const Token caret = cur_.next();
    if (number)
      fail(cur_.line, caret.column, "an exponent applies only to a generator or a parenthesized expression");
    if (cur_.peek().kind != Tok::Number) fail(cur_.line, cur_.peek().column, "expected an integer exponent" + cur_.found());
    const Token e = cur_.next();
    if (e.text.size() > 9) fail(cur_.line, e.column, "exponent is too large");
    ParamElement result = dgahom::power(base, static_cast<unsigned>(std::stoul(e.text)));
    if (cur_.at_symbol("^")) fail(cur_.line, cur_.peek().column, "chained exponents need parentheses");
    return result;
  }

  ParamElement primary() {
    const Token t = cur_.peek();
    if (t.kind == Tok::Number) {
      cur_.next();
      std::string text = t.text;
      if (cur_.at_symbol("/")) {
        cur_.next();
        if (cur_.peek().kind != Tok::Number) fail(cur_.line, cur_.peek().column, "expected a denominator" + cur_.found());
        const Token den = cur_.next();
        if (den.text.find_first_not_of('0') == std::string::npos) fail(cur_.line, den.column, "zero denominator");
        text += "/" + den.text;
      }
      return ParamElement::one(ring_).scaled(ParamPoly(parse_rational(text)));
    }
    if (t.kind == Tok::Ident) {
      cur_.next();
      if (auto g = ring_->find(t.text)) return ParamElement::generator(ring_, *g);
      auto u = unknowns_.find(t.text);
      if (u != unknowns_.end()) return ParamElement::one(ring_).scaled(ParamPoly::variable(u->second));
      fail(cur_.line, t.column, "unknown generator '" + t.text + "'");
    }
    if (cur_.at_symbol("(")) {
      cur_.next();
      ParamElement inner = expr();
      cur_.expect_symbol(")");
      return inner;
    }
    fail(cur_.line, t.column, "expected a number, generator or '('" + cur_.found());
  }

  Cursor& cur_;
  RingPtr ring_;
  const std::map<std::string, std::uint32_t>& unknowns_;
};

struct Line {
  int number;
  std::vector<Token> tokens;
};

std::vector<Line> split_lines(std::string_view text, std::vector<Diagnostic>& diags) {
  std::vector<Line> out;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    try {
      std::vector<Token> toks = tokenize(raw, number);
      if (toks.size() > 1) out.push_back({number, std::move(toks)});
    } catch (const LineError& e) {
      diags.push_back(e.diag);
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

}  // namespace

PresentationPtr parse_presentation(std::string_view text) {
  std::vector<Diagnostic> diags;
  std::vector<Line> lines = split_lines(text, diags);
  std::string name = "algebra";
  bool named = false;
  std::vector<Generator> gens;
  std::set<std::string> seen;
  std::vector<std::pair<const Line*, std::size_t>> d_lines;  // line, token index of expression

  for (const Line& line : lines) {
    Cursor cur{line.tokens, 0, line.number};
    try {
      const Token& head = cur.peek();
      if (head.kind != Tok::Ident) fail(line.number, head.column, "expected 'algebra', 'generator' or 'd'");
      if (head.text == "algebra") {
        cur.next();
        if (named) fail(line.number, head.column, "algebra named twice");
        name = cur.expect_ident("an algebra name");
        named = true;
        cur.expect_end();
      } else if (head.text == "generator") {
        cur.next();
        const Token id = cur.peek();
        Generator g;
        g.name = cur.expect_ident("a generator name");
        if (seen.count(g.name)) fail(line.number, id.column, "generator '" + g.name + "' declared twice");
        cur.expect_symbol(":");
        const int deg_col = cur.peek().column;
        g.degree = static_cast<int>(cur.expect_integer("a degree"));
        if (g.degree < 1) fail(line.number, deg_col, "degree must be positive");
        while (!cur.at_end()) {
          const Token key = cur.peek();
          std::string k = cur.expect_ident("'weight' or 'stage'");
          const int val_col = cur.peek().column;
          if (k == "weight") {
            if (g.weight) fail(line.number, key.column, "weight given twice");
            g.weight = static_cast<int>(cur.expect_integer("a weight"));
          } else if (k == "stage") {
            if (g.stage) fail(line.number, key.column, "stage given twice");
            g.stage = static_cast<int>(cur.expect_integer("a stage"));
            if (*g.stage < 0) fail(line.number, val_col, "stage must be non-negative");
          } else {
            fail(line.number, key.column, "expected 'weight' or 'stage', found '" + k + "'");
          }
        }
        seen.insert(g.name);
        gens.push_back(std::move(g));
      } else if (head.text == "d") {
        cur.next();
        cur.expect_ident("a generator name");
        cur.expect_symbol("=");
        d_lines.emplace_back(&line, cur.pos);
      } else {
        fail(line.number, head.column, "expected 'algebra', 'generator' or 'd', found '" + head.text + "'");
      }
    } catch (const LineError& e) {
      diags.push_back(e.diag);
    }
  }
  if (!diags.empty()) throw ParseError(std::move(diags));

  RingPtr ring = make_ring(std::move(gens));
  std::vector<Element> diff(ring->size(), Element::zero(ring));
  std::vector<bool> given(ring->size(), false);
  const std::map<std::string, std::uint32_t> no_unknowns;
  for (const auto& [line, pos] : d_lines) {
    Cursor cur{line->tokens, 1, line->number};
    try {
      const Token id = cur.peek();
      auto g = ring->find(id.text);
      if (!g) fail(line->number, id.column, "unknown generator '" + id.text + "'");
      if (given[*g]) fail(line->number, id.column, "differential of '" + id.text + "' given twice");
      cur.pos = pos;
      ExpressionParser p(cur, ring, no_unknowns);
      diff[*g] = demote(p.parse());
      given[*g] = true;
    } catch (const LineError& e) {
      diags.push_back(e.diag);
    }
  }
  if (!diags.empty()) throw ParseError(std::move(diags));
  return std::make_shared<const Presentation>(name, ring, std::move(diff));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

PresentationPtr load_presentation(const std::string& path) { return parse_presentation(read_file(path)); }

ParsedMorphism parse_morphism(std::string_view text, const PresentationPtr& source, const PresentationPtr& target) {
  std::vector<Diagnostic> diags;
  std::vector<Line> lines = split_lines(text, diags);
  ParsedMorphism out;
  out.maps.source = source;
  out.maps.target = target;
  std::map<std::string, std::uint32_t> unknowns;
  std::vector<const Line*> image_lines;
  bool header = false;
  for (const Line& line : lines) {
    Cursor cur{line.tokens, 0, line.number};
    try {
      const Token& head = cur.peek();
      if (head.kind != Tok::Ident) fail(line.number, head.column, "expected 'morphism', 'unknown' or a generator");
      if (head.text == "morphism") {
        cur.next();
        if (header) fail(line.number, head.column, "morphism header given twice");
        out.name = cur.expect_ident("a morphism name");
        cur.expect_symbol(":");
        const Token s = cur.peek();
        out.source_name = cur.expect_ident("a source algebra");
        cur.expect_symbol("->");
        const Token t = cur.peek();
        out.target_name = cur.expect_ident("a target algebra");
        cur.expect_end();
        if (out.source_name != source->name())
          fail(line.number, s.column, "source '" + out.source_name + "' does not match algebra '" + source->name() + "'");
        if (out.target_name != target->name())
          fail(line.number, t.column, "target '" + out.target_name + "' does not match algebra '" + target->name() + "'");
        header = true;
      } else if (head.text == "unknown" && cur.toks.size() > 2 && cur.toks[1].kind == Tok::Ident &&
                 cur.toks[2].kind == Tok::End) {
        cur.next();
        const Token id = cur.peek();
        std::string u = cur.expect_ident("an unknown name");
        if (unknowns.count(u)) fail(line.number, id.column, "unknown '" + u + "' declared twice");
        if (target->ring()->find(u)) fail(line.number, id.column, "unknown '" + u + "' shadows a generator");
        unknowns.emplace(u, static_cast<std::uint32_t>(out.maps.unknowns.size()));
        out.maps.unknowns.push_back(u);
        out.maps.unknown_generator.push_back(0);
      } else {
        image_lines.push_back(&line);
      }
    } catch (const LineError& e) {
      diags.push_back(e.diag);
    }
  }
  const Ring& src = *source->ring();
  out.maps.images.assign(src.size(), ParamElement::zero(target->ring()));
  std::vector<bool> given(src.size(), false), located(out.maps.unknowns.size(), false);
  for (const Line* line : image_lines) {
    Cursor cur{line->tokens, 0, line->number};
    try {
      const Token id = cur.peek();
      std::string name = cur.expect_ident("a generator name");
      auto g = src.find(name);
      if (!g) fail(line->number, id.column, "unknown generator '" + name + "' of the source");
      if (given[*g]) fail(line->number, id.column, "image of '" + name + "' given twice");
      cur.expect_symbol("=");
      const int expr_col = cur.peek().column;
      ExpressionParser p(cur, target->ring(), unknowns);
      ParamElement image = p.parse();
      for (const auto& [m, c] : image.terms()) {
        if (m.degree(*target->ring()) != src.degree(*g))
          fail(line->number, expr_col,
               "image of '" + name + "' has a term of degree " + std::to_string(m.degree(*target->ring())) +
                   ", expected " + std::to_string(src.degree(*g)));
        for (auto v : c.variables())
          if (!located[v]) {
            located[v] = true;
            out.maps.unknown_generator[v] = *g;
          }
      }
      out.maps.images[*g] = std::move(image);
      given[*g] = true;
    } catch (const LineError& e) {
      diags.push_back(e.diag);
    }
  }
  if (!header && diags.empty()) diags.push_back({1, 1, "missing 'morphism <name> : <source> -> <target>' header"});
  if (!diags.empty()) throw ParseError(std::move(diags));
  return out;
}

ParsedMorphism load_morphism(const std::string& path, const PresentationPtr& source, const PresentationPtr& target) {
  return parse_morphism(read_file(path), source, target);
}

Morphism to_morphism(const ParsedMorphism& parsed) {
  if (!parsed.maps.unknowns.empty())
    throw Error(ErrorKind::PreconditionViolated, "morphism '" + parsed.name + "' has undetermined coefficients");
  std::vector<Element> images;
  for (const auto& img : parsed.maps.images) images.push_back(demote(img));
  return Morphism(parsed.maps.source, parsed.maps.target, std::move(images));
}

Element parse_element(std::string_view text, const PresentationPtr& a) {
  std::vector<Diagnostic> diags;
  try {
    std::vector<Token> toks = tokenize(text, 1);
    Cursor cur{toks, 0, 1};
    const std::map<std::string, std::uint32_t> none;
    ExpressionParser p(cur, a->ring(), none);
    return demote(p.parse());
  } catch (const LineError& e) {
    diags.push_back(e.diag);
  }
  throw ParseError(std::move(diags));
}

std::string print_presentation(const Presentation& a) {
  std::ostringstream os;
  const Ring& ring = *a.ring();
  os << "algebra " << a.name() << "\n";
  for (const auto& g : ring.generators()) {
    os << "generator " << g.name << " : " << g.degree;
    if (g.weight) os << " weight " << *g.weight;
    if (g.stage) os << " stage " << *g.stage;
    os << "\n";
  }
  for (std::size_t v = 0; v < ring.size(); ++v)
    if (!a.d_generator(v).is_zero()) os << "d " << ring.name(v) << " = " << to_string(a.d_generator(v)) << "\n";
  return os.str();
}

std::string print_morphism(const Morphism& f, const std::string& name) {
  std::ostringstream os;
  os << "morphism " << name << " : " << f.source()->name() << " -> " << f.target()->name() << "\n";
  const Ring& ring = *f.source()->ring();
  for (std::size_t v = 0; v < ring.size(); ++v) os << ring.name(v) << " = " << to_string(f.image(v)) << "\n";
  return os.str();
}

}  // namespace dgahom
