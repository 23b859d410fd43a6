#include "ringsynth/parse.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace ringsynth {

namespace {

enum class Tok { Name, True, False, Not, And, Or, Implies, Iff, G, F, X, U, W, Wk, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  int k = 0;  // W[k]
  int line, col;
};

class Lexer {
 public:
  Lexer(std::string_view text, int line0, int col0) : text_(text), line_(line0), col_(col0) {}

  Token next() {
    skip_ws();
    int line = line_, col = col_;
    if (pos_ >= text_.size()) return {Tok::End, "", 0, line, col};
    char c = text_[pos_];
    if (c == '(') return advance(1), Token{Tok::LParen, "(", 0, line, col};
    if (c == ')') return advance(1), Token{Tok::RParen, ")", 0, line, col};
    if (c == '!') return advance(1), Token{Tok::Not, "!", 0, line, col};
    if (c == '&') return advance(1), Token{Tok::And, "&", 0, line, col};
    if (c == '|') return advance(1), Token{Tok::Or, "|", 0, line, col};
    if (c == '-') {
      if (peek(1) == '>') return advance(2), Token{Tok::Implies, "->", 0, line, col};
      throw ParseError(line, col, "expected '->'");
    }
    if (c == '<') {
      if (peek(1) == '-' && peek(2) == '>') return advance(3), Token{Tok::Iff, "<->", 0, line, col};
      throw ParseError(line, col, "expected '<->'");
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        advance(1);
      std::string word(text_.substr(start, pos_ - start));
      if (word == "true") return {Tok::True, word, 0, line, col};
      if (word == "false") return {Tok::False, word, 0, line, col};
      if (word == "G") return {Tok::G, word, 0, line, col};
      if (word == "F") return {Tok::F, word, 0, line, col};
      if (word == "X") return {Tok::X, word, 0, line, col};
      if (word == "U") return {Tok::U, word, 0, line, col};
      if (word == "W") {
        if (pos_ < text_.size() && text_[pos_] == '[') {
          advance(1);
          int k = 0;
          bool digits = false;
          while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            k = k * 10 + (text_[pos_] - '0');
            digits = true;
            advance(1);
          }
          if (!digits || pos_ >= text_.size() || text_[pos_] != ']')
            throw ParseError(line_, col_, "malformed W[k] bound");
          advance(1);
          return {Tok::Wk, word, k, line, col};
        }
        return {Tok::W, word, 0, line, col};
      }
      return {Tok::Name, word, 0, line, col};
    }
    throw ParseError(line, col, std::string("unexpected character '") + c + "'");
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {  // comment to end of input (callers lex single lines)
        pos_ = text_.size();
        return;
      }
      if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance(1);
      } else {
        return;
      }
    }
  }
  char peek(size_t d) const { return pos_ + d < text_.size() ? text_[pos_ + d] : '\0'; }
  void advance(size_t n) { pos_ += n, col_ += static_cast<int>(n); }

  std::string_view text_;
  size_t pos_ = 0;
  int line_, col_;
};

// Splits a trailing _i / _j / _<digits> index suffix off an atom name.
AtomSig atom_sig_of(const std::string& word) {
  auto us = word.rfind('_');
  if (us != std::string::npos && us > 0 && us + 1 < word.size()) {
    std::string tail = word.substr(us + 1);
    if (tail == "i") return {word.substr(0, us), Index::var_i()};
    if (tail == "j") return {word.substr(0, us), Index::var_j()};
    if (std::all_of(tail.begin(), tail.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      return {word.substr(0, us), Index::concrete(std::stoi(tail))};
  }
  return {word, Index::global()};
}

class Parser {
 public:
  Parser(std::string_view text, int line0, int col0) : lex_(text, line0, col0) { shift(); }

  Fml parse() {
    Fml f = parse_iff();
    if (cur_.kind != Tok::End) throw ParseError(cur_.line, cur_.col, "unexpected trailing '" + cur_.text + "'");
    return f;
  }

 private:
  void shift() { cur_ = lex_.next(); }

  Fml parse_iff() {  // right-assoc
    Fml lhs = parse_implies();
    if (cur_.kind == Tok::Iff) {
      shift();
      return f_iff(lhs, parse_iff());
    }
    return lhs;
  }

  Fml parse_implies() {
    Fml lhs = parse_or();
    if (cur_.kind == Tok::Implies) {
      shift();
      return f_implies(lhs, parse_implies());
    }
    return lhs;
  }

  Fml parse_or() {
    Fml lhs = parse_and();
    while (cur_.kind == Tok::Or) {
      shift();
      lhs = f_or(lhs, parse_and());
    }
    return lhs;
  }

  Fml parse_and() {
    Fml lhs = parse_temporal();
    while (cur_.kind == Tok::And) {
      shift();
      lhs = f_and(lhs, parse_temporal());
    }
    return lhs;
  }

  Fml parse_temporal() {  // U / W / W[k], right-assoc
    Fml lhs = parse_unary();
    if (cur_.kind == Tok::U) {
      shift();
      return f_until(lhs, parse_temporal());
    }
    if (cur_.kind == Tok::W) {
      shift();
      return f_wuntil(lhs, parse_temporal());
    }
    if (cur_.kind == Tok::Wk) {
      int k = cur_.k;
      shift();
      return f_wuntil_k(lhs, parse_temporal(), k);
    }
    return lhs;
  }

  Fml parse_unary() {
    switch (cur_.kind) {
      case Tok::Not: shift(); return f_not(parse_unary());
      case Tok::G: shift(); return f_globally(parse_unary());
      case Tok::F: shift(); return f_eventually(parse_unary());
      case Tok::X: shift(); return f_next(parse_unary());
      default: return parse_primary();
    }
  }

  Fml parse_primary() {
    switch (cur_.kind) {
      case Tok::True: shift(); return f_true();
      case Tok::False: shift(); return f_false();
      case Tok::Name: {
        AtomSig sig = atom_sig_of(cur_.text);
        shift();
        return f_atom(sig);
      }
      case Tok::LParen: {
        shift();
        Fml f = parse_iff();
        if (cur_.kind != Tok::RParen) throw ParseError(cur_.line, cur_.col, "expected ')'");
        shift();
        return f;
      }
      default: throw ParseError(cur_.line, cur_.col, "expected a formula, got '" + cur_.text + "'");
    }
  }

  Lexer lex_;
  Token cur_{Tok::End, "", 0, 0, 0};
};

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) out.push_back(part);
  return out;
}

void parse_name_list(const std::string& text, int line, std::vector<std::string>* out) {
  for (const auto& raw : split(text, ',')) {
    std::string name = trim(raw);
    if (name.empty()) continue;
    for (char c : name)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        throw ParseError(line, 1, "bad signal name '" + name + "'");
    out->push_back(name);
  }
}

// "local: a, b; global: c" (either part optional); a bare list means local.
void parse_signal_sections(const std::string& rest, int line, std::vector<std::string>* local,
                           std::vector<std::string>* global) {
  for (const auto& raw : split(rest, ';')) {
    std::string part = trim(raw);
    if (part.empty()) continue;
    auto colon = part.find(':');
    if (colon == std::string::npos) {
      parse_name_list(part, line, local);
      continue;
    }
    std::string tag = trim(part.substr(0, colon));
    std::string names = part.substr(colon + 1);
    if (tag == "local") parse_name_list(names, line, local);
    else if (tag == "global") parse_name_list(names, line, global);
    else throw ParseError(line, 1, "expected 'local:' or 'global:', got '" + tag + "'");
  }
}

// Optional "name:" label ahead of a formula.
bool take_label(std::string& text, std::string* label) {
  size_t i = 0;
  while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_' || text[i] == '.'))
    ++i;
  if (i == 0 || i >= text.size()) return false;
  size_t j = i;
  while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
  if (j >= text.size() || text[j] != ':') return false;
  *label = text.substr(0, i);
  text = text.substr(j + 1);
  return true;
}

}  // namespace

Fml parse_formula(std::string_view text, int line0, int col0) {
  return Parser(text, line0, col0).parse();
}

ParamSpec parse_spec(std::string_view text) {
  ParamSpec spec;
  bool saw_inputs = false, saw_outputs = false;
  int assume_auto = 0, gua_auto = 0;

  std::stringstream ss{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(ss, raw)) {
    ++lineno;
    std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (line[0] != '[') throw ParseError(lineno, 1, "expected a [SECTION] line");
    auto close = line.find(']');
    if (close == std::string::npos) throw ParseError(lineno, 1, "unterminated section tag");
    std::string tag = line.substr(1, close - 1);
    std::string rest = trim(line.substr(close + 1));

    if (tag == "ROLE") {
      if (rest == "generic-process") spec.role = Role::GenericProcess;
      else if (rest == "zero-process") spec.role = Role::ZeroProcess;
      else if (rest == "monolithic-after-hub") spec.role = Role::MonolithicAfterHub;
      else throw ParseError(lineno, 1, "unknown role '" + rest + "'");
    } else if (tag == "INPUTS") {
      saw_inputs = true;
      parse_signal_sections(rest, lineno, &spec.inputs_local, &spec.inputs_global);
    } else if (tag == "OUTPUTS") {
      saw_outputs = true;
      parse_signal_sections(rest, lineno, &spec.outputs, &spec.outputs_global);
    } else if (tag == "ASSUME" || tag == "GUARANTEE") {
      std::string label;
      if (!take_label(rest, &label))
        label = (tag == "ASSUME" ? "A" + std::to_string(++assume_auto) : "G" + std::to_string(++gua_auto));
      Fml f = parse_formula(rest, lineno, static_cast<int>(close + 2));
      if (tag == "ASSUME") spec.assumptions.push_back({label, f});
      else spec.guarantees.push_back({label, f});
    } else {
      throw ParseError(lineno, 1, "unknown section [" + tag + "]");
    }
  }
  if (!saw_outputs) throw Error(Errc::MissingSection, "spec has no [OUTPUTS] section");
  if (!saw_inputs && spec.inputs_local.empty() && spec.inputs_global.empty()) {
    // tolerated: closed specs have no inputs
  }
  validate_spec(spec);
  return spec;
}

ParamSpec parse_spec_file(const std::string& path) {
  return parse_spec(read_file(path));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::Io, "cannot write " + path);
  out << contents;
}

}  // namespace ringsynth
