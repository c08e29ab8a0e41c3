#include "comparo/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <unordered_set>

#include "comparo/errors.hpp"

namespace comparo {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::make(Kind k, std::string name, const Formula* a, const Formula* b) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  std::size_t h = mix(0, static_cast<std::size_t>(k));
  if (k == Kind::Atom) h = mix(h, std::hash<std::string>{}(name));
  if (a) {
    n->lhs = std::make_shared<const Formula>(*a);
    h = mix(h, a->node_->hash);
  }
  if (b) {
    n->rhs = std::make_shared<const Formula>(*b);
    h = mix(h, b->node_->hash);
  }
  n->name = std::move(name);
  n->hash = h;
  return Formula(std::move(n));
}

Formula Formula::atom(std::string name) { return make(Kind::Atom, std::move(name), nullptr, nullptr); }

Formula Formula::top() {
  static const Formula t = make(Kind::Top, {}, nullptr, nullptr);
  return t;
}

Formula Formula::bot() {
  static const Formula f = make(Kind::Bot, {}, nullptr, nullptr);
  return f;
}

Formula Formula::neg(Formula f) { return make(Kind::Not, {}, &f, nullptr); }
Formula Formula::conj(Formula a, Formula b) { return make(Kind::And, {}, &a, &b); }
Formula Formula::geq(Formula a, Formula b) { return make(Kind::Geq, {}, &a, &b); }

Formula Formula::disj(Formula a, Formula b) { return neg(conj(neg(std::move(a)), neg(std::move(b)))); }
Formula Formula::implies(Formula a, Formula b) { return neg(conj(std::move(a), neg(std::move(b)))); }
Formula Formula::iff(Formula a, Formula b) { return conj(implies(a, b), implies(b, a)); }

namespace {

Formula balanced(const std::vector<Formula>& fs, std::size_t lo, std::size_t hi, bool conjunction) {
  if (hi - lo == 1) return fs[lo];
  std::size_t mid = lo + (hi - lo) / 2;
  Formula a = balanced(fs, lo, mid, conjunction);
  Formula b = balanced(fs, mid, hi, conjunction);
  return conjunction ? Formula::conj(std::move(a), std::move(b)) : Formula::disj(std::move(a), std::move(b));
}

}  // namespace

Formula Formula::conj_all(const std::vector<Formula>& fs) {
  return fs.empty() ? top() : balanced(fs, 0, fs.size(), true);
}

Formula Formula::disj_all(const std::vector<Formula>& fs) {
  return fs.empty() ? bot() : balanced(fs, 0, fs.size(), false);
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.hash != y.hash || x.kind != y.kind) return false;
  switch (x.kind) {
    case Formula::Kind::Atom:
      return x.name == y.name;
    case Formula::Kind::Top:
    case Formula::Kind::Bot:
      return true;
    case Formula::Kind::Not:
      return *x.lhs == *y.lhs;
    case Formula::Kind::And:
    case Formula::Kind::Geq:
      return *x.lhs == *y.lhs && *x.rhs == *y.rhs;
  }
  return false;
}

bool operator<(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return false;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind) return x.kind < y.kind;
  switch (x.kind) {
    case Formula::Kind::Atom:
      return x.name < y.name;
    case Formula::Kind::Top:
    case Formula::Kind::Bot:
      return false;
    case Formula::Kind::Not:
      return *x.lhs < *y.lhs;
    case Formula::Kind::And:
    case Formula::Kind::Geq:
      if (*x.lhs < *y.lhs) return true;
      if (*y.lhs < *x.lhs) return false;
      return *x.rhs < *y.rhs;
  }
  return false;
}

std::size_t modal_depth(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::Top:
    case Formula::Kind::Bot:
      return 0;
    case Formula::Kind::Not:
      return modal_depth(f.lhs());
    case Formula::Kind::And:
      return std::max(modal_depth(f.lhs()), modal_depth(f.rhs()));
    case Formula::Kind::Geq:
      return std::max(modal_depth(f.lhs()), modal_depth(f.rhs())) + 1;
  }
  return 0;
}

std::size_t length(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::Top:
    case Formula::Kind::Bot:
      return 1;
    case Formula::Kind::Not:
      return 1 + length(f.lhs());
    case Formula::Kind::And:
    case Formula::Kind::Geq:
      return 3 + length(f.lhs()) + length(f.rhs());
  }
  return 0;
}

std::size_t comparison_count(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Not:
      return comparison_count(f.lhs());
    case Formula::Kind::And:
      return comparison_count(f.lhs()) + comparison_count(f.rhs());
    case Formula::Kind::Geq:
      return 1 + comparison_count(f.lhs()) + comparison_count(f.rhs());
    default:
      return 0;
  }
}

namespace {

// Shared subterms are visited once.
void collect_atoms(const Formula& f, std::set<std::string>& out, std::unordered_set<const void*>& seen) {
  if (!seen.insert(f.id()).second) return;
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out.insert(f.name());
      break;
    case Formula::Kind::Not:
      collect_atoms(f.lhs(), out, seen);
      break;
    case Formula::Kind::And:
    case Formula::Kind::Geq:
      collect_atoms(f.lhs(), out, seen);
      collect_atoms(f.rhs(), out, seen);
      break;
    default:
      break;
  }
}

}  // namespace

std::set<std::string> atoms(const Formula& f) {
  std::set<std::string> out;
  std::unordered_set<const void*> seen;
  collect_atoms(f, out, seen);
  return out;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

struct Symbols {
  const char* neg;
  const char* conj;
  const char* disj;
  const char* imp;
  const char* iff;
  const char* geq;
  const char* top;
  const char* bot;
};

constexpr Symbols kAscii{"~", " & ", " | ", " -> ", " <-> ", " >= ", "T", "F"};
constexpr Symbols kUnicode{"¬", " ∧ ", " ∨ ", " → ", " ↔ ", " ≿ ", "⊤", "⊥"};

// ~(a & ~b) -> (a, b)
bool match_implies(const Formula& f, const Formula*& a, const Formula*& b) {
  if (!f.is(Formula::Kind::Not) || !f.lhs().is(Formula::Kind::And)) return false;
  const Formula& c = f.lhs();
  if (!c.rhs().is(Formula::Kind::Not)) return false;
  a = &c.lhs();
  b = &c.rhs().lhs();
  return true;
}

// ~(~a & ~b) -> (a, b)
bool match_or(const Formula& f, const Formula*& a, const Formula*& b) {
  if (!f.is(Formula::Kind::Not) || !f.lhs().is(Formula::Kind::And)) return false;
  const Formula& c = f.lhs();
  if (!c.lhs().is(Formula::Kind::Not) || !c.rhs().is(Formula::Kind::Not)) return false;
  a = &c.lhs().lhs();
  b = &c.rhs().lhs();
  return true;
}

bool match_iff(const Formula& f, const Formula*& a, const Formula*& b) {
  if (!f.is(Formula::Kind::And)) return false;
  const Formula *a1, *b1, *a2, *b2;
  if (!match_implies(f.lhs(), a1, b1) || !match_implies(f.rhs(), a2, b2)) return false;
  // The disjunction pattern would claim these, and must keep doing so.
  const Formula *x, *y;
  if (match_or(f.lhs(), x, y) || match_or(f.rhs(), x, y)) return false;
  if (!(*a1 == *b2 && *b1 == *a2)) return false;
  a = a1;
  b = b1;
  return true;
}

void render_to(const Formula& f, const Symbols& s, std::string& out) {
  const Formula *a, *b;
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out += f.name();
      return;
    case Formula::Kind::Top:
      out += s.top;
      return;
    case Formula::Kind::Bot:
      out += s.bot;
      return;
    case Formula::Kind::Not:
      if (match_or(f, a, b)) {
        out += '(';
        render_to(*a, s, out);
        out += s.disj;
        render_to(*b, s, out);
        out += ')';
      } else if (match_implies(f, a, b)) {
        out += '(';
        render_to(*a, s, out);
        out += s.imp;
        render_to(*b, s, out);
        out += ')';
      } else {
        out += s.neg;
        render_to(f.lhs(), s, out);
      }
      return;
    case Formula::Kind::And:
      out += '(';
      if (match_iff(f, a, b)) {
        render_to(*a, s, out);
        out += s.iff;
        render_to(*b, s, out);
      } else {
        render_to(f.lhs(), s, out);
        out += s.conj;
        render_to(f.rhs(), s, out);
      }
      out += ')';
      return;
    case Formula::Kind::Geq:
      out += '(';
      render_to(f.lhs(), s, out);
      out += s.geq;
      render_to(f.rhs(), s, out);
      out += ')';
      return;
  }
}

}  // namespace

std::string render(const Formula& f, bool unicode) {
  std::string out;
  render_to(f, unicode ? kUnicode : kAscii, out);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

ParseError::ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected,
                       const std::string& found)
    : Error([&] {
        std::string msg = "syntax error at " + std::to_string(line) + ":" + std::to_string(column) +
                          ": found " + found + ", expected one of:";
        for (const auto& e : expected) msg += " " + e;
        return msg;
      }()),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

namespace {

enum class Tok { Atom, Top, Bot, Not, And, Or, Imp, Iff, Geq, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string describe(const Token& t) {
  return t.kind == Tok::End ? std::string("end of input") : "'" + t.text + "'";
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    std::size_t l = line, cl = col;
    auto emit = [&](Tok k, std::size_t n) {
      out.push_back({k, std::string(text.substr(i, n)), l, cl});
      advance(n);
    };
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      std::string word(text.substr(i, j - i));
      if (std::islower(static_cast<unsigned char>(c))) {
        emit(Tok::Atom, j - i);
      } else if (word == "T") {
        emit(Tok::Top, 1);
      } else if (word == "F") {
        emit(Tok::Bot, 1);
      } else {
        throw ParseError(l, cl, {"atom", "T", "F", "'~'", "'('"}, "'" + word + "'");
      }
      continue;
    }
    if (text.substr(i, 3) == "<->") {
      emit(Tok::Iff, 3);
    } else if (text.substr(i, 2) == "->") {
      emit(Tok::Imp, 2);
    } else if (text.substr(i, 2) == ">=") {
      emit(Tok::Geq, 2);
    } else if (c == '~') {
      emit(Tok::Not, 1);
    } else if (c == '&') {
      emit(Tok::And, 1);
    } else if (c == '|') {
      emit(Tok::Or, 1);
    } else if (c == '(') {
      emit(Tok::LParen, 1);
    } else if (c == ')') {
      emit(Tok::RParen, 1);
    } else {
      throw ParseError(l, cl, {"atom", "T", "F", "'~'", "'('", "operator"},
                       "'" + std::string(1, c) + "'");
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula parse_all() {
    Formula f = comparison();
    expect_end({"'&'", "'|'", "'->'", "'<->'", "'>='", "end of input"});
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    throw ParseError(t.line, t.column, std::move(expected), describe(t));
  }

  void expect_end(std::vector<std::string> expected) const {
    if (peek().kind != Tok::End) fail(std::move(expected));
  }

  // comparison := implication [ '>=' implication ]   (non-associative)
  Formula comparison() {
    Formula lhs = implication();
    if (peek().kind == Tok::Geq) {
      ++pos_;
      Formula rhs = implication();
      if (peek().kind == Tok::Geq) fail({"')'", "end of input"});
      return Formula::geq(std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  // implication := disjunction [ ('->' | '<->') implication ]
  Formula implication() {
    Formula lhs = disjunction();
    if (peek().kind == Tok::Imp) {
      ++pos_;
      return Formula::implies(std::move(lhs), implication());
    }
    if (peek().kind == Tok::Iff) {
      ++pos_;
      return Formula::iff(std::move(lhs), implication());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (peek().kind == Tok::Or) {
      ++pos_;
      f = Formula::disj(std::move(f), conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (peek().kind == Tok::And) {
      ++pos_;
      f = Formula::conj(std::move(f), unary());
    }
    return f;
  }

  Formula unary() {
    if (peek().kind == Tok::Not) {
      ++pos_;
      return Formula::neg(unary());
    }
    return primary();
  }

  Formula primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Atom:
        ++pos_;
        return Formula::atom(t.text);
      case Tok::Top:
        ++pos_;
        return Formula::top();
      case Tok::Bot:
        ++pos_;
        return Formula::bot();
      case Tok::LParen: {
        ++pos_;
        Formula f = comparison();
        if (peek().kind != Tok::RParen) fail({"')'", "'&'", "'|'", "'->'", "'<->'", "'>='"});
        ++pos_;
        return f;
      }
      default:
        fail({"atom", "T", "F", "'~'", "'('"});
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse(std::string_view text) { return Parser(lex(text)).parse_all(); }

// ---------------------------------------------------------------------------
// Depth reduction and normal forms

Formula substitute(const Formula& f, const Formula& target, const Formula& replacement) {
  if (f == target) return replacement;
  switch (f.kind()) {
    case Formula::Kind::Not:
      return Formula::neg(substitute(f.lhs(), target, replacement));
    case Formula::Kind::And:
      return Formula::conj(substitute(f.lhs(), target, replacement), substitute(f.rhs(), target, replacement));
    case Formula::Kind::Geq:
      return Formula::geq(substitute(f.lhs(), target, replacement), substitute(f.rhs(), target, replacement));
    default:
      return f;
  }
}

namespace {

// Leftmost comparison between depth-0 operands that sits inside another
// comparison.
const Formula* find_nested(const Formula& f, bool in_scope) {
  switch (f.kind()) {
    case Formula::Kind::Not:
      return find_nested(f.lhs(), in_scope);
    case Formula::Kind::And:
      if (auto* g = find_nested(f.lhs(), in_scope)) return g;
      return find_nested(f.rhs(), in_scope);
    case Formula::Kind::Geq:
      if (in_scope && modal_depth(f.lhs()) == 0 && modal_depth(f.rhs()) == 0) return &f;
      if (auto* g = find_nested(f.lhs(), true)) return g;
      return find_nested(f.rhs(), true);
    default:
      return nullptr;
  }
}

void flatten_into(const Formula& f, std::vector<Formula>& out) {
  const Formula* nested = find_nested(f, false);
  if (!nested) {
    out.push_back(f);
    return;
  }
  const Formula gamma = *nested;
  flatten_into(Formula::conj(substitute(f, gamma, Formula::top()), gamma), out);
  flatten_into(Formula::conj(substitute(f, gamma, Formula::bot()), Formula::neg(gamma)), out);
}

}  // namespace

std::vector<Formula> flatten_depth_disjuncts(const Formula& f) {
  std::vector<Formula> out;
  flatten_into(f, out);
  return out;
}

Formula flatten_depth(const Formula& f) {
  auto ds = flatten_depth_disjuncts(f);
  return ds.size() == 1 ? ds.front() : Formula::disj_all(ds);
}

Formula GuardedDisjunct::to_formula() const {
  std::vector<Formula> parts;
  for (const auto& [a, b] : negatives) parts.push_back(Formula::neg(Formula::geq(a, b)));
  for (const auto& [a, b] : positives) parts.push_back(Formula::geq(a, b));
  if (!propositional.is(Formula::Kind::Top) || parts.empty()) parts.push_back(propositional);
  return Formula::conj_all(parts);
}

namespace {

struct Conjunct {
  std::map<std::string, bool> letters;
  std::map<Formula, bool> comparisons;
};

// Merge b into a; false when a literal clashes.
bool merge(Conjunct& a, const Conjunct& b) {
  for (const auto& [k, v] : b.letters) {
    auto [it, fresh] = a.letters.emplace(k, v);
    if (!fresh && it->second != v) return false;
  }
  for (const auto& [k, v] : b.comparisons) {
    auto [it, fresh] = a.comparisons.emplace(k, v);
    if (!fresh && it->second != v) return false;
  }
  return true;
}

class DnfBuilder {
 public:
  explicit DnfBuilder(std::size_t cap) : cap_(cap) {}

  std::vector<Conjunct> run(const Formula& f, bool positive) {
    switch (f.kind()) {
      case Formula::Kind::Atom: {
        Conjunct c;
        c.letters.emplace(f.name(), positive);
        return {c};
      }
      case Formula::Kind::Top:
        return positive ? std::vector<Conjunct>{Conjunct{}} : std::vector<Conjunct>{};
      case Formula::Kind::Bot:
        return positive ? std::vector<Conjunct>{} : std::vector<Conjunct>{Conjunct{}};
      case Formula::Kind::Not:
        return run(f.lhs(), !positive);
      case Formula::Kind::Geq: {
        Conjunct c;
        c.comparisons.emplace(f, positive);
        return {c};
      }
      case Formula::Kind::And: {
        auto a = run(f.lhs(), positive);
        auto b = run(f.rhs(), positive);
        if (!positive) {
          a.insert(a.end(), b.begin(), b.end());
          check(a.size());
          return a;
        }
        std::vector<Conjunct> out;
        for (const auto& x : a) {
          for (const auto& y : b) {
            Conjunct c = x;
            if (merge(c, y)) out.push_back(std::move(c));
            check(out.size());
          }
        }
        return out;
      }
    }
    return {};
  }

 private:
  void check(std::size_t n) const {
    if (n > cap_) throw CapacityError("guarded normal form exceeds " + std::to_string(cap_) + " disjuncts");
  }
  std::size_t cap_;
};

}  // namespace

std::vector<GuardedDisjunct> to_guarded_dnf(const Formula& f, std::size_t max_disjuncts) {
  std::vector<GuardedDisjunct> out;
  std::set<std::string> seen;
  DnfBuilder builder(max_disjuncts);
  for (const Formula& flat : flatten_depth_disjuncts(f)) {
    for (auto& c : builder.run(flat, true)) {
      GuardedDisjunct d;
      for (const auto& [cmp, positive] : c.comparisons) {
        (positive ? d.positives : d.negatives).emplace_back(cmp.lhs(), cmp.rhs());
      }
      std::vector<Formula> lits;
      for (const auto& [name, positive] : c.letters) {
        d.literals.emplace_back(name, positive);
        lits.push_back(positive ? Formula::atom(name) : Formula::neg(Formula::atom(name)));
      }
      d.propositional = Formula::conj_all(lits);
      if (!seen.insert(render(d.to_formula())).second) continue;
      out.push_back(std::move(d));
      if (out.size() > max_disjuncts) {
        throw CapacityError("guarded normal form exceeds " + std::to_string(max_disjuncts) + " disjuncts");
      }
    }
  }
  return out;
}

Formula build_equinumerosity(const std::vector<Formula>& phis, const std::vector<Formula>& psis) {
  if (phis.size() != psis.size()) {
    throw Error("equinumerosity needs lists of equal length, got " + std::to_string(phis.size()) + " and " +
                std::to_string(psis.size()));
  }
  if (phis.empty()) throw Error("equinumerosity needs nonempty lists");
  const std::size_t n = phis.size();
  if (n > kMaxEquinumerosityArity) {
    throw CapacityError("equinumerosity arity " + std::to_string(n) + " exceeds " +
                        std::to_string(kMaxEquinumerosityArity));
  }
  for (const auto* list : {&phis, &psis}) {
    for (const auto& g : *list) {
      if (modal_depth(g) != 0) throw Error("equinumerosity member has modal depth > 0: " + render(g));
    }
  }

  // C_k = (exactly k of the phis) & (exactly k of the psis); each side is a
  // disjunction over the k-subsets, with negations shared.
  std::vector<std::vector<unsigned>> by_size(n + 1);
  for (unsigned mask = 0; mask < (1u << n); ++mask) by_size[std::popcount(mask)].push_back(mask);

  auto exactly = [&](const std::vector<Formula>& fs, std::size_t k) {
    std::vector<Formula> negs;
    for (const auto& g : fs) negs.push_back(Formula::neg(g));
    std::vector<Formula> terms;
    for (unsigned mask : by_size[k]) {
      std::vector<Formula> lits;
      for (std::size_t i = 0; i < n; ++i) lits.push_back((mask >> i) & 1u ? fs[i] : negs[i]);
      terms.push_back(Formula::conj_all(lits));
    }
    return Formula::disj_all(terms);
  };

  std::vector<Formula> cks;
  for (std::size_t k = 0; k <= n; ++k) cks.push_back(Formula::conj(exactly(phis, k), exactly(psis, k)));
  return Formula::disj_all(cks);
}

}  // namespace comparo
