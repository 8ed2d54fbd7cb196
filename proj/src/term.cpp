#include "propkit/term.hpp"

#include <sstream>

#include "propkit/error.hpp"

namespace propkit {

Term Term::id(std::string color) {
  Term t;
  t.kind = Kind::Id;
  t.name = std::move(color);
  return t;
}

Term Term::gen(std::string name) {
  Term t;
  t.kind = Kind::Gen;
  t.name = std::move(name);
  return t;
}

Term Term::unit() { return Term{}; }

Term Term::vcomp(Term f, Term g) {
  Term t;
  t.kind = Kind::VComp;
  t.children = {std::move(f), std::move(g)};
  return t;
}

Term Term::hcomp(Term f, Term g) {
  Term t;
  t.kind = Kind::HComp;
  t.children = {std::move(f), std::move(g)};
  return t;
}

Term Term::act(Perm sigma, Perm tau, Term inner) {
  Term t;
  t.kind = Kind::Act;
  t.sigma = std::move(sigma);
  t.tau = std::move(tau);
  t.children = {std::move(inner)};
  return t;
}

Term Term::hchain(std::vector<Term> ts) {
  if (ts.empty()) return unit();
  Term out = std::move(ts.front());
  for (size_t i = 1; i < ts.size(); ++i) out = hcomp(std::move(out), std::move(ts[i]));
  return out;
}

std::string Term::to_string() const {
  switch (kind) {
    case Kind::Id:
      return "id(" + name + ")";
    case Kind::Gen:
      return "gen(" + name + ")";
    case Kind::Unit:
      return "unit";
    case Kind::VComp:
      return "vcomp(" + children[0].to_string() + "," + children[1].to_string() + ")";
    case Kind::HComp:
      return "hcomp(" + children[0].to_string() + "," + children[1].to_string() + ")";
    case Kind::Act:
      return "act(" + sigma.to_string() + "," + tau.to_string() + "," +
             children[0].to_string() + ")";
  }
  return "";
}

namespace {

class Parser {
public:
  explicit Parser(const std::string& text) : text_(text) {}

  Term parse() {
    Term t = term();
    skip_ws();
    require(pos_ == text_.size(),
            "term parse error at offset " + std::to_string(pos_) + ": trailing input");
    return t;
  }

private:
  void skip_ws() {
    while (pos_ < text_.size() && isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void error(const std::string& what) {
    fail("term parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  void expect(char ch) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != ch)
      error(std::string("expected '") + ch + "'");
    ++pos_;
  }

  std::string word() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() &&
           (isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
            text_[pos_] == '@' || text_[pos_] == '.' || text_[pos_] == '\'' ||
            text_[pos_] == '|'))
      ++pos_;
    if (start == pos_) error("expected a name");
    return text_.substr(start, pos_ - start);
  }

  Perm perm() {
    skip_ws();
    expect('(');
    std::vector<int> images;
    skip_ws();
    while (pos_ < text_.size() && text_[pos_] != ')') {
      size_t start = pos_;
      while (pos_ < text_.size() && isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) error("expected a permutation image");
      images.push_back(std::stoi(text_.substr(start, pos_ - start)));
      skip_ws();
    }
    expect(')');
    return Perm::from_one_line(images);
  }

  Term term() {
    std::string head = word();
    if (head == "unit") return Term::unit();
    if (head == "id") {
      expect('(');
      Term t = Term::id(word());
      expect(')');
      return t;
    }
    if (head == "gen") {
      expect('(');
      Term t = Term::gen(word());
      expect(')');
      return t;
    }
    if (head == "vcomp" || head == "hcomp") {
      expect('(');
      Term a = term();
      expect(',');
      Term b = term();
      expect(')');
      return head == "vcomp" ? Term::vcomp(std::move(a), std::move(b))
                             : Term::hcomp(std::move(a), std::move(b));
    }
    if (head == "act") {
      expect('(');
      Perm sigma = perm();
      expect(',');
      Perm tau = perm();
      expect(',');
      Term inner = term();
      expect(')');
      return Term::act(std::move(sigma), std::move(tau), std::move(inner));
    }
    error("unknown term head '" + head + "'");
  }

  const std::string& text_;
  size_t pos_ = 0;
};

}  // namespace

Term Term::parse(const std::string& text) { return Parser(text).parse(); }

Term Term::rename(
    const std::function<std::string(const std::string&)>& gen_name,
    const std::function<std::string(const std::string&)>& color_name) const {
  Term out = *this;
  if (kind == Kind::Id) out.name = color_name(name);
  if (kind == Kind::Gen) out.name = gen_name(name);
  for (size_t i = 0; i < children.size(); ++i)
    out.children[i] = children[i].rename(gen_name, color_name);
  return out;
}

Morphism eval_term(const Term& t, const Prop& target,
                   const std::function<Color(const std::string&)>& color_of,
                   const std::function<Morphism(const std::string&)>& gen_of) {
  switch (t.kind) {
    case Term::Kind::Id:
      return target.identity(color_of(t.name));
    case Term::Kind::Gen:
      return gen_of(t.name);
    case Term::Kind::Unit:
      return target.unit();
    case Term::Kind::VComp: {
      Morphism f = eval_term(t.children[0], target, color_of, gen_of);
      Morphism g = eval_term(t.children[1], target, color_of, gen_of);
      require(g.target() == f.source(),
              "profile mismatch in " + t.to_string() + ": upper expects " +
                  f.source().to_string() + " but lower produces " +
                  g.target().to_string());
      return target.compose_v(f, g);
    }
    case Term::Kind::HComp: {
      Morphism f = eval_term(t.children[0], target, color_of, gen_of);
      Morphism g = eval_term(t.children[1], target, color_of, gen_of);
      return target.compose_h(f, g);
    }
    case Term::Kind::Act: {
      Morphism f = eval_term(t.children[0], target, color_of, gen_of);
      require(t.sigma.degree() == f.source().size() &&
                  t.tau.degree() == f.target().size(),
              "action degree mismatch in " + t.to_string());
      return target.act(t.sigma, t.tau, f);
    }
  }
  fail("unreachable term kind");
}

}  // namespace propkit
