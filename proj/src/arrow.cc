#include "cartcoh/arrow.h"

#include <mutex>
#include <optional>
#include <string>
#include <utility>

#include "cartcoh/graph.h"

namespace cartcoh {

std::string to_string(const ArrowType& type) {
  return to_string(type.domain) + " -> " + to_string(type.codomain);
}

struct Arrow::Node {
  Kind kind;
  // identity/bang: a; projections: a, b.
  std::optional<Object> a, b;
  std::vector<Arrow> children;
  Object domain = Object::terminal();
  Object codomain = Object::terminal();
  bool has_pair = false;
  bool has_bang = false;
  bool has_terminal = false;
  std::size_t size = 1;

  bool well_typed = true;
  Measure gamma = 3;
  bool pairing_under_composition = false;
  std::size_t beta_inside = 0;
  bool structural_redex = false;
  bool atomizing_candidate = false;

  mutable std::once_flag graph_once;
  mutable std::shared_ptr<const Graph> graph;
};

namespace {

bool is_atomizing_candidate(const Arrow& t, bool parent_is_compose) {
  if (t.codomain().is_terminal() && !t.is(Arrow::Kind::kBang)) return true;
  return !parent_is_compose && !t.contains_pair() && t.codomain().is_product();
}

bool has_local_redex(const std::vector<Arrow>& fs) {
  for (std::size_t k = 0; k < fs.size(); ++k) {
    if (fs[k].is(Arrow::Kind::kIdentity)) return true;
    if (k > 0 && fs[k].is(Arrow::Kind::kPair)) return true;
    if (k > 0 && fs[k].is_projection() && fs[k - 1].is(Arrow::Kind::kPair)) {
      return true;
    }
  }
  return false;
}

}  // namespace

void Arrow::summarize(Node& node) {
  const bool compose = node.kind == Kind::kCompose;
  node.gamma = 1;
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    const Arrow& c = node.children[i];
    const Node& n = *c.node_;
    node.well_typed = node.well_typed && n.well_typed;
    if (compose) {
      node.gamma *= n.gamma;
      if (i > 0 && !(node.children[i - 1].codomain() == c.domain())) {
        node.well_typed = false;
      }
    } else {
      node.gamma += n.gamma;
      if (i > 0 && !(node.children[0].domain() == c.domain())) {
        node.well_typed = false;
      }
    }
    node.pairing_under_composition =
        node.pairing_under_composition || n.pairing_under_composition;
    if (n.has_pair) {
      node.beta_inside += n.beta_inside;
    } else if (!compose) {
      node.beta_inside += c.codomain().symbol_length();
    }
    node.structural_redex = node.structural_redex || n.structural_redex;
    node.atomizing_candidate = node.atomizing_candidate ||
                               n.atomizing_candidate ||
                               is_atomizing_candidate(c, compose);
  }
  if (compose) {
    node.pairing_under_composition = node.has_pair;
    node.structural_redex = node.structural_redex || has_local_redex(node.children);
  }
}

std::shared_ptr<Arrow::Node> Arrow::make_node(Kind kind) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  return node;
}

Arrow Arrow::identity(Object a) {
  auto node = make_node(Kind::kIdentity);
  node->domain = a;
  node->codomain = a;
  node->has_terminal = a.contains_terminal();
  node->a = std::move(a);
  return Arrow(std::move(node));
}

Arrow Arrow::proj1(Object a, Object b) {
  auto node = make_node(Kind::kProj1);
  node->domain = Object::product(a, b);
  node->codomain = a;
  node->has_terminal = node->domain.contains_terminal();
  node->a = std::move(a);
  node->b = std::move(b);
  return Arrow(std::move(node));
}

Arrow Arrow::proj2(Object a, Object b) {
  auto node = make_node(Kind::kProj2);
  node->domain = Object::product(a, b);
  node->codomain = b;
  node->has_terminal = node->domain.contains_terminal();
  node->a = std::move(a);
  node->b = std::move(b);
  return Arrow(std::move(node));
}

Arrow Arrow::bang(Object a) {
  auto node = make_node(Kind::kBang);
  node->domain = a;
  node->codomain = Object::terminal();
  node->gamma = 2;
  node->has_bang = true;
  node->has_terminal = true;
  node->a = std::move(a);
  return Arrow(std::move(node));
}

Arrow Arrow::pair(Arrow first, Arrow second) {
  auto node = make_node(Kind::kPair);
  node->domain = first.domain();
  node->codomain = Object::product(first.codomain(), second.codomain());
  node->has_pair = true;
  node->has_bang = first.contains_bang() || second.contains_bang();
  node->has_terminal = first.contains_terminal() || second.contains_terminal();
  node->size = 1 + first.size() + second.size();
  node->children = {std::move(first), std::move(second)};
  summarize(*node);
  return Arrow(std::move(node));
}

Arrow Arrow::compose(std::vector<Arrow> factors) {
  if (factors.empty()) {
    throw Error(Errc::kInvalidArgument, "composition of zero factors");
  }
  bool nested = false;
  for (const Arrow& f : factors) nested = nested || f.is(Kind::kCompose);
  if (nested) {
    std::vector<Arrow> flat;
    for (Arrow& f : factors) {
      if (f.is(Kind::kCompose)) {
        flat.insert(flat.end(), f.factors().begin(), f.factors().end());
      } else {
        flat.push_back(std::move(f));
      }
    }
    factors = std::move(flat);
  }
  if (factors.size() == 1) return std::move(factors.front());

  auto node = make_node(Kind::kCompose);
  node->domain = factors.front().domain();
  node->codomain = factors.back().codomain();
  node->size = 1;
  for (const Arrow& f : factors) {
    node->has_pair = node->has_pair || f.contains_pair();
    node->has_bang = node->has_bang || f.contains_bang();
    node->has_terminal = node->has_terminal || f.contains_terminal();
    node->size += f.size();
  }
  node->children = std::move(factors);
  summarize(*node);
  return Arrow(std::move(node));
}

Arrow Arrow::compose(Arrow after, Arrow before) {
  return compose(std::vector<Arrow>{std::move(before), std::move(after)});
}

Arrow::Kind Arrow::kind() const noexcept { return node_->kind; }

const Object& Arrow::object() const {
  if (!is(Kind::kIdentity) && !is(Kind::kBang)) {
    throw Error(Errc::kInvalidArgument, "object(): not an identity or bang");
  }
  return *node_->a;
}

const Object& Arrow::left_object() const {
  if (!is_projection()) {
    throw Error(Errc::kInvalidArgument, "left_object(): not a projection");
  }
  return *node_->a;
}

const Object& Arrow::right_object() const {
  if (!is_projection()) {
    throw Error(Errc::kInvalidArgument, "right_object(): not a projection");
  }
  return *node_->b;
}

const Arrow& Arrow::first() const {
  if (!is(Kind::kPair)) throw Error(Errc::kInvalidArgument, "first(): not a pair");
  return node_->children[0];
}

const Arrow& Arrow::second() const {
  if (!is(Kind::kPair)) throw Error(Errc::kInvalidArgument, "second(): not a pair");
  return node_->children[1];
}

const std::vector<Arrow>& Arrow::factors() const {
  if (!is(Kind::kCompose)) {
    throw Error(Errc::kInvalidArgument, "factors(): not a composition");
  }
  return node_->children;
}

std::span<const Arrow> Arrow::children() const { return node_->children; }

const Object& Arrow::domain() const noexcept { return node_->domain; }
const Object& Arrow::codomain() const noexcept { return node_->codomain; }
bool Arrow::contains_pair() const noexcept { return node_->has_pair; }
bool Arrow::contains_bang() const noexcept { return node_->has_bang; }
bool Arrow::contains_terminal() const noexcept { return node_->has_terminal; }
std::size_t Arrow::size() const noexcept { return node_->size; }
bool Arrow::well_typed() const noexcept { return node_->well_typed; }
const Measure& Arrow::gamma() const noexcept { return node_->gamma; }
bool Arrow::pairing_under_composition() const noexcept {
  return node_->pairing_under_composition;
}
std::size_t Arrow::beta_inside() const noexcept { return node_->beta_inside; }
bool Arrow::contains_structural_redex() const noexcept {
  return node_->structural_redex;
}
bool Arrow::contains_atomizing_candidate() const noexcept {
  return node_->atomizing_candidate;
}

const Graph& Arrow::memo_graph(Graph (*compute)(const Arrow&)) const {
  std::call_once(node_->graph_once, [&] {
    node_->graph = std::make_shared<const Graph>(compute(*this));
  });
  return *node_->graph;
}

const Arrow& Arrow::at(const Address& address) const {
  const Arrow* cur = this;
  for (std::size_t i : address) {
    auto kids = cur->children();
    if (i >= kids.size()) {
      throw Error(Errc::kInvalidArgument,
                  "no subterm at address " + format_address(address), address);
    }
    cur = &kids[i];
  }
  return *cur;
}

Arrow Arrow::replace(const Address& address, const Arrow& replacement) const {
  return replace_from(address, 0, replacement);
}

Arrow Arrow::replace_from(const Address& address, std::size_t depth,
                          const Arrow& replacement) const {
  if (depth == address.size()) return replacement;
  auto kids = children();
  const std::size_t i = address[depth];
  if (i >= kids.size()) {
    throw Error(Errc::kInvalidArgument,
                "no subterm at address " + format_address(address), address);
  }
  std::vector<Arrow> rebuilt(kids.begin(), kids.end());
  rebuilt[i] = kids[i].replace_from(address, depth + 1, replacement);
  if (is(Kind::kPair)) return pair(std::move(rebuilt[0]), std::move(rebuilt[1]));
  return compose(std::move(rebuilt));
}

Arrow Arrow::substitute_all_letters(const Letter& l) const {
  switch (kind()) {
    case Kind::kIdentity: return identity(object().substitute_all_letters(l));
    case Kind::kBang: return bang(object().substitute_all_letters(l));
    case Kind::kProj1:
      return proj1(left_object().substitute_all_letters(l),
                   right_object().substitute_all_letters(l));
    case Kind::kProj2:
      return proj2(left_object().substitute_all_letters(l),
                   right_object().substitute_all_letters(l));
    case Kind::kPair:
      return pair(first().substitute_all_letters(l),
                  second().substitute_all_letters(l));
    case Kind::kCompose: {
      std::vector<Arrow> out;
      out.reserve(factors().size());
      for (const Arrow& f : factors()) out.push_back(f.substitute_all_letters(l));
      return compose(std::move(out));
    }
  }
  return *this;
}

bool operator==(const Arrow& a, const Arrow& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case Arrow::Kind::kIdentity:
    case Arrow::Kind::kBang:
      return a.object() == b.object();
    case Arrow::Kind::kProj1:
    case Arrow::Kind::kProj2:
      return a.left_object() == b.left_object() &&
             a.right_object() == b.right_object();
    case Arrow::Kind::kPair:
    case Arrow::Kind::kCompose: {
      auto x = a.children();
      auto y = b.children();
      if (x.size() != y.size()) return false;
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] == y[i])) return false;
      }
      return true;
    }
  }
  return false;
}

namespace {

void check_object_mode(const Object& a, Mode mode, const Address& path) {
  if (mode == Mode::kBinaryProducts && a.contains_terminal()) {
    throw Error(Errc::kModeViolation,
                "terminal object T in binary-products mode at " +
                    format_address(path),
                path);
  }
}

ArrowType check(const Arrow& t, Mode mode, Address& path) {
  using Kind = Arrow::Kind;
  switch (t.kind()) {
    case Kind::kIdentity:
      check_object_mode(t.object(), mode, path);
      return t.type();
    case Kind::kProj1:
    case Kind::kProj2:
      check_object_mode(t.left_object(), mode, path);
      check_object_mode(t.right_object(), mode, path);
      return t.type();
    case Kind::kBang:
      if (mode == Mode::kBinaryProducts) {
        throw Error(Errc::kModeViolation,
                    "bang in binary-products mode at " + format_address(path),
                    path);
      }
      return t.type();
    case Kind::kPair: {
      path.push_back(0);
      ArrowType first = check(t.first(), mode, path);
      path.back() = 1;
      ArrowType second = check(t.second(), mode, path);
      path.pop_back();
      if (!(first.domain == second.domain)) {
        throw Error(Errc::kTypeMismatch,
                    "pair components have different domains " +
                        to_string(first.domain) + " and " +
                        to_string(second.domain) + " at " + format_address(path),
                    path);
      }
      return {first.domain, Object::product(first.codomain, second.codomain)};
    }
    case Kind::kCompose: {
      const auto& fs = t.factors();
      std::optional<ArrowType> acc;
      for (std::size_t i = 0; i < fs.size(); ++i) {
        path.push_back(i);
        ArrowType ft = check(fs[i], mode, path);
        if (acc && !(acc->codomain == ft.domain)) {
          Address where = path;
          path.pop_back();
          throw Error(Errc::kTypeMismatch,
                      "composition mismatch: factor " + std::to_string(i) +
                          " expects " + to_string(ft.domain) + " but receives " +
                          to_string(acc->codomain) + " at " +
                          format_address(where),
                      where);
        }
        path.pop_back();
        acc = acc ? ArrowType{acc->domain, ft.codomain} : ft;
      }
      return *acc;
    }
  }
  throw Error(Errc::kInternalError, "unknown arrow kind");
}

}  // namespace

ArrowType typecheck(const Arrow& t, Mode mode) {
  if (t.well_typed() && (mode == Mode::kCartesian ||
                         (!t.contains_bang() && !t.contains_terminal()))) {
    return t.type();
  }
  Address path;
  return check(t, mode, path);
}

std::size_t derived_arity(DerivedKind kind) {
  switch (kind) {
    case DerivedKind::kAssocRight:
    case DerivedKind::kAssocLeft: return 3;
    case DerivedKind::kSwap: return 2;
    case DerivedKind::kDup:
    case DerivedKind::kSigma:
    case DerivedKind::kDelta: return 1;
  }
  return 0;
}

Arrow assoc_right(Object a, Object b, Object c) {
  const Object bc = Object::product(b, c);
  return Arrow::pair(
      Arrow::pair(Arrow::proj1(a, bc),
                  Arrow::compose(Arrow::proj1(b, c), Arrow::proj2(a, bc))),
      Arrow::compose(Arrow::proj2(b, c), Arrow::proj2(a, bc)));
}

Arrow assoc_left(Object a, Object b, Object c) {
  const Object ab = Object::product(a, b);
  return Arrow::pair(
      Arrow::compose(Arrow::proj1(a, b), Arrow::proj1(ab, c)),
      Arrow::pair(Arrow::compose(Arrow::proj2(a, b), Arrow::proj1(ab, c)),
                  Arrow::proj2(ab, c)));
}

Arrow swap(Object a, Object b) {
  return Arrow::pair(Arrow::proj2(a, b), Arrow::proj1(a, b));
}

Arrow dup(Object a) { return Arrow::pair(Arrow::identity(a), Arrow::identity(a)); }

Arrow sigma(Object a) { return Arrow::pair(Arrow::bang(a), Arrow::identity(a)); }

Arrow delta(Object a) { return Arrow::pair(Arrow::identity(a), Arrow::bang(a)); }

Arrow derived_arrow(DerivedKind kind, std::span<const Object> objects,
                    Mode mode) {
  if (objects.size() != derived_arity(kind)) {
    throw Error(Errc::kInvalidArgument,
                "derived arrow expects " + std::to_string(derived_arity(kind)) +
                    " objects, got " + std::to_string(objects.size()));
  }
  if (mode == Mode::kBinaryProducts) {
    if (kind == DerivedKind::kSigma || kind == DerivedKind::kDelta) {
      throw Error(Errc::kModeViolation,
                  "sigma and delta need a terminal object");
    }
    for (const Object& o : objects) check_object_mode(o, mode, {});
  }
  switch (kind) {
    case DerivedKind::kAssocRight:
      return assoc_right(objects[0], objects[1], objects[2]);
    case DerivedKind::kAssocLeft:
      return assoc_left(objects[0], objects[1], objects[2]);
    case DerivedKind::kSwap: return swap(objects[0], objects[1]);
    case DerivedKind::kDup: return dup(objects[0]);
    case DerivedKind::kSigma: return sigma(objects[0]);
    case DerivedKind::kDelta: return delta(objects[0]);
  }
  throw Error(Errc::kInternalError, "unknown derived arrow");
}

Arrow product_of_arrows(const Arrow& f, const Arrow& g) {
  const ArrowType ft = typecheck(f, Mode::kCartesian);
  const ArrowType gt = typecheck(g, Mode::kCartesian);
  return Arrow::pair(Arrow::compose(f, Arrow::proj1(ft.domain, gt.domain)),
                     Arrow::compose(g, Arrow::proj2(ft.domain, gt.domain)));
}

}  // namespace cartcoh
