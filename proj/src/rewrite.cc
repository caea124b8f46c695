#include "cartcoh/rewrite.h"

#include <string>
#include <utility>

namespace cartcoh {

using Kind = Arrow::Kind;

std::string to_string(const Degree& d) {
  return "(" + d.alpha.str() + "," + d.beta.str() + "," + d.gamma.str() + ")";
}

std::string_view redex_kind_name(RedexKind kind) {
  switch (kind) {
    case RedexKind::kIdentityLeft: return "IdentityLeft";
    case RedexKind::kIdentityRight: return "IdentityRight";
    case RedexKind::kPairingBeta1: return "PairingBeta1";
    case RedexKind::kPairingBeta2: return "PairingBeta2";
    case RedexKind::kDistr: return "Distr";
    case RedexKind::kAtomizeProduct: return "AtomizeProduct";
    case RedexKind::kAtomizeTerminal: return "AtomizeTerminal";
  }
  return "Unknown";
}

namespace {

bool is_compose_local(RedexKind kind) {
  return kind != RedexKind::kAtomizeProduct &&
         kind != RedexKind::kAtomizeTerminal;
}

}  // namespace

std::string format_location(const Redex& r) {
  std::string out = format_address(r.at);
  if (is_compose_local(r.kind)) out += "#" + std::to_string(r.factor);
  return out;
}

bool is_atomized_k_composition(const Arrow& t) {
  if (!t.codomain().is_letter()) return false;
  if (t.is_projection()) return true;
  if (!t.is(Kind::kCompose)) return false;
  for (const Arrow& f : t.factors()) {
    if (!f.is_projection()) return false;
  }
  return true;
}

bool is_normal_form(const Arrow& t, Mode mode) {
  switch (t.kind()) {
    case Kind::kIdentity: return t.object().is_letter();
    case Kind::kBang: return mode == Mode::kCartesian;
    case Kind::kPair:
      return is_normal_form(t.first(), mode) && is_normal_form(t.second(), mode);
    case Kind::kProj1:
    case Kind::kProj2:
    case Kind::kCompose: return is_atomized_k_composition(t);
  }
  return false;
}

Measure gamma_measure(const Arrow& t) { return t.gamma(); }

bool pairing_under_composition(const Arrow& t) {
  return t.pairing_under_composition();
}

Measure alpha_measure(const Arrow& t) {
  return pairing_under_composition(t) ? gamma_measure(t) : Measure(0);
}

namespace {

template <typename Visit>
void visit_product_eliminative(const Arrow& t, bool parent_is_compose,
                               Address& path, Visit&& visit) {
  if (!t.contains_pair()) {
    // Proper subterms of a pairing-free term are composition factors.
    if (!parent_is_compose) visit(t, path);
    return;
  }
  const bool compose = t.is(Kind::kCompose);
  auto kids = t.children();
  for (std::size_t i = 0; i < kids.size(); ++i) {
    path.push_back(i);
    visit_product_eliminative(kids[i], compose, path, visit);
    path.pop_back();
  }
}

}  // namespace

std::vector<Address> product_eliminative_occurrences(const Arrow& t) {
  std::vector<Address> out;
  Address path;
  visit_product_eliminative(t, false, path, [&](const Arrow&, const Address& at) {
    out.push_back(at);
  });
  return out;
}

Measure beta_measure(const Arrow& t) {
  // A pairing-free root is itself a maximal occurrence.
  return t.contains_pair() ? Measure(t.beta_inside())
                           : Measure(t.codomain().symbol_length());
}

Degree degree(const Arrow& t) {
  return Degree{alpha_measure(t), beta_measure(t), gamma_measure(t)};
}

namespace {

// Identity, pairing and distr redexes local to one Compose node, scanned in
// printed order (last-applied factor first).
std::optional<Redex> local_redex(const Arrow& t, const Address& path) {
  const auto& fs = t.factors();
  for (std::size_t k = fs.size(); k-- > 0;) {
    const Arrow& f = fs[k];
    if (f.is(Kind::kIdentity)) {
      return Redex{path, k > 0 ? RedexKind::kIdentityLeft
                               : RedexKind::kIdentityRight, k};
    }
    if (f.is_projection() && k > 0 && fs[k - 1].is(Kind::kPair)) {
      return Redex{path, f.is(Kind::kProj1) ? RedexKind::kPairingBeta1
                                            : RedexKind::kPairingBeta2, k};
    }
    if (f.is(Kind::kPair) && k > 0) return Redex{path, RedexKind::kDistr, k};
  }
  return std::nullopt;
}

// Children in printed order: pair components left to right, composition
// factors from the last applied to the first.
template <typename Fn>
std::optional<Redex> each_child(const Arrow& t, Address& path, Fn&& fn) {
  auto kids = t.children();
  const bool reversed = t.is(Kind::kCompose);
  for (std::size_t n = 0; n < kids.size(); ++n) {
    const std::size_t i = reversed ? kids.size() - 1 - n : n;
    path.push_back(i);
    std::optional<Redex> r = fn(kids[i], path);
    path.pop_back();
    if (r) return r;
  }
  return std::nullopt;
}

std::optional<Redex> find_structural(const Arrow& t, Address& path) {
  if (!t.contains_structural_redex()) return std::nullopt;
  if (t.is(Kind::kCompose)) {
    if (auto r = local_redex(t, path)) return r;
  }
  return each_child(t, path, [](const Arrow& c, Address& p) {
    return find_structural(c, p);
  });
}

bool terminal_redex(const Arrow& t, Mode mode) {
  return mode == Mode::kCartesian && t.codomain().is_terminal() &&
         !t.is(Kind::kBang);
}

std::optional<Redex> find_atomizing(const Arrow& t, Address& path,
                                    bool parent_is_compose, bool allow_product,
                                    Mode mode) {
  if (terminal_redex(t, mode)) {
    return Redex{path, RedexKind::kAtomizeTerminal, 0};
  }
  if (allow_product && !parent_is_compose && !t.contains_pair() &&
      t.codomain().is_product()) {
    return Redex{path, RedexKind::kAtomizeProduct, 0};
  }
  if (!t.contains_atomizing_candidate()) return std::nullopt;
  const bool compose = t.is(Kind::kCompose);
  return each_child(t, path, [&](const Arrow& c, Address& p) {
    return find_atomizing(c, p, compose, allow_product, mode);
  });
}

[[noreturn]] void invalid(const Redex& r, const std::string& why) {
  throw Error(Errc::kInvalidRedex,
              std::string(redex_kind_name(r.kind)) + " at " +
                  format_location(r) + ": " + why,
              r.at);
}

}  // namespace

std::optional<Redex> find_redex(const Arrow& t, Mode mode) {
  Address path;
  if (auto r = find_structural(t, path)) return r;
  const bool allow_product = !pairing_under_composition(t);
  return find_atomizing(t, path, false, allow_product, mode);
}

Arrow step(const Arrow& t, const Redex& r, Mode mode) {
  const Arrow* node = nullptr;
  try {
    node = &t.at(r.at);
  } catch (const Error&) {
    invalid(r, "no such subterm");
  }

  if (r.kind == RedexKind::kAtomizeTerminal) {
    if (!terminal_redex(*node, mode)) {
      invalid(r, "not a non-bang arrow into T");
    }
    return t.replace(r.at, Arrow::bang(node->domain()));
  }

  if (r.kind == RedexKind::kAtomizeProduct) {
    if (!node->codomain().is_product()) invalid(r, "codomain is not a product");
    if (node->contains_pair()) invalid(r, "redex contains a pairing");
    if (!r.at.empty()) {
      Address parent(r.at.begin(), r.at.end() - 1);
      if (t.at(parent).is(Kind::kCompose)) {
        invalid(r, "redex is a factor of a composition");
      }
    }
    if (pairing_under_composition(t)) {
      invalid(r, "a pairing occurs under composition");
    }
    const Object& a = node->codomain().left();
    const Object& b = node->codomain().right();
    return t.replace(r.at, Arrow::pair(Arrow::compose(Arrow::proj1(a, b), *node),
                                       Arrow::compose(Arrow::proj2(a, b), *node)));
  }

  if (!node->is(Kind::kCompose)) invalid(r, "not a composition");
  const auto& fs = node->factors();
  const std::size_t k = r.factor;
  if (k >= fs.size()) invalid(r, "factor index out of range");
  std::vector<Arrow> out;

  switch (r.kind) {
    case RedexKind::kIdentityLeft:
    case RedexKind::kIdentityRight: {
      if (!fs[k].is(Kind::kIdentity)) invalid(r, "factor is not an identity");
      if (r.kind == RedexKind::kIdentityLeft && k == 0) {
        invalid(r, "identity is applied first");
      }
      if (r.kind == RedexKind::kIdentityRight && k + 1 == fs.size()) {
        invalid(r, "identity is applied last");
      }
      out = fs;
      out.erase(out.begin() + static_cast<std::ptrdiff_t>(k));
      break;
    }
    case RedexKind::kPairingBeta1:
    case RedexKind::kPairingBeta2: {
      const Kind want = r.kind == RedexKind::kPairingBeta1 ? Kind::kProj1
                                                           : Kind::kProj2;
      if (!fs[k].is(want)) invalid(r, "factor is not the matching projection");
      if (k == 0 || !fs[k - 1].is(Kind::kPair)) {
        invalid(r, "projection is not applied to a pairing");
      }
      const Arrow& p = fs[k - 1];
      out.assign(fs.begin(), fs.begin() + static_cast<std::ptrdiff_t>(k - 1));
      out.push_back(want == Kind::kProj1 ? p.first() : p.second());
      out.insert(out.end(), fs.begin() + static_cast<std::ptrdiff_t>(k + 1),
                 fs.end());
      break;
    }
    case RedexKind::kDistr: {
      if (!fs[k].is(Kind::kPair) || k == 0) {
        invalid(r, "factor is not a pairing applied after another arrow");
      }
      std::vector<Arrow> before(fs.begin(),
                                fs.begin() + static_cast<std::ptrdiff_t>(k));
      const Arrow h = Arrow::compose(std::move(before));
      out.push_back(Arrow::pair(Arrow::compose(fs[k].first(), h),
                                Arrow::compose(fs[k].second(), h)));
      out.insert(out.end(), fs.begin() + static_cast<std::ptrdiff_t>(k + 1),
                 fs.end());
      break;
    }
    default: invalid(r, "unexpected kind");
  }
  return t.replace(r.at, Arrow::compose(std::move(out)));
}

namespace {

Measure step_fuse(const Arrow& t) {
  const Measure gamma = gamma_measure(t);
  return 10 * gamma * gamma;
}

[[noreturn]] void fuse_blown(const Arrow& t) {
  throw Error(Errc::kInternalError,
              "reduction exceeded the step fuse 10*gamma^2 = " +
                  step_fuse(t).str());
}

}  // namespace

ReductionTrace normalize(const Arrow& t, Mode mode) {
  typecheck(t, mode);
  const Measure fuse = step_fuse(t);
  ReductionTrace trace{{}, t};
  Degree current = degree(t);
  while (auto r = find_redex(trace.result, mode)) {
    Arrow next = step(trace.result, *r, mode);
    Degree next_degree = degree(next);
    if (!(next_degree < current)) {
      throw Error(Errc::kInternalError,
                  std::string(redex_kind_name(r->kind)) + " at " +
                      format_location(*r) + " did not decrease the degree " +
                      to_string(current) + " -> " + to_string(next_degree));
    }
    trace.steps.push_back(
        ReductionStep{*r, trace.result, next, current, next_degree});
    trace.result = std::move(next);
    current = std::move(next_degree);
    if (Measure(trace.steps.size()) > fuse) fuse_blown(t);
  }
  return trace;
}

Arrow normal_form(const Arrow& t, Mode mode) {
  typecheck(t, mode);
  const Measure fuse = step_fuse(t);
  Arrow cur = t;
  std::size_t steps = 0;
  while (auto r = find_redex(cur, mode)) {
    cur = step(cur, *r, mode);
    if (Measure(++steps) > fuse) fuse_blown(t);
  }
  return cur;
}

}  // namespace cartcoh
