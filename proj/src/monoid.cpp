#include "persrep/monoid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "persrep/error.hpp"

namespace persrep {

MonoidElement::MonoidElement(Value v) : value_(std::move(v)) {
  if (auto* q = std::get_if<mpq_class>(&value_)) q->canonicalize();
}

MonoidElement MonoidElement::rational(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  return MonoidElement(Value(std::move(c)));
}

GoodMonoid GoodMonoid::nat() { return {MonoidKind::Nat, 1, {}}; }

GoodMonoid GoodMonoid::grid(std::size_t k) {
  if (k == 0) throw ValidationError("grid monoid needs k >= 1");
  return {MonoidKind::Grid, k, {}};
}

GoodMonoid GoodMonoid::free_word(std::string alphabet) {
  if (alphabet.empty()) throw ValidationError("free word monoid needs a non-empty alphabet");
  std::string sorted = alphabet;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ValidationError("free word alphabet has repeated symbols");
  return {MonoidKind::FreeWord, 1, std::move(alphabet)};
}

GoodMonoid GoodMonoid::qplus() { return {MonoidKind::QPlus, 1, {}}; }

MonoidElement GoodMonoid::identity() const {
  switch (kind_) {
    case MonoidKind::Nat: return MonoidElement::nat(0);
    case MonoidKind::Grid: return MonoidElement::grid(MonoidElement::Tuple(k_, 0));
    case MonoidKind::FreeWord: return MonoidElement::word("");
    case MonoidKind::QPlus: return MonoidElement::rational(0);
  }
  return {};
}

bool GoodMonoid::contains(const MonoidElement& g) const {
  const auto& v = g.value();
  switch (kind_) {
    case MonoidKind::Nat: return std::holds_alternative<std::uint64_t>(v);
    case MonoidKind::Grid: return std::holds_alternative<MonoidElement::Tuple>(v) && g.as_grid().size() == k_;
    case MonoidKind::FreeWord:
      return std::holds_alternative<std::string>(v) &&
             std::all_of(g.as_word().begin(), g.as_word().end(),
                         [&](char c) { return alphabet_.find(c) != std::string::npos; });
    case MonoidKind::QPlus: return std::holds_alternative<mpq_class>(v) && sgn(g.as_rational()) >= 0;
  }
  return false;
}

void GoodMonoid::require(const MonoidElement& g) const {
  if (!contains(g)) throw InstanceMismatch("element does not belong to monoid " + describe());
}

MonoidElement GoodMonoid::compose(const MonoidElement& g1, const MonoidElement& g2) const {
  require(g1);
  require(g2);
  switch (kind_) {
    case MonoidKind::Nat: return MonoidElement::nat(g1.as_nat() + g2.as_nat());
    case MonoidKind::Grid: {
      MonoidElement::Tuple t(k_);
      for (std::size_t i = 0; i < k_; ++i) t[i] = g1.as_grid()[i] + g2.as_grid()[i];
      return MonoidElement::grid(std::move(t));
    }
    case MonoidKind::FreeWord: return MonoidElement::word(g1.as_word() + g2.as_word());
    case MonoidKind::QPlus: return MonoidElement::rational(g1.as_rational() + g2.as_rational());
  }
  return {};
}

std::optional<MonoidElement> GoodMonoid::left_divide(const MonoidElement& g1, const MonoidElement& g2) const {
  require(g1);
  require(g2);
  switch (kind_) {
    case MonoidKind::Nat:
      if (g1.as_nat() > g2.as_nat()) return std::nullopt;
      return MonoidElement::nat(g2.as_nat() - g1.as_nat());
    case MonoidKind::Grid: {
      MonoidElement::Tuple t(k_);
      for (std::size_t i = 0; i < k_; ++i) {
        if (g1.as_grid()[i] > g2.as_grid()[i]) return std::nullopt;
        t[i] = g2.as_grid()[i] - g1.as_grid()[i];
      }
      return MonoidElement::grid(std::move(t));
    }
    case MonoidKind::FreeWord: {
      const auto& a = g1.as_word();
      const auto& b = g2.as_word();
      if (a.size() > b.size() || b.compare(b.size() - a.size(), a.size(), a) != 0) return std::nullopt;
      return MonoidElement::word(b.substr(0, b.size() - a.size()));
    }
    case MonoidKind::QPlus:
      if (g1.as_rational() > g2.as_rational()) return std::nullopt;
      return MonoidElement::rational(g2.as_rational() - g1.as_rational());
  }
  return std::nullopt;
}

bool GoodMonoid::divides(const MonoidElement& g1, const MonoidElement& g2) const {
  return left_divide(g1, g2).has_value();
}

std::vector<MonoidElement> GoodMonoid::plcm(std::span<const MonoidElement> elems) const {
  for (const auto& g : elems) require(g);
  if (elems.empty()) return {identity()};
  switch (kind_) {
    case MonoidKind::Nat: {
      std::uint64_t m = 0;
      for (const auto& g : elems) m = std::max(m, g.as_nat());
      return {MonoidElement::nat(m)};
    }
    case MonoidKind::Grid: {
      MonoidElement::Tuple t(k_, 0);
      for (const auto& g : elems)
        for (std::size_t i = 0; i < k_; ++i) t[i] = std::max(t[i], g.as_grid()[i]);
      return {MonoidElement::grid(std::move(t))};
    }
    case MonoidKind::FreeWord: {
      // Common multiples exist iff the set is a suffix chain; its top is the plcm.
      const MonoidElement* longest = &elems.front();
      for (const auto& g : elems)
        if (g.as_word().size() > longest->as_word().size()) longest = &g;
      for (const auto& g : elems)
        if (!divides(g, *longest)) return {};
      return {*longest};
    }
    case MonoidKind::QPlus: {
      mpq_class m = 0;
      for (const auto& g : elems) m = std::max(m, g.as_rational());
      return {MonoidElement::rational(m)};
    }
  }
  return {};
}

bool GoodMonoid::canonical_less(const MonoidElement& a, const MonoidElement& b) const {
  switch (kind_) {
    case MonoidKind::Nat: return a.as_nat() < b.as_nat();
    case MonoidKind::Grid: {
      const auto& x = a.as_grid();
      const auto& y = b.as_grid();
      auto sx = std::accumulate(x.begin(), x.end(), std::uint64_t{0});
      auto sy = std::accumulate(y.begin(), y.end(), std::uint64_t{0});
      if (sx != sy) return sx < sy;
      return x < y;
    }
    case MonoidKind::FreeWord: {
      const auto& x = a.as_word();
      const auto& y = b.as_word();
      if (x.size() != y.size()) return x.size() < y.size();
      return x < y;
    }
    case MonoidKind::QPlus: return a.as_rational() < b.as_rational();
  }
  return false;
}

void GoodMonoid::sort_canonical(std::vector<MonoidElement>& elems) const {
  std::sort(elems.begin(), elems.end(),
            [this](const MonoidElement& a, const MonoidElement& b) { return canonical_less(a, b); });
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
}

std::string GoodMonoid::to_string(const MonoidElement& g) const {
  std::ostringstream os;
  switch (kind_) {
    case MonoidKind::Nat: os << g.as_nat(); break;
    case MonoidKind::Grid: {
      os << '(';
      for (std::size_t i = 0; i < g.as_grid().size(); ++i) os << (i ? "," : "") << g.as_grid()[i];
      os << ')';
      break;
    }
    case MonoidKind::FreeWord: os << (g.as_word().empty() ? std::string("e") : g.as_word()); break;
    case MonoidKind::QPlus: os << g.as_rational().get_str(); break;
  }
  return os.str();
}

std::string GoodMonoid::describe() const {
  switch (kind_) {
    case MonoidKind::Nat: return "nat";
    case MonoidKind::Grid: return "grid(" + std::to_string(k_) + ")";
    case MonoidKind::FreeWord: return "freeword{" + alphabet_ + "}";
    case MonoidKind::QPlus: return "qplus";
  }
  return "?";
}

MonoidElement GoodMonoid::random_element(std::mt19937_64& rng, const SampleBounds& bounds) const {
  std::uniform_int_distribution<std::uint64_t> coord(0, bounds.max_coordinate);
  switch (kind_) {
    case MonoidKind::Nat: return MonoidElement::nat(coord(rng));
    case MonoidKind::Grid: {
      MonoidElement::Tuple t(k_);
      for (auto& x : t) x = coord(rng);
      return MonoidElement::grid(std::move(t));
    }
    case MonoidKind::FreeWord: {
      std::uniform_int_distribution<std::size_t> len(0, bounds.max_word_length);
      std::uniform_int_distribution<std::size_t> sym(0, alphabet_.size() - 1);
      std::string w(len(rng), ' ');
      for (auto& c : w) c = alphabet_[sym(rng)];
      return MonoidElement::word(std::move(w));
    }
    case MonoidKind::QPlus: {
      std::uniform_int_distribution<std::uint64_t> den(1, std::max<std::uint64_t>(1, bounds.max_denominator));
      std::uint64_t d = den(rng);
      std::uniform_int_distribution<std::uint64_t> num(0, d * bounds.max_integer_part);
      mpq_class q(mpz_class(static_cast<unsigned long>(num(rng))), mpz_class(static_cast<unsigned long>(d)));
      return MonoidElement::rational(q);
    }
  }
  return identity();
}

std::vector<MonoidElement> dickson_minimal(const GoodMonoid& monoid, std::span<const MonoidElement> elems) {
  if (monoid.kind() != MonoidKind::Grid && monoid.kind() != MonoidKind::Nat)
    throw Unsupported("dickson_minimal requires a grid monoid, got " + monoid.describe());
  std::vector<MonoidElement> out;
  for (const auto& g : elems) {
    if (std::find(out.begin(), out.end(), g) != out.end()) continue;
    bool dominated = std::any_of(elems.begin(), elems.end(), [&](const MonoidElement& h) {
      return h != g && monoid.divides(h, g);
    });
    if (!dominated) out.push_back(g);
  }
  return out;
}

Report check_good_axioms(const GoodMonoid& monoid, std::size_t sample_count, std::uint64_t seed,
                         const SampleBounds& bounds) {
  if (sample_count == 0) throw ValidationError("sample_count must be >= 1");
  std::mt19937_64 rng(seed);
  const auto e = monoid.identity();
  auto str = [&](const MonoidElement& g) { return monoid.to_string(g); };

  std::string assoc, ident, right_cancel, left_cancel, antisym, division;
  for (std::size_t s = 0; s < sample_count; ++s) {
    auto a = monoid.random_element(rng, bounds);
    auto b = monoid.random_element(rng, bounds);
    auto c = monoid.random_element(rng, bounds);

    if (assoc.empty() && monoid.compose(monoid.compose(a, b), c) != monoid.compose(a, monoid.compose(b, c)))
      assoc = str(a) + "," + str(b) + "," + str(c);
    if (ident.empty() && (monoid.compose(e, a) != a || monoid.compose(a, e) != a)) ident = str(a);
    // a ≠ b must stay distinct after multiplying by c on either side.
    if (right_cancel.empty() && a != b && monoid.compose(a, c) == monoid.compose(b, c))
      right_cancel = str(a) + "," + str(b) + "," + str(c);
    if (left_cancel.empty() && a != b && monoid.compose(c, a) == monoid.compose(c, b))
      left_cancel = str(c) + "," + str(a) + "," + str(b);
    // Random pairs are rarely comparable, so also test b ⋆ a against a.
    auto ba = monoid.compose(b, a);
    for (const auto& [x, y] : {std::pair{a, b}, std::pair{a, ba}}) {
      if (antisym.empty() && monoid.divides(x, y) && monoid.divides(y, x) && x != y)
        antisym = str(x) + "," + str(y);
    }
    auto h = monoid.left_divide(a, ba);
    if (division.empty() && (!h || *h != b || monoid.left_divide(a, a) != e))
      division = str(a) + "," + str(b);
  }
  Report r;
  auto add = [&](const char* name, const std::string& witness) {
    r.add(name, witness.empty(), witness.empty() ? "" : "counterexample: " + witness);
  };
  add("associativity", assoc);
  add("identity", ident);
  add("right_cancellativity", right_cancel);
  add("left_cancellativity", left_cancel);
  add("anti_symmetry", antisym);
  add("left_division", division);
  return r;
}

std::string hasse_dot(const GoodMonoid& monoid, std::span<const MonoidElement> elems) {
  std::vector<MonoidElement> nodes;
  for (const auto& g : elems)
    if (std::find(nodes.begin(), nodes.end(), g) == nodes.end()) nodes.push_back(g);

  auto strictly_below = [&](const MonoidElement& a, const MonoidElement& b) {
    return a != b && monoid.divides(a, b);
  };
  std::ostringstream os;
  os << "digraph hasse {\n";
  for (std::size_t i = 0; i < nodes.size(); ++i)
    os << "  n" << i << " [label=\"" << monoid.to_string(nodes[i]) << "\"];\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (!strictly_below(nodes[i], nodes[j])) continue;
      bool covered = std::none_of(nodes.begin(), nodes.end(), [&](const MonoidElement& m) {
        return strictly_below(nodes[i], m) && strictly_below(m, nodes[j]);
      });
      if (covered) os << "  n" << i << " -> n" << j << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace persrep
