#include "persrep/graded.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "persrep/error.hpp"

namespace persrep {

// ---------------------------------------------------------------- MonoidRingElement

MonoidRingElement MonoidRingElement::monomial(GoodMonoid monoid, Ring ring, const Scalar& coeff,
                                              MonoidElement exponent) {
  MonoidRingElement x(std::move(monoid), ring);
  x.accumulate(coeff, exponent);
  x.canonicalize();
  return x;
}

void MonoidRingElement::accumulate(const Scalar& coeff, const MonoidElement& exponent) {
  if (!monoid_.contains(exponent)) throw InstanceMismatch("exponent outside monoid " + monoid_.describe());
  for (auto& t : terms_)
    if (t.exponent == exponent) {
      t.coeff = ring_.add(t.coeff, coeff);
      return;
    }
  terms_.push_back({ring_.normalize(coeff), exponent});
}

void MonoidRingElement::canonicalize() {
  std::erase_if(terms_, [&](const Term& t) { return ring_.is_zero(t.coeff); });
  std::sort(terms_.begin(), terms_.end(),
            [&](const Term& a, const Term& b) { return monoid_.canonical_less(a.exponent, b.exponent); });
}

MonoidRingElement MonoidRingElement::operator+(const MonoidRingElement& other) const {
  if (!(monoid_ == other.monoid_) || !(ring_ == other.ring_)) throw InstanceMismatch("monoid ring mismatch");
  MonoidRingElement out = *this;
  for (const auto& t : other.terms_) out.accumulate(t.coeff, t.exponent);
  out.canonicalize();
  return out;
}

MonoidRingElement MonoidRingElement::operator*(const MonoidRingElement& other) const {
  if (!(monoid_ == other.monoid_) || !(ring_ == other.ring_)) throw InstanceMismatch("monoid ring mismatch");
  MonoidRingElement out(monoid_, ring_);
  for (const auto& a : terms_)
    for (const auto& b : other.terms_)
      out.accumulate(ring_.mul(a.coeff, b.coeff), monoid_.compose(a.exponent, b.exponent));
  out.canonicalize();
  return out;
}

// ---------------------------------------------------------------- GradedPresentation

std::optional<std::size_t> GradedPresentation::generator_index(const std::string& id) const {
  for (std::size_t j = 0; j < generators.size(); ++j)
    if (generators[j].id == id) return j;
  return std::nullopt;
}

std::vector<MonoidElement> GradedPresentation::degrees() const {
  std::vector<MonoidElement> d;
  for (const auto& g : generators) d.push_back(g.degree);
  for (const auto& r : relations) d.push_back(r.degree);
  monoid.sort_canonical(d);
  return d;
}

Report validate_presentation(const GradedPresentation& p) {
  Report report;
  const auto& m = p.monoid;
  std::set<std::string> seen;
  for (std::size_t j = 0; j < p.generators.size(); ++j) {
    const auto& g = p.generators[j];
    const std::string where = "generators[" + std::to_string(j) + "]";
    if (g.id.empty()) report.fail("generator_id", where + ": empty id");
    if (!seen.insert(g.id).second) report.fail("generator_unique", where + ": duplicate id '" + g.id + "'");
    if (!m.contains(g.degree)) report.fail("generator_degree", where + ": degree outside " + m.describe());
  }
  for (std::size_t k = 0; k < p.relations.size(); ++k) {
    const auto& rel = p.relations[k];
    const std::string where = "relations[" + std::to_string(k) + "]";
    if (!m.contains(rel.degree)) {
      report.fail("relation_degree", where + ": degree outside " + m.describe());
      continue;
    }
    for (std::size_t t = 0; t < rel.terms.size(); ++t) {
      const auto& term = rel.terms[t];
      const std::string tw = where + ".terms[" + std::to_string(t) + "]";
      if (p.ring.is_zero(term.coeff)) report.fail("nonzero_coefficient", tw + ": zero coefficient");
      if (p.ring.normalize(term.coeff) != term.coeff)
        report.fail("coefficient_canonical", tw + ": coefficient not in canonical form for " + p.ring.describe());
      auto j = p.generator_index(term.gen);
      if (!j) {
        report.fail("unknown_generator", tw + ": unknown generator '" + term.gen + "'");
        continue;
      }
      if (!m.contains(term.shift)) {
        report.fail("shift_degree", tw + ": shift outside " + m.describe());
        continue;
      }
      if (!m.contains(p.generators[*j].degree)) continue;
      auto landed = m.compose(term.shift, p.generators[*j].degree);
      if (landed != rel.degree)
        report.fail("homogeneity", tw + ": shift " + m.to_string(term.shift) + " * deg(" + term.gen + ") = " +
                                       m.to_string(landed) + " but relation degree is " + m.to_string(rel.degree));
    }
  }
  if (report.entries().empty()) report.add("presentation", true);
  return report;
}

void require_valid(const GradedPresentation& p) {
  auto r = validate_presentation(p);
  if (!r.pass()) throw ValidationError("invalid presentation: " + r.first_failure());
}

std::vector<std::size_t> component_generators(const GradedPresentation& p, const MonoidElement& g) {
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < p.generators.size(); ++j)
    if (p.monoid.divides(p.generators[j].degree, g)) idx.push_back(j);
  return idx;
}

FpPresentation component(const GradedPresentation& p, const MonoidElement& g) {
  require_valid(p);
  if (!p.monoid.contains(g)) throw InstanceMismatch("degree outside " + p.monoid.describe());
  const auto gens = component_generators(p, g);
  std::vector<std::size_t> position(p.generators.size(), gens.size());
  for (std::size_t c = 0; c < gens.size(); ++c) position[gens[c]] = c;

  Matrix rel(p.ring, 0, gens.size());
  std::vector<Scalar> row(gens.size());
  for (const auto& z : p.relations) {
    if (!p.monoid.divides(z.degree, g)) continue;
    // X^{h'}·z: each term's generator lands on its component copy, since
    // h'⋆shift⋆deg(gen) = g forces h'⋆shift = h_gen by cancellativity.
    std::fill(row.begin(), row.end(), Scalar(0));
    for (const auto& t : z.terms) {
      std::size_t j = *p.generator_index(t.gen);
      row[position[j]] = p.ring.add(row[position[j]], t.coeff);
    }
    rel.append_row(row);
  }
  return FpPresentation(p.ring, gens.size(), std::move(rel));
}

Matrix structure_map(const GradedPresentation& p, const MonoidElement& g1, const MonoidElement& g2) {
  if (!p.monoid.divides(g1, g2))
    throw DivisibilityError(p.monoid.to_string(g1) + " does not divide " + p.monoid.to_string(g2));
  const auto src = component_generators(p, g1);
  const auto dst = component_generators(p, g2);
  Matrix m(p.ring, dst.size(), src.size());
  for (std::size_t c = 0; c < src.size(); ++c) {
    auto it = std::find(dst.begin(), dst.end(), src[c]);
    m(static_cast<std::size_t>(it - dst.begin()), c) = 1;
  }
  return m;
}

std::vector<MonoidElement> framing_set_of_degrees(const GoodMonoid& monoid, std::vector<MonoidElement> degrees,
                                                  std::size_t cap) {
  monoid.sort_canonical(degrees);
  if (degrees.size() > cap)
    throw Error("framing set enumeration over " + std::to_string(degrees.size()) + " degrees exceeds cap " +
                std::to_string(cap));
  std::vector<MonoidElement> h;
  std::vector<MonoidElement> subset;
  const std::size_t n = degrees.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    subset.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint64_t{1} << i)) subset.push_back(degrees[i]);
    for (auto& x : monoid.plcm(subset)) h.push_back(std::move(x));
  }
  monoid.sort_canonical(h);
  return h;
}

std::vector<MonoidElement> framing_set(const GradedPresentation& p, std::size_t cap) {
  require_valid(p);
  return framing_set_of_degrees(p.monoid, p.degrees(), cap);
}

std::vector<std::pair<MonoidElement, std::size_t>> truncated_realization(const GradedPresentation& p,
                                                                         const std::vector<MonoidElement>& degrees) {
  if (!p.ring.is_field()) throw Unsupported("truncated_realization requires a field ring");
  require_valid(p);
  const auto& m = p.monoid;
  std::vector<std::pair<MonoidElement, std::size_t>> out;
  for (const auto& g : degrees) {
    // Unknowns: every symbol X^h·e_j with h ⋆ d_j = g.
    std::map<std::pair<MonoidElement, std::size_t>, std::size_t> unknown;
    for (std::size_t j = 0; j < p.generators.size(); ++j)
      if (auto h = m.left_divide(p.generators[j].degree, g)) unknown.emplace(std::pair{*h, j}, unknown.size());

    Matrix system(p.ring, 0, unknown.size());
    std::vector<Scalar> eq(unknown.size());
    for (const auto& z : p.relations) {
      auto shift = m.left_divide(z.degree, g);
      if (!shift) continue;
      std::fill(eq.begin(), eq.end(), Scalar(0));
      for (const auto& t : z.terms) {
        auto key = std::pair{m.compose(*shift, t.shift), *p.generator_index(t.gen)};
        auto it = unknown.find(key);
        if (it == unknown.end()) throw Error("shifted relation term has no matching symbol");
        eq[it->second] = p.ring.add(eq[it->second], t.coeff);
      }
      system.append_row(eq);
    }
    out.emplace_back(g, unknown.size() - rank(system));
  }
  return out;
}

}  // namespace persrep
