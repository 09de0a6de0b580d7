#include "persrep/functors.hpp"

#include <algorithm>
#include <map>

#include "persrep/error.hpp"
#include "persrep/io.hpp"

namespace persrep {

namespace {

std::size_t position_in(const std::vector<std::size_t>& list, std::size_t value) {
  auto it = std::find(list.begin(), list.end(), value);
  if (it == list.end()) throw Error("generator missing from component");
  return static_cast<std::size_t>(it - list.begin());
}

Matrix unit_columns(const Ring& ring, std::size_t rows, const std::vector<std::size_t>& targets) {
  Matrix m(ring, rows, targets.size());
  for (std::size_t c = 0; c < targets.size(); ++c) m(targets[c], c) = 1;
  return m;
}

std::string module_summary(const FpPresentation& p) {
  if (p.ring.is_field()) return "dim " + std::to_string(dimension(p));
  auto inv = abelian_invariants(p);
  std::string s = "Z^" + std::to_string(inv.free_rank);
  for (const auto& t : inv.torsion) s += " + Z/" + t.get_str();
  return s;
}

bool same_induced_map_type(const FpPresentation& s1, const FpPresentation& t1, const Matrix& m1,
                           const FpPresentation& s2, const FpPresentation& t2, const Matrix& m2) {
  if (s1.ring.is_field()) return induced_rank(s1, t1, m1) == induced_rank(s2, t2, m2);
  return presentation_iso(induced_cokernel(t1, m1), induced_cokernel(t2, m2));
}

void require_same_base(const GradedPresentation& a, const GradedPresentation& b) {
  if (!(a.monoid == b.monoid) || !(a.ring == b.ring))
    throw InstanceMismatch("graded morphism between different monoids or rings");
}

}  // namespace

// ---------------------------------------------------------------- graded morphisms

std::vector<Scalar> image_in_component(const GradedMorphism& eta, const MonoidElement& g,
                                       const std::vector<RelationTerm>& element) {
  const auto& m = eta.target.monoid;
  const auto& ring = eta.target.ring;
  const auto gens = component_generators(eta.target, g);
  std::vector<Scalar> v(gens.size(), Scalar(0));
  for (const auto& t : element) {
    auto j = eta.source.generator_index(t.gen);
    if (!j) throw ValidationError("unknown source generator '" + t.gen + "'");
    for (const auto& img : eta.images.at(*j)) {
      auto q = eta.target.generator_index(img.gen);
      if (!q) throw ValidationError("unknown target generator '" + img.gen + "'");
      auto landed = m.compose(m.compose(t.shift, img.shift), eta.target.generators[*q].degree);
      if (landed != g) throw ValidationError("image term of " + t.gen + " is not homogeneous of degree " + m.to_string(g));
      auto pos = position_in(gens, *q);
      v[pos] = ring.add(v[pos], ring.mul(t.coeff, img.coeff));
    }
  }
  return v;
}

Report check_graded_morphism(const GradedMorphism& eta) {
  Report report;
  const auto& src = eta.source;
  const auto& dst = eta.target;
  if (!(src.monoid == dst.monoid) || !(src.ring == dst.ring)) {
    report.fail("compatible", "source and target differ in monoid or ring");
    return report;
  }
  if (eta.images.size() != src.generators.size()) {
    report.fail("images", "expected one image per source generator");
    return report;
  }
  for (std::size_t j = 0; j < src.generators.size(); ++j)
    for (const auto& t : eta.images[j]) {
      auto q = dst.generator_index(t.gen);
      if (!q) {
        report.fail("image_generator", src.generators[j].id + ": unknown target generator '" + t.gen + "'");
        continue;
      }
      if (!dst.monoid.contains(t.shift) ||
          dst.monoid.compose(t.shift, dst.generators[*q].degree) != src.generators[j].degree)
        report.fail("degree_preservation", src.generators[j].id + ": term on " + t.gen + " has wrong degree");
    }
  if (!report.pass()) return report;
  for (std::size_t k = 0; k < src.relations.size(); ++k) {
    const auto& z = src.relations[k];
    auto v = image_in_component(eta, z.degree, z.terms);
    auto comp = component(dst, z.degree);
    if (!in_row_span(comp.relations, v))
      report.fail("relations_respected", "source relation " + std::to_string(k) + " does not map into target relations");
  }
  if (report.entries().empty()) report.add("graded_morphism", true);
  return report;
}

GradedMorphism identity_graded_morphism(const GradedPresentation& p) {
  GradedMorphism eta{p, p, {}};
  for (const auto& g : p.generators) eta.images.push_back({{Scalar(1), p.monoid.identity(), g.id}});
  return eta;
}

GradedMorphism normalized(const GradedMorphism& eta) {
  GradedMorphism out{eta.source, eta.target, {}};
  const auto& m = eta.target.monoid;
  const auto& ring = eta.target.ring;
  for (const auto& image : eta.images) {
    std::vector<RelationTerm> merged;
    for (const auto& t : image) {
      auto it = std::find_if(merged.begin(), merged.end(),
                             [&](const RelationTerm& x) { return x.gen == t.gen && x.shift == t.shift; });
      if (it == merged.end())
        merged.push_back({ring.normalize(t.coeff), t.shift, t.gen});
      else
        it->coeff = ring.add(it->coeff, t.coeff);
    }
    std::erase_if(merged, [&](const RelationTerm& x) { return ring.is_zero(x.coeff); });
    std::sort(merged.begin(), merged.end(), [&](const RelationTerm& a, const RelationTerm& b) {
      auto ia = *eta.target.generator_index(a.gen);
      auto ib = *eta.target.generator_index(b.gen);
      if (ia != ib) return ia < ib;
      return m.canonical_less(a.shift, b.shift);
    });
    out.images.push_back(std::move(merged));
  }
  return out;
}

bool same_terms(const GradedMorphism& a, const GradedMorphism& b) {
  auto na = normalized(a);
  auto nb = normalized(b);
  if (na.images.size() != nb.images.size()) return false;
  for (std::size_t j = 0; j < na.images.size(); ++j) {
    const auto& x = na.images[j];
    const auto& y = nb.images[j];
    if (x.size() != y.size()) return false;
    for (std::size_t t = 0; t < x.size(); ++t)
      if (x[t].gen != y[t].gen || x[t].shift != y[t].shift || x[t].coeff != y[t].coeff) return false;
  }
  return true;
}

GradedMorphism compose(const GradedMorphism& second, const GradedMorphism& first) {
  require_same_base(first.target, second.source);
  const auto& m = first.source.monoid;
  const auto& ring = first.source.ring;
  GradedMorphism out{first.source, second.target, {}};
  for (const auto& image : first.images) {
    std::vector<RelationTerm> terms;
    for (const auto& t : image) {
      auto q = second.source.generator_index(t.gen);
      if (!q) throw ValidationError("composition: unknown intermediate generator '" + t.gen + "'");
      for (const auto& u : second.images.at(*q))
        terms.push_back({ring.mul(t.coeff, u.coeff), m.compose(t.shift, u.shift), u.gen});
    }
    out.images.push_back(std::move(terms));
  }
  return normalized(out);
}

// ---------------------------------------------------------------- alpha / beta

std::size_t alpha_generator(const FramedDiagram& d, std::size_t frame, std::size_t v) {
  std::size_t offset = 0;
  for (std::size_t i = 0; i < frame; ++i) offset += d.modules[i].generators;
  return offset + v;
}

GradedPresentation alpha(const FramedDiagram& d) {
  require_valid(d);
  GradedPresentation p;
  p.monoid = d.monoid;
  p.ring = d.ring;
  const auto e = d.monoid.identity();
  for (std::size_t i = 0; i < d.frames.size(); ++i)
    for (std::size_t v = 0; v < d.modules[i].generators; ++v)
      p.generators.push_back({"e" + std::to_string(p.generators.size()), d.frames[i].degree});

  for (std::size_t i = 0; i < d.frames.size(); ++i) {
    const auto& rel = d.modules[i].relations;
    for (std::size_t r = 0; r < rel.rows(); ++r) {
      HomogeneousRelation z{d.frames[i].degree, {}};
      for (std::size_t v = 0; v < rel.cols(); ++v)
        if (!d.ring.is_zero(rel(r, v))) z.terms.push_back({rel(r, v), e, p.generators[alpha_generator(d, i, v)].id});
      p.relations.push_back(std::move(z));
    }
  }
  for (std::size_t i = 0; i < d.frames.size(); ++i)
    for (std::size_t j = 0; j < d.frames.size(); ++j) {
      if (i == j) continue;
      auto f = d.monoid.left_divide(d.frames[i].degree, d.frames[j].degree);
      if (!f) continue;
      const auto& t = d.transition(i, j);
      for (std::size_t v = 0; v < d.modules[i].generators; ++v) {
        HomogeneousRelation z{d.frames[j].degree, {}};
        z.terms.push_back({Scalar(1), *f, p.generators[alpha_generator(d, i, v)].id});
        for (std::size_t u = 0; u < d.modules[j].generators; ++u)
          if (!d.ring.is_zero(t(u, v)))
            z.terms.push_back({d.ring.neg(t(u, v)), e, p.generators[alpha_generator(d, j, u)].id});
        p.relations.push_back(std::move(z));
      }
    }
  return p;
}

std::shared_ptr<const PresentationModule> beta(const GradedPresentation& p) {
  return std::make_shared<const PresentationModule>(p);
}

FramedDiagram extract_diagram(const GradedPresentation& p, std::vector<MonoidElement> frame_degrees) {
  require_valid(p);
  p.monoid.sort_canonical(frame_degrees);
  FramedDiagram d;
  d.monoid = p.monoid;
  d.ring = p.ring;
  for (std::size_t i = 0; i < frame_degrees.size(); ++i) {
    d.frames.push_back({"h" + std::to_string(i), frame_degrees[i]});
    d.modules.push_back(component(p, frame_degrees[i]));
  }
  for (std::size_t i = 0; i < frame_degrees.size(); ++i)
    for (std::size_t j = 0; j < frame_degrees.size(); ++j)
      if (p.monoid.divides(frame_degrees[i], frame_degrees[j]))
        d.transitions.emplace(std::pair{i, j}, structure_map(p, frame_degrees[i], frame_degrees[j]));
  return d;
}

FramedDiagram extract_diagram(const GradedPresentation& p) { return extract_diagram(p, framing_set(p)); }

GradedMorphism alpha_on_morphism(const DiagramMorphism& xi) {
  auto check = check_morphism(xi);
  if (!check.pass()) throw ValidationError("not a diagram morphism: " + check.first_failure());
  GradedMorphism eta{alpha(xi.source), alpha(xi.target), {}};
  const auto e = xi.source.monoid.identity();
  for (std::size_t i = 0; i < xi.source.frames.size(); ++i) {
    const auto& mat = xi.maps[i];
    for (std::size_t v = 0; v < mat.cols(); ++v) {
      std::vector<RelationTerm> image;
      for (std::size_t u = 0; u < mat.rows(); ++u)
        if (!xi.source.ring.is_zero(mat(u, v)))
          image.push_back({mat(u, v), e, eta.target.generators[alpha_generator(xi.target, i, u)].id});
      eta.images.push_back(std::move(image));
    }
  }
  return eta;
}

DiagramMorphism beta_on_morphism(const GradedMorphism& eta, std::vector<MonoidElement> frame_degrees) {
  auto check = check_graded_morphism(eta);
  if (!check.pass()) throw ValidationError("not a graded morphism: " + check.first_failure());
  eta.source.monoid.sort_canonical(frame_degrees);
  DiagramMorphism xi{extract_diagram(eta.source, frame_degrees), extract_diagram(eta.target, frame_degrees), {}};
  const auto& m = eta.source.monoid;
  for (const auto& h : frame_degrees) {
    const auto src = component_generators(eta.source, h);
    Matrix mat(eta.source.ring, component_generators(eta.target, h).size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      const auto& g = eta.source.generators[src[c]];
      auto shift = *m.left_divide(g.degree, h);
      auto col = image_in_component(eta, h, {{Scalar(1), shift, g.id}});
      for (std::size_t r = 0; r < col.size(); ++r) mat(r, c) = col[r];
    }
    xi.maps.push_back(std::move(mat));
  }
  return xi;
}

DiagramMorphism beta_on_morphism(const GradedMorphism& eta) {
  auto degrees = eta.source.degrees();
  for (auto& g : eta.target.degrees()) degrees.push_back(g);
  return beta_on_morphism(eta, framing_set_of_degrees(eta.source.monoid, std::move(degrees)));
}

// ---------------------------------------------------------------- round trips

namespace {

std::vector<MonoidElement> unique_in_order(std::vector<MonoidElement> v) {
  std::vector<MonoidElement> out;
  for (auto& g : v)
    if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(std::move(g));
  return out;
}

// Checks the comparison maps cmp[g]: left[g] → right[g] are isomorphisms
// and natural with respect to the two families of structure maps.
template <typename LeftMap, typename RightMap>
void compare_families(Report& report, const GoodMonoid& m, const std::vector<MonoidElement>& degrees,
                      const std::vector<FpPresentation>& left, const std::vector<FpPresentation>& right,
                      const std::vector<Matrix>& cmp, LeftMap left_map, RightMap right_map) {
  for (std::size_t a = 0; a < degrees.size(); ++a) {
    CheckEntry entry{"component", true, {}, degree_to_json(m, degrees[a])};
    const bool iso = presentation_iso(left[a], right[a]);
    const bool explicit_iso = iso && induced_is_iso(left[a], right[a], cmp[a]);
    entry.pass = iso && explicit_iso;
    entry.detail = module_summary(left[a]) + " vs " + module_summary(right[a]);
    if (iso && !explicit_iso) entry.detail += "; comparison map is not an isomorphism";
    report.add(std::move(entry));
  }
  for (std::size_t a = 0; a < degrees.size(); ++a)
    for (std::size_t b = 0; b < degrees.size(); ++b) {
      if (a == b || !m.divides(degrees[a], degrees[b])) continue;
      const Matrix lm = left_map(degrees[a], degrees[b]);
      const Matrix rm = right_map(degrees[a], degrees[b]);
      CheckEntry entry{"structure_map", true, {},
                       {{"from", degree_to_json(m, degrees[a])}, {"to", degree_to_json(m, degrees[b])}}};
      const bool natural = maps_equal_modulo(rm * cmp[a], cmp[b] * lm, right[b]);
      const bool ranks = same_induced_map_type(left[a], left[b], lm, right[a], right[b], rm);
      entry.pass = natural && ranks;
      if (!natural) entry.detail = "comparison maps do not commute with structure maps";
      if (!ranks) entry.detail += (entry.detail.empty() ? "" : "; ") + std::string("induced map ranks differ");
      report.add(std::move(entry));
    }
}

}  // namespace

Report roundtrip_check(const FramedDiagram& d, const std::vector<MonoidElement>& samples) {
  Report report;
  auto valid = validate_diagram(d);
  if (!valid.pass()) {
    report.fail("diagram", valid.first_failure());
    return report;
  }
  const GradedPresentation p = alpha(d);
  const PresentationModule back(p);
  const DiagramModule original(d);

  std::vector<MonoidElement> degrees;
  for (const auto& f : d.frames) degrees.push_back(f.degree);
  for (const auto& g : samples) degrees.push_back(g);
  degrees = unique_in_order(std::move(degrees));

  std::vector<FpPresentation> left, right;
  std::vector<Matrix> cmp;
  for (const auto& g : degrees) {
    const std::size_t i = d.greatest_frame_below(g);
    left.push_back(original.evaluate(g));
    right.push_back(back.evaluate(g));
    // Generator v of M_{h_i} ↦ the α-generator (i, v) shifted into degree g.
    const auto gens = component_generators(p, g);
    std::vector<std::size_t> targets;
    for (std::size_t v = 0; v < d.modules[i].generators; ++v)
      targets.push_back(position_in(gens, alpha_generator(d, i, v)));
    cmp.push_back(unit_columns(d.ring, gens.size(), targets));
  }
  compare_families(
      report, d.monoid, degrees, left, right, cmp,
      [&](const MonoidElement& a, const MonoidElement& b) { return original.morphism(a, b); },
      [&](const MonoidElement& a, const MonoidElement& b) { return back.morphism(a, b); });
  return report;
}

Report roundtrip_check(const GradedPresentation& p, const std::vector<MonoidElement>& samples) {
  Report report;
  auto valid = validate_presentation(p);
  if (!valid.pass()) {
    report.fail("presentation", valid.first_failure());
    return report;
  }
  const FramedDiagram d = extract_diagram(p);
  auto dv = validate_diagram(d);
  report.add("extracted_diagram", dv.pass(), dv.pass() ? "" : dv.first_failure());
  if (!dv.pass()) return report;
  const GradedPresentation q = alpha(d);
  const PresentationModule original(p);
  const PresentationModule back(q);

  // α-generator k corresponds to the original generator behind component
  // generator v of frame i.
  std::vector<std::size_t> source_of(q.generators.size());
  for (std::size_t i = 0; i < d.frames.size(); ++i) {
    const auto gens = component_generators(p, d.frames[i].degree);
    for (std::size_t v = 0; v < gens.size(); ++v) source_of[alpha_generator(d, i, v)] = gens[v];
  }

  const auto degrees = unique_in_order(samples);
  std::vector<FpPresentation> left, right;
  std::vector<Matrix> cmp;
  for (const auto& g : degrees) {
    left.push_back(back.evaluate(g));
    right.push_back(original.evaluate(g));
    const auto qgens = component_generators(q, g);
    const auto pgens = component_generators(p, g);
    std::vector<std::size_t> targets;
    for (auto k : qgens) targets.push_back(position_in(pgens, source_of[k]));
    cmp.push_back(unit_columns(p.ring, pgens.size(), targets));
  }
  compare_families(
      report, p.monoid, degrees, left, right, cmp,
      [&](const MonoidElement& a, const MonoidElement& b) { return back.morphism(a, b); },
      [&](const MonoidElement& a, const MonoidElement& b) { return original.morphism(a, b); });
  return report;
}

}  // namespace persrep
