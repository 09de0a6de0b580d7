#include "persrep/diagram.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "persrep/error.hpp"

namespace persrep {

// ---------------------------------------------------------------- FramedDiagram

std::optional<std::size_t> FramedDiagram::frame_index(const std::string& id) const {
  for (std::size_t i = 0; i < frames.size(); ++i)
    if (frames[i].id == id) return i;
  return std::nullopt;
}

std::optional<std::size_t> FramedDiagram::frame_at(const MonoidElement& degree) const {
  for (std::size_t i = 0; i < frames.size(); ++i)
    if (frames[i].degree == degree) return i;
  return std::nullopt;
}

const Matrix& FramedDiagram::transition(std::size_t from, std::size_t to) const {
  auto it = transitions.find({from, to});
  if (it == transitions.end())
    throw ValidationError("no transition " + frames.at(from).id + " -> " + frames.at(to).id);
  return it->second;
}

std::size_t FramedDiagram::greatest_frame_below(const MonoidElement& g) const {
  std::vector<std::size_t> below;
  for (std::size_t i = 0; i < frames.size(); ++i)
    if (monoid.divides(frames[i].degree, g)) below.push_back(i);
  for (auto i : below)
    if (std::all_of(below.begin(), below.end(),
                    [&](std::size_t j) { return monoid.divides(frames[j].degree, frames[i].degree); }))
      return i;
  throw ValidationError("frames below " + monoid.to_string(g) + " have no greatest element");
}

void complete_transitions(FramedDiagram& d) {
  const std::size_t n = d.frames.size();
  std::vector<std::pair<std::size_t, std::size_t>> missing;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!d.monoid.divides(d.frames[i].degree, d.frames[j].degree) || d.transitions.count({i, j})) continue;
      if (i == j)
        d.transitions.emplace(std::pair{i, i}, Matrix::identity(d.ring, d.modules.at(i).generators));
      else
        missing.emplace_back(i, j);
    }
  bool progress = true;
  while (!missing.empty() && progress) {
    progress = false;
    for (auto it = missing.begin(); it != missing.end();) {
      auto [i, j] = *it;
      std::optional<Matrix> found;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        auto a = d.transitions.find({i, k});
        auto b = d.transitions.find({k, j});
        if (a == d.transitions.end() || b == d.transitions.end()) continue;
        Matrix candidate = b->second * a->second;
        if (!found) {
          found = std::move(candidate);
        } else if (!maps_equal_modulo(*found, candidate, d.modules.at(j))) {
          throw ValidationError("ambiguous composite transition " + d.frames[i].id + " -> " + d.frames[j].id +
                                " (routes through different frames disagree)");
        }
      }
      if (found) {
        d.transitions.emplace(std::pair{i, j}, std::move(*found));
        it = missing.erase(it);
        progress = true;
      } else {
        ++it;
      }
    }
  }
  if (!missing.empty())
    throw ValidationError("missing transition " + d.frames[missing.front().first].id + " -> " +
                          d.frames[missing.front().second].id);
}

Report validate_diagram(const FramedDiagram& d) {
  Report report;
  const auto& m = d.monoid;
  const std::size_t n = d.frames.size();
  std::set<std::string> ids;
  bool degrees_ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& f = d.frames[i];
    if (f.id.empty()) report.fail("frame_id", "frames[" + std::to_string(i) + "]: empty id");
    if (!ids.insert(f.id).second) report.fail("frame_unique", "duplicate frame id '" + f.id + "'");
    if (!m.contains(f.degree)) {
      report.fail("frame_degree", "frame " + f.id + ": degree outside " + m.describe());
      degrees_ok = false;
    }
    for (std::size_t j = 0; j < i; ++j)
      if (d.frames[j].degree == f.degree)
        report.fail("frame_unique", "frames " + d.frames[j].id + " and " + f.id + " share a degree");
  }
  if (!degrees_ok) return report;
  if (!d.frame_at(m.identity()))
    report.fail("identity_frame", "identity degree " + m.to_string(m.identity()) +
                                      " missing: e is an element in each framing set");
  if (d.modules.size() != n) {
    report.fail("modules", "expected " + std::to_string(n) + " modules, got " + std::to_string(d.modules.size()));
    return report;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!(d.modules[i].ring == d.ring)) report.fail("module_ring", "module " + d.frames[i].id + " has wrong ring");

  auto name = [&](std::size_t i, std::size_t j) { return d.frames[i].id + "->" + d.frames[j].id; };
  auto below = [&](std::size_t i, std::size_t j) { return m.divides(d.frames[i].degree, d.frames[j].degree); };

  bool shapes_ok = true;
  for (const auto& [key, mat] : d.transitions) {
    auto [i, j] = key;
    if (i >= n || j >= n) {
      report.fail("transition_frame", "transition references unknown frame index");
      shapes_ok = false;
      continue;
    }
    if (!below(i, j)) report.fail("transition_comparable", name(i, j) + ": frames are not comparable");
    if (mat.rows() != d.modules[j].generators || mat.cols() != d.modules[i].generators || !(mat.ring() == d.ring)) {
      report.fail("transition_shape", name(i, j) + ": expected " + std::to_string(d.modules[j].generators) + "x" +
                                          std::to_string(d.modules[i].generators) + " matrix");
      shapes_ok = false;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (below(i, j) && !d.transitions.count({i, j})) {
        report.fail("transition_missing", name(i, j));
        shapes_ok = false;
      }
  if (!shapes_ok) return report;

  for (std::size_t i = 0; i < n; ++i) {
    const auto& id = d.transition(i, i);
    if (!maps_equal_modulo(id, Matrix::identity(d.ring, d.modules[i].generators), d.modules[i]))
      report.fail("identity_transition", name(i, i) + " is not the identity");
  }
  for (const auto& [key, mat] : d.transitions) {
    auto [i, j] = key;
    const auto& src = d.modules[i];
    const auto& dst = d.modules[j];
    Matrix images = src.relations * mat.transpose();
    for (std::size_t r = 0; r < images.rows(); ++r)
      if (!in_row_span(dst.relations, images.row(r)))
        report.fail("transition_well_defined",
                    name(i, j) + ": relation " + std::to_string(r) + " of " + d.frames[i].id + " not respected");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (i == j || j == k || !below(i, j) || !below(j, k)) continue;
        if (!maps_equal_modulo(d.transition(j, k) * d.transition(i, j), d.transition(i, k), d.modules[k]))
          report.fail("chain_compatibility", name(i, j) + "->" + d.frames[k].id + " does not compose to " + name(i, k));
      }
  // Every pair of frames needs a greatest frame below each of its plcms,
  // so that the frames below any degree have a maximum.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<MonoidElement> pair{d.frames[i].degree, d.frames[j].degree};
      for (const auto& top : m.plcm(pair)) {
        try {
          (void)d.greatest_frame_below(top);
        } catch (const ValidationError&) {
          report.fail("frame_closure", "frames below plcm " + m.to_string(top) + " of " + d.frames[i].id + "," +
                                           d.frames[j].id + " have no greatest element");
        }
      }
    }
  if (report.entries().empty()) report.add("diagram", true);
  return report;
}

void require_valid(const FramedDiagram& d) {
  auto r = validate_diagram(d);
  if (!r.pass()) throw ValidationError("invalid diagram: " + r.first_failure());
}

// ---------------------------------------------------------------- modules

bool EvaluableModule::is_iso(const MonoidElement& g1, const MonoidElement& g2) const {
  return induced_is_iso(evaluate(g1), evaluate(g2), morphism(g1, g2));
}

PresentationModule::PresentationModule(GradedPresentation p) : presentation_(std::move(p)) {
  require_valid(presentation_);
  degrees_ = presentation_.degrees();
}

FpPresentation PresentationModule::evaluate(const MonoidElement& g) const {
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(g);
    if (it != cache_.end()) return it->second;
  }
  auto value = component(presentation_, g);
  std::lock_guard lock(mutex_);
  return cache_.emplace(g, std::move(value)).first->second;
}

Matrix PresentationModule::morphism(const MonoidElement& g1, const MonoidElement& g2) const {
  return structure_map(presentation_, g1, g2);
}

const std::vector<MonoidElement>& PresentationModule::framing_set() const {
  std::lock_guard lock(mutex_);
  if (!framing_) framing_ = framing_set_of_degrees(presentation_.monoid, degrees_);
  return *framing_;
}

DiagramModule::DiagramModule(FramedDiagram d) : diagram_(std::move(d)) { require_valid(diagram_); }

FpPresentation DiagramModule::evaluate(const MonoidElement& g) const {
  return diagram_.modules[diagram_.greatest_frame_below(g)];
}

Matrix DiagramModule::morphism(const MonoidElement& g1, const MonoidElement& g2) const {
  if (!diagram_.monoid.divides(g1, g2))
    throw DivisibilityError(diagram_.monoid.to_string(g1) + " does not divide " + diagram_.monoid.to_string(g2));
  return diagram_.transition(diagram_.greatest_frame_below(g1), diagram_.greatest_frame_below(g2));
}

// ---------------------------------------------------------------- frames

MonoidElement frame_of(const PresentationModule& m, const MonoidElement& g) {
  const auto& monoid = m.monoid();
  const auto& h = m.framing_set();
  if (std::find(h.begin(), h.end(), g) != h.end()) return g;
  std::vector<MonoidElement> below;
  for (const auto& l : m.degrees())
    if (monoid.divides(l, g)) below.push_back(l);
  std::vector<MonoidElement> candidates;
  for (auto& c : monoid.plcm(below))
    if (monoid.divides(c, g)) candidates.push_back(std::move(c));
  if (candidates.empty()) throw Error("no plcm of D'(g) divides " + monoid.to_string(g));
  monoid.sort_canonical(candidates);
  return candidates.front();
}

std::vector<MonoidElement> interval(const GoodMonoid& monoid, const MonoidElement& h, const MonoidElement& g,
                                    std::size_t samples, std::uint64_t seed) {
  if (!monoid.divides(h, g))
    throw DivisibilityError(monoid.to_string(h) + " does not divide " + monoid.to_string(g));
  std::vector<MonoidElement> out;
  switch (monoid.kind()) {
    case MonoidKind::Nat:
      for (auto x = h.as_nat(); x <= g.as_nat(); ++x) out.push_back(MonoidElement::nat(x));
      break;
    case MonoidKind::Grid: {
      const auto& lo = h.as_grid();
      const auto& hi = g.as_grid();
      MonoidElement::Tuple cur = lo;
      for (;;) {
        out.push_back(MonoidElement::grid(cur));
        std::size_t i = 0;
        while (i < cur.size() && cur[i] == hi[i]) {
          cur[i] = lo[i];
          ++i;
        }
        if (i == cur.size()) break;
        ++cur[i];
      }
      break;
    }
    case MonoidKind::FreeWord: {
      const auto& w = g.as_word();
      for (auto len = h.as_word().size(); len <= w.size(); ++len)
        out.push_back(MonoidElement::word(w.substr(w.size() - len)));
      break;
    }
    case MonoidKind::QPlus: {
      out.push_back(h);
      out.push_back(g);
      const mpq_class lo = h.as_rational();
      const mpq_class width = g.as_rational() - lo;
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<unsigned long> den(1, 64);
      for (std::size_t s = 0; s < samples && sgn(width) > 0; ++s) {
        unsigned long d = den(rng);
        std::uniform_int_distribution<unsigned long> num(0, d);
        out.push_back(MonoidElement::rational(lo + width * mpq_class(num(rng), d)));
      }
      monoid.sort_canonical(out);
      break;
    }
  }
  return out;
}

bool verify_frame(const EvaluableModule& m, const MonoidElement& h, const MonoidElement& g,
                  const std::vector<MonoidElement>& witnesses) {
  const auto& monoid = m.monoid();
  if (!monoid.divides(h, g)) throw DivisibilityError(monoid.to_string(h) + " does not divide " + monoid.to_string(g));
  for (const auto& w : witnesses)
    if (!monoid.divides(h, w) || !monoid.divides(w, g))
      throw DivisibilityError("witness " + monoid.to_string(w) + " outside the interval");
  if (!m.is_iso(h, g)) return false;
  for (const auto& w : witnesses)
    if (w != g && !m.is_iso(h, w)) return false;
  return true;
}

bool verify_frame(const EvaluableModule& m, const MonoidElement& h, const MonoidElement& g) {
  return verify_frame(m, h, g, interval(m.monoid(), h, g));
}

std::optional<std::size_t> stationarity_index(const EvaluableModule& m, const std::vector<MonoidElement>& seq) {
  const auto& monoid = m.monoid();
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (!monoid.divides(seq[i], seq[i + 1]))
      throw ValidationError("sequence is not monotone at position " + std::to_string(i) + ": " +
                            monoid.to_string(seq[i]) + " does not divide " + monoid.to_string(seq[i + 1]));
  if (seq.empty()) return std::nullopt;
  std::size_t d = seq.size() - 1;
  while (d > 0 && m.is_iso(seq[d - 1], seq[d])) --d;
  return d;
}

std::vector<MonoidElement> reduce_framing_set(const EvaluableModule& m, std::vector<MonoidElement> framing) {
  const auto& monoid = m.monoid();
  monoid.sort_canonical(framing);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = framing.rbegin(); it != framing.rend() && !changed; ++it) {
      const auto& h2 = *it;
      for (const auto& h1 : framing) {
        if (h1 == h2 || !monoid.divides(h1, h2)) continue;
        if (verify_frame(m, h1, h2)) {
          framing.erase(std::next(it).base());
          changed = true;
          break;
        }
      }
    }
  }
  return framing;
}

// ---------------------------------------------------------------- morphisms

Report check_morphism(const DiagramMorphism& xi) {
  Report report;
  const auto& s = xi.source;
  const auto& t = xi.target;
  if (!(s.monoid == t.monoid) || !(s.ring == t.ring)) {
    report.fail("compatible", "source and target differ in monoid or ring");
    return report;
  }
  if (s.frames.size() != t.frames.size() || xi.maps.size() != s.frames.size()) {
    report.fail("frames", "frame counts differ");
    return report;
  }
  for (std::size_t i = 0; i < s.frames.size(); ++i)
    if (s.frames[i].degree != t.frames[i].degree) {
      report.fail("frames", "frame " + std::to_string(i) + " degrees differ");
      return report;
    }
  for (std::size_t i = 0; i < xi.maps.size(); ++i) {
    const auto& mat = xi.maps[i];
    if (mat.rows() != t.modules[i].generators || mat.cols() != s.modules[i].generators) {
      report.fail("shape", "map at " + s.frames[i].id + " has wrong shape");
      return report;
    }
    if (!map_is_well_defined(s.modules[i], t.modules[i], mat))
      report.fail("well_defined", "map at " + s.frames[i].id + " does not respect relations");
  }
  for (std::size_t i = 0; i < s.frames.size(); ++i)
    for (std::size_t j = 0; j < s.frames.size(); ++j) {
      if (i == j || !s.monoid.divides(s.frames[i].degree, s.frames[j].degree)) continue;
      // ψ_{ij} ∘ ξ_i = ξ_j ∘ φ_{ij} modulo relations of N_j.
      if (!maps_equal_modulo(t.transition(i, j) * xi.maps[i], xi.maps[j] * s.transition(i, j), t.modules[j]))
        report.fail("commuting_square", s.frames[i].id + "->" + s.frames[j].id);
    }
  if (report.entries().empty()) report.add("morphism", true);
  return report;
}

DiagramMorphism identity_morphism(const FramedDiagram& d) {
  DiagramMorphism xi{d, d, {}};
  for (const auto& m : d.modules) xi.maps.push_back(Matrix::identity(d.ring, m.generators));
  return xi;
}

DiagramMorphism zero_morphism(const FramedDiagram& source, const FramedDiagram& target) {
  DiagramMorphism xi{source, target, {}};
  for (std::size_t i = 0; i < source.modules.size(); ++i)
    xi.maps.emplace_back(source.ring, target.modules.at(i).generators, source.modules[i].generators);
  return xi;
}

DiagramMorphism compose(const DiagramMorphism& second, const DiagramMorphism& first) {
  if (first.maps.size() != second.maps.size()) throw InstanceMismatch("morphisms over different frames");
  DiagramMorphism out{first.source, second.target, {}};
  for (std::size_t i = 0; i < first.maps.size(); ++i) out.maps.push_back(second.maps[i] * first.maps[i]);
  return out;
}

}  // namespace persrep
