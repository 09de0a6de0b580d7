#include "persrep/random.hpp"

#include <algorithm>
#include <map>

#include "persrep/error.hpp"

namespace persrep {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Merges equal (shift, gen) pairs and drops zero coefficients.
std::vector<RelationTerm> merged(const Ring& r, const std::vector<RelationTerm>& terms) {
  std::map<std::pair<std::string, MonoidElement>, Scalar> acc;
  std::vector<std::pair<std::string, MonoidElement>> order;
  for (const auto& t : terms) {
    auto key = std::pair{t.gen, t.shift};
    auto [it, fresh] = acc.emplace(key, r.zero());
    if (fresh) order.push_back(key);
    it->second = r.add(it->second, t.coeff);
  }
  std::vector<RelationTerm> out;
  for (const auto& key : order)
    if (!r.is_zero(acc.at(key))) out.push_back({acc.at(key), key.second, key.first});
  return out;
}

// Σ c·X^s·η(gen) for an element written over η's source generators.
std::vector<RelationTerm> apply(const GoodMonoid& m, const Ring& r, const GradedPresentation& source,
                                const std::vector<std::vector<RelationTerm>>& images,
                                const std::vector<RelationTerm>& element) {
  std::vector<RelationTerm> out;
  for (const auto& t : element)
    for (const auto& u : images.at(*source.generator_index(t.gen)))
      out.push_back({r.mul(t.coeff, u.coeff), m.compose(t.shift, u.shift), u.gen});
  return merged(r, out);
}

std::vector<MonoidElement> random_frames(const GoodMonoid& m, std::mt19937_64& rng, const RandomShape& shape) {
  for (;;) {
    std::vector<MonoidElement> frames{m.identity()};
    for (int k = uniform(rng, 0, static_cast<int>(shape.max_frames) - 1); k > 0; --k)
      frames.push_back(m.random_element(rng, shape.bounds));
    m.sort_canonical(frames);
    if (m.kind() == MonoidKind::Grid) {
      // Close under joins so every degree has a greatest frame below it.
      bool grew = true;
      while (grew && frames.size() <= shape.max_frames) {
        grew = false;
        const auto current = frames;
        for (std::size_t i = 0; i < current.size(); ++i)
          for (std::size_t j = i + 1; j < current.size(); ++j) {
            std::vector<MonoidElement> pair{current[i], current[j]};
            for (const auto& top : m.plcm(pair))
              if (std::find(frames.begin(), frames.end(), top) == frames.end()) {
                frames.push_back(top);
                grew = true;
              }
          }
        m.sort_canonical(frames);
      }
    }
    if (frames.size() <= shape.max_frames) return frames;
  }
}

Matrix random_relations(const Ring& r, std::size_t n, std::size_t count, std::mt19937_64& rng) {
  Matrix rel(r, 0, n);
  for (std::size_t k = 0; k < count && n > 0; ++k) {
    std::vector<Scalar> row(n, r.zero());
    for (auto& x : row) x = uniform(rng, 0, 1) ? random_scalar(r, rng) : r.zero();
    bool zero = std::all_of(row.begin(), row.end(), [&](const Scalar& x) { return r.is_zero(x); });
    if (!zero) rel.append_row(row);
  }
  return rel;
}

// Over a field: reduced basis of the relation row space.
Matrix reduced_rows(const Matrix& rel) {
  if (!rel.ring().is_field()) return rel;
  auto ech = row_echelon(rel);
  Matrix out(rel.ring(), 0, rel.cols());
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) out.append_row(ech.reduced.row(i));
  return out;
}

}  // namespace

Scalar random_scalar(const Ring& r, std::mt19937_64& rng) {
  switch (r.kind()) {
    case RingKind::PrimeField:
      return r.from_int(uniform(rng, 0, static_cast<int>(std::min<std::uint64_t>(r.modulus(), 1u << 20)) - 1));
    case RingKind::Integer: return r.from_int(uniform(rng, -3, 3));
    case RingKind::Rational: {
      Scalar q(uniform(rng, -3, 3), uniform(rng, 0, 3) == 0 ? 2 : 1);
      q.canonicalize();
      return q;
    }
  }
  return r.zero();
}

Scalar random_nonzero_scalar(const Ring& r, std::mt19937_64& rng) {
  for (;;) {
    auto s = random_scalar(r, rng);
    if (!r.is_zero(s)) return s;
  }
}

Matrix random_matrix(const Ring& r, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Matrix out(r, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = random_scalar(r, rng);
  return out;
}

std::vector<RelationTerm> random_element_at(const GradedPresentation& p, const MonoidElement& g,
                                            std::mt19937_64& rng) {
  std::vector<RelationTerm> out;
  for (std::size_t j : component_generators(p, g)) {
    auto c = random_scalar(p.ring, rng);
    if (!p.ring.is_zero(c)) out.push_back({c, *p.monoid.left_divide(p.generators[j].degree, g), p.generators[j].id});
  }
  return out;
}

GradedPresentation random_presentation(const GoodMonoid& m, const Ring& r, std::mt19937_64& rng,
                                       const RandomShape& shape) {
  GradedPresentation p;
  p.monoid = m;
  p.ring = r;
  const int gens = uniform(rng, 1, static_cast<int>(shape.max_generators));
  for (int k = 0; k < gens; ++k) p.generators.push_back({"g" + std::to_string(k), m.random_element(rng, shape.bounds)});
  SampleBounds small = shape.bounds;
  small.max_coordinate = std::max<std::uint64_t>(1, small.max_coordinate / 2);
  small.max_word_length = std::max<std::size_t>(1, small.max_word_length / 2);
  const int rels = uniform(rng, 0, static_cast<int>(shape.max_relations));
  for (int k = 0; k < rels; ++k) {
    const auto& anchor = p.generators[uniform(rng, 0, gens - 1)].degree;
    auto degree = m.compose(m.random_element(rng, small), anchor);
    auto terms = merged(r, random_element_at(p, degree, rng));
    if (!terms.empty()) p.relations.push_back({degree, std::move(terms)});
  }
  return p;
}

FramedDiagram random_diagram(const GoodMonoid& m, const Ring& r, std::mt19937_64& rng, const RandomShape& shape) {
  FramedDiagram d;
  d.monoid = m;
  d.ring = r;
  const auto degrees = random_frames(m, rng, shape);
  const int max_gens = static_cast<int>(shape.max_generators);
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    d.frames.push_back({"h" + std::to_string(i), degrees[i]});

    std::vector<std::size_t> preds;
    for (std::size_t j = 0; j < i; ++j) {
      if (!m.divides(degrees[j], degrees[i])) continue;
      bool maximal = true;
      for (std::size_t k = 0; k < i; ++k)
        if (k != j && m.divides(degrees[j], degrees[k]) && m.divides(degrees[k], degrees[i])) maximal = false;
      if (maximal) preds.push_back(j);
    }

    // Pushout of the predecessor modules: blocks of generators, their
    // relations, and identifications along common lower frames.
    std::size_t width = 0;
    std::vector<std::size_t> offset;
    for (auto j : preds) {
      offset.push_back(width);
      width += d.modules[j].generators;
    }
    Matrix rel(r, 0, width);
    for (std::size_t a = 0; a < preds.size(); ++a) {
      const auto& block = d.modules[preds[a]].relations;
      for (std::size_t row = 0; row < block.rows(); ++row) {
        std::vector<Scalar> v(width, r.zero());
        for (std::size_t c = 0; c < block.cols(); ++c) v[offset[a] + c] = block(row, c);
        rel.append_row(v);
      }
    }
    for (std::size_t a = 0; a < preds.size(); ++a)
      for (std::size_t b = a + 1; b < preds.size(); ++b)
        for (std::size_t q = 0; q < i; ++q) {
          if (!m.divides(degrees[q], degrees[preds[a]]) || !m.divides(degrees[q], degrees[preds[b]])) continue;
          const auto& ta = d.transition(q, preds[a]);
          const auto& tb = d.transition(q, preds[b]);
          for (std::size_t v = 0; v < d.modules[q].generators; ++v) {
            std::vector<Scalar> row(width, r.zero());
            for (std::size_t u = 0; u < ta.rows(); ++u) row[offset[a] + u] = ta(u, v);
            for (std::size_t u = 0; u < tb.rows(); ++u) row[offset[b] + u] = r.sub(row[offset[b] + u], tb(u, v));
            if (!std::all_of(row.begin(), row.end(), [&](const Scalar& x) { return r.is_zero(x); }))
              rel.append_row(row);
          }
        }

    // Over a field, replace the pushout by its quotient space in a basis.
    Matrix to_base = Matrix::identity(r, width);
    if (r.is_field() && width > 0) {
      auto ech = row_echelon(rel);
      std::vector<std::size_t> free_cols;
      for (std::size_t c = 0; c < width; ++c)
        if (std::find(ech.pivots.begin(), ech.pivots.end(), c) == ech.pivots.end()) free_cols.push_back(c);
      Matrix proj(r, free_cols.size(), width);
      for (std::size_t f = 0; f < free_cols.size(); ++f) proj(f, free_cols[f]) = r.one();
      for (std::size_t row = 0; row < ech.pivots.size(); ++row)
        for (std::size_t f = 0; f < free_cols.size(); ++f)
          proj(f, ech.pivots[row]) = r.neg(ech.reduced(row, free_cols[f]));
      to_base = proj;
      rel = Matrix(r, 0, free_cols.size());
    }

    // Random map out of the base into the new module, plus extra relations.
    const std::size_t n = uniform(rng, 0, max_gens);
    Matrix s = random_matrix(r, n, to_base.rows(), rng);
    Matrix relations = rel.rows() ? rel * s.transpose() : Matrix(r, 0, n);
    auto extra = random_relations(r, n, uniform(rng, 0, static_cast<int>(shape.max_relations)), rng);
    relations = reduced_rows(stack(relations, extra));
    d.modules.emplace_back(r, n, relations);

    const Matrix into = s * to_base;
    for (std::size_t a = 0; a < preds.size(); ++a) {
      Matrix t(r, n, d.modules[preds[a]].generators);
      for (std::size_t u = 0; u < t.rows(); ++u)
        for (std::size_t v = 0; v < t.cols(); ++v) t(u, v) = into(u, offset[a] + v);
      d.transitions.emplace(std::pair{preds[a], i}, std::move(t));
    }
    complete_transitions(d);
  }
  require_valid(d);
  return d;
}

GradedMorphism random_graded_morphism(const GradedPresentation& source, const GradedPresentation& target,
                                      std::mt19937_64& rng) {
  if (!(source.monoid == target.monoid) || !(source.ring == target.ring))
    throw InstanceMismatch("morphism endpoints use different monoids or rings");
  GradedMorphism eta{source, target, {}};
  for (const auto& g : source.generators) eta.images.push_back(merged(source.ring, random_element_at(target, g.degree, rng)));
  for (const auto& rho : source.relations) {
    auto image = apply(source.monoid, source.ring, source, eta.images, rho.terms);
    if (!image.empty()) eta.target.relations.push_back({rho.degree, std::move(image)});
  }
  return eta;
}

std::vector<MonoidElement> sample_degrees(const GoodMonoid& m, std::size_t n, std::mt19937_64& rng,
                                          const SampleBounds& bounds) {
  std::vector<MonoidElement> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(m.random_element(rng, bounds));
  return out;
}

}  // namespace persrep
