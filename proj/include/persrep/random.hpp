#pragma once

#include <random>
#include <vector>

#include "persrep/diagram.hpp"
#include "persrep/functors.hpp"
#include "persrep/graded.hpp"

namespace persrep {

struct RandomShape {
  std::size_t max_generators = 3;
  std::size_t max_relations = 3;
  std::size_t max_frames = 4;
  SampleBounds bounds{};
};

Scalar random_scalar(const Ring& r, std::mt19937_64& rng);
Scalar random_nonzero_scalar(const Ring& r, std::mt19937_64& rng);
Matrix random_matrix(const Ring& r, std::size_t rows, std::size_t cols, std::mt19937_64& rng);

// Random homogeneous element of p at degree g over p's generators.
std::vector<RelationTerm> random_element_at(const GradedPresentation& p, const MonoidElement& g,
                                            std::mt19937_64& rng);

GradedPresentation random_presentation(const GoodMonoid& m, const Ring& r, std::mt19937_64& rng,
                                       const RandomShape& shape = {});

// Valid by construction: each frame's module is a quotient of the
// pushout of its maximal predecessor frames.
FramedDiagram random_diagram(const GoodMonoid& m, const Ring& r, std::mt19937_64& rng,
                             const RandomShape& shape = {});

// Random η : source → target′ where target′ is target with the images of
// source relations appended as relations, so η is well defined.
GradedMorphism random_graded_morphism(const GradedPresentation& source, const GradedPresentation& target,
                                      std::mt19937_64& rng);

std::vector<MonoidElement> sample_degrees(const GoodMonoid& m, std::size_t n, std::mt19937_64& rng,
                                          const SampleBounds& bounds = {});

}  // namespace persrep
