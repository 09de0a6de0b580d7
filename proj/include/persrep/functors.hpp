#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "persrep/diagram.hpp"
#include "persrep/graded.hpp"
#include "persrep/report.hpp"

namespace persrep {

// Degree-preserving map of graded modules: images[j] is the image of
// source generator j, a homogeneous element of the target of the same
// degree written as Σ coeff·X^shift·e_gen over target generators.
struct GradedMorphism {
  GradedPresentation source;
  GradedPresentation target;
  std::vector<std::vector<RelationTerm>> images;
};

// Degree preservation per term, and every source relation lands in the
// target relation span (checked in the target component at its degree).
Report check_graded_morphism(const GradedMorphism& eta);
GradedMorphism identity_graded_morphism(const GradedPresentation& p);
// second ∘ first, with terms normalized.
GradedMorphism compose(const GradedMorphism& second, const GradedMorphism& first);
// Merges equal (shift, gen) terms, drops zeros, sorts by target generator then shift.
GradedMorphism normalized(const GradedMorphism& eta);
// Term-by-term equality after normalization.
bool same_terms(const GradedMorphism& a, const GradedMorphism& b);

// Image of Σ coeff·X^shift·e_gen (source generator ids), a homogeneous
// element of degree g, as a vector over the target component generators at g.
std::vector<Scalar> image_in_component(const GradedMorphism& eta, const MonoidElement& g,
                                       const std::vector<RelationTerm>& element);

// Graded presentation of a framed diagram. One generator per module
// generator at each frame, carrying the frame degree; relations are the
// module relations at each frame followed by, for every comparable pair
// h_i ≺ h_j and generator 𝔤 of M_{h_i}, f·e_𝔤 − φ(𝔤) at degree h_j
// where f ⋆ h_i = h_j. The pair relation is emitted even when φ(𝔤) = 0.
GradedPresentation alpha(const FramedDiagram& d);

// Index of the α-generator for generator v of frame i.
std::size_t alpha_generator(const FramedDiagram& d, std::size_t frame, std::size_t v);

// Functor view of a presentation.
std::shared_ptr<const PresentationModule> beta(const GradedPresentation& p);

// Framed diagram of β(p) sampled at the given frame degrees (sorted
// canonically, ids h0, h1, …): components and structure maps.
FramedDiagram extract_diagram(const GradedPresentation& p, std::vector<MonoidElement> frame_degrees);
// extract_diagram at framing_set(p).
FramedDiagram extract_diagram(const GradedPresentation& p);

GradedMorphism alpha_on_morphism(const DiagramMorphism& xi);
// η evaluated at each frame degree; source/target diagrams are extract_diagram
// of η's source/target at those degrees.
DiagramMorphism beta_on_morphism(const GradedMorphism& eta, std::vector<MonoidElement> frame_degrees);
// Frames = framing set of the union of both presentations' degrees.
DiagramMorphism beta_on_morphism(const GradedMorphism& eta);

// β(α(D)) against D at every frame degree and each sample: component
// isomorphism, explicit comparison isomorphism, naturality and equal
// induced ranks on comparable pairs.
Report roundtrip_check(const FramedDiagram& d, const std::vector<MonoidElement>& samples);
// α(extract_diagram(P)) against P at each sample.
Report roundtrip_check(const GradedPresentation& p, const std::vector<MonoidElement>& samples);

}  // namespace persrep
