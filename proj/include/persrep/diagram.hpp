#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "persrep/graded.hpp"
#include "persrep/linalg.hpp"
#include "persrep/monoid.hpp"
#include "persrep/report.hpp"

namespace persrep {

struct Frame {
  std::string id;
  MonoidElement degree;
};

// Finite-type persistence module given by its values on a finite framing
// set. modules[i] is the value at frames[i]; transitions[{i, j}] maps
// generators of modules[i] (columns) into modules[j] (rows) and exists for
// every comparable pair frames[i] ⪯ frames[j], including i = j.
struct FramedDiagram {
  GoodMonoid monoid = GoodMonoid::nat();
  Ring ring = Ring::rational();
  std::vector<Frame> frames;
  std::vector<FpPresentation> modules;
  std::map<std::pair<std::size_t, std::size_t>, Matrix> transitions;

  std::optional<std::size_t> frame_index(const std::string& id) const;
  std::optional<std::size_t> frame_at(const MonoidElement& degree) const;
  const Matrix& transition(std::size_t from, std::size_t to) const;
  // Index of the greatest frame ⪯ g; throws if the frames below g have no maximum.
  std::size_t greatest_frame_below(const MonoidElement& g) const;
};

// Fills in missing transitions from composites of known ones; identity on
// (h, h). Throws ValidationError when a pair has no route or two routes
// disagree modulo the target relations.
void complete_transitions(FramedDiagram& d);

Report validate_diagram(const FramedDiagram& d);
void require_valid(const FramedDiagram& d);

// Functor view of a persistence module: components and connecting maps.
class EvaluableModule {
 public:
  virtual ~EvaluableModule() = default;
  virtual const GoodMonoid& monoid() const = 0;
  virtual const Ring& ring() const = 0;
  virtual FpPresentation evaluate(const MonoidElement& g) const = 0;
  // Map evaluate(g1) → evaluate(g2); requires g1 ⪯ g2.
  virtual Matrix morphism(const MonoidElement& g1, const MonoidElement& g2) const = 0;

  // Whether the connecting map g1 → g2 is an isomorphism.
  bool is_iso(const MonoidElement& g1, const MonoidElement& g2) const;
};

// β of a graded presentation. Components are memoized behind a mutex, so
// concurrent evaluate() calls are safe.
class PresentationModule final : public EvaluableModule {
 public:
  explicit PresentationModule(GradedPresentation p);

  const GoodMonoid& monoid() const override { return presentation_.monoid; }
  const Ring& ring() const override { return presentation_.ring; }
  FpPresentation evaluate(const MonoidElement& g) const override;
  Matrix morphism(const MonoidElement& g1, const MonoidElement& g2) const override;

  const GradedPresentation& presentation() const { return presentation_; }
  const std::vector<MonoidElement>& framing_set() const;
  const std::vector<MonoidElement>& degrees() const { return degrees_; }

 private:
  GradedPresentation presentation_;
  std::vector<MonoidElement> degrees_;
  mutable std::mutex mutex_;
  mutable std::optional<std::vector<MonoidElement>> framing_;
  mutable std::map<MonoidElement, FpPresentation> cache_;
};

// Persistence module described by a FramedDiagram: the value at g is the
// value at the greatest frame below g.
class DiagramModule final : public EvaluableModule {
 public:
  explicit DiagramModule(FramedDiagram d);

  const GoodMonoid& monoid() const override { return diagram_.monoid; }
  const Ring& ring() const override { return diagram_.ring; }
  FpPresentation evaluate(const MonoidElement& g) const override;
  Matrix morphism(const MonoidElement& g1, const MonoidElement& g2) const override;

  const FramedDiagram& diagram() const { return diagram_; }

 private:
  FramedDiagram diagram_;
};

// Frame of g inside the presentation's framing set: g itself if it belongs
// to H, else the canonically smallest plcm of D'(g) = {ℓ ∈ D : ℓ ⪯ g}
// dividing g.
MonoidElement frame_of(const PresentationModule& m, const MonoidElement& g);

inline constexpr std::size_t kQPlusIntervalSamples = 32;

// Elements w with h ⪯ w ⪯ g. Exhaustive for Nat, Grid and words; for QPlus
// the endpoints plus `samples` seeded rationals in between.
std::vector<MonoidElement> interval(const GoodMonoid& monoid, const MonoidElement& h, const MonoidElement& g,
                                    std::size_t samples = kQPlusIntervalSamples, std::uint64_t seed = 0);

// True iff φ_{h,w} is an isomorphism for every witness w and for w = h, g.
bool verify_frame(const EvaluableModule& m, const MonoidElement& h, const MonoidElement& g,
                  const std::vector<MonoidElement>& witnesses);
// Same, with witnesses = interval(h, g).
bool verify_frame(const EvaluableModule& m, const MonoidElement& h, const MonoidElement& g);

// Smallest D with every map seq[i] → seq[i+1], i ≥ D, an isomorphism;
// the last index when the final map is not one, nullopt for an empty
// sequence. Throws ValidationError if seq is not ⪯-monotone.
std::optional<std::size_t> stationarity_index(const EvaluableModule& m, const std::vector<MonoidElement>& seq);

// Drops every h₂ framed by another element of H until no element frames another.
std::vector<MonoidElement> reduce_framing_set(const EvaluableModule& m, std::vector<MonoidElement> framing);

// Morphism of framed diagrams over the same frame degrees: maps[i] goes
// from source.modules[i] to target.modules[i].
struct DiagramMorphism {
  FramedDiagram source;
  FramedDiagram target;
  std::vector<Matrix> maps;
};

Report check_morphism(const DiagramMorphism& xi);
DiagramMorphism identity_morphism(const FramedDiagram& d);
DiagramMorphism zero_morphism(const FramedDiagram& source, const FramedDiagram& target);
// second ∘ first
DiagramMorphism compose(const DiagramMorphism& second, const DiagramMorphism& first);

}  // namespace persrep
