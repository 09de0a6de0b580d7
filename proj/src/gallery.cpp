#include "persrep/gallery.hpp"

#include <algorithm>
#include <sstream>

#include "persrep/error.hpp"
#include "persrep/io.hpp"

namespace persrep {

CountablePoly CountablePoly::variable(std::uint32_t index) { return term(1, {index}); }

CountablePoly CountablePoly::term(long coeff, Monomial monomial) {
  CountablePoly p;
  p.add_term(coeff, std::move(monomial));
  return p;
}

void CountablePoly::add_term(long coeff, Monomial monomial) {
  for (auto v : monomial)
    if (v == 0) throw ValidationError("variable indices start at 1");
  std::sort(monomial.begin(), monomial.end());
  auto& c = terms_[monomial];
  c += coeff;
  if (c == 0) terms_.erase(monomial);
}

CountablePoly CountablePoly::operator+(const CountablePoly& other) const {
  CountablePoly out = *this;
  for (const auto& [mono, c] : other.terms_) out.add_term(c, mono);
  return out;
}

std::string CountablePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << '-';
    const long a = c < 0 ? -c : c;
    if (a != 1 || mono.empty()) out << a;
    for (std::size_t k = 0; k < mono.size(); ++k) out << (k || (a != 1) ? "*" : "") << 'x' << mono[k];
    first = false;
  }
  return out.str();
}

CountablePoly zc_normal_form(const CountablePoly& p, std::uint32_t i) {
  CountablePoly out;
  for (const auto& [mono, c] : p.terms())
    if (mono.empty() || mono.front() > i) out = out + CountablePoly::term(c, mono);
  return out;
}

CountablePoly zc_noninjectivity_witness(std::uint32_t i) { return CountablePoly::variable(i + 1); }

FpPresentation QPlusModule::evaluate(const MonoidElement& g) const {
  if (!monoid_.contains(g)) throw InstanceMismatch("not an element of Q>=0");
  return FpPresentation(ring_, sgn(g.as_rational()) == 0 ? 1 : 0);
}

Matrix QPlusModule::morphism(const MonoidElement& g1, const MonoidElement& g2) const {
  if (!monoid_.divides(g1, g2)) throw DivisibilityError("morphism needs g1 <= g2");
  const auto src = evaluate(g1).generators;
  const auto dst = evaluate(g2).generators;
  return src == 1 && dst == 1 ? Matrix::identity(ring_, 1) : Matrix(ring_, dst, src);
}

std::optional<MonoidElement> refute_framing_set(const EvaluableModule& m, const std::vector<MonoidElement>& framing) {
  const auto& monoid = m.monoid();
  std::vector<MonoidElement> probes{monoid.identity()};
  if (monoid.kind() == MonoidKind::QPlus) {
    std::optional<mpq_class> least;
    for (const auto& h : framing)
      if (sgn(h.as_rational()) > 0 && (!least || h.as_rational() < *least)) least = h.as_rational();
    probes.push_back(MonoidElement::rational(least ? mpq_class(*least / 2) : mpq_class(1)));
  }
  probes.insert(probes.end(), framing.begin(), framing.end());
  for (const auto& g : probes) {
    bool framed = false;
    for (const auto& h : framing)
      if (monoid.divides(h, g) && verify_frame(m, h, g)) {
        framed = true;
        break;
      }
    if (!framed) return g;
  }
  return std::nullopt;
}

mpq_class random_rational(std::mt19937_64& rng, std::uint64_t max_den, std::uint64_t max_value) {
  std::uniform_int_distribution<std::uint64_t> den(1, max_den);
  const auto q = den(rng);
  std::uniform_int_distribution<std::uint64_t> num(0, q * max_value);
  mpq_class r(mpz_class(std::to_string(num(rng))), mpz_class(std::to_string(q)));
  r.canonicalize();
  return r;
}

nlohmann::json zc_report(std::uint32_t max_index) {
  auto rows = nlohmann::json::array();
  bool ok = true;
  for (std::uint32_t i = 0; i <= max_index; ++i) {
    const auto w = zc_noninjectivity_witness(i);
    const bool alive = !zc_normal_form(w, i).is_zero();
    const bool dies = zc_normal_form(w, i + 1).is_zero();
    ok = ok && alive && dies;
    rows.push_back({{"i", i},
                    {"witness", w.to_string()},
                    {"nonzero_in_M_i", alive},
                    {"zero_in_M_i_plus_1", dies}});
  }
  return {{"version", kSchemaVersion},
          {"case", "zc-counterexample"},
          {"generated_by", "1"},
          {"maps_injective", false},
          {"witnesses", rows},
          {"pass", ok}};
}

nlohmann::json qplus_report(std::uint64_t seed, std::size_t sequences, std::size_t candidates) {
  QPlusModule m;
  const auto& monoid = m.monoid();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> length(2, 8);

  std::size_t stationary = 0;
  for (std::size_t s = 0; s < sequences; ++s) {
    std::vector<mpq_class> values;
    for (int k = length(rng); k > 0; --k) values.push_back(random_rational(rng, 16, 4));
    std::sort(values.begin(), values.end());
    std::vector<MonoidElement> seq;
    for (const auto& v : values) seq.push_back(MonoidElement::rational(v));
    if (stationarity_index(m, seq)) ++stationary;
  }

  std::size_t refuted = 0;
  auto example = nlohmann::json::object();
  std::uniform_int_distribution<int> size(1, 6);
  for (std::size_t c = 0; c < candidates; ++c) {
    std::vector<MonoidElement> h{monoid.identity()};
    for (int k = size(rng) - 1; k > 0; --k) h.push_back(MonoidElement::rational(random_rational(rng, 16, 4)));
    monoid.sort_canonical(h);
    auto witness = refute_framing_set(m, h);
    if (witness) {
      ++refuted;
      if (example.empty()) {
        auto hs = nlohmann::json::array();
        for (const auto& x : h) hs.push_back(degree_to_json(monoid, x));
        example = {{"candidate", hs}, {"unframed_degree", degree_to_json(monoid, *witness)}};
      }
    }
  }
  return {{"version", kSchemaVersion},
          {"case", "qplus"},
          {"seed", seed},
          {"sequences", sequences},
          {"stationary_sequences", stationary},
          {"candidates", candidates},
          {"refuted_candidates", refuted},
          {"example", example},
          {"pass", stationary == sequences && refuted == candidates}};
}

}  // namespace persrep
