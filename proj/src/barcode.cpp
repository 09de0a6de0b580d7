#include "persrep/barcode.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "persrep/error.hpp"

namespace persrep {

void require_barcode_input(const GradedPresentation& p) {
  if (p.monoid.kind() != MonoidKind::Nat)
    throw Unsupported("barcodes require the monoid ℕ, got " + p.monoid.describe());
  if (!p.ring.is_field()) throw Unsupported("barcodes require field coefficients, got " + p.ring.describe());
}

std::size_t rank_invariant(const GradedPresentation& p, std::uint64_t i, std::uint64_t j) {
  require_barcode_input(p);
  if (i > j) throw DivisibilityError("rank_invariant needs i <= j");
  const auto gi = MonoidElement::nat(i);
  const auto gj = MonoidElement::nat(j);
  return induced_rank(component(p, gi), component(p, gj), structure_map(p, gi, gj));
}

std::uint64_t stability_bound(const GradedPresentation& p) {
  std::uint64_t b = 0;
  for (const auto& g : p.generators) b = std::max(b, g.degree.as_nat());
  for (const auto& r : p.relations) b = std::max(b, r.degree.as_nat());
  return b;
}

Barcode barcode(const GradedPresentation& p) {
  require_barcode_input(p);
  require_valid(p);
  const Ring& ring = p.ring;
  const std::size_t n = p.generators.size();

  // Rows: generators by ascending degree (stable).
  std::vector<std::size_t> row_order(n);
  std::iota(row_order.begin(), row_order.end(), 0);
  std::stable_sort(row_order.begin(), row_order.end(), [&](std::size_t a, std::size_t b) {
    return p.generators[a].degree.as_nat() < p.generators[b].degree.as_nat();
  });
  std::vector<std::size_t> row_of(n);
  for (std::size_t r = 0; r < n; ++r) row_of[row_order[r]] = r;

  // Columns: relations by ascending degree; over ℕ each term's shift is fixed
  // by its generator, so a relation is a coefficient vector.
  std::vector<std::size_t> col_order(p.relations.size());
  std::iota(col_order.begin(), col_order.end(), 0);
  std::stable_sort(col_order.begin(), col_order.end(), [&](std::size_t a, std::size_t b) {
    return p.relations[a].degree.as_nat() < p.relations[b].degree.as_nat();
  });
  std::vector<std::vector<Scalar>> cols;
  std::vector<std::uint64_t> col_degree;
  for (std::size_t c : col_order) {
    std::vector<Scalar> v(n, ring.zero());
    for (const auto& t : p.relations[c].terms) {
      auto r = row_of[*p.generator_index(t.gen)];
      v[r] = ring.add(v[r], t.coeff);
    }
    cols.push_back(std::move(v));
    col_degree.push_back(p.relations[c].degree.as_nat());
  }

  auto pivot = [&](const std::vector<Scalar>& v) -> std::optional<std::size_t> {
    for (std::size_t r = n; r-- > 0;)
      if (!ring.is_zero(v[r])) return r;
    return std::nullopt;
  };

  std::map<std::size_t, std::size_t> owner;  // pivot row → column
  std::map<std::pair<std::uint64_t, std::optional<std::uint64_t>>, std::uint64_t> bars;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (auto piv = pivot(cols[c]); piv; piv = pivot(cols[c])) {
      auto it = owner.find(*piv);
      if (it == owner.end()) {
        owner[*piv] = c;
        break;
      }
      const auto& other = cols[it->second];
      Scalar factor = ring.mul(cols[c][*piv], ring.inv(other[*piv]));
      for (std::size_t r = 0; r <= *piv; ++r) cols[c][r] = ring.sub(cols[c][r], ring.mul(factor, other[r]));
    }
  }
  for (std::size_t r = 0; r < n; ++r) {
    const std::uint64_t birth = p.generators[row_order[r]].degree.as_nat();
    auto it = owner.find(r);
    if (it == owner.end()) {
      ++bars[{birth, std::nullopt}];
    } else if (col_degree[it->second] > birth) {
      ++bars[{birth, col_degree[it->second]}];
    }
  }

  Barcode out;
  for (const auto& [key, mult] : bars) out.push_back({key.first, key.second, mult});
  std::sort(out.begin(), out.end(), [](const Bar& a, const Bar& b) {
    if (a.birth != b.birth) return a.birth < b.birth;
    if (a.death.has_value() != b.death.has_value()) return a.death.has_value();
    return a.death < b.death;
  });
  return out;
}

std::size_t bars_containing(const Barcode& b, std::uint64_t i, std::uint64_t j) {
  std::size_t count = 0;
  for (const auto& bar : b)
    if (bar.birth <= i && (!bar.death || *bar.death > j)) count += bar.multiplicity;
  return count;
}

nlohmann::json barcode_to_json(const Barcode& b) {
  auto out = nlohmann::json::array();
  for (const auto& bar : b) {
    nlohmann::json death = bar.death ? nlohmann::json(*bar.death) : nlohmann::json("inf");
    out.push_back({{"birth", bar.birth}, {"death", death}, {"mult", bar.multiplicity}});
  }
  return out;
}

std::string barcode_ascii(const Barcode& b, std::uint64_t horizon) {
  std::vector<std::string> labels;
  std::size_t width = 0;
  for (const auto& bar : b) {
    std::ostringstream label;
    label << '[' << bar.birth << ',' << (bar.death ? std::to_string(*bar.death) : std::string("inf")) << ')';
    if (bar.multiplicity > 1) label << " x" << bar.multiplicity;
    labels.push_back(label.str());
    width = std::max(width, labels.back().size());
  }
  std::ostringstream out;
  out << std::string(width, ' ') << ' ';
  for (std::uint64_t d = 0; d <= horizon; ++d) out << (d % 10);
  out << '\n';
  for (std::size_t k = 0; k < b.size(); ++k) {
    out << labels[k] << std::string(width - labels[k].size(), ' ') << ' ';
    for (std::uint64_t d = 0; d <= horizon; ++d) {
      const bool alive = b[k].birth <= d && (!b[k].death || *b[k].death > d);
      out << (alive ? '#' : '.');
    }
    if (!b[k].death) out << '>';
    out << '\n';
  }
  return out.str();
}

}  // namespace persrep
