#include "persrep/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "persrep/error.hpp"

namespace persrep {

using nlohmann::json;

namespace {

void reject_unknown(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!j.is_object()) throw ValidationError(where + ": expected an object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : j.items())
    if (!ok.count(key)) throw ValidationError(where + ": unknown field '" + key + "'");
}

const json& field(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw ValidationError(where + ": missing field '" + key + "'");
  return *it;
}

void check_version(const json& j) {
  auto it = j.find("version");
  if (it != j.end() && (!it->is_number_integer() || it->get<int>() != kSchemaVersion))
    throw ValidationError("unsupported schema version " + it->dump());
}

std::uint64_t natural(const json& j, const std::string& where) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(j.get<std::int64_t>());
  throw ValidationError(where + ": expected a natural number, got " + j.dump());
}

mpq_class parse_rational(const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0 || sgn(q.get_den()) == 0)
    throw ValidationError("cannot parse rational '" + text + "'");
  q.canonicalize();
  return q;
}

}  // namespace

// ---------------------------------------------------------------- monoid / ring

json monoid_to_json(const GoodMonoid& m) {
  switch (m.kind()) {
    case MonoidKind::Nat: return {{"kind", "nat"}};
    case MonoidKind::Grid: return {{"kind", "grid"}, {"k", m.rank()}};
    case MonoidKind::FreeWord: {
      json alphabet = json::array();
      for (char c : m.alphabet()) alphabet.push_back(std::string(1, c));
      return {{"kind", "freeword"}, {"alphabet", alphabet}};
    }
    case MonoidKind::QPlus: return {{"kind", "qplus"}};
  }
  return {};
}

GoodMonoid monoid_from_json(const json& j) {
  const std::string where = "monoid";
  reject_unknown(j, {"kind", "k", "alphabet"}, where);
  const auto& kind = field(j, "kind", where);
  if (!kind.is_string()) throw ValidationError("monoid: kind must be a string");
  const auto k = kind.get<std::string>();
  if (k == "nat") return GoodMonoid::nat();
  if (k == "qplus") return GoodMonoid::qplus();
  if (k == "grid") return GoodMonoid::grid(natural(field(j, "k", where), "monoid.k"));
  if (k == "freeword") {
    const auto& a = field(j, "alphabet", where);
    if (!a.is_array()) throw ValidationError("monoid.alphabet must be an array");
    std::string alphabet;
    for (const auto& s : a) {
      if (!s.is_string() || s.get<std::string>().size() != 1)
        throw ValidationError("monoid.alphabet symbols must be single-character strings");
      alphabet += s.get<std::string>();
    }
    return GoodMonoid::free_word(alphabet);
  }
  throw ValidationError("unknown monoid kind '" + k + "'");
}

GoodMonoid parse_monoid_spec(const std::string& text) {
  if (!text.empty() && text.front() == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw ValidationError(std::string("monoid spec: ") + e.what());
    }
    return monoid_from_json(j);
  }
  if (text == "nat") return GoodMonoid::nat();
  if (text == "qplus") return GoodMonoid::qplus();
  if (text.rfind("grid:", 0) == 0) {
    try {
      return GoodMonoid::grid(std::stoul(text.substr(5)));
    } catch (const std::logic_error&) {
      throw ValidationError("bad grid rank in monoid spec '" + text + "'");
    }
  }
  if (text.rfind("freeword:", 0) == 0) {
    std::string alphabet;
    for (char c : text.substr(9))
      if (c != ',') alphabet += c;
    return GoodMonoid::free_word(alphabet);
  }
  throw ValidationError("unknown monoid spec '" + text + "'");
}

json ring_to_json(const Ring& r) {
  switch (r.kind()) {
    case RingKind::Rational: return {{"kind", "rational"}};
    case RingKind::Integer: return {{"kind", "integer"}};
    case RingKind::PrimeField: return {{"kind", "prime_field"}, {"p", r.modulus()}};
  }
  return {};
}

Ring ring_from_json(const json& j) {
  reject_unknown(j, {"kind", "p"}, "ring");
  const auto& kind = field(j, "kind", "ring");
  if (!kind.is_string()) throw ValidationError("ring: kind must be a string");
  const auto k = kind.get<std::string>();
  if (k == "rational") return Ring::rational();
  if (k == "integer") return Ring::integer();
  if (k == "prime_field") return Ring::prime_field(natural(field(j, "p", "ring"), "ring.p"));
  throw ValidationError("unknown ring kind '" + k + "'");
}

// ---------------------------------------------------------------- degrees / scalars

json degree_to_json(const GoodMonoid& m, const MonoidElement& g) {
  switch (m.kind()) {
    case MonoidKind::Nat: return g.as_nat();
    case MonoidKind::Grid: return g.as_grid();
    case MonoidKind::FreeWord: return g.as_word();
    case MonoidKind::QPlus: {
      const auto& q = g.as_rational();
      return q.get_num().get_str() + "/" + q.get_den().get_str();
    }
  }
  return nullptr;
}

MonoidElement degree_from_json(const GoodMonoid& m, const json& j) {
  switch (m.kind()) {
    case MonoidKind::Nat: return MonoidElement::nat(natural(j, "degree"));
    case MonoidKind::Grid: {
      if (!j.is_array() || j.size() != m.rank())
        throw ValidationError("degree: expected an array of " + std::to_string(m.rank()) + " naturals, got " + j.dump());
      MonoidElement::Tuple t;
      for (const auto& x : j) t.push_back(natural(x, "degree"));
      return MonoidElement::grid(std::move(t));
    }
    case MonoidKind::FreeWord: {
      if (!j.is_string()) throw ValidationError("degree: expected a word string, got " + j.dump());
      auto g = MonoidElement::word(j.get<std::string>());
      if (!m.contains(g)) throw ValidationError("degree: word '" + g.as_word() + "' uses symbols outside the alphabet");
      return g;
    }
    case MonoidKind::QPlus: {
      mpq_class q;
      if (j.is_string())
        q = parse_rational(j.get<std::string>());
      else if (j.is_number_integer())
        q = mpq_class(j.get<long>());
      else
        throw ValidationError("degree: expected a \"p/q\" string, got " + j.dump());
      if (sgn(q) < 0) throw ValidationError("degree: negative rational");
      return MonoidElement::rational(q);
    }
  }
  throw ValidationError("degree: unknown monoid");
}

MonoidElement parse_degree(const GoodMonoid& m, const std::string& text) {
  if (!text.empty() && (text.front() == '[' || text.front() == '"')) {
    try {
      return degree_from_json(m, json::parse(text));
    } catch (const json::exception& e) {
      throw ValidationError(std::string("degree: ") + e.what());
    }
  }
  switch (m.kind()) {
    case MonoidKind::Nat:
      try {
        std::size_t used = 0;
        auto v = std::stoull(text, &used);
        if (used != text.size() || text.front() == '-') throw std::invalid_argument(text);
        return MonoidElement::nat(v);
      } catch (const std::logic_error&) {
        throw ValidationError("degree: cannot parse natural '" + text + "'");
      }
    case MonoidKind::Grid: throw ValidationError("degree: grid degrees must be JSON arrays like [1,2]");
    case MonoidKind::FreeWord: return degree_from_json(m, json(text == "e" ? std::string() : text));
    case MonoidKind::QPlus: return degree_from_json(m, json(text));
  }
  throw ValidationError("degree: unknown monoid");
}

std::vector<MonoidElement> parse_degree_list(const GoodMonoid& m, const std::string& text) {
  std::vector<MonoidElement> out;
  if (!text.empty() && text.front() == '[' && (m.kind() != MonoidKind::Grid || text.size() > 1)) {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw ValidationError(std::string("degree list: ") + e.what());
    }
    if (!j.is_array()) throw ValidationError("degree list must be an array");
    for (const auto& x : j) out.push_back(degree_from_json(m, x));
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_degree(m, item));
  return out;
}

Scalar scalar_from_json(const Ring& r, const json& j) {
  if (j.is_number_integer()) return r.normalize(Scalar(mpz_class(j.dump(), 10)));
  if (j.is_string()) return r.parse(j.get<std::string>());
  throw ValidationError("scalar: expected an integer or string, got " + j.dump());
}

json scalar_to_json(const Ring& r, const Scalar& s) { return r.format(s); }

// ---------------------------------------------------------------- presentations

json presentation_to_json(const GradedPresentation& p) {
  json gens = json::array();
  for (const auto& g : p.generators) gens.push_back({{"id", g.id}, {"degree", degree_to_json(p.monoid, g.degree)}});
  json rels = json::array();
  for (const auto& z : p.relations) {
    json terms = json::array();
    for (const auto& t : z.terms)
      terms.push_back(
          {{"coeff", scalar_to_json(p.ring, t.coeff)}, {"shift", degree_to_json(p.monoid, t.shift)}, {"gen", t.gen}});
    rels.push_back({{"degree", degree_to_json(p.monoid, z.degree)}, {"terms", terms}});
  }
  return {{"version", kSchemaVersion},
          {"monoid", monoid_to_json(p.monoid)},
          {"ring", ring_to_json(p.ring)},
          {"generators", gens},
          {"relations", rels}};
}

GradedPresentation presentation_from_json(const json& j) {
  reject_unknown(j, {"version", "monoid", "ring", "generators", "relations"}, "presentation");
  check_version(j);
  GradedPresentation p;
  p.monoid = monoid_from_json(field(j, "monoid", "presentation"));
  p.ring = ring_from_json(field(j, "ring", "presentation"));
  const auto& gens = field(j, "generators", "presentation");
  if (!gens.is_array()) throw ValidationError("generators must be an array");
  for (const auto& g : gens) {
    reject_unknown(g, {"id", "degree"}, "generator");
    const auto& id = field(g, "id", "generator");
    if (!id.is_string()) throw ValidationError("generator id must be a string");
    p.generators.push_back({id.get<std::string>(), degree_from_json(p.monoid, field(g, "degree", "generator"))});
  }
  if (j.contains("relations")) {
    const auto& rels = j.at("relations");
    if (!rels.is_array()) throw ValidationError("relations must be an array");
    for (const auto& z : rels) {
      reject_unknown(z, {"degree", "terms"}, "relation");
      HomogeneousRelation rel{degree_from_json(p.monoid, field(z, "degree", "relation")), {}};
      const auto& terms = field(z, "terms", "relation");
      if (!terms.is_array()) throw ValidationError("relation terms must be an array");
      for (const auto& t : terms) {
        reject_unknown(t, {"coeff", "shift", "gen"}, "term");
        const auto& gen = field(t, "gen", "term");
        if (!gen.is_string()) throw ValidationError("term gen must be a string");
        rel.terms.push_back({scalar_from_json(p.ring, field(t, "coeff", "term")),
                             degree_from_json(p.monoid, field(t, "shift", "term")), gen.get<std::string>()});
      }
      p.relations.push_back(std::move(rel));
    }
  }
  require_valid(p);
  return p;
}

// ---------------------------------------------------------------- diagrams

namespace {

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(scalar_to_json(m.ring(), m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Ring& r, const json& j, std::size_t cols, const std::string& where) {
  if (!j.is_array()) throw ValidationError(where + ": expected an array of rows");
  Matrix m(r, 0, cols);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols)
      throw ValidationError(where + ": every row must have " + std::to_string(cols) + " entries");
    std::vector<Scalar> v;
    for (const auto& x : row) v.push_back(scalar_from_json(r, x));
    m.append_row(v);
  }
  return m;
}

}  // namespace

json diagram_to_json(const FramedDiagram& d) {
  json frames = json::array();
  json modules = json::object();
  for (std::size_t i = 0; i < d.frames.size(); ++i) {
    frames.push_back({{"id", d.frames[i].id}, {"degree", degree_to_json(d.monoid, d.frames[i].degree)}});
    modules[d.frames[i].id] = {{"generators", d.modules[i].generators},
                               {"relations", matrix_to_json(d.modules[i].relations)}};
  }
  json maps = json::array();
  for (const auto& [key, mat] : d.transitions) {
    if (key.first == key.second) continue;
    maps.push_back({{"from", d.frames[key.first].id}, {"to", d.frames[key.second].id}, {"matrix", matrix_to_json(mat)}});
  }
  return {{"version", kSchemaVersion}, {"monoid", monoid_to_json(d.monoid)}, {"ring", ring_to_json(d.ring)},
          {"frames", frames},          {"modules", modules},                 {"maps", maps}};
}

FramedDiagram diagram_from_json(const json& j) {
  reject_unknown(j, {"version", "monoid", "ring", "frames", "modules", "maps"}, "diagram");
  check_version(j);
  FramedDiagram d;
  d.monoid = monoid_from_json(field(j, "monoid", "diagram"));
  d.ring = ring_from_json(field(j, "ring", "diagram"));
  const auto& frames = field(j, "frames", "diagram");
  if (!frames.is_array()) throw ValidationError("frames must be an array");
  for (const auto& f : frames) {
    reject_unknown(f, {"id", "degree"}, "frame");
    const auto& id = field(f, "id", "frame");
    if (!id.is_string()) throw ValidationError("frame id must be a string");
    d.frames.push_back({id.get<std::string>(), degree_from_json(d.monoid, field(f, "degree", "frame"))});
  }
  const auto& modules = field(j, "modules", "diagram");
  if (!modules.is_object()) throw ValidationError("modules must be an object keyed by frame id");
  for (const auto& [key, value] : modules.items())
    if (!d.frame_index(key)) throw ValidationError("module for unknown frame '" + key + "'");
  for (const auto& f : d.frames) {
    auto it = modules.find(f.id);
    if (it == modules.end()) throw ValidationError("no module for frame '" + f.id + "'");
    reject_unknown(*it, {"generators", "relations"}, "module " + f.id);
    const auto n = natural(field(*it, "generators", "module " + f.id), "module generators");
    Matrix rel = it->contains("relations") ? matrix_from_json(d.ring, it->at("relations"), n, "module " + f.id)
                                           : Matrix(d.ring, 0, n);
    d.modules.emplace_back(d.ring, n, std::move(rel));
  }
  if (j.contains("maps")) {
    const auto& maps = j.at("maps");
    if (!maps.is_array()) throw ValidationError("maps must be an array");
    for (const auto& m : maps) {
      reject_unknown(m, {"from", "to", "matrix"}, "map");
      const auto& from = field(m, "from", "map");
      const auto& to = field(m, "to", "map");
      if (!from.is_string() || !to.is_string()) throw ValidationError("map endpoints must be frame ids");
      auto i = d.frame_index(from.get<std::string>());
      auto k = d.frame_index(to.get<std::string>());
      if (!i || !k) throw ValidationError("map references unknown frame");
      const std::string where = "map " + from.get<std::string>() + "->" + to.get<std::string>();
      auto mat = matrix_from_json(d.ring, field(m, "matrix", "map"), d.modules[*i].generators, where);
      if (mat.rows() != d.modules[*k].generators)
        throw ValidationError(where + ": expected " + std::to_string(d.modules[*k].generators) + " rows");
      if (!d.transitions.emplace(std::pair{*i, *k}, std::move(mat)).second)
        throw ValidationError(where + ": duplicate map");
    }
  }
  for (const auto& [key, mat] : d.transitions)
    if (!d.monoid.divides(d.frames[key.first].degree, d.frames[key.second].degree))
      throw ValidationError("map " + d.frames[key.first].id + "->" + d.frames[key.second].id +
                            " between incomparable frames");
  complete_transitions(d);
  require_valid(d);
  return d;
}

// ---------------------------------------------------------------- files

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << dump(j, true) << '\n';
}

GradedPresentation load_presentation(const std::filesystem::path& path) {
  return presentation_from_json(read_json_file(path));
}

FramedDiagram load_diagram(const std::filesystem::path& path) { return diagram_from_json(read_json_file(path)); }

std::string dump(const json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

}  // namespace persrep
