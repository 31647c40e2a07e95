#include "oprg/model.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "oprg/errors.hpp"

namespace oprg {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
    return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

std::vector<std::string> QftModel::type_names() const {
  std::vector<std::string> names;
  names.reserve(types.size());
  for (const auto& t : types) names.push_back(t.name);
  return names;
}

std::optional<int> QftModel::type_of(
    const std::string& vertex_color,
    std::vector<std::string> corolla_names) const {
  std::sort(corolla_names.begin(), corolla_names.end());
  for (int idx = 0; idx < type_count(); ++idx) {
    const auto& t = types[idx];
    if (sig->vertex_colors[t.color] != vertex_color) continue;
    std::vector<std::string> t_names;
    t_names.reserve(t.corolla.size());
    for (int f : t.corolla) t_names.push_back(sig->field_colors[f]);
    std::sort(t_names.begin(), t_names.end());
    if (t_names == corolla_names) return idx;
  }
  return std::nullopt;
}

std::optional<int> QftModel::type_of_vertex_monomial(
    const CanonicalMonomial& m) const {
  if (m.n() != 1 || monomial_has_tadpole(m)) return std::nullopt;
  return type_of(m.vertex_color(1), m.corolla(1));
}

CanonicalMonomial QftModel::type_monomial(int type_index) const {
  const auto& t = types.at(type_index);
  std::vector<Generator> gens;
  gens.push_back(vertex_generator(1, sig->vertex_colors[t.color]));
  for (int f : t.corolla)
    gens.push_back(field_generator(1, sig->field_colors[f]));
  return CanonicalMonomial(1, std::move(gens));
}

ModelPtr load_model(const std::string& json_text, bool symmetrize_admissible) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("model JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("model config must be a JSON object");
  const std::set<std::string> allowed = {"fields",       "vertex_colors",
                                         "admissible",   "vertex_types",
                                         "require_1pi",  "forbid_tadpoles"};
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (!allowed.count(key)) throw ParseError("unknown model key '" + key + "'");
  }
  for (const auto& key : allowed)
    if (!doc.contains(key)) throw ParseError("missing model key '" + key + "'");

  auto sig = std::make_shared<ColorSignature>();
  try {
    for (const auto& field : doc.at("fields")) {
      const std::set<std::string> fkeys = {"name", "parity"};
      for (const auto& [key, value] : field.items()) {
        (void)value;
        if (!fkeys.count(key))
          throw ParseError("unknown field key '" + key + "'");
      }
      const std::string name = field.at("name").get<std::string>();
      const std::string parity = field.at("parity").get<std::string>();
      if (parity == "fermion")
        throw ParseError("fermionic fields are not supported (bosonic models "
                         "only); field '" + name + "'");
      if (parity != "boson")
        throw ParseError("field parity must be 'boson'; got '" + parity + "'");
      if (!valid_identifier(name))
        throw ParseError("bad field name '" + name + "'");
      sig->field_colors.push_back(name);
    }
    for (const auto& color : doc.at("vertex_colors")) {
      const std::string name = color.get<std::string>();
      if (!valid_identifier(name))
        throw ParseError("bad vertex color name '" + name + "'");
      sig->vertex_colors.push_back(name);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("model JSON: ") + e.what());
  }

  auto model = std::make_shared<QftModel>();
  model->sig = sig;
  try {
    for (const auto& pair : doc.at("admissible")) {
      if (!pair.is_array() || pair.size() != 2)
        throw ParseError("admissible entries must be 2-element arrays");
      const int a = sig->field_color_index(pair[0].get<std::string>());
      const int b = sig->field_color_index(pair[1].get<std::string>());
      model->admissible.insert({a, b});
      if (symmetrize_admissible) model->admissible.insert({b, a});
    }
    int index = 0;
    for (const auto& vt : doc.at("vertex_types")) {
      const std::set<std::string> tkeys = {"name", "color", "corolla"};
      for (const auto& [key, value] : vt.items()) {
        (void)value;
        if (!tkeys.count(key))
          throw ParseError("unknown vertex_types key '" + key + "'");
      }
      VertexType t;
      t.color = sig->vertex_color_index(vt.at("color").get<std::string>());
      for (const auto& f : vt.at("corolla"))
        t.corolla.push_back(sig->field_color_index(f.get<std::string>()));
      std::sort(t.corolla.begin(), t.corolla.end());
      t.name = vt.contains("name") ? vt.at("name").get<std::string>()
                                   : "t" + std::to_string(index + 1);
      model->types.push_back(std::move(t));
      ++index;
    }
    model->require_1pi = doc.at("require_1pi").get<bool>();
    model->forbid_tadpoles = doc.at("forbid_tadpoles").get<bool>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("model JSON: ") + e.what());
  }

  const auto problems = validate_model(*model);
  if (!problems.empty()) throw ParseError("invalid model: " + problems.front());
  return model;
}

ModelPtr load_model_file(const std::string& path, bool symmetrize_admissible) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read model file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_model(buf.str(), symmetrize_admissible);
}

std::vector<std::string> validate_model(const QftModel& model) {
  std::vector<std::string> bad;
  if (!model.sig) return {"missing signature"};
  const auto& sig = *model.sig;
  if (sig.vertex_colors.empty()) bad.push_back("no vertex colors");
  if (sig.field_colors.empty()) bad.push_back("no field colors");

  std::set<std::string> all_names;
  for (const auto& n : sig.vertex_colors)
    if (!all_names.insert(n).second)
      bad.push_back("duplicate color name '" + n + "'");
  for (const auto& n : sig.field_colors)
    if (!all_names.insert(n).second)
      bad.push_back("field name '" + n + "' collides with another color name");

  if (model.admissible.empty()) bad.push_back("admissible set is empty");
  for (const auto& [a, b] : model.admissible)
    if (!model.admissible.count({b, a}))
      bad.push_back("admissible set is not symmetric: (" +
                    sig.field_colors[a] + "," + sig.field_colors[b] +
                    ") lacks its swap");

  std::set<std::string> type_names;
  std::set<std::pair<int, std::vector<int>>> type_shapes;
  for (const auto& t : model.types) {
    if (!valid_identifier(t.name)) bad.push_back("bad type name '" + t.name + "'");
    if (!type_names.insert(t.name).second)
      bad.push_back("duplicate type name '" + t.name + "'");
    if (t.color < 0 || t.color >= static_cast<int>(sig.vertex_colors.size()))
      bad.push_back("type color out of range");
    for (int f : t.corolla)
      if (f < 0 || f >= static_cast<int>(sig.field_colors.size()))
        bad.push_back("type corolla field out of range");
    if (!type_shapes.insert({t.color, t.corolla}).second)
      bad.push_back("duplicate vertex type shape for '" + t.name + "'");
  }
  if (model.types.empty()) bad.push_back("no vertex types");
  return bad;
}

namespace {

struct FlagSpec {
  int slot;    // 1..n
  int fcolor;  // field color index
};

class PairingEnumerator {
 public:
  PairingEnumerator(const QftModel& model, std::vector<FlagSpec> flags,
                    std::vector<int> slot_types, std::size_t cap,
                    std::set<CanonicalMonomial>& sink)
      : model_(model),
        flags_(std::move(flags)),
        slot_types_(std::move(slot_types)),
        cap_(cap),
        sink_(sink),
        partner_(flags_.size(), -1) {}

  void run() { recurse(0); }

 private:
  void recurse(std::size_t f) {
    while (f < flags_.size() && partner_[f] != -1) ++f;
    if (f == flags_.size()) {
      emit();
      return;
    }
    partner_[f] = static_cast<int>(f);  // external line
    recurse(f + 1);
    partner_[f] = -1;
    for (std::size_t g = f + 1; g < flags_.size(); ++g) {
      if (partner_[g] != -1) continue;
      if (model_.forbid_tadpoles && flags_[f].slot == flags_[g].slot) continue;
      if (!model_.is_admissible(flags_[f].fcolor, flags_[g].fcolor)) continue;
      partner_[f] = static_cast<int>(g);
      partner_[g] = static_cast<int>(f);
      recurse(f + 1);
      partner_[f] = partner_[g] = -1;
    }
  }

  void emit() {
    const auto& sig = *model_.sig;
    std::vector<Generator> gens;
    for (std::size_t s = 0; s < slot_types_.size(); ++s)
      gens.push_back(vertex_generator(
          static_cast<int>(s) + 1,
          sig.vertex_colors[model_.types[slot_types_[s]].color]));
    for (std::size_t f = 0; f < flags_.size(); ++f) {
      if (partner_[f] == static_cast<int>(f)) {
        gens.push_back(
            field_generator(flags_[f].slot, sig.field_colors[flags_[f].fcolor]));
      } else if (partner_[f] > static_cast<int>(f)) {
        const auto& other = flags_[partner_[f]];
        gens.push_back(propagator_generator(
            flags_[f].slot, sig.field_colors[flags_[f].fcolor], other.slot,
            sig.field_colors[other.fcolor]));
      }
    }
    sink_.insert(
        CanonicalMonomial(static_cast<int>(slot_types_.size()), std::move(gens)));
    if (sink_.size() > cap_)
      throw CapExceeded("diagram enumeration exceeded cap of " +
                        std::to_string(cap_));
  }

  const QftModel& model_;
  std::vector<FlagSpec> flags_;
  std::vector<int> slot_types_;
  std::size_t cap_;
  std::set<CanonicalMonomial>& sink_;
  std::vector<int> partner_;
};

}  // namespace

std::vector<CanonicalMonomial> enumerate_diagrams(const QftModel& model, int n,
                                                  std::size_t cap) {
  if (n < 1) throw PreconditionError("diagram enumeration needs n >= 1");
  const auto problems = validate_model(model);
  if (!problems.empty())
    throw PreconditionError("invalid model: " + problems.front());

  std::set<CanonicalMonomial> classes;
  const int t_count = model.type_count();
  std::vector<int> assignment(n, 0);
  for (;;) {
    std::vector<FlagSpec> flags;
    for (int s = 0; s < n; ++s)
      for (int f : model.types[assignment[s]].corolla)
        flags.push_back({s + 1, f});
    PairingEnumerator(model, std::move(flags), assignment, cap, classes).run();

    int i = n - 1;
    while (i >= 0 && assignment[i] == t_count - 1) assignment[i--] = 0;
    if (i < 0) break;
    ++assignment[i];
  }

  std::vector<CanonicalMonomial> out;
  for (const auto& m : classes) {
    if (model.require_1pi && !is_1pi(from_monomial(m, model.sig))) continue;
    out.push_back(m);
  }
  return out;
}

const std::vector<CanonicalMonomial>& DiagramDomain::diagrams(int n) const {
  const std::lock_guard<std::mutex> lock(mutex_);
  auto it = cache_.find(n);
  if (it == cache_.end())
    it = cache_.emplace(n, enumerate_diagrams(*model_, n, cap_)).first;
  return it->second;
}

bool DiagramDomain::contains(const CanonicalMonomial& m) const {
  const auto& list = diagrams(m.n());
  return std::binary_search(list.begin(), list.end(), m);
}

}  // namespace oprg
