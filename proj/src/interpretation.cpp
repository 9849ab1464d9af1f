#include "strata/interpretation.hpp"

#include <algorithm>

namespace strata {

AtomList make_atom_list(std::vector<std::string> names) {
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

Interpretation::Interpretation(AtomList atoms, TruthValue fill)
    : atoms_(std::move(atoms)), values_(atoms_->size(), fill) {}

Interpretation::Interpretation(AtomList atoms, std::vector<TruthValue> values)
    : atoms_(std::move(atoms)), values_(std::move(values)) {
  if (values_.size() != atoms_->size()) {
    throw std::invalid_argument("interpretation needs one value per atom");
  }
}

Interpretation::Interpretation(const std::map<std::string, TruthValue>& values) {
  std::vector<std::string> names;
  names.reserve(values.size());
  for (const auto& [atom, value] : values) {
    names.push_back(atom);
    values_.push_back(value);
  }
  atoms_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

TruthValue Interpretation::at(const std::string& atom) const {
  auto it = std::lower_bound(atoms_->begin(), atoms_->end(), atom);
  if (it == atoms_->end() || *it != atom) throw std::out_of_range("unknown atom '" + atom + "'");
  return values_[static_cast<std::size_t>(it - atoms_->begin())];
}

bool Interpretation::same_atoms(const Interpretation& other) const {
  return atoms_ == other.atoms_ || *atoms_ == *other.atoms_;
}

Level Interpretation::max_level() const {
  Level best = 0;
  for (auto v : values_) {
    if (!v.is_zero()) best = std::max(best, v.level());
  }
  return best;
}

bool operator==(const Interpretation& a, const Interpretation& b) {
  return a.same_atoms(b) && a.values_ == b.values_;
}

namespace {

void require_same_atoms(const Interpretation& a, const Interpretation& b) {
  if (!a.same_atoms(b)) throw MixedAtomSets();
}

template <class Op>
Interpretation zip(const Interpretation& a, const Interpretation& b, Op op) {
  require_same_atoms(a, b);
  Interpretation out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = op(a[i], b[i]);
  return out;
}

template <class Op>
Interpretation fold(std::span<const Interpretation> xs, Op op) {
  if (xs.empty()) throw std::invalid_argument("pointwise fold over an empty set");
  Interpretation out = xs.front();
  for (const auto& x : xs.subspan(1)) {
    require_same_atoms(out, x);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(out[i], x[i]);
  }
  return out;
}

}  // namespace

Interpretation join(const Interpretation& a, const Interpretation& b) {
  return zip(a, b, [](TruthValue u, TruthValue v) { return join(u, v); });
}

Interpretation meet(const Interpretation& a, const Interpretation& b) {
  return zip(a, b, [](TruthValue u, TruthValue v) { return meet(u, v); });
}

Interpretation join(std::span<const Interpretation> xs) {
  return fold(xs, [](TruthValue u, TruthValue v) { return join(u, v); });
}

Interpretation meet(std::span<const Interpretation> xs) {
  return fold(xs, [](TruthValue u, TruthValue v) { return meet(u, v); });
}

Interpretation negate(const Interpretation& x, Level cap) {
  Interpretation out = x;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = negate(out[i], cap);
  return out;
}

bool leq(const Interpretation& a, const Interpretation& b) {
  require_same_atoms(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] < a[i]) return false;
  }
  return true;
}

bool sq_alpha(const Interpretation& a, const Interpretation& b, Stratum alpha) {
  require_same_atoms(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!below_at(a[i], b[i], alpha)) return false;
  }
  return true;
}

bool eq_alpha(const Interpretation& a, const Interpretation& b, Stratum alpha) {
  require_same_atoms(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!equivalent_at(a[i], b[i], alpha)) return false;
  }
  return true;
}

Interpretation restrict(const Interpretation& x, Stratum alpha) {
  Interpretation out = x;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = restrict_value(out[i], alpha);
  return out;
}

Interpretation lub_alpha(std::span<const Interpretation> xs, Stratum alpha,
                         const std::optional<Interpretation>& witness) {
  const Interpretation* shape = witness ? &*witness : (xs.empty() ? nullptr : &xs.front());
  if (shape == nullptr) {
    throw std::invalid_argument("stratified supremum of an empty set needs a witness");
  }
  for (const auto& x : xs) require_same_atoms(*shape, x);

  const auto& names = *shape->atoms();
  Interpretation out(shape->atoms(), kBottomValue);
  for (std::size_t i = 0; i < out.size(); ++i) {
    // Values pinned below alpha must be common to every member.
    std::optional<TruthValue> pinned;
    bool all_pinned_or_high = true;
    auto visit = [&](TruthValue v) {
      if (v.level() < alpha) {
        if (pinned && *pinned != v) all_pinned_or_high = false;
        pinned = v;
      }
    };
    if (witness) visit((*witness)[i]);
    for (const auto& x : xs) visit(x[i]);
    if (pinned) {
      if (witness && (*witness)[i] != *pinned) all_pinned_or_high = false;
      for (const auto& x : xs) {
        if (x[i] != *pinned) all_pinned_or_high = false;
      }
    }
    if (!all_pinned_or_high) throw NotAlphaCompatible(names[i]);

    if (pinned) {
      out[i] = *pinned;
    } else if (std::any_of(xs.begin(), xs.end(),
                           [&](const Interpretation& x) { return x[i] == TruthValue::t(alpha); })) {
      out[i] = TruthValue::t(alpha);
    } else if (std::all_of(xs.begin(), xs.end(),
                           [&](const Interpretation& x) { return x[i] == TruthValue::f(alpha); })) {
      out[i] = TruthValue::f(alpha);
    } else {
      out[i] = TruthValue::f(alpha + 1);
    }
  }
  return out;
}

bool global_sq(const Interpretation& a, const Interpretation& b) {
  require_same_atoms(a, b);
  if (a == b) return true;
  const Level bound = std::max(a.max_level(), b.max_level()) + 1;
  for (Stratum alpha = 0; alpha <= bound; ++alpha) {
    if (sq_alpha(a, b, alpha) && !sq_alpha(b, a, alpha)) return true;
  }
  return false;
}

std::string to_string(const Interpretation& x) {
  std::string out = "{";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i != 0) out += ", ";
    out += (*x.atoms())[i] + ":" + to_string(x[i]);
  }
  return out + "}";
}

nlohmann::json to_json(const Interpretation& x) {
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t i = 0; i < x.size(); ++i) j[(*x.atoms())[i]] = x[i];
  return j;
}

Interpretation interpretation_from_json(const nlohmann::json& j) {
  std::map<std::string, TruthValue> values;
  for (const auto& [atom, value] : j.items()) values.emplace(atom, value.get<TruthValue>());
  return Interpretation(values);
}

VZModel::Element VZModel::join(std::span<const Element> xs) const {
  if (xs.empty()) return bottom();
  return strata::join(xs);
}

}  // namespace strata
