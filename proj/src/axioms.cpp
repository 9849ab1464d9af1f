#include "strata/axioms.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <functional>
#include <unordered_set>

namespace strata {

std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::Ax1: return "Ax1";
    case Axiom::Ax2: return "Ax2";
    case Axiom::Ax3: return "Ax3";
    case Axiom::Ax4: return "Ax4";
    case Axiom::Ax5: return "Ax5";
    case Axiom::Ax6: return "Ax6";
    case Axiom::Ax7: return "Ax7";
    case Axiom::Ax8: return "Ax8";
    case Axiom::Ax3d: return "Ax3d";
    case Axiom::Ax4d: return "Ax4d";
    case Axiom::Ax8d: return "Ax8d";
  }
  return "?";
}

std::optional<Axiom> parse_axiom(std::string_view text) {
  std::string lowered;
  for (char c : text) lowered += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lowered.rfind("ax", 0) == 0) lowered.erase(0, 2);
  for (auto a : kAllAxioms) {
    std::string name(axiom_name(a).substr(2));
    for (auto& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (name == lowered) return a;
  }
  return std::nullopt;
}

std::vector<Axiom> parse_axiom_list(std::string_view text) {
  if (text == "all") return {kAllAxioms.begin(), kAllAxioms.end()};
  if (text == "model") return {kModelAxioms.begin(), kModelAxioms.end()};
  std::vector<Axiom> out;
  auto add = [&](Axiom a) {
    if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
  };
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = std::min(text.find(',', start), text.size());
    const auto item = text.substr(start, comma - start);
    const auto dash = item.find('-');
    auto need = [&](std::string_view name) {
      auto a = parse_axiom(name);
      if (!a) throw std::invalid_argument("unknown axiom '" + std::string(name) + "'");
      return *a;
    };
    if (dash == std::string_view::npos) {
      add(need(item));
    } else {
      const auto lo = need(item.substr(0, dash)), hi = need(item.substr(dash + 1));
      const auto first = std::find(kAllAxioms.begin(), kAllAxioms.end(), lo);
      const auto last = std::find(kAllAxioms.begin(), kAllAxioms.end(), hi);
      if (first > last) throw std::invalid_argument("empty axiom range '" + std::string(item) + "'");
      for (auto it = first; it <= last; ++it) add(*it);
    }
    start = comma + 1;
  }
  return out;
}

bool AxiomReport::all_hold() const {
  return std::all_of(results.begin(), results.end(), [](const AxiomStatus& s) { return s.holds; });
}

const AxiomStatus* AxiomReport::find(Axiom a) const {
  for (const auto& s : results) {
    if (s.axiom == a) return &s;
  }
  return nullptr;
}

bool AxiomReport::holds(Axiom a) const {
  const auto* s = find(a);
  return s != nullptr && s->holds;
}

namespace {

using Probe = std::function<std::optional<Witness>(std::size_t)>;

// First witness in index order. The parallel loop skips indices beyond the
// best hit so far, which never changes the answer.
std::optional<Witness> first_witness(std::size_t count, const Probe& probe, Execution mode) {
  if (mode == Execution::Serial) {
    for (std::size_t i = 0; i < count; ++i) {
      if (auto w = probe(i)) return w;
    }
    return std::nullopt;
  }
  std::vector<std::optional<Witness>> found(count);
  std::atomic<std::size_t> best{count};
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(count); ++k) {
    const auto i = static_cast<std::size_t>(k);
    if (i > best.load(std::memory_order_relaxed)) continue;
    found[i] = probe(i);
    if (found[i]) {
      auto cur = best.load();
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
    }
  }
  for (auto& w : found) {
    if (w) return w;
  }
  return std::nullopt;
}

// Stratified bounds of singletons, kNoElement where the search finds none.
std::vector<Elem> singleton_bounds(const FiniteModel& m, bool upper) {
  const auto n = m.size();
  std::vector<Elem> out(static_cast<std::size_t>(m.kappa()) * n, kNoElement);
  for (Stratum alpha = 0; alpha < m.kappa(); ++alpha) {
    for (Elem x = 0; x < n; ++x) {
      const Elem xs[] = {x};
      const auto r = upper ? m.lub(alpha, xs) : m.glb(alpha, xs);
      if (r) out[alpha * n + x] = *r;
    }
  }
  return out;
}

struct ClassTask {
  Stratum alpha;
  Elem rep;
};

std::vector<ClassTask> prefix_class_tasks(const FiniteModel& m) {
  std::vector<ClassTask> tasks;
  for (Stratum alpha = 0; alpha < m.kappa(); ++alpha) {
    std::unordered_set<ElementSet, ElementSetHash> seen;
    for (Elem w = 0; w < m.size(); ++w) {
      if (seen.insert(m.prefix_class(alpha, w)).second) tasks.push_back({alpha, w});
    }
  }
  return tasks;
}

// Ax3 and its dual for one prefix class. The bound condition depends on X
// only through the set of its bounds inside the class, so it suffices to walk
// the closure of {class} under intersection with the principal cones.
std::optional<Witness> bound_closure_probe(const FiniteModel& m, ClassTask task, bool upper) {
  const auto& cone = upper ? m.sq_relation(task.alpha) : m.sq_transpose(task.alpha);
  const auto& order = upper ? m.leq_relation() : m.geq_relation();
  const ElementSet cls = m.prefix_class(task.alpha, task.rep);

  struct Node {
    ElementSet bounds;
    std::vector<Elem> generators;
  };
  std::vector<Node> queue{{cls, {}}};
  std::unordered_set<ElementSet, ElementSetHash> seen{cls};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const ElementSet bounds = queue[head].bounds;
    bool ok = false;
    bounds.for_each([&](Elem z) {
      if (!ok && bounds.subset_of(cone.row(z) & order.row(z))) ok = true;
    });
    if (!ok) {
      Witness w{task.alpha, 0, {task.rep}};
      w.elems.insert(w.elems.end(), queue[head].generators.begin(), queue[head].generators.end());
      return w;
    }
    cls.for_each([&](Elem x) {
      ElementSet next = bounds & cone.row(x);
      if (seen.insert(next).second) {
        auto gens = queue[head].generators;
        gens.push_back(x);
        queue.push_back({std::move(next), std::move(gens)});
      }
    });
  }
  return std::nullopt;
}

std::optional<Witness> class_closure_probe(const FiniteModel& m, Elem y, bool use_join) {
  for (Stratum alpha = 0; alpha < m.kappa(); ++alpha) {
    const auto& cls = m.eq_relation(alpha).row(y);
    std::optional<Witness> w;
    cls.for_each([&](Elem a) {
      if (w) return;
      cls.for_each([&](Elem b) {
        if (w || b < a) return;
        const Elem c = use_join ? m.join(a, b) : m.meet(a, b);
        if (!cls.test(c)) w = Witness{alpha, 0, {y, a, b}};
      });
    });
    if (w) return w;
  }
  return std::nullopt;
}

std::optional<Witness> ax5_probe(const FiniteModel& m, Elem x1) {
  for (Stratum alpha = 0; alpha < m.kappa(); ++alpha) {
    const auto& sq = m.sq_relation(alpha);
    std::optional<Witness> w;
    sq.row(x1).for_each([&](Elem y1) {
      for (Elem x2 = 0; x2 < m.size() && !w; ++x2) {
        sq.row(x2).for_each([&](Elem y2) {
          if (!w && !sq(m.join(x1, x2), m.join(y1, y2))) w = Witness{alpha, 0, {x1, y1, x2, y2}};
        });
      }
    });
    if (w) return w;
  }
  return std::nullopt;
}

std::optional<Witness> ax6_probe(const FiniteModel& m, const std::vector<Elem>& lub1, Elem a) {
  const auto n = m.size();
  for (Stratum alpha = 0; alpha < m.kappa(); ++alpha) {
    for (Elem b = a; b < n; ++b) {
      const Elem la = lub1[alpha * n + a], lb = lub1[alpha * n + b];
      const Elem lab = lub1[alpha * n + m.join(a, b)];
      if (la == kNoElement || lb == kNoElement || lab == kNoElement ||
          !m.eq(alpha, m.join(la, lb), lab)) {
        return Witness{alpha, 0, {a, b}};
      }
    }
  }
  return std::nullopt;
}

std::optional<Witness> ax7_probe(const FiniteModel& m, Elem x) {
  for (Stratum alpha = 0; alpha < m.kappa(); ++alpha) {
    const ElementSet candidates = m.leq_relation().row(x) & m.prefix_class(alpha, x);
    std::optional<Witness> w;
    candidates.for_each([&](Elem y) {
      if (!w && !m.sq(alpha, x, y)) w = Witness{alpha, 0, {x, y}};
    });
    if (w) return w;
  }
  return std::nullopt;
}

std::optional<Witness> restriction_order_probe(const FiniteModel& m, const std::vector<Elem>& r, Elem x) {
  const auto n = m.size();
  for (Stratum alpha = 0; alpha < m.kappa(); ++alpha) {
    std::optional<Witness> w;
    m.leq_relation().row(x).for_each([&](Elem y) {
      const Elem rx = r[alpha * n + x], ry = r[alpha * n + y];
      if (!w && (rx == kNoElement || ry == kNoElement || !m.leq(rx, ry))) w = Witness{alpha, 0, {x, y}};
    });
    if (w) return w;
  }
  return std::nullopt;
}

AxiomStatus run_one(const FiniteModel& m, Axiom axiom, Execution mode) {
  const auto n = m.size();
  const auto kappa = m.kappa();
  AxiomStatus status;
  status.axiom = axiom;
  std::optional<Witness> w;
  switch (axiom) {
    case Axiom::Ax1:
      w = first_witness(n, [&](std::size_t i) -> std::optional<Witness> {
        const auto x = static_cast<Elem>(i);
        for (Stratum alpha = 0; alpha < kappa; ++alpha) {
          for (Stratum beta = alpha + 1; beta < kappa; ++beta) {
            const ElementSet bad = m.sq_relation(beta).row(x);
            for (Elem y : bad.elements()) {
              if (!m.eq(alpha, x, y)) return Witness{alpha, beta, {x, y}};
            }
          }
        }
        return std::nullopt;
      }, mode);
      break;
    case Axiom::Ax2:
      w = first_witness(n, [&](std::size_t i) -> std::optional<Witness> {
        const auto x = static_cast<Elem>(i);
        ElementSet same(n, true);
        for (Stratum alpha = 0; alpha < kappa; ++alpha) same &= m.eq_relation(alpha).row(x);
        for (Elem y : same.elements()) {
          if (y > x) return Witness{0, 0, {x, y}};
        }
        return std::nullopt;
      }, mode);
      break;
    case Axiom::Ax3:
    case Axiom::Ax3d: {
      const auto tasks = prefix_class_tasks(m);
      const bool upper = axiom == Axiom::Ax3;
      w = first_witness(tasks.size(), [&](std::size_t i) { return bound_closure_probe(m, tasks[i], upper); },
                        mode);
      break;
    }
    case Axiom::Ax4:
    case Axiom::Ax4d: {
      const bool use_join = axiom == Axiom::Ax4;
      w = first_witness(n, [&](std::size_t i) { return class_closure_probe(m, static_cast<Elem>(i), use_join); },
                        mode);
      break;
    }
    case Axiom::Ax5:
      w = first_witness(n, [&](std::size_t i) { return ax5_probe(m, static_cast<Elem>(i)); }, mode);
      break;
    case Axiom::Ax6: {
      w = first_witness(n, [&](std::size_t i) { return ax5_probe(m, static_cast<Elem>(i)); }, mode);
      if (w) {
        status.note = "Ax5 fails";
        break;
      }
      const auto lub1 = singleton_bounds(m, true);
      w = first_witness(n, [&](std::size_t i) { return ax6_probe(m, lub1, static_cast<Elem>(i)); }, mode);
      break;
    }
    case Axiom::Ax7:
      w = first_witness(n, [&](std::size_t i) { return ax7_probe(m, static_cast<Elem>(i)); }, mode);
      break;
    case Axiom::Ax8:
    case Axiom::Ax8d: {
      const auto r = singleton_bounds(m, axiom == Axiom::Ax8);
      w = first_witness(n, [&](std::size_t i) { return restriction_order_probe(m, r, static_cast<Elem>(i)); },
                        mode);
      break;
    }
  }
  status.holds = !w.has_value();
  status.witness = std::move(w);
  return status;
}

// Direct evaluation of the bound required by Ax3 (upper) or Ax3d (lower) for
// X inside (w]_alpha, written straight from the definition.
std::optional<Elem> defined_bound(const FiniteModel& m, Stratum alpha, Elem w, const std::vector<Elem>& xs,
                                  bool upper) {
  auto in_class = [&](Elem y) {
    for (Stratum beta = 0; beta < alpha; ++beta) {
      if (!m.eq(beta, w, y)) return false;
    }
    return true;
  };
  auto related = [&](Elem a, Elem b) { return upper ? m.sq(alpha, a, b) : m.sq(alpha, b, a); };
  auto ordered = [&](Elem a, Elem b) { return upper ? m.leq(a, b) : m.leq(b, a); };
  auto bounds_all = [&](Elem y) {
    return std::all_of(xs.begin(), xs.end(), [&](Elem x) { return related(x, y); });
  };
  for (Elem z = 0; z < m.size(); ++z) {
    if (!in_class(z) || !bounds_all(z)) continue;
    bool best = true;
    for (Elem y = 0; y < m.size() && best; ++y) {
      if (in_class(y) && bounds_all(y)) best = related(z, y) && ordered(z, y);
    }
    if (best) return z;
  }
  return std::nullopt;
}

}  // namespace

AxiomReport check_axioms(const FiniteModel& model, std::span<const Axiom> which, Execution mode) {
  AxiomReport report;
  for (auto a : which) report.results.push_back(run_one(model, a, mode));
  return report;
}

bool witness_violates(const FiniteModel& m, Axiom axiom, const Witness& w) {
  const auto& e = w.elems;
  auto valid = [&](std::size_t count) {
    if (e.size() != count || w.alpha >= m.kappa()) return false;
    return std::all_of(e.begin(), e.end(), [&](Elem x) { return x < m.size(); });
  };
  auto prefix_equal = [&](Stratum alpha, Elem a, Elem b) {
    for (Stratum beta = 0; beta < alpha; ++beta) {
      if (!m.eq(beta, a, b)) return false;
    }
    return true;
  };
  switch (axiom) {
    case Axiom::Ax1:
      return valid(2) && w.alpha < w.beta && w.beta < m.kappa() && m.sq(w.beta, e[0], e[1]) &&
             !m.eq(w.alpha, e[0], e[1]);
    case Axiom::Ax2: {
      if (!valid(2) || e[0] == e[1]) return false;
      for (Stratum alpha = 0; alpha < m.kappa(); ++alpha) {
        if (!m.eq(alpha, e[0], e[1])) return false;
      }
      return true;
    }
    case Axiom::Ax3:
    case Axiom::Ax3d: {
      if (e.empty() || !valid(e.size())) return false;
      std::vector<Elem> xs(e.begin() + 1, e.end());
      for (auto x : xs) {
        if (!prefix_equal(w.alpha, e[0], x)) return false;
      }
      return !defined_bound(m, w.alpha, e[0], xs, axiom == Axiom::Ax3).has_value();
    }
    case Axiom::Ax4:
    case Axiom::Ax4d: {
      if (!valid(3) || !m.eq(w.alpha, e[1], e[0]) || !m.eq(w.alpha, e[2], e[0])) return false;
      const Elem c = axiom == Axiom::Ax4 ? m.join(e[1], e[2]) : m.meet(e[1], e[2]);
      return !m.eq(w.alpha, c, e[0]);
    }
    case Axiom::Ax5:
      return valid(4) && m.sq(w.alpha, e[0], e[1]) && m.sq(w.alpha, e[2], e[3]) &&
             !m.sq(w.alpha, m.join(e[0], e[2]), m.join(e[1], e[3]));
    case Axiom::Ax6: {
      if (e.size() == 4) return witness_violates(m, Axiom::Ax5, w);
      if (!valid(2)) return false;
      const auto la = defined_bound(m, w.alpha, e[0], {e[0]}, true);
      const auto lb = defined_bound(m, w.alpha, e[1], {e[1]}, true);
      const Elem ab = m.join(e[0], e[1]);
      const auto lab = defined_bound(m, w.alpha, ab, {ab}, true);
      return !la || !lb || !lab || !m.eq(w.alpha, m.join(*la, *lb), *lab);
    }
    case Axiom::Ax7:
      return valid(2) && m.leq(e[0], e[1]) && prefix_equal(w.alpha, e[0], e[1]) && !m.sq(w.alpha, e[0], e[1]);
    case Axiom::Ax8:
    case Axiom::Ax8d: {
      if (!valid(2) || !m.leq(e[0], e[1])) return false;
      const bool upper = axiom == Axiom::Ax8;
      const auto rx = defined_bound(m, w.alpha, e[0], {e[0]}, upper);
      const auto ry = defined_bound(m, w.alpha, e[1], {e[1]}, upper);
      return !rx || !ry || !m.leq(*rx, *ry);
    }
  }
  return false;
}

std::optional<Elem> global_maximum(const FiniteModel& model) {
  for (Elem top = 0; top < model.size(); ++top) {
    bool ok = true;
    for (Elem x = 0; x < model.size() && ok; ++x) ok = model.global_sq(x, top);
    if (ok) return top;
  }
  return std::nullopt;
}

Elem leq_maximum(const FiniteModel& model) { return model.top(); }

nlohmann::json to_json(const AxiomReport& report, const FiniteModel& model) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& s : report.results) {
    nlohmann::json row{{"axiom", axiom_name(s.axiom)}, {"holds", s.holds}};
    if (s.witness) {
      std::vector<std::string> names;
      for (auto e : s.witness->elems) names.push_back(model.name(e));
      row["witness"] = {{"alpha", s.witness->alpha}, {"beta", s.witness->beta}, {"elements", names}};
    }
    if (!s.note.empty()) row["note"] = s.note;
    rows.push_back(std::move(row));
  }
  return {{"axioms", rows}, {"all_hold", report.all_hold()}};
}

}  // namespace strata
