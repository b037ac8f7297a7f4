#include "ellb/moduli3/normalize.hpp"

#include <algorithm>
#include <stdexcept>

namespace ellb::moduli3 {

ExtClassVector::ExtClassVector(int base_twist, StandardBundle top,
                               const std::vector<ClassComponent>& components)
    : base_twist_(base_twist),
      top_(std::move(top)),
      values_(top_.size(), 0) {
  const StandardSummand base{Kind::Line, base_twist};
  std::vector<bool> bound(top_.size(), false);
  for (const auto& c : components) {
    const StandardSummand pattern{c.kind, c.twist};
    std::size_t idx = top_.size();
    for (std::size_t i = 0; i < top_.size(); ++i)
      if (!bound[i] && top_.summands()[i].same_class(pattern)) {
        idx = i;
        break;
      }
    if (idx == top_.size())
      throw std::invalid_argument(
          "class component on " + pattern.to_string() +
          " has no unbound matching summand in " + top_.to_string());
    bound[idx] = true;
    const int v = ((c.value % 3) + 3) % 3;
    if (v != 0 && ext_dim_pair(top_.summands()[idx], base, 1) == 0)
      throw std::invalid_argument(
          "nonzero class component on " + pattern.to_string() +
          " where Ext^1(-, " + base.to_string() + ") vanishes");
    values_[idx] = v;
  }
}

bool ExtClassVector::zero() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](int v) { return v == 0; });
}

IteratedExtension trivial_extension(StandardBundle b) {
  return {std::move(b), {}};
}

std::string to_string(ChoiceKind c) {
  switch (c) {
    case ChoiceKind::Zero: return "Zero";
    case ChoiceKind::OnLine: return "OnLine";
    case ChoiceKind::OnEalpha: return "OnEalpha";
  }
  throw std::logic_error("to_string: bad ChoiceKind");
}

namespace {

std::size_t find_class(const StandardBundle& b, Kind kind, int twist) {
  const StandardSummand pattern{kind, twist};
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b.summands()[i].same_class(pattern)) return i;
  return b.size();
}

// Depth-first replay of the chain.  Each resolver query either forks
// (EnumerateAll), consumes the next scripted answer (Fixed), or answers
// zero.  Terminal states land in `out`.  Stages come in one of two forms:
// declared (class vectors pre-bound to declared tops; states that
// contradict the next stage's top are dropped, and `stage_hits` records
// that every stage matched at least one state) or patterns (shapes bound
// to each branch state at replay time, nothing dropped).
struct Walker {
  const std::vector<ExtClassVector>* declared = nullptr;
  const std::vector<PatternStage>* patterns = nullptr;
  const Resolver& resolver;
  std::size_t fixed_pos = 0;
  std::vector<int> stage_hits;
  std::vector<StandardBundle> out;

  std::size_t stage_count() const {
    return declared ? declared->size() : patterns->size();
  }

  template <typename Fn>
  void next_choice(const std::vector<ChoiceKind>& applicable, Fn&& apply) {
    switch (resolver.policy) {
      case Resolver::Policy::EnumerateAll:
        for (ChoiceKind c : applicable) apply(c);
        return;
      case Resolver::Policy::Zero:
        apply(ChoiceKind::Zero);
        return;
      case Resolver::Policy::Fixed: {
        if (fixed_pos >= resolver.choices.size())
          throw std::runtime_error(
              "resolver exhausted: the chain needs more than " +
              std::to_string(resolver.choices.size()) + " scripted answers");
        const ChoiceKind c = resolver.choices[fixed_pos++];
        if (std::find(applicable.begin(), applicable.end(), c) ==
            applicable.end())
          throw std::invalid_argument("scripted resolver answer " +
                                      to_string(c) +
                                      " is not realizable at this query");
        apply(c);
        return;
      }
    }
    throw std::logic_error("next_choice: bad policy");
  }

  // Extends y by a line w^q.  `values` aligns with y's summands; a null
  // pointer means the class itself is resolver data (a re-enqueued stage).
  void stage(const StandardBundle& y, int q, const std::vector<int>* values,
             std::size_t next_stage) {
    if (values != nullptr) {
      bool any = false;
      for (std::size_t i = 0; i < y.size(); ++i) {
        if ((*values)[i] == 0) continue;
        any = true;
        // A nonzero hit on an Ea summand settles the stage outright: the
        // pair closes up into FP(q) and the rest splits off.
        if (y.summands()[i].kind == Kind::Ealpha) {
          resume(y.remove(i).add({Kind::FPush, q}), next_stage);
          return;
        }
      }
      if (!any) {
        resume(y.add({Kind::Line, q}), next_stage);
        return;
      }
      // Nonzero only on lines of twist q-2; merge the smallest
      // representative (they sort first among their class).
      for (std::size_t i = 0; i < y.size(); ++i)
        if ((*values)[i] != 0) {
          merge(y, q, i, next_stage);
          return;
        }
      throw std::logic_error("stage: nonzero class with no carrier");
    }
    std::vector<ChoiceKind> opts{ChoiceKind::Zero};
    if (find_class(y, Kind::Line, q - 2) < y.size())
      opts.push_back(ChoiceKind::OnLine);
    if (find_class(y, Kind::Ealpha, q - 2) < y.size())
      opts.push_back(ChoiceKind::OnEalpha);
    next_choice(opts, [&](ChoiceKind c) {
      switch (c) {
        case ChoiceKind::Zero:
          resume(y.add({Kind::Line, q}), next_stage);
          return;
        case ChoiceKind::OnLine:
          merge(y, q, find_class(y, Kind::Line, q - 2), next_stage);
          return;
        case ChoiceKind::OnEalpha:
          resume(y.remove(find_class(y, Kind::Ealpha, q - 2))
                     .add({Kind::FPush, q}),
                 next_stage);
          return;
      }
    });
  }

  // Fuses the base line w^q with the line at line_idx into Ea(q) and asks
  // for the residual class of the remainder against the new Ea.
  void merge(const StandardBundle& y, int q, std::size_t line_idx,
             std::size_t next_stage) {
    const StandardBundle rest = y.remove(line_idx);
    std::vector<ChoiceKind> opts{ChoiceKind::Zero};
    if (find_class(rest, Kind::Line, q - 4) < rest.size())
      opts.push_back(ChoiceKind::OnLine);
    if (find_class(rest, Kind::Ealpha, q - 2) < rest.size())
      opts.push_back(ChoiceKind::OnEalpha);
    next_choice(opts, [&](ChoiceKind c) {
      switch (c) {
        case ChoiceKind::Zero:
          resume(rest.add({Kind::Ealpha, q}), next_stage);
          return;
        case ChoiceKind::OnLine:
          resume(rest.remove(find_class(rest, Kind::Line, q - 4))
                     .add({Kind::FPush, q}),
                 next_stage);
          return;
        case ChoiceKind::OnEalpha: {
          // The Ea pair closes into FP(q); the displaced line w^(q-2)
          // re-enters as a pending extension with fresh class data.
          const StandardBundle t =
              rest.remove(find_class(rest, Kind::Ealpha, q - 2))
                  .add({Kind::FPush, q});
          stage(t, q - 2, nullptr, next_stage);
          return;
        }
      }
    });
  }

  void resume(const StandardBundle& state, std::size_t stage_idx) {
    if (stage_idx == stage_count()) {
      out.push_back(state);
      return;
    }
    if (declared != nullptr) {
      const ExtClassVector& s = (*declared)[stage_idx];
      if (state != s.top()) return;
      ++stage_hits[stage_idx];
      stage(state, s.base_twist(), &s.values(), stage_idx + 1);
      return;
    }
    const PatternStage& p = (*patterns)[stage_idx];
    std::vector<int> values;
    try {
      ExtClassVector cls(p.base_twist, state, p.components);
      values = cls.values();
    } catch (const std::invalid_argument& err) {
      throw std::invalid_argument(
          "stage " + std::to_string(stage_idx + 1) +
          " does not bind against branch state " + state.to_string() + ": " +
          err.what());
    }
    stage(state, p.base_twist, &values, stage_idx + 1);
  }
};

} // namespace

namespace {

std::vector<StandardBundle> finish(Walker& w) {
  std::sort(w.out.begin(), w.out.end(), bundle_less);
  w.out.erase(std::unique(w.out.begin(), w.out.end()), w.out.end());
  return std::move(w.out);
}

} // namespace

std::vector<StandardBundle> normalize(const IteratedExtension& e,
                                      const Resolver& resolver) {
  Walker w{&e.stages, nullptr, resolver};
  w.stage_hits.assign(e.stages.size(), 0);
  w.resume(e.initial_top, 0);
  for (std::size_t k = 0; k < e.stages.size(); ++k)
    if (w.stage_hits[k] == 0)
      throw std::invalid_argument(
          "stage " + std::to_string(k + 1) + " declared top " +
          e.stages[k].top().to_string() +
          " matches no outcome of the preceding stages");
  return finish(w);
}

std::vector<StandardBundle> normalize_patterns(
    const StandardBundle& initial_top, const std::vector<PatternStage>& stages,
    const Resolver& resolver) {
  Walker w{nullptr, &stages, resolver};
  w.resume(initial_top, 0);
  return finish(w);
}

} // namespace ellb::moduli3
