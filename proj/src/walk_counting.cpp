#include "tbc/walk_counting.hpp"

#include "tbc/errors.hpp"

namespace tbc {

WalkCount& WalkCount::operator+=(WalkCount other) {
  if (__builtin_add_overflow(value_, other.value_, &value_)) {
    throw OverflowError("walk count exceeds 128 bits");
  }
  return *this;
}

WalkCount operator*(WalkCount a, WalkCount b) {
  WalkCount out;
  if (__builtin_mul_overflow(a.value_, b.value_, &out.value_)) {
    throw OverflowError("walk count exceeds 128 bits");
  }
  return out;
}

std::string WalkCount::to_string() const {
  if (value_ == 0) return "0";
  std::string digits;
  for (auto v = value_; v != 0; v /= 10) digits.insert(digits.begin(), static_cast<char>('0' + v % 10));
  return digits;
}

TimeTable<WalkCount> count_exact(const PredecessorData& pd) {
  TimeTable<WalkCount> sigma_bar(pd.num_nodes(), pd.horizon());
  const auto& vs = pd.vertices();
  std::vector<WalkCount> by_index(vs.size());
  for (auto i : topological_order(pd)) {
    WalkCount c;
    if (pd.is_source_init(i)) {
      c = WalkCount{1};
    } else {
      for (const auto& p : pd.pre_of(i)) c += by_index[*pd.vertex_index(p.node, p.time)];
    }
    by_index[i] = c;
    sigma_bar.at(vs[i].node, vs[i].time) = c;
  }
  return sigma_bar;
}

TimeTable<WalkCount> count_total(const PredecessorData& pd, const TimeTable<WalkCount>& sigma_bar,
                                 const VariantConfig& cfg) {
  if (!cfg.active()) return sigma_bar;
  TimeTable<WalkCount> sigma(pd.num_nodes(), pd.horizon());
  for (NodeId v = 0; v < pd.num_nodes(); ++v) {
    Length best = Length::infinite();
    WalkCount sum;
    for (Time t = 0; t <= pd.horizon(); ++t) {
      const WalkCount c = sigma_bar.at(v, t);
      if (!c.is_zero()) {
        const Length d = pd.dist(v, t);
        if (d < best) {
          best = d;
          sum = c;
        } else if (d == best) {
          sum += c;
        }
      }
      sigma.at(v, t) = sum;
    }
  }
  return sigma;
}

PairCounts pair_counts_and_base(const PredecessorData& pd, const TimeTable<WalkCount>& sigma,
                                const TimeTable<WalkCount>& sigma_bar, const VariantConfig& cfg) {
  const std::size_t n = pd.num_nodes();
  const Time horizon = pd.horizon();
  const bool foremost = cfg.cost() == CostKind::kForemost;
  PairCounts out{std::vector<WalkCount>(n), TimeTable<double>(n, horizon, 0.0),
                 std::vector<PairCost>(n)};

  for (NodeId v = 0; v < n; ++v) {
    auto times = pd.vertex_times(v);
    if (times.empty()) continue;
    PairCost& c = out.c_overall[v];
    if (foremost) {
      c = foremost_cost(pd, v, times.front());
    } else {
      for (Time t : times) c.length = std::min(c.length, pd.dist(v, t));
    }
    if (v == pd.source()) continue;  // empty walks are not pair walks

    WalkCount pair;
    for (Time t : times) {
      if (foremost ? foremost_cost(pd, v, t) == c : pd.dist(v, t) == c.length) pair += sigma_bar.at(v, t);
    }
    out.sigma_pair[v] = pair;
    if (pair.is_zero()) continue;

    const double denom = pair.to_double();
    if (cfg.active()) {
      // running minimum reaches c(v) at the first optimal arrival and stays there
      bool reached = false;
      for (Time t = 0; t <= horizon; ++t) {
        if (!sigma_bar.at(v, t).is_zero() && pd.dist(v, t) == c.length) reached = true;
        if (reached) out.delta_base.at(v, t) = sigma.at(v, t).to_double() / denom;
      }
    } else {
      for (Time t : times) {
        const bool optimal = foremost ? t == *c.arrival : pd.dist(v, t) == c.length;
        if (optimal) out.delta_base.at(v, t) = sigma.at(v, t).to_double() / denom;
      }
    }
  }
  return out;
}

WalkCounts count_walks(const PredecessorData& pd, const VariantConfig& cfg) {
  WalkCounts wc;
  wc.sigma_bar = count_exact(pd);
  wc.sigma = count_total(pd, wc.sigma_bar, cfg);
  auto pc = pair_counts_and_base(pd, wc.sigma, wc.sigma_bar, cfg);
  wc.sigma_pair = std::move(pc.sigma_pair);
  wc.delta_base = std::move(pc.delta_base);
  wc.c_overall = std::move(pc.c_overall);
  return wc;
}

}  // namespace tbc
