#include <algorithm>
#include <string>

#include "clustervd/cluster_dp.hpp"
#include "clustervd/error.hpp"

namespace clustervd {

namespace {

enum class Want { Sigma, TauBar, ThetaC, SigmaC, WSigma, WTauBar, All, MinLeaf };

struct Task {
  int node;
  Want want;
};

class Extractor {
 public:
  Extractor(const BinaryCotree& t, std::span<const NodeStats> stats) : t_(t), s_(stats) {}

  std::vector<int> run(Want want) {
    stack_.push_back({t_.root(), want});
    while (!stack_.empty()) {
      Task task = stack_.back();
      stack_.pop_back();
      step(task);
    }
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  const NodeStats& at(int i) const { return s_[static_cast<std::size_t>(i)]; }
  void push(int node, Want w) { stack_.push_back({node, w}); }

  void step(const Task& task) {
    const BinaryNode& nd = t_.node(task.node);
    const NodeStats& v = at(task.node);
    if (task.want == Want::MinLeaf) {
      out_.push_back(v.min_leaf);
      return;
    }
    if (nd.label == NodeLabel::Leaf) {
      if (task.want == Want::All) out_.push_back(nd.vertex);
      return;
    }
    const int li = nd.left;
    const int ri = nd.right;
    const NodeStats& l = at(li);
    const NodeStats& r = at(ri);
    const bool is_union = nd.label == NodeLabel::Union;

    switch (task.want) {
      case Want::All:
        push(li, Want::All);
        push(ri, Want::All);
        return;

      case Want::Sigma:
      case Want::WSigma: {
        const bool wt = task.want == Want::WSigma;
        const Want tb = wt ? Want::WTauBar : Want::TauBar;
        if (is_union) {
          push(li, task.want);
          push(ri, task.want);
          return;
        }
        const std::int64_t target = wt ? v.w_sigma : v.sigma;
        if ((wt ? l.w_sigma + r.w : l.sigma + r.n) == target) {
          push(li, task.want);
          push(ri, Want::All);
        } else if ((wt ? r.w_sigma + l.w : r.sigma + l.n) == target) {
          push(ri, task.want);
          push(li, Want::All);
        } else {
          push(li, tb);
          push(ri, tb);
        }
        return;
      }

      case Want::TauBar:
      case Want::WTauBar: {
        const bool wt = task.want == Want::WTauBar;
        if (!is_union) {
          push(li, task.want);
          push(ri, task.want);
          return;
        }
        const std::int64_t target = wt ? v.w_tau_bar : v.tau_bar;
        if ((wt ? l.w_tau_bar + r.w : l.tau_bar + r.n) == target) {
          push(li, task.want);
          push(ri, Want::All);
        } else {
          push(ri, task.want);
          push(li, Want::All);
        }
        return;
      }

      case Want::ThetaC:
        theta_c(v, l, r, li, ri, is_union);
        return;

      case Want::SigmaC:
        sigma_c(v, l, r, li, ri, is_union);
        return;

      case Want::MinLeaf:
        return;
    }
  }

  void theta_c(const NodeStats& v, const NodeStats& l, const NodeStats& r, int li, int ri, bool is_union) {
    if (is_union) {
      if (r.complete && l.connected && ExtInt(l.n) == v.theta_c) {
        push(li, Want::All);
      } else {
        push(ri, Want::All);
      }
      return;
    }
    if (!l.complete && !r.complete) {
      push(li, Want::TauBar);
      push(ri, Want::TauBar);
      return;
    }
    if (l.complete) {
      if (r.theta_c == v.theta_c) {
        push(ri, Want::ThetaC);
        return;
      }
      if (1 + ExtInt(r.tau_bar) == v.theta_c) {
        push(li, Want::MinLeaf);
        push(ri, Want::TauBar);
        return;
      }
    }
    if (l.theta_c == v.theta_c) {
      push(li, Want::ThetaC);
    } else {
      push(ri, Want::MinLeaf);
      push(li, Want::TauBar);
    }
  }

  void sigma_c(const NodeStats& v, const NodeStats& l, const NodeStats& r, int li, int ri, bool is_union) {
    if (v.sigma_c == ExtInt(0)) return;
    if (is_union) {
      push(l.ncq == 1 ? li : ri, Want::SigmaC);
      return;
    }
    if (l.complete || r.complete) {
      // `a` is the complete side
      const bool lc = l.complete;
      const NodeStats& a = lc ? l : r;
      const NodeStats& b = lc ? r : l;
      const int ai = lc ? li : ri;
      const int bi = lc ? ri : li;
      if (ExtInt(a.n + b.sigma) == v.sigma_c) {
        push(ai, Want::All);
        push(bi, Want::Sigma);
      } else if (b.theta_c == v.sigma_c) {
        push(bi, Want::ThetaC);
      } else {
        push(ai, Want::MinLeaf);
        push(bi, Want::TauBar);
      }
      return;
    }
    const bool loose = !l.connected && !r.connected;
    auto side = [&](int all, int rest, const NodeStats& rs) {
      push(all, Want::All);
      push(rest, loose && rs.sigma == 0 ? Want::MinLeaf : Want::Sigma);
    };
    auto padded = [&](std::int64_t s) { return loose ? std::max<std::int64_t>(s, 1) : s; };
    if (ExtInt(l.n + padded(r.sigma)) == v.sigma_c) {
      side(li, ri, r);
    } else if (ExtInt(r.n + padded(l.sigma)) == v.sigma_c) {
      side(ri, li, l);
    } else {
      push(li, Want::TauBar);
      push(ri, Want::TauBar);
    }
  }

  const BinaryCotree& t_;
  std::span<const NodeStats> s_;
  std::vector<Task> stack_;
  std::vector<int> out_;
};

}  // namespace

std::vector<int> extract_set(const BinaryCotree& t, std::span<const NodeStats> stats, Variant v, bool weighted) {
  if (stats.size() != t.node_count()) throw Error(ErrorKind::Input, "stats do not match the cotree");
  const ExtInt value = root_value(stats[static_cast<std::size_t>(t.root())], v, weighted);
  if (value.is_infinite()) {
    throw Error(ErrorKind::NoSet, std::string(to_string(v)) + " value is infinity; no deletion set exists");
  }
  Want want = Want::Sigma;
  switch (v) {
    case Variant::Cvd: want = weighted ? Want::WSigma : Want::Sigma; break;
    case Variant::ConnectedCvd: want = Want::SigmaC; break;
    case Variant::CliqueDel:
    case Variant::ComplementVc: want = weighted ? Want::WTauBar : Want::TauBar; break;
    case Variant::ConnectedCliqueDel: want = Want::ThetaC; break;
    case Variant::VertexCover: break;  // root_value already threw
  }
  return Extractor(t, stats).run(want);
}

}  // namespace clustervd
