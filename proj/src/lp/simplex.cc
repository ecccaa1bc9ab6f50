// Copyright 2026 The REORIENT Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "reorient/errors.h"
#include "reorient/lp/solver.h"

namespace reorient::lp {

const char* ToString(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kInfeasible:
      return "infeasible";
    case SolveStatus::kUnbounded:
      return "unbounded";
  }
  return "?";
}

Basis ExtendBasisWithRows(const Basis& basis, int num_rows_now) {
  Basis extended = basis;
  const int missing =
      num_rows_now -
      static_cast<int>(std::count(basis.status.begin(), basis.status.end(),
                                  VarStatus::kBasic));
  for (int k = 0; k < missing; ++k) {
    extended.status.push_back(VarStatus::kBasic);
  }
  return extended;
}

namespace {

constexpr double kDegenerateStep = 1e-12;

class RevisedSimplex {
 public:
  RevisedSimplex(const LinearProgram& problem, const ToleranceConfig& tol)
      : tol_(tol), m_(problem.num_rows()), n_(problem.num_columns()) {
    total_ = n_ + m_;
    offset_ = problem.objective_offset;
    // Column-wise copy of the structural part.
    std::vector<int> counts(n_ + 1, 0);
    for (const auto& row : problem.rows) {
      for (const Entry& e : row) ++counts[e.index + 1];
    }
    col_start_.assign(n_ + 1, 0);
    for (int j = 0; j < n_; ++j) col_start_[j + 1] = col_start_[j] + counts[j + 1];
    col_row_.resize(col_start_[n_]);
    col_val_.resize(col_start_[n_]);
    std::vector<int> fill(col_start_.begin(), col_start_.end() - 1);
    for (int r = 0; r < m_; ++r) {
      for (const Entry& e : problem.rows[r]) {
        col_row_[fill[e.index]] = r;
        col_val_[fill[e.index]] = e.value;
        ++fill[e.index];
      }
    }
    cost_.assign(total_, 0.0);
    lb_.resize(total_);
    ub_.resize(total_);
    for (int j = 0; j < n_; ++j) {
      cost_[j] = problem.objective[j];
      lb_[j] = problem.lower[j];
      ub_[j] = problem.upper[j];
    }
    // Logical s_r with a_r'x + s_r = b_r.
    for (int r = 0; r < m_; ++r) {
      const int j = n_ + r;
      switch (problem.senses[r]) {
        case RowSense::kLessEqual:
          lb_[j] = 0.0;
          ub_[j] = kInfinity;
          break;
        case RowSense::kGreaterEqual:
          lb_[j] = -kInfinity;
          ub_[j] = 0.0;
          break;
        case RowSense::kEqual:
          lb_[j] = 0.0;
          ub_[j] = 0.0;
          break;
      }
    }
    b_ = problem.rhs;
    budget_ = tol_.max_iterations > 0 ? tol_.max_iterations
                                      : 50L * (m_ + n_) + 1000;
  }

  LpSolution Solve(const Basis* warm) {
    if (!(warm != nullptr && StartFrom(*warm))) ColdStart();
    return Iterate();
  }

 private:
  template <class F>
  void ForEachInColumn(int j, F&& f) const {
    if (j < n_) {
      for (int k = col_start_[j]; k < col_start_[j + 1]; ++k) {
        f(col_row_[k], col_val_[k]);
      }
    } else {
      f(j - n_, 1.0);
    }
  }

  void PlaceNonbasic(int j, VarStatus preferred) {
    const bool has_lower = std::isfinite(lb_[j]);
    const bool has_upper = std::isfinite(ub_[j]);
    if (preferred == VarStatus::kAtUpper && has_upper) {
      status_[j] = VarStatus::kAtUpper;
      x_[j] = ub_[j];
    } else if (has_lower) {
      status_[j] = VarStatus::kAtLower;
      x_[j] = lb_[j];
    } else if (has_upper) {
      status_[j] = VarStatus::kAtUpper;
      x_[j] = ub_[j];
    } else {
      status_[j] = VarStatus::kFree;
      x_[j] = 0.0;
    }
  }

  void ColdStart() {
    status_.assign(total_, VarStatus::kAtLower);
    x_.assign(total_, 0.0);
    head_.clear();
    for (int j = 0; j < n_; ++j) PlaceNonbasic(j, VarStatus::kAtLower);
    for (int r = 0; r < m_; ++r) {
      status_[n_ + r] = VarStatus::kBasic;
      head_.push_back(n_ + r);
    }
    binv_ = Eigen::MatrixXd::Identity(m_, m_);
    ComputeBasicValues();
  }

  bool StartFrom(const Basis& warm) {
    if (static_cast<int>(warm.status.size()) != total_) return false;
    status_.assign(total_, VarStatus::kAtLower);
    x_.assign(total_, 0.0);
    head_.clear();
    for (int j = 0; j < total_; ++j) {
      if (warm.status[j] == VarStatus::kBasic) {
        status_[j] = VarStatus::kBasic;
        head_.push_back(j);
      } else {
        PlaceNonbasic(j, warm.status[j]);
      }
    }
    if (static_cast<int>(head_.size()) != m_ || !Invert()) return false;
    ComputeBasicValues();
    return true;
  }

  bool Invert() {
    if (m_ == 0) {
      binv_.resize(0, 0);
      return true;
    }
    // Basic logicals are unit columns, so only the block of structural
    // columns on rows without a basic logical needs an LU.
    std::vector<int> slack_pos(m_, -1);
    std::vector<int> structural;
    for (int i = 0; i < m_; ++i) {
      if (head_[i] >= n_) {
        slack_pos[head_[i] - n_] = i;
      } else {
        structural.push_back(i);
      }
    }
    const int k = static_cast<int>(structural.size());
    std::vector<int> open_rows;
    std::vector<int> row_slot(m_, -1);
    for (int r = 0; r < m_; ++r) {
      if (slack_pos[r] < 0) {
        row_slot[r] = static_cast<int>(open_rows.size());
        open_rows.push_back(r);
      }
    }
    if (static_cast<int>(open_rows.size()) != k) return false;
    binv_ = Eigen::MatrixXd::Zero(m_, m_);
    for (int r = 0; r < m_; ++r) {
      if (slack_pos[r] >= 0) binv_(slack_pos[r], r) = 1.0;
    }
    if (k == 0) return true;
    Eigen::MatrixXd block = Eigen::MatrixXd::Zero(k, k);
    Eigen::MatrixXd coupling = Eigen::MatrixXd::Zero(m_ - k, k);
    std::vector<int> slack_slot(m_, -1);
    std::vector<int> slack_rows;
    for (int r = 0; r < m_; ++r) {
      if (slack_pos[r] >= 0) {
        slack_slot[r] = static_cast<int>(slack_rows.size());
        slack_rows.push_back(r);
      }
    }
    for (int p = 0; p < k; ++p) {
      ForEachInColumn(head_[structural[p]], [&](int r, double v) {
        if (row_slot[r] >= 0) {
          block(row_slot[r], p) = v;
        } else {
          coupling(slack_slot[r], p) = v;
        }
      });
    }
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(block);
    const auto& packed = lu.matrixLU();
    double max_pivot = 0.0;
    double min_pivot = kInfinity;
    for (int i = 0; i < k; ++i) {
      const double p = std::abs(packed(i, i));
      max_pivot = std::max(max_pivot, p);
      min_pivot = std::min(min_pivot, p);
    }
    if (!(min_pivot > 1e-11 * std::max(1.0, max_pivot))) return false;
    const Eigen::MatrixXd block_inv = lu.inverse();
    const Eigen::MatrixXd reduced = coupling * block_inv;
    for (int q = 0; q < k; ++q) {
      const int r = open_rows[q];
      for (int p = 0; p < k; ++p) binv_(structural[p], r) = block_inv(p, q);
      for (int s = 0; s < m_ - k; ++s) {
        binv_(slack_pos[slack_rows[s]], r) = -reduced(s, q);
      }
    }
    return true;
  }

  void ComputeBasicValues() {
    Eigen::VectorXd residual = Eigen::Map<const Eigen::VectorXd>(b_.data(), m_);
    for (int j = 0; j < total_; ++j) {
      if (status_[j] == VarStatus::kBasic || x_[j] == 0.0) continue;
      const double xj = x_[j];
      ForEachInColumn(j, [&](int r, double v) { residual(r) -= v * xj; });
    }
    const Eigen::VectorXd xb = binv_ * residual;
    for (int i = 0; i < m_; ++i) x_[head_[i]] = xb(i);
  }

  void Refactor() {
    if (!Invert()) {
      ++repairs_;
      if (repairs_ > 5) {
        throw NumericalError("simplex: basis repeatedly singular after " +
                             std::to_string(iterations_) + " iterations");
      }
      ColdStart();
      return;
    }
    ComputeBasicValues();
  }

  // Signed bound violation used by phase 1: -1 below lower, +1 above upper.
  int ViolationSign(int j) const {
    if (x_[j] < lb_[j] - tol_.feasibility) return -1;
    if (x_[j] > ub_[j] + tol_.feasibility) return 1;
    return 0;
  }

  double ColumnDot(int j, const Eigen::VectorXd& y) const {
    double sum = 0.0;
    ForEachInColumn(j, [&](int r, double v) { sum += v * y(r); });
    return sum;
  }

  struct Ratio {
    int position = -1;
    double theta = kInfinity;
    double target = 0.0;
    bool flip = false;
  };

  Ratio RatioTest(int q, int dir, const Eigen::VectorXd& alpha, bool phase1,
                  bool bland) const {
    const double ftol = tol_.feasibility;
    Ratio best;
    double theta_max = kInfinity;
    struct Candidate {
      int position;
      double ratio;
      double target;
      double magnitude;
    };
    std::vector<Candidate> candidates;
    for (int i = 0; i < m_; ++i) {
      const double a = alpha(i);
      if (std::abs(a) <= tol_.pivot) continue;
      const double delta = -dir * a;
      const int v = head_[i];
      const double xv = x_[v];
      double target;
      if (delta > 0.0) {
        if (phase1 && xv < lb_[v] - ftol) {
          target = lb_[v];
        } else if (xv > ub_[v] + ftol || !std::isfinite(ub_[v])) {
          continue;
        } else {
          target = ub_[v];
        }
      } else {
        if (phase1 && xv > ub_[v] + ftol) {
          target = ub_[v];
        } else if (xv < lb_[v] - ftol || !std::isfinite(lb_[v])) {
          continue;
        } else {
          target = lb_[v];
        }
      }
      const double ratio = (target - xv) / delta;
      const double relaxed =
          (target + (delta > 0.0 ? ftol : -ftol) - xv) / delta;
      theta_max = std::min(theta_max, bland ? ratio : relaxed);
      candidates.push_back({i, ratio, target, std::abs(a)});
    }
    const double flip_distance = (std::isfinite(lb_[q]) && std::isfinite(ub_[q]))
                                     ? ub_[q] - lb_[q]
                                     : kInfinity;
    if (candidates.empty() || flip_distance <= theta_max) {
      if (std::isfinite(flip_distance)) {
        best.flip = true;
        best.theta = flip_distance;
      }
      return best;
    }
    const Candidate* chosen = nullptr;
    for (const Candidate& c : candidates) {
      if (bland) {
        if (c.ratio > theta_max) continue;
        if (chosen == nullptr || head_[c.position] < head_[chosen->position]) {
          chosen = &c;
        }
      } else {
        if (c.ratio > theta_max) continue;
        if (chosen == nullptr || c.magnitude > chosen->magnitude ||
            (c.magnitude == chosen->magnitude &&
             head_[c.position] < head_[chosen->position])) {
          chosen = &c;
        }
      }
    }
    best.position = chosen->position;
    best.theta = std::max(0.0, chosen->ratio);
    best.target = chosen->target;
    return best;
  }

  LpSolution Iterate() {
    const double otol = tol_.optimality;
    Eigen::VectorXd cb(m_);
    Eigen::VectorXd y(m_);
    Eigen::VectorXd alpha(m_);
    int since_refactor = 0;
    int degenerate = 0;
    bool bland = false;
    std::vector<double> reduced(total_, 0.0);

    while (true) {
      if (iterations_ >= budget_) {
        std::ostringstream msg;
        msg << "simplex: iteration budget " << budget_ << " exhausted (rows "
            << m_ << ", columns " << n_ << ", degenerate streak " << degenerate
            << ", bland " << (bland ? "on" : "off") << ")";
        throw NumericalError(msg.str());
      }
      bool phase1 = false;
      for (int i = 0; i < m_; ++i) {
        const int v = head_[i];
        const int sign = ViolationSign(v);
        if (sign != 0) phase1 = true;
        cb(i) = sign;
      }
      if (!phase1) {
        for (int i = 0; i < m_; ++i) cb(i) = cost_[head_[i]];
      }
      y.noalias() = binv_.transpose() * cb;

      int entering = -1;
      int dir = 0;
      double best_score = 0.0;
      for (int j = 0; j < total_; ++j) {
        const VarStatus s = status_[j];
        if (s == VarStatus::kBasic) continue;
        if (lb_[j] == ub_[j]) continue;
        const double d = (phase1 ? 0.0 : cost_[j]) - ColumnDot(j, y);
        reduced[j] = d;
        int candidate_dir = 0;
        if (d < -otol && (s == VarStatus::kAtLower || s == VarStatus::kFree)) {
          candidate_dir = 1;
        } else if (d > otol &&
                   (s == VarStatus::kAtUpper || s == VarStatus::kFree)) {
          candidate_dir = -1;
        }
        if (candidate_dir == 0) continue;
        if (bland) {
          entering = j;
          dir = candidate_dir;
          break;
        }
        if (std::abs(d) > best_score) {
          best_score = std::abs(d);
          entering = j;
          dir = candidate_dir;
        }
      }

      if (entering < 0) {
        if (since_refactor > 0) {
          Refactor();
          since_refactor = 0;
          continue;
        }
        return Finish(phase1 ? SolveStatus::kInfeasible : SolveStatus::kOptimal,
                      y);
      }

      alpha.setZero();
      ForEachInColumn(entering,
                      [&](int r, double v) { alpha.noalias() += v * binv_.col(r); });
      const Ratio ratio = RatioTest(entering, dir, alpha, phase1, bland);
      if (!ratio.flip && ratio.position < 0) {
        if (phase1) {
          throw NumericalError("simplex: unbounded ray during phase 1");
        }
        return Finish(SolveStatus::kUnbounded, y);
      }
      ++iterations_;
      const double theta = ratio.theta;
      if (theta != 0.0) {
        x_[entering] += dir * theta;
        for (int i = 0; i < m_; ++i) x_[head_[i]] -= dir * theta * alpha(i);
      }
      if (theta <= kDegenerateStep) {
        if (++degenerate >= tol_.degenerate_streak) bland = true;
      } else {
        degenerate = 0;
        bland = false;
      }
      if (ratio.flip) {
        status_[entering] =
            dir > 0 ? VarStatus::kAtUpper : VarStatus::kAtLower;
        x_[entering] = dir > 0 ? ub_[entering] : lb_[entering];
        continue;
      }
      const int r = ratio.position;
      const int leaving = head_[r];
      x_[leaving] = ratio.target;
      status_[leaving] = (ratio.target == lb_[leaving]) ? VarStatus::kAtLower
                                                        : VarStatus::kAtUpper;
      status_[entering] = VarStatus::kBasic;
      head_[r] = entering;
      const Eigen::RowVectorXd pivot_row = binv_.row(r) / alpha(r);
      binv_.noalias() -= alpha * pivot_row;
      binv_.row(r) = pivot_row;
      if (++since_refactor >= std::max(tol_.refactor_interval, m_ / 2)) {
        Refactor();
        since_refactor = 0;
      }
    }
  }

  LpSolution Finish(SolveStatus status, const Eigen::VectorXd& y) {
    LpSolution sol;
    sol.status = status;
    sol.iterations = iterations_;
    sol.primal.assign(x_.begin(), x_.begin() + n_);
    sol.objective_value = offset_;
    for (int j = 0; j < n_; ++j) sol.objective_value += cost_[j] * x_[j];
    sol.dual.assign(y.data(), y.data() + m_);
    sol.reduced_costs.assign(n_, 0.0);
    if (status == SolveStatus::kOptimal) {
      for (int j = 0; j < n_; ++j) {
        if (status_[j] != VarStatus::kBasic) {
          sol.reduced_costs[j] = cost_[j] - ColumnDot(j, y);
        }
      }
    } else {
      std::fill(sol.dual.begin(), sol.dual.end(), 0.0);
    }
    sol.basis.status = status_;
    return sol;
  }

  ToleranceConfig tol_;
  int m_;
  int n_;
  int total_ = 0;
  double offset_ = 0.0;
  long budget_ = 0;
  long iterations_ = 0;
  int repairs_ = 0;
  std::vector<int> col_start_;
  std::vector<int> col_row_;
  std::vector<double> col_val_;
  std::vector<double> cost_;
  std::vector<double> lb_;
  std::vector<double> ub_;
  std::vector<double> b_;
  std::vector<double> x_;
  std::vector<VarStatus> status_;
  std::vector<int> head_;
  Eigen::MatrixXd binv_;
};

// Geometric-mean row and column equilibration with power-of-two factors,
// so that scaling itself introduces no rounding. Returns false when every
// factor is one. Entries below kTinyEntry are ignored and factors are
// kept within [2^-20, 2^20].
bool ComputeScaling(const LinearProgram& p, std::vector<double>* row_scale,
                    std::vector<double>* col_scale) {
  const int m = p.num_rows();
  const int n = p.num_columns();
  row_scale->assign(m, 1.0);
  col_scale->assign(n, 1.0);
  constexpr double kTinyEntry = 1e-9;
  auto pow2 = [](double v) {
    return std::exp2(std::clamp(std::round(std::log2(v)), -20.0, 20.0));
  };
  for (int pass = 0; pass < 4; ++pass) {
    for (int r = 0; r < m; ++r) {
      double lo = kInfinity, hi = 0.0;
      for (const Entry& e : p.rows[r]) {
        if (std::abs(e.value) < kTinyEntry) continue;
        const double a = std::abs(e.value) * (*col_scale)[e.index];
        lo = std::min(lo, a);
        hi = std::max(hi, a);
      }
      if (hi > 0.0) (*row_scale)[r] = pow2(1.0 / std::sqrt(lo * hi));
    }
    std::vector<double> lo(n, kInfinity), hi(n, 0.0);
    for (int r = 0; r < m; ++r) {
      for (const Entry& e : p.rows[r]) {
        if (std::abs(e.value) < kTinyEntry) continue;
        const double a = std::abs(e.value) * (*row_scale)[r];
        lo[e.index] = std::min(lo[e.index], a);
        hi[e.index] = std::max(hi[e.index], a);
      }
    }
    for (int j = 0; j < n; ++j) {
      if (hi[j] > 0.0) (*col_scale)[j] = pow2(1.0 / std::sqrt(lo[j] * hi[j]));
    }
  }
  const auto one = [](double v) { return v == 1.0; };
  return !(std::all_of(row_scale->begin(), row_scale->end(), one) &&
           std::all_of(col_scale->begin(), col_scale->end(), one));
}

LinearProgram ApplyScaling(const LinearProgram& p, const std::vector<double>& rs,
                           const std::vector<double>& cs) {
  LinearProgram out = p;
  for (int j = 0; j < p.num_columns(); ++j) {
    out.objective[j] = p.objective[j] * cs[j];
    out.lower[j] = p.lower[j] / cs[j];
    out.upper[j] = p.upper[j] / cs[j];
  }
  for (int r = 0; r < p.num_rows(); ++r) {
    for (Entry& e : out.rows[r]) e.value *= rs[r] * cs[e.index];
    out.rhs[r] = p.rhs[r] * rs[r];
  }
  return out;
}

}  // namespace

LpSolution SolveLp(const LinearProgram& problem,
                   const ToleranceConfig& tolerances, const Basis* warm_start) {
  problem.Validate();
  std::vector<double> rs, cs;
  if (!ComputeScaling(problem, &rs, &cs)) {
    RevisedSimplex simplex(problem, tolerances);
    return simplex.Solve(warm_start);
  }
  const LinearProgram scaled = ApplyScaling(problem, rs, cs);
  RevisedSimplex simplex(scaled, tolerances);
  LpSolution sol = simplex.Solve(warm_start);
  for (int j = 0; j < problem.num_columns(); ++j) {
    const double raw = sol.primal[j] * cs[j];
    sol.primal[j] = std::clamp(raw, problem.lower[j], problem.upper[j]);
    sol.objective_value += problem.objective[j] * (sol.primal[j] - raw);
    sol.reduced_costs[j] /= cs[j];
  }
  for (int r = 0; r < problem.num_rows(); ++r) sol.dual[r] *= rs[r];
  return sol;
}

const SolverBackend& DefaultSolver() {
  static const BuiltinSolver solver;
  return solver;
}

}  // namespace reorient::lp
