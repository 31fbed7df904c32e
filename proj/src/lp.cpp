#include "icl/lp.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

namespace icl {

int LinearProgram::add_variable(std::string name) {
  names_.push_back(std::move(name));
  objective_.emplace_back(0);
  return num_variables() - 1;
}

int LinearProgram::find_variable(const std::string& name) const {
  for (int i = 0; i < num_variables(); ++i)
    if (names_[static_cast<std::size_t>(i)] == name) return i;
  return -1;
}

void LinearProgram::set_objective(int var, const Rational& coef) {
  if (var < 0 || var >= num_variables()) throw std::invalid_argument("objective references undeclared variable");
  objective_[static_cast<std::size_t>(var)] = coef;
}

void LinearProgram::add_constraint(std::vector<LinearTerm> terms, Relation relation, const Rational& rhs) {
  for (const auto& t : terms)
    if (t.var < 0 || t.var >= num_variables())
      throw std::invalid_argument("constraint references undeclared variable");
  constraints_.push_back({std::move(terms), relation, rhs});
}

Rational LinearProgram::evaluate_objective(const std::vector<Rational>& x) const {
  Rational v = 0;
  for (std::size_t j = 0; j < objective_.size(); ++j)
    if (objective_[j] != 0) v += objective_[j] * x.at(j);
  return v;
}

bool LinearProgram::is_feasible(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != num_variables()) return false;
  for (const auto& v : x)
    if (v < 0) return false;
  for (const auto& c : constraints_) {
    Rational lhs = 0;
    for (const auto& t : c.terms) lhs += t.coef * x[static_cast<std::size_t>(t.var)];
    if (c.relation == Relation::LessEqual ? lhs > c.rhs : lhs != c.rhs) return false;
  }
  return true;
}

const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
  }
  return "?";
}

namespace {

// Dense tableau; the last entry of every row is the right-hand side. The
// objective row holds reduced costs and, in its last entry, minus the value.
template <class Num>
struct Tableau {
  std::vector<std::vector<Num>> rows;
  std::vector<Num> obj;
  std::vector<int> basis;
  int cols = 0;

  void pivot(std::size_t r, int e, std::vector<int>& nz) {
    auto& pr = rows[r];
    const Num inv = Num(1) / pr[static_cast<std::size_t>(e)];
    nz.clear();
    for (int j = 0; j <= cols; ++j) {
      if (pr[static_cast<std::size_t>(j)] != 0) {
        pr[static_cast<std::size_t>(j)] *= inv;
        nz.push_back(j);
      }
    }
    auto eliminate = [&](std::vector<Num>& row) {
      const Num f = row[static_cast<std::size_t>(e)];
      if (f == 0) return;
      for (int j : nz) row[static_cast<std::size_t>(j)] -= f * pr[static_cast<std::size_t>(j)];
    };
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r) eliminate(rows[i]);
    eliminate(obj);
    basis[r] = e;
  }
};

enum class RunResult { Optimal, Unbounded };

// Bland's rule: lowest-index improving column, ratio ties broken by the
// lowest-index basic variable.
RunResult run_bland(Tableau<Rational>& t, const std::vector<bool>& allowed) {
  std::vector<int> nz;
  for (;;) {
    int enter = -1;
    for (int j = 0; j < t.cols; ++j) {
      if (allowed[static_cast<std::size_t>(j)] && t.obj[static_cast<std::size_t>(j)] > 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return RunResult::Optimal;
    std::optional<std::size_t> leave;
    Rational best;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      const Rational& a = t.rows[i][static_cast<std::size_t>(enter)];
      if (a <= 0) continue;
      Rational ratio = t.rows[i][static_cast<std::size_t>(t.cols)] / a;
      if (!leave || ratio < best || (ratio == best && t.basis[i] < t.basis[*leave])) {
        leave = i;
        best = std::move(ratio);
      }
    }
    if (!leave) return RunResult::Unbounded;
    t.pivot(*leave, enter, nz);
  }
}

}  // namespace

LpSolution solve_lp_exact(const LinearProgram& lp) {
  const int n = lp.num_variables();
  const auto& cons = lp.constraints();
  const int m = static_cast<int>(cons.size());

  // Column layout: structural | one slack per inequality | artificials.
  std::vector<int> slack_col(static_cast<std::size_t>(m), -1);
  std::vector<int> art_col(static_cast<std::size_t>(m), -1);
  std::vector<bool> flipped(static_cast<std::size_t>(m), false);
  int cols = n;
  for (int i = 0; i < m; ++i) {
    flipped[static_cast<std::size_t>(i)] = cons[static_cast<std::size_t>(i)].rhs < 0;
    if (cons[static_cast<std::size_t>(i)].relation == Relation::LessEqual) slack_col[static_cast<std::size_t>(i)] = cols++;
  }
  const int first_art = cols;
  for (int i = 0; i < m; ++i) {
    const bool natural = cons[static_cast<std::size_t>(i)].relation == Relation::LessEqual && !flipped[static_cast<std::size_t>(i)];
    if (!natural) art_col[static_cast<std::size_t>(i)] = cols++;
  }

  Tableau<Rational> t;
  t.cols = cols;
  t.rows.assign(static_cast<std::size_t>(m), std::vector<Rational>(static_cast<std::size_t>(cols + 1)));
  t.basis.assign(static_cast<std::size_t>(m), -1);
  for (int i = 0; i < m; ++i) {
    const auto& c = cons[static_cast<std::size_t>(i)];
    auto& row = t.rows[static_cast<std::size_t>(i)];
    const int sign = flipped[static_cast<std::size_t>(i)] ? -1 : 1;
    for (const auto& term : c.terms) row[static_cast<std::size_t>(term.var)] += sign * term.coef;
    if (slack_col[static_cast<std::size_t>(i)] >= 0) row[static_cast<std::size_t>(slack_col[static_cast<std::size_t>(i)])] = sign;
    if (art_col[static_cast<std::size_t>(i)] >= 0) row[static_cast<std::size_t>(art_col[static_cast<std::size_t>(i)])] = 1;
    row[static_cast<std::size_t>(cols)] = sign * c.rhs;
    t.basis[static_cast<std::size_t>(i)] = art_col[static_cast<std::size_t>(i)] >= 0 ? art_col[static_cast<std::size_t>(i)] : slack_col[static_cast<std::size_t>(i)];
  }

  LpSolution sol;
  std::vector<bool> allowed(static_cast<std::size_t>(cols), true);
  std::vector<int> nz;

  if (first_art < cols) {
    // Phase 1: maximize -(sum of artificials).
    t.obj.assign(static_cast<std::size_t>(cols + 1), Rational(0));
    for (int i = 0; i < m; ++i) {
      if (art_col[static_cast<std::size_t>(i)] < 0) continue;
      const auto& row = t.rows[static_cast<std::size_t>(i)];
      for (int j = 0; j <= cols; ++j)
        if (j < first_art || j == cols) t.obj[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j)];
    }
    run_bland(t, allowed);
    if (t.obj[static_cast<std::size_t>(cols)] != 0) {
      sol.status = LpStatus::Infeasible;
      return sol;
    }
    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < t.rows.size();) {
      if (t.basis[i] < first_art) {
        ++i;
        continue;
      }
      int enter = -1;
      for (int j = 0; j < first_art; ++j)
        if (t.rows[i][static_cast<std::size_t>(j)] != 0) {
          enter = j;
          break;
        }
      if (enter >= 0) {
        t.pivot(i, enter, nz);
        ++i;
      } else {
        t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
        t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
    for (int j = first_art; j < cols; ++j) allowed[static_cast<std::size_t>(j)] = false;
  }

  // Phase 2 reduced costs.
  const auto& c = lp.objective();
  t.obj.assign(static_cast<std::size_t>(cols + 1), Rational(0));
  for (int j = 0; j < n; ++j) t.obj[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j)];
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const int b = t.basis[i];
    if (b >= n || c[static_cast<std::size_t>(b)] == 0) continue;
    const Rational cb = c[static_cast<std::size_t>(b)];
    for (int j = 0; j <= cols; ++j) {
      const auto& a = t.rows[i][static_cast<std::size_t>(j)];
      if (a != 0) t.obj[static_cast<std::size_t>(j)] -= cb * a;
    }
  }
  if (run_bland(t, allowed) == RunResult::Unbounded) {
    sol.status = LpStatus::Unbounded;
    return sol;
  }

  sol.status = LpStatus::Optimal;
  sol.assignment.assign(static_cast<std::size_t>(n), Rational(0));
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    if (t.basis[i] < n) sol.assignment[static_cast<std::size_t>(t.basis[i])] = t.rows[i][static_cast<std::size_t>(cols)];
  sol.optimum = lp.evaluate_objective(sol.assignment);
  return sol;
}

namespace {

// Solves a square system exactly by Gaussian elimination; nullopt if singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t k = b.size();
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t p = col;
    while (p < k && a[p][col] == 0) ++p;
    if (p == k) return std::nullopt;
    std::swap(a[p], a[col]);
    std::swap(b[p], b[col]);
    const Rational inv = 1 / a[col][col];
    for (std::size_t j = col; j < k; ++j) a[col][j] *= inv;
    b[col] *= inv;
    for (std::size_t i = 0; i < k; ++i) {
      if (i == col || a[i][col] == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t j = col; j < k; ++j)
        if (a[col][j] != 0) a[i][j] -= f * a[col][j];
      b[i] -= f * b[col];
    }
  }
  return b;
}

constexpr double kEps = 1e-9;

// Floating-point simplex for max c.x, Ax <= b, b >= 0, x >= 0 starting from
// the slack basis. Returns the final basis (columns >= n are slacks) or
// nullopt when it did not reach an optimal basis.
std::optional<std::vector<int>> float_basis(const LinearProgram& lp) {
  const int n = lp.num_variables();
  const auto& cons = lp.constraints();
  const int m = static_cast<int>(cons.size());
  Tableau<double> t;
  t.cols = n + m;
  t.rows.assign(static_cast<std::size_t>(m), std::vector<double>(static_cast<std::size_t>(t.cols + 1), 0.0));
  t.basis.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    auto& row = t.rows[static_cast<std::size_t>(i)];
    for (const auto& term : cons[static_cast<std::size_t>(i)].terms) row[static_cast<std::size_t>(term.var)] += term.coef.get_d();
    row[static_cast<std::size_t>(n + i)] = 1.0;
    row[static_cast<std::size_t>(t.cols)] = cons[static_cast<std::size_t>(i)].rhs.get_d();
    t.basis[static_cast<std::size_t>(i)] = n + i;
  }
  t.obj.assign(static_cast<std::size_t>(t.cols + 1), 0.0);
  for (int j = 0; j < n; ++j) t.obj[static_cast<std::size_t>(j)] = lp.objective()[static_cast<std::size_t>(j)].get_d();

  std::vector<int> nz;
  const int max_iter = 50 * (n + m) + 100;
  int degenerate_run = 0;
  for (int iter = 0; iter < max_iter; ++iter) {
    const bool bland = degenerate_run > 20;
    int enter = -1;
    double best_d = kEps;
    for (int j = 0; j < t.cols; ++j) {
      const double d = t.obj[static_cast<std::size_t>(j)];
      if (d > best_d) {
        enter = j;
        best_d = d;
        if (bland) break;
      }
    }
    if (enter < 0) return t.basis;
    int leave = -1;
    double best_ratio = 0;
    for (int i = 0; i < m; ++i) {
      const double a = t.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(enter)];
      if (a <= kEps) continue;
      const double ratio = t.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(t.cols)] / a;
      if (leave < 0 || ratio < best_ratio - kEps ||
          (ratio <= best_ratio + kEps && t.basis[static_cast<std::size_t>(i)] < t.basis[static_cast<std::size_t>(leave)])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) return std::nullopt;
    degenerate_run = best_ratio <= kEps ? degenerate_run + 1 : 0;
    t.pivot(static_cast<std::size_t>(leave), enter, nz);
  }
  return std::nullopt;
}

// Exact optimality certificate for a basis of the slack form of lp.
std::optional<LpSolution> certify_basis(const LinearProgram& lp, const std::vector<int>& basis) {
  const int n = lp.num_variables();
  const auto& cons = lp.constraints();
  const int m = static_cast<int>(cons.size());
  std::vector<bool> slack_basic(static_cast<std::size_t>(m), false);
  std::vector<int> structural;
  for (int b : basis) {
    if (b >= n)
      slack_basic[static_cast<std::size_t>(b - n)] = true;
    else
      structural.push_back(b);
  }
  std::vector<int> tight;
  for (int i = 0; i < m; ++i)
    if (!slack_basic[static_cast<std::size_t>(i)]) tight.push_back(i);
  if (tight.size() != structural.size()) return std::nullopt;
  const std::size_t k = tight.size();

  // Dense rows of the constraint matrix for the tight rows.
  std::vector<std::vector<Rational>> dense(k, std::vector<Rational>(static_cast<std::size_t>(n)));
  for (std::size_t r = 0; r < k; ++r)
    for (const auto& term : cons[static_cast<std::size_t>(tight[r])].terms) dense[r][static_cast<std::size_t>(term.var)] += term.coef;

  std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k)), at(k, std::vector<Rational>(k));
  std::vector<Rational> b(k), cb(k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t s = 0; s < k; ++s) {
      a[r][s] = dense[r][static_cast<std::size_t>(structural[s])];
      at[s][r] = a[r][s];
    }
    b[r] = cons[static_cast<std::size_t>(tight[r])].rhs;
    cb[r] = lp.objective()[static_cast<std::size_t>(structural[r])];
  }
  auto x_basic = solve_square(std::move(a), std::move(b));
  if (!x_basic) return std::nullopt;
  LpSolution sol;
  sol.status = LpStatus::Optimal;
  sol.assignment.assign(static_cast<std::size_t>(n), Rational(0));
  for (std::size_t s = 0; s < k; ++s) {
    if ((*x_basic)[s] < 0) return std::nullopt;
    sol.assignment[static_cast<std::size_t>(structural[s])] = (*x_basic)[s];
  }
  if (!lp.is_feasible(sol.assignment)) return std::nullopt;

  auto y = solve_square(std::move(at), std::move(cb));
  if (!y) return std::nullopt;
  for (const auto& yi : *y)
    if (yi < 0) return std::nullopt;
  std::vector<Rational> reduced = lp.objective();
  for (std::size_t r = 0; r < k; ++r) {
    if ((*y)[r] == 0) continue;
    for (const auto& term : cons[static_cast<std::size_t>(tight[r])].terms)
      reduced[static_cast<std::size_t>(term.var)] -= (*y)[r] * term.coef;
  }
  for (const auto& d : reduced)
    if (d > 0) return std::nullopt;
  sol.optimum = lp.evaluate_objective(sol.assignment);
  return sol;
}

bool fits_float_path(const LinearProgram& lp) {
  for (const auto& c : lp.constraints())
    if (c.relation != Relation::LessEqual || c.rhs < 0) return false;
  return true;
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, const LpOptions& options) {
  std::optional<LpSolution> sol;
  if (options.float_guided && fits_float_path(lp)) {
    if (auto basis = float_basis(lp)) sol = certify_basis(lp, *basis);
  }
  if (!sol) sol = solve_lp_exact(lp);
  if (sol->status == LpStatus::Optimal) {
    if (!lp.is_feasible(sol->assignment) || lp.evaluate_objective(sol->assignment) != sol->optimum)
      throw std::logic_error("simplex returned an assignment that fails exact re-substitution");
  }
  return *sol;
}

}  // namespace icl
