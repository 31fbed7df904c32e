#pragma once

#include <string>
#include <utility>
#include <vector>

#include "icl/rational.hpp"

namespace icl {

enum class Relation { LessEqual, Equal };

struct LinearTerm {
  int var = 0;
  Rational coef;
};

struct LpConstraint {
  std::vector<LinearTerm> terms;
  Relation relation = Relation::LessEqual;
  Rational rhs;
};

// maximize objective . x  subject to constraints, x >= 0.
class LinearProgram {
 public:
  int add_variable(std::string name);
  int num_variables() const { return static_cast<int>(names_.size()); }
  const std::string& name(int var) const { return names_.at(static_cast<std::size_t>(var)); }
  int find_variable(const std::string& name) const;  // -1 when absent

  void set_objective(int var, const Rational& coef);
  const std::vector<Rational>& objective() const { return objective_; }

  // Throws std::invalid_argument on references to undeclared variables.
  void add_constraint(std::vector<LinearTerm> terms, Relation relation, const Rational& rhs);
  const std::vector<LpConstraint>& constraints() const { return constraints_; }

  Rational evaluate_objective(const std::vector<Rational>& x) const;
  // Exact check of every constraint and of x >= 0.
  bool is_feasible(const std::vector<Rational>& x) const;

 private:
  std::vector<std::string> names_;
  std::vector<Rational> objective_;
  std::vector<LpConstraint> constraints_;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

const char* to_string(LpStatus s);

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rational optimum;
  std::vector<Rational> assignment;
};

struct LpOptions {
  // Try a floating-point simplex first and accept its final basis only after
  // exact primal/dual certification; otherwise fall back to the exact solver.
  bool float_guided = true;
};

LpSolution solve_lp(const LinearProgram& lp, const LpOptions& options = {});

// Exact two-phase tableau simplex with Bland's rule; no floating point.
LpSolution solve_lp_exact(const LinearProgram& lp);

}  // namespace icl
