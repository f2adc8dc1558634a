//! Dense-tableau simplex over exact rationals.
//!
//! Two-phase method with Bland's rule: entering variable is the lowest index
//! with negative reduced cost, ties in the ratio test go to the lowest basic
//! index. Runs are deterministic and always terminate.

use std::fmt;
use std::io::Write;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::graph::WeightedGraph;
use crate::rational::{self, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Minimize,
    Maximize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    AtLeast,
    AtMost,
    Equal,
}

impl Relation {
    fn flipped(self) -> Self {
        match self {
            Relation::AtLeast => Relation::AtMost,
            Relation::AtMost => Relation::AtLeast,
            Relation::Equal => Relation::Equal,
        }
    }

    fn holds(self, lhs: &Rational, rhs: &Rational) -> bool {
        match self {
            Relation::AtLeast => lhs >= rhs,
            Relation::AtMost => lhs <= rhs,
            Relation::Equal => lhs == rhs,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::AtLeast => ">=",
            Relation::AtMost => "<=",
            Relation::Equal => "=",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LpError {
    #[error("constraint has {found} coefficients, expected {expected}")]
    Arity { expected: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub coefficients: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

/// `optimize c·x  subject to  rows,  x ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearProgram {
    sense: Sense,
    objective: Vec<Rational>,
    constraints: Vec<Constraint>,
}

impl LinearProgram {
    pub fn new(sense: Sense, objective: Vec<Rational>) -> Self {
        LinearProgram {
            sense,
            objective,
            constraints: Vec::new(),
        }
    }

    pub fn add_constraint(
        &mut self,
        coefficients: Vec<Rational>,
        relation: Relation,
        rhs: Rational,
    ) -> Result<(), LpError> {
        if coefficients.len() != self.objective.len() {
            return Err(LpError::Arity {
                expected: self.objective.len(),
                found: coefficients.len(),
            });
        }
        self.constraints.push(Constraint {
            coefficients,
            relation,
            rhs,
        });
        Ok(())
    }

    pub fn sense(&self) -> Sense {
        self.sense
    }

    pub fn objective(&self) -> &[Rational] {
        &self.objective
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn variable_count(&self) -> usize {
        self.objective.len()
    }

    pub fn objective_value(&self, values: &[Rational]) -> Rational {
        self.objective.iter().zip(values).map(|(c, x)| c * x).sum()
    }

    /// Exact feasibility check, including nonnegativity.
    pub fn is_feasible(&self, values: &[Rational]) -> bool {
        values.len() == self.objective.len()
            && values.iter().all(rational::is_nonnegative)
            && self.constraints.iter().all(|c| {
                let lhs: Rational = c.coefficients.iter().zip(values).map(|(a, x)| a * x).sum();
                c.relation.holds(&lhs, &c.rhs)
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpSolution {
    pub status: LpStatus,
    /// One value per structural variable; all zero unless optimal.
    pub values: Vec<Rational>,
    pub objective: Rational,
    /// Basic variables at termination, ascending. Indices below the
    /// variable count are structural; the rest are slack or surplus columns
    /// in constraint order.
    pub basis: Vec<usize>,
}

impl LpSolution {
    pub fn is_optimal(&self) -> bool {
        self.status == LpStatus::Optimal
    }
}

pub fn solve(lp: &LinearProgram) -> LpSolution {
    Tableau::new(lp).run(lp, None)
}

/// Like [`solve`], writing one line per pivot to `trace`.
pub fn solve_traced(lp: &LinearProgram, trace: &mut dyn Write) -> LpSolution {
    Tableau::new(lp).run(lp, Some(trace))
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    structural: usize,
    // columns from here on are artificial
    first_artificial: usize,
    columns: usize,
}

enum Outcome {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn new(lp: &LinearProgram) -> Self {
        let structural = lp.variable_count();
        let normalized: Vec<(Vec<Rational>, Relation, Rational)> = lp
            .constraints
            .iter()
            .map(|c| {
                if c.rhs.is_negative() {
                    (
                        c.coefficients.iter().map(|a| -a).collect(),
                        c.relation.flipped(),
                        -&c.rhs,
                    )
                } else {
                    (c.coefficients.clone(), c.relation, c.rhs.clone())
                }
            })
            .collect();

        let slack_count = normalized
            .iter()
            .filter(|(_, r, _)| *r != Relation::Equal)
            .count();
        let artificial_count = normalized
            .iter()
            .filter(|(_, r, _)| *r != Relation::AtMost)
            .count();
        let first_artificial = structural + slack_count;
        let columns = first_artificial + artificial_count;

        let mut rows = Vec::with_capacity(normalized.len());
        let mut rhs = Vec::with_capacity(normalized.len());
        let mut basis = Vec::with_capacity(normalized.len());
        let (mut next_slack, mut next_artificial) = (structural, first_artificial);
        for (coefficients, relation, b) in normalized {
            let mut row = coefficients;
            row.resize(columns, Rational::zero());
            match relation {
                Relation::AtMost => {
                    row[next_slack] = rational::one();
                    basis.push(next_slack);
                    next_slack += 1;
                }
                Relation::AtLeast => {
                    row[next_slack] = -rational::one();
                    next_slack += 1;
                    row[next_artificial] = rational::one();
                    basis.push(next_artificial);
                    next_artificial += 1;
                }
                Relation::Equal => {
                    row[next_artificial] = rational::one();
                    basis.push(next_artificial);
                    next_artificial += 1;
                }
            }
            rows.push(row);
            rhs.push(b);
        }
        Tableau {
            rows,
            rhs,
            basis,
            structural,
            first_artificial,
            columns,
        }
    }

    fn run(mut self, lp: &LinearProgram, mut trace: Option<&mut dyn Write>) -> LpSolution {
        if self.first_artificial < self.columns {
            let mut cost = vec![Rational::zero(); self.columns];
            for c in &mut cost[self.first_artificial..] {
                *c = rational::one();
            }
            self.optimize(&cost, self.columns, 1, &mut trace);
            let infeasibility: Rational = self
                .basis
                .iter()
                .zip(&self.rhs)
                .filter(|(&b, _)| b >= self.first_artificial)
                .map(|(_, v)| v)
                .sum();
            if infeasibility.is_positive() {
                return self.finish(lp, LpStatus::Infeasible);
            }
            self.expel_artificials(&mut trace);
        }

        let mut cost = vec![Rational::zero(); self.columns];
        for (c, o) in cost.iter_mut().zip(&lp.objective) {
            *c = match lp.sense {
                Sense::Minimize => o.clone(),
                Sense::Maximize => -o,
            };
        }
        match self.optimize(&cost, self.first_artificial, 2, &mut trace) {
            Outcome::Optimal => self.finish(lp, LpStatus::Optimal),
            Outcome::Unbounded => self.finish(lp, LpStatus::Unbounded),
        }
    }

    /// Minimizes `cost` over the current basis, entering only columns below `eligible`.
    fn optimize(
        &mut self,
        cost: &[Rational],
        eligible: usize,
        phase: u8,
        trace: &mut Option<&mut dyn Write>,
    ) -> Outcome {
        loop {
            let reduced = self.reduced_costs(cost);
            let Some(entering) = (0..eligible).find(|&j| reduced[j].is_negative()) else {
                return Outcome::Optimal;
            };
            let mut leaving: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[entering].is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / &row[entering];
                let better = match &leaving {
                    None => true,
                    Some((r, best)) => {
                        ratio < *best || (ratio == *best && self.basis[i] < self.basis[*r])
                    }
                };
                if better {
                    leaving = Some((i, ratio));
                }
            }
            let Some((row, _)) = leaving else {
                return Outcome::Unbounded;
            };
            if let Some(out) = trace.as_deref_mut() {
                let _ = writeln!(
                    out,
                    "phase {phase}: enter x{entering} leave x{} (row {row})",
                    self.basis[row]
                );
            }
            self.pivot(row, entering);
        }
    }

    fn reduced_costs(&self, cost: &[Rational]) -> Vec<Rational> {
        let mut reduced = cost.to_vec();
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            let cb = &cost[b];
            if cb.is_zero() {
                continue;
            }
            for (d, a) in reduced.iter_mut().zip(row) {
                if !a.is_zero() {
                    *d -= cb * a;
                }
            }
        }
        reduced
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.rows[row][col].clone();
        for a in &mut self.rows[row] {
            if !a.is_zero() {
                *a /= &p;
            }
        }
        self.rhs[row] /= &p;
        let pivot_row = self.rows[row].clone();
        let pivot_rhs = self.rhs[row].clone();
        for i in 0..self.rows.len() {
            if i == row || self.rows[i][col].is_zero() {
                continue;
            }
            let factor = self.rows[i][col].clone();
            for (a, q) in self.rows[i].iter_mut().zip(&pivot_row) {
                if !q.is_zero() {
                    *a -= &factor * q;
                }
            }
            self.rhs[i] -= &factor * &pivot_rhs;
        }
        self.basis[row] = col;
    }

    // After a successful phase 1, artificial basics sit at zero; swap them
    // for a real column or drop the row when it is redundant.
    fn expel_artificials(&mut self, trace: &mut Option<&mut dyn Write>) {
        let mut i = 0;
        while i < self.rows.len() {
            if self.basis[i] < self.first_artificial {
                i += 1;
                continue;
            }
            match (0..self.first_artificial).find(|&j| !self.rows[i][j].is_zero()) {
                Some(j) => {
                    if let Some(out) = trace.as_deref_mut() {
                        let _ =
                            writeln!(out, "phase 1: expel artificial x{} for x{j}", self.basis[i]);
                    }
                    self.pivot(i, j);
                    i += 1;
                }
                None => {
                    self.rows.remove(i);
                    self.rhs.remove(i);
                    self.basis.remove(i);
                }
            }
        }
    }

    fn finish(self, lp: &LinearProgram, status: LpStatus) -> LpSolution {
        let mut values = vec![Rational::zero(); self.structural];
        let mut basis: Vec<usize> = Vec::new();
        if status == LpStatus::Optimal {
            for (&b, v) in self.basis.iter().zip(&self.rhs) {
                if b < self.structural {
                    values[b] = v.clone();
                }
            }
            basis = self.basis.clone();
            basis.sort_unstable();
        }
        let objective = if status == LpStatus::Optimal {
            lp.objective_value(&values)
        } else {
            Rational::zero()
        };
        LpSolution {
            status,
            values,
            objective,
            basis,
        }
    }
}

/// Fractional edge cover LP: `min Σ w_e x_e` s.t. `x(δ(v)) ≥ 1` for every vertex.
/// Variable `e` is edge `e`; row `v` is vertex `v`.
pub fn fractional_cover_lp(graph: &WeightedGraph) -> LinearProgram {
    let m = graph.edge_count();
    let mut lp = LinearProgram::new(
        Sense::Minimize,
        graph.edges().iter().map(|e| e.weight.clone()).collect(),
    );
    for v in graph.vertices() {
        let mut row = vec![Rational::zero(); m];
        for &(_, e) in graph.neighbors(v) {
            row[e] = rational::one();
        }
        lp.add_constraint(row, Relation::AtLeast, rational::one())
            .expect("row has one entry per edge");
    }
    lp
}

/// Dual packing LP: `max Σ y_v` s.t. `y_u + y_v ≤ w_uv` for every edge.
/// Variable `v` is vertex `v`; row `e` is edge `e`.
pub fn dual_packing_lp(graph: &WeightedGraph) -> LinearProgram {
    let n = graph.vertex_count();
    let mut lp = LinearProgram::new(Sense::Maximize, vec![rational::one(); n]);
    for e in graph.edges() {
        let mut row = vec![Rational::zero(); n];
        row[e.u] = rational::one();
        row[e.v] = rational::one();
        lp.add_constraint(row, Relation::AtMost, e.weight.clone())
            .expect("row has one entry per vertex");
    }
    lp
}
