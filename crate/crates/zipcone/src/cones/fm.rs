//! Exact Fourier–Motzkin elimination over the integers/rationals, with a
//! back-substituting feasibility witness. Rows stay integral: positive
//! combinations of integer rows are rescaled to primitive form after each
//! step, so no floating point or rounding ever enters.

use crate::{Error, Result};
use num::{BigInt, BigRational, Integer, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

/// One inequality `coeffs . x <= rhs`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Row {
    pub coeffs: Vec<Int>,
    pub rhs: Int,
}

impl Row {
    pub fn new(coeffs: Vec<Int>, rhs: Int) -> Self {
        Row { coeffs, rhs }
    }

    pub fn from_i64(coeffs: &[i64], rhs: i64) -> Self {
        Row {
            coeffs: coeffs.iter().map(|&c| Int::from(c)).collect(),
            rhs: Int::from(rhs),
        }
    }

    /// Divides by the gcd of all entries (including the rhs).
    pub fn normalized(mut self) -> Self {
        let mut g = self.rhs.abs();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        if !g.is_zero() && g != Int::from(1) {
            for c in &mut self.coeffs {
                *c = &*c / &g;
            }
            self.rhs = &self.rhs / &g;
        }
        self
    }

    pub fn is_trivially_true(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero) && !self.rhs.is_negative()
    }

    pub fn is_inconsistent(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero) && self.rhs.is_negative()
    }
}

/// Result of projecting a system: either the reduced system or a witness row
/// `0 <= negative`.
#[derive(Debug, Clone)]
pub enum Projection {
    Feasible(Vec<Row>),
    Infeasible(Row),
}

/// Default guard on intermediate inequality counts.
pub const DEFAULT_CAP: usize = 100_000;

fn dedup(rows: &mut Vec<Row>) {
    rows.sort();
    rows.dedup();
}

/// Eliminates one variable. Returns rows without `var`, with trivially true
/// rows dropped; an inconsistent constant row short-circuits.
fn eliminate_one(rows: &[Row], var: usize, cap: usize) -> Result<Projection> {
    let mut zero_rows: Vec<Row> = Vec::new();
    let mut pos: Vec<&Row> = Vec::new();
    let mut neg: Vec<&Row> = Vec::new();
    for r in rows {
        if r.coeffs[var].is_zero() {
            if r.is_inconsistent() {
                return Ok(Projection::Infeasible(r.clone()));
            }
            if !r.is_trivially_true() {
                zero_rows.push(r.clone());
            }
        } else if r.coeffs[var].is_positive() {
            pos.push(r);
        } else {
            neg.push(r);
        }
    }
    if pos.len() * neg.len() + zero_rows.len() > cap {
        return Err(Error::FmBlowup(pos.len() * neg.len() + zero_rows.len()));
    }
    let mut out = zero_rows;
    for p in &pos {
        for m in &neg {
            let a = p.coeffs[var].clone();
            let b = m.coeffs[var].abs();
            // b*p + a*m kills the variable
            let coeffs: Vec<Int> = p
                .coeffs
                .iter()
                .zip(&m.coeffs)
                .map(|(pc, mc)| &b * pc + &a * mc)
                .collect();
            let rhs = &b * &p.rhs + &a * &m.rhs;
            let row = Row { coeffs, rhs }.normalized();
            if row.is_inconsistent() {
                return Ok(Projection::Infeasible(row));
            }
            if !row.is_trivially_true() {
                out.push(row);
            }
        }
    }
    dedup(&mut out);
    if out.len() > cap {
        return Err(Error::FmBlowup(out.len()));
    }
    Ok(Projection::Feasible(out))
}

/// Picks the next variable to eliminate (least product heuristic).
fn pick_var(rows: &[Row], remaining: &[usize]) -> usize {
    let mut best = remaining[0];
    let mut best_cost = usize::MAX;
    for &v in remaining {
        let pos = rows.iter().filter(|r| r.coeffs[v].is_positive()).count();
        let neg = rows.iter().filter(|r| r.coeffs[v].is_negative()).count();
        let cost = pos * neg;
        if cost < best_cost {
            best_cost = cost;
            best = v;
        }
    }
    best
}

/// Exact Fourier–Motzkin projection of `rows` onto the complement of `drop`.
pub fn project(rows: &[Row], drop: &[usize], cap: usize) -> Result<Projection> {
    let mut cur: Vec<Row> = rows
        .iter()
        .filter(|r| !r.is_trivially_true())
        .cloned()
        .map(Row::normalized)
        .collect();
    for r in &cur {
        if r.is_inconsistent() {
            return Ok(Projection::Infeasible(r.clone()));
        }
    }
    dedup(&mut cur);
    let mut remaining: Vec<usize> = drop.to_vec();
    while !remaining.is_empty() {
        let v = pick_var(&cur, &remaining);
        remaining.retain(|&x| x != v);
        match eliminate_one(&cur, v, cap)? {
            Projection::Feasible(next) => cur = next,
            inf => return Ok(inf),
        }
    }
    Ok(Projection::Feasible(cur))
}

/// Decides feasibility of `rows` in variables `0..nvars` and returns an
/// exact rational witness if feasible.
pub fn feasible_point(rows: &[Row], nvars: usize, cap: usize) -> Result<Option<Vec<Rat>>> {
    let mut stages: Vec<(usize, Vec<Row>)> = Vec::new();
    let mut cur: Vec<Row> = rows
        .iter()
        .filter(|r| !r.is_trivially_true())
        .cloned()
        .map(Row::normalized)
        .collect();
    for r in &cur {
        if r.is_inconsistent() {
            return Ok(None);
        }
    }
    dedup(&mut cur);
    let mut remaining: Vec<usize> = (0..nvars).collect();
    while !remaining.is_empty() {
        let v = pick_var(&cur, &remaining);
        remaining.retain(|&x| x != v);
        stages.push((v, cur.clone()));
        match eliminate_one(&cur, v, cap)? {
            Projection::Feasible(next) => cur = next,
            Projection::Infeasible(_) => return Ok(None),
        }
    }
    // All variables eliminated; `cur` holds only satisfiable constant rows.
    let mut point: Vec<Option<Rat>> = vec![None; nvars];
    for (v, rows_at_stage) in stages.into_iter().rev() {
        let mut lower: Option<Rat> = None;
        let mut upper: Option<Rat> = None;
        for r in &rows_at_stage {
            let c = &r.coeffs[v];
            if c.is_zero() {
                continue;
            }
            // c*x <= rhs - (known part)
            let mut rest = Rat::from(r.rhs.clone());
            for (j, cj) in r.coeffs.iter().enumerate() {
                if j == v || cj.is_zero() {
                    continue;
                }
                let xj = point[j]
                    .clone()
                    .expect("later variables assigned before earlier ones");
                rest -= Rat::from(cj.clone()) * xj;
            }
            let bound = rest / Rat::from(c.clone());
            if c.is_positive() {
                upper = Some(match upper {
                    None => bound,
                    Some(u) => u.min(bound),
                });
            } else {
                lower = Some(match lower {
                    None => bound,
                    Some(l) => l.max(bound),
                });
            }
        }
        let val = match (lower, upper) {
            (Some(l), Some(u)) => {
                debug_assert!(l <= u, "back-substitution interval is empty");
                (l + u) / Rat::from(Int::from(2))
            }
            (Some(l), None) => l,
            (None, Some(u)) => u,
            (None, None) => Rat::zero(),
        };
        point[v] = Some(val);
    }
    Ok(Some(point.into_iter().map(Option::unwrap).collect()))
}

/// Verifies a candidate point against the rows (exact).
pub fn satisfies(rows: &[Row], point: &[Rat]) -> bool {
    rows.iter().all(|r| {
        let lhs: Rat = r
            .coeffs
            .iter()
            .zip(point)
            .map(|(c, x)| Rat::from(c.clone()) * x)
            .sum();
        lhs <= Rat::from(r.rhs.clone())
    })
}
