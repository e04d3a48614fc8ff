//! Exact rational polyhedral cone kernel: H-form and V-form descriptions,
//! membership, intersection, Minkowski sum, inclusion with Farkas
//! certificates, extreme rays, Fourier–Motzkin projection, and 2D slices.
//!
//! All arithmetic is exact; functionals are kept primitive and integral
//! (denominators cleared), and `{lambda : f . lambda <= 0 for all f}` is the
//! meaning of an H-form.

pub mod dd;
pub mod fm;
pub(crate) mod intlin;

use crate::rootdata::Character;
use crate::{Error, Result};
use num::{BigInt, BigRational, Integer, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

pub use dd::VRep;
pub use fm::{Projection, Row};

/// A primitive nonzero integer functional; evaluation is the dot product
/// and the associated halfspace is `f . lambda <= 0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinFunctional {
    pub coeffs: Vec<Int>,
}

fn primitive_vec(mut v: Vec<Int>) -> Vec<Int> {
    let mut g = Int::from(0);
    for c in &v {
        g = g.gcd(c);
    }
    if !g.is_zero() && g != Int::from(1) {
        for c in &mut v {
            *c = &*c / &g;
        }
    }
    v
}

pub fn int_vec(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&c| Int::from(c)).collect()
}

impl LinFunctional {
    /// Normalizes to primitive form; zero functionals are rejected.
    pub fn new(coeffs: Vec<Int>) -> Result<Self> {
        if coeffs.iter().all(Zero::is_zero) {
            return Err(Error::EmptySpec);
        }
        Ok(LinFunctional {
            coeffs: primitive_vec(coeffs),
        })
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<Self> {
        Self::new(int_vec(coeffs))
    }

    pub fn eval(&self, lambda: &[i64]) -> Int {
        self.coeffs
            .iter()
            .zip(lambda)
            .map(|(c, &x)| c * Int::from(x))
            .sum()
    }

    pub fn eval_int(&self, lambda: &[Int]) -> Int {
        self.coeffs.iter().zip(lambda).map(|(c, x)| c * x).sum()
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    /// Human form "c1*k1 + ... <= 0".
    pub fn pretty(&self, var: &str) -> String {
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = if mag == Int::from(1) {
                format!("{var}{}", i + 1)
            } else {
                format!("{mag}*{var}{}", i + 1)
            };
            if terms.is_empty() {
                terms.push(if c.is_negative() {
                    format!("-{body}")
                } else {
                    body
                });
            } else {
                terms.push(format!("{} {body}", if c.is_negative() { "-" } else { "+" }));
            }
        }
        format!("{} <= 0", terms.join(" "))
    }
}

/// Semantics of a generator description.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VSemantics {
    /// Nonnegative rational span (saturated cone).
    Rational,
    /// Nonnegative integer span (monoid); membership needs a bound.
    Monoid,
}

/// A rational polyhedral cone with inequality and/or generator descriptions.
#[derive(Debug, Clone)]
pub struct Cone {
    pub n: usize,
    pub hform: Option<Vec<LinFunctional>>,
    pub vform: Option<Vec<Vec<Int>>>,
    pub vsemantics: VSemantics,
}

fn canonical_hform(funcs: Vec<LinFunctional>) -> Vec<LinFunctional> {
    let mut fs = funcs;
    fs.sort();
    fs.dedup();
    fs
}

/// An exact nonnegative-combination witness: `sum_i coeff_i * f_i` equals a
/// positive rational multiple of `target`.
#[derive(Debug, Clone)]
pub struct Certificate {
    pub combination: Vec<(usize, Rat)>,
    pub target: LinFunctional,
}

impl Certificate {
    /// Verifies the combination exactly against the given functionals.
    pub fn verify(&self, funcs: &[LinFunctional]) -> bool {
        let n = self.target.rank();
        let mut acc = vec![Rat::zero(); n];
        for (i, c) in &self.combination {
            if c.is_negative() {
                return false;
            }
            if *i >= funcs.len() {
                return false;
            }
            for (a, b) in acc.iter_mut().zip(&funcs[*i].coeffs) {
                *a += c * Rat::from(b.clone());
            }
        }
        // acc must be a positive multiple of target
        let mut scale: Option<Rat> = None;
        for (a, t) in acc.iter().zip(&self.target.coeffs) {
            if t.is_zero() {
                if !a.is_zero() {
                    return false;
                }
            } else {
                let s = a / Rat::from(t.clone());
                match &scale {
                    None => scale = Some(s),
                    Some(prev) => {
                        if *prev != s {
                            return false;
                        }
                    }
                }
            }
        }
        matches!(scale, Some(s) if s.is_positive())
    }
}

/// Outcome of an inclusion test.
#[derive(Debug, Clone)]
pub enum IncludeOutcome {
    Included(Vec<Certificate>),
    /// A generator (or lineality direction) of the smaller cone violating
    /// the larger cone.
    CounterRay(Vec<Int>),
}

impl IncludeOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, IncludeOutcome::Included(_))
    }
}

/// Spec-facing constructor: H-form cone, nonempty input required.
pub fn make_cone_h(n: usize, funcs: Vec<LinFunctional>) -> Result<Cone> {
    if funcs.is_empty() {
        return Err(Error::EmptySpec);
    }
    for f in &funcs {
        if f.rank() != n {
            return Err(Error::RankMismatch {
                expected: n,
                got: f.rank(),
            });
        }
    }
    Ok(Cone::from_hform(n, funcs))
}

/// Spec-facing constructor: V-form cone, nonempty input required.
pub fn make_cone_v(n: usize, gens: Vec<Vec<Int>>, vsemantics: VSemantics) -> Result<Cone> {
    if gens.is_empty() {
        return Err(Error::EmptySpec);
    }
    for g in &gens {
        if g.len() != n {
            return Err(Error::RankMismatch {
                expected: n,
                got: g.len(),
            });
        }
    }
    Ok(Cone::from_vform(n, gens, vsemantics))
}

impl Cone {
    /// H-form cone; an empty list means the full space.
    pub fn from_hform(n: usize, funcs: Vec<LinFunctional>) -> Cone {
        Cone {
            n,
            hform: Some(canonical_hform(funcs)),
            vform: None,
            vsemantics: VSemantics::Rational,
        }
    }

    /// V-form cone; zero generators are dropped, an empty list is `{0}`.
    /// Rational generators are rescaled to primitive form; monoid
    /// generators are kept verbatim (rescaling would change the monoid).
    pub fn from_vform(n: usize, gens: Vec<Vec<Int>>, vsemantics: VSemantics) -> Cone {
        let mut gens: Vec<Vec<Int>> = gens
            .into_iter()
            .map(|g| match vsemantics {
                VSemantics::Rational => primitive_vec(g),
                VSemantics::Monoid => g,
            })
            .filter(|g| !g.iter().all(Zero::is_zero))
            .collect();
        gens.sort();
        gens.dedup();
        Cone {
            n,
            hform: None,
            vform: Some(gens),
            vsemantics,
        }
    }

    pub fn full_space(n: usize) -> Cone {
        Cone::from_hform(n, Vec::new())
    }

    fn check_rank(&self, lambda: &[i64]) -> Result<()> {
        if lambda.len() != self.n {
            return Err(Error::RankMismatch {
                expected: self.n,
                got: lambda.len(),
            });
        }
        Ok(())
    }

    /// The H-form, computing it from generators if necessary.
    pub fn hform_functionals(&self) -> Result<Vec<LinFunctional>> {
        if let Some(h) = &self.hform {
            return Ok(h.clone());
        }
        let gens = self.vform.as_ref().expect("cone has at least one form");
        let hs = dd::hform_from_vrep(self.n, gens, &[])?;
        Ok(canonical_hform(
            hs.into_iter().filter_map(|f| LinFunctional::new(f).ok()).collect(),
        ))
    }

    /// A generating set (generators, lineality) for the rational cone.
    pub fn generators(&self) -> Result<(Vec<Vec<Int>>, Vec<Vec<Int>>)> {
        if let Some(v) = &self.vform {
            return Ok((v.clone(), Vec::new()));
        }
        let h = self.hform.as_ref().unwrap();
        let hv: Vec<Vec<Int>> = h.iter().map(|f| f.coeffs.clone()).collect();
        let vrep = dd::extreme_rays(self.n, &hv)?;
        Ok((vrep.rays, vrep.lineality))
    }

    /// Extreme rays and lineality via double description.
    pub fn extreme_rays(&self) -> Result<VRep> {
        let h = self.hform_functionals()?;
        let hv: Vec<Vec<Int>> = h.iter().map(|f| f.coeffs.clone()).collect();
        dd::extreme_rays(self.n, &hv)
    }

    /// Exact membership (rational semantics).
    pub fn member(&self, lambda: &Character) -> Result<bool> {
        self.member_coords(&lambda.coords)
    }

    pub fn member_coords(&self, lambda: &[i64]) -> Result<bool> {
        self.check_rank(lambda)?;
        if let Some(h) = &self.hform {
            return Ok(h.iter().all(|f| !f.eval(lambda).is_positive()));
        }
        let gens = self.vform.as_ref().unwrap();
        if self.vsemantics == VSemantics::Monoid {
            return Err(Error::MonoidBoundRequired);
        }
        Ok(self.in_rational_span(gens, lambda)?)
    }

    fn in_rational_span(&self, gens: &[Vec<Int>], lambda: &[i64]) -> Result<bool> {
        // feasibility of sum c_i g_i = lambda with c_i >= 0
        let m = gens.len();
        if m == 0 {
            return Ok(lambda.iter().all(|&c| c == 0));
        }
        let mut rows: Vec<Row> = Vec::new();
        for j in 0..self.n {
            let coeffs: Vec<Int> = gens.iter().map(|g| g[j].clone()).collect();
            rows.push(Row::new(coeffs.clone(), Int::from(lambda[j])));
            rows.push(Row::new(
                coeffs.into_iter().map(|c| -c).collect(),
                Int::from(-lambda[j]),
            ));
        }
        for i in 0..m {
            let mut coeffs = vec![Int::from(0); m];
            coeffs[i] = Int::from(-1);
            rows.push(Row::new(coeffs, Int::from(0)));
        }
        Ok(fm::feasible_point(&rows, m, fm::DEFAULT_CAP)?.is_some())
    }

    /// Monoid membership by bounded search over integer coefficients.
    pub fn member_monoid(&self, lambda: &Character, bound: u64) -> Result<bool> {
        self.check_rank(&lambda.coords)?;
        let gens = match &self.vform {
            Some(g) => g,
            None => return Err(Error::MonoidBoundRequired),
        };
        let target: Vec<Int> = int_vec(&lambda.coords);
        fn search(gens: &[Vec<Int>], target: &[Int], bound: u64) -> bool {
            if target.iter().all(Zero::is_zero) {
                return true;
            }
            if gens.is_empty() {
                return false;
            }
            let g = &gens[0];
            let rest = &gens[1..];
            let mut t = target.to_vec();
            for _k in 0..=bound {
                if search(rest, &t, bound) {
                    return true;
                }
                for (a, b) in t.iter_mut().zip(g) {
                    *a -= b;
                }
            }
            false
        }
        Ok(search(gens, &target, bound))
    }

    /// Decides `self` (c1) included in `other` (c2), with Farkas
    /// certificates on success and a violating ray on failure.
    pub fn includes_into(&self, other: &Cone) -> Result<IncludeOutcome> {
        if self.n != other.n {
            return Err(Error::RankMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        let h2 = other.hform_functionals()?;
        let (gens, lineality) = self.generators()?;
        for f in &h2 {
            for g in &gens {
                if f.eval_int(g).is_positive() {
                    return Ok(IncludeOutcome::CounterRay(g.clone()));
                }
            }
            for l in &lineality {
                let v = f.eval_int(l);
                if v.is_positive() {
                    return Ok(IncludeOutcome::CounterRay(l.clone()));
                }
                if v.is_negative() {
                    return Ok(IncludeOutcome::CounterRay(
                        l.iter().map(|c| -c.clone()).collect(),
                    ));
                }
            }
        }
        // Build certificates: each f in H(c2) as a nonnegative combination
        // of H(c1).
        let h1 = self.hform_functionals()?;
        let mut certs = Vec::new();
        for f in &h2 {
            match solve_farkas(&h1, f)? {
                Some(comb) => certs.push(Certificate {
                    combination: comb,
                    target: f.clone(),
                }),
                None => {
                    // Shouldn't happen for polyhedral cones once the ray test
                    // passed; surface loudly if it does.
                    return Err(Error::Usage(format!(
                        "farkas certificate missing for {:?}",
                        f.coeffs
                    )));
                }
            }
        }
        Ok(IncludeOutcome::Included(certs))
    }

    /// Intersection by concatenating H-forms.
    pub fn intersect(&self, other: &Cone) -> Result<Cone> {
        if self.n != other.n {
            return Err(Error::RankMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        let mut h = self.hform_functionals()?;
        h.extend(other.hform_functionals()?);
        Ok(Cone::from_hform(self.n, h))
    }

    /// Minkowski sum by concatenating generator sets.
    pub fn minkowski_sum(&self, other: &Cone) -> Result<Cone> {
        if self.n != other.n {
            return Err(Error::RankMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        let (g1, l1) = self.generators()?;
        let (g2, l2) = other.generators()?;
        let mut gens = g1;
        gens.extend(g2);
        for l in l1.into_iter().chain(l2) {
            gens.push(l.iter().map(|c| -c.clone()).collect());
            gens.push(l);
        }
        let sem = if self.vsemantics == VSemantics::Monoid && other.vsemantics == VSemantics::Monoid
        {
            VSemantics::Monoid
        } else {
            VSemantics::Rational
        };
        Ok(Cone::from_vform(self.n, gens, sem))
    }

    /// Mutual inclusion (equality of saturated cones).
    pub fn cone_eq(&self, other: &Cone) -> Result<bool> {
        Ok(self.includes_into(other)?.holds() && other.includes_into(self)?.holds())
    }

    /// Membership grid over `offset + i b1 + j b2` for `i, j` in `[-B, B]`.
    pub fn slice(
        &self,
        b1: &Character,
        b2: &Character,
        offset: &Character,
        bound: i64,
    ) -> Result<Vec<(i64, i64, bool)>> {
        self.check_rank(&offset.coords)?;
        self.check_rank(&b1.coords)?;
        self.check_rank(&b2.coords)?;
        let mut out = Vec::new();
        for i in -bound..=bound {
            for j in -bound..=bound {
                let pt: Vec<i64> = (0..self.n)
                    .map(|k| offset.coords[k] + i * b1.coords[k] + j * b2.coords[k])
                    .collect();
                out.push((i, j, self.member_coords(&pt)?));
            }
        }
        Ok(out)
    }

    /// Removes functionals implied by the remaining ones (Farkas test).
    pub fn irredundant_hform(&self) -> Result<Vec<LinFunctional>> {
        let h = self.hform_functionals()?;
        let mut keep: Vec<LinFunctional> = h.clone();
        let mut i = 0;
        while i < keep.len() {
            let mut others = keep.clone();
            let f = others.remove(i);
            if !others.is_empty() && solve_farkas(&others, &f)?.is_some() {
                keep.remove(i);
            } else {
                i += 1;
            }
        }
        Ok(keep)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let ints = |v: &Vec<Int>| -> serde_json::Value {
            serde_json::Value::Array(
                v.iter()
                    .map(|c| match i64::try_from(c.clone()) {
                        Ok(x) => serde_json::json!(x),
                        Err(_) => serde_json::json!(c.to_string()),
                    })
                    .collect(),
            )
        };
        serde_json::json!({
            "n": self.n,
            "hform": self.hform.as_ref().map(|h| h.iter().map(|f| ints(&f.coeffs)).collect::<Vec<_>>()),
            "vform": self.vform.as_ref().map(|v| v.iter().map(ints).collect::<Vec<_>>()),
            "semantics": match self.vsemantics { VSemantics::Rational => "rational", VSemantics::Monoid => "monoid" },
        })
    }
}

/// Finds `y >= 0` with `sum y_i h_i = f`, exactly.
pub fn solve_farkas(
    h: &[LinFunctional],
    f: &LinFunctional,
) -> Result<Option<Vec<(usize, Rat)>>> {
    let m = h.len();
    let n = f.rank();
    if m == 0 {
        return Ok(None);
    }
    let mut rows: Vec<Row> = Vec::new();
    for j in 0..n {
        let coeffs: Vec<Int> = h.iter().map(|g| g.coeffs[j].clone()).collect();
        rows.push(Row::new(coeffs.clone(), f.coeffs[j].clone()));
        rows.push(Row::new(
            coeffs.into_iter().map(|c| -c).collect(),
            -f.coeffs[j].clone(),
        ));
    }
    for i in 0..m {
        let mut coeffs = vec![Int::from(0); m];
        coeffs[i] = Int::from(-1);
        rows.push(Row::new(coeffs, Int::from(0)));
    }
    match fm::feasible_point(&rows, m, fm::DEFAULT_CAP)? {
        None => Ok(None),
        Some(y) => Ok(Some(
            y.into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        )),
    }
}

/// Spec-level Fourier–Motzkin projection on homogeneous functionals.
pub fn project_out(
    ineqs: &[LinFunctional],
    drop: &[usize],
) -> Result<Projection> {
    let rows: Vec<Row> = ineqs
        .iter()
        .map(|f| Row::new(f.coeffs.clone(), Int::from(0)))
        .collect();
    fm::project(&rows, drop, fm::DEFAULT_CAP)
}
