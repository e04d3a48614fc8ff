//! Independent brute-force oracles: the Bruhat subword test, lattice-box
//! cone comparison, the unipotent-cone cross-check between the per-point
//! feasibility route and the pre-projected H-form, and the asymptotic prime
//! sweep with its soundness threshold. Box enumeration is the single source
//! of semantic truth at desk scale; discrepancies fail tests, never
//! auto-resolve.

use crate::cones::Cone;
use crate::rootdata::{Character, GroupData, GroupKind};
use crate::weyl::{self, WeylElt, WeylKind};
use crate::{weightcones, Error, Result};
use serde::Serialize;

/// Bruhat order via the subword property: fix a reduced word for `w2` and
/// search for subwords multiplying to `w1`. Type A with n <= 6 only.
pub fn bruhat_oracle(g: &GroupData, w1: &WeylElt, w2: &WeylElt) -> Result<bool> {
    if w1.kind != WeylKind::TypeA || g.n > 6 {
        return Err(Error::OracleLimit);
    }
    let simple: Vec<WeylElt> = (0..g.simple.len())
        .map(|i| weyl::reflection_of(g, g.simple[i]))
        .collect();
    // peel right descents to obtain a reduced word (left-to-right product)
    let mut cur = w2.clone();
    let mut word_rev: Vec<usize> = Vec::new();
    while !cur.is_identity() {
        let lw = weyl::length(&cur);
        let i = (0..simple.len())
            .find(|&i| weyl::length(&cur.compose(&simple[i])) < lw)
            .expect("non-identity element has a right descent");
        word_rev.push(i);
        cur = cur.compose(&simple[i]);
    }
    let word: Vec<usize> = word_rev.into_iter().rev().collect();
    let l1 = weyl::length(w1);
    let id = WeylElt::identity(WeylKind::TypeA, g.n);
    for mask in 0u32..(1 << word.len()) {
        if (mask.count_ones() as usize) != l1 {
            continue;
        }
        let mut prod = id.clone();
        for (t, &i) in word.iter().enumerate() {
            if mask & (1 << t) != 0 {
                prod = prod.compose(&simple[i]);
            }
        }
        if prod == *w1 {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Visits every integer point of `[-bound, bound]^n` in lexicographic order.
pub fn for_each_box_point<F: FnMut(&[i64])>(n: usize, bound: i64, mut f: F) {
    let mut idx = vec![-bound; n];
    loop {
        f(&idx);
        let mut t = n;
        loop {
            if t == 0 {
                return;
            }
            t -= 1;
            idx[t] += 1;
            if idx[t] <= bound {
                break;
            }
            idx[t] = -bound;
        }
    }
}

/// Exhaustive comparison of two membership predicates over a lattice box.
#[derive(Debug, Clone, Serialize)]
pub struct BoxReport {
    pub bound: i64,
    pub count_first: usize,
    pub count_second: usize,
    pub first_subset_of_second: bool,
    pub second_subset_of_first: bool,
    pub equal: bool,
    /// First point (lexicographically) in the first cone but not the second.
    pub witness_first_not_second: Option<Vec<i64>>,
    pub witness_second_not_first: Option<Vec<i64>>,
}

impl BoxReport {
    pub fn summary(&self, name1: &str, name2: &str) -> String {
        let mut s = format!(
            "box B={}: #{name1}={}, #{name2}={}, {name1} subset {name2}: {}, {name2} subset {name1}: {}",
            self.bound, self.count_first, self.count_second,
            self.first_subset_of_second, self.second_subset_of_first,
        );
        if let Some(w) = &self.witness_first_not_second {
            s.push_str(&format!(", witness in {name1} only: {w:?}"));
        }
        if let Some(w) = &self.witness_second_not_first {
            s.push_str(&format!(", witness in {name2} only: {w:?}"));
        }
        s
    }
}

/// Box comparison of arbitrary membership predicates.
pub fn box_compare_fns<F1, F2>(n: usize, bound: i64, mut f1: F1, mut f2: F2) -> Result<BoxReport>
where
    F1: FnMut(&[i64]) -> Result<bool>,
    F2: FnMut(&[i64]) -> Result<bool>,
{
    let mut count1 = 0usize;
    let mut count2 = 0usize;
    let mut w12: Option<Vec<i64>> = None;
    let mut w21: Option<Vec<i64>> = None;
    let mut err: Option<Error> = None;
    for_each_box_point(n, bound, |pt| {
        if err.is_some() {
            return;
        }
        let m1 = match f1(pt) {
            Ok(v) => v,
            Err(e) => {
                err = Some(e);
                return;
            }
        };
        let m2 = match f2(pt) {
            Ok(v) => v,
            Err(e) => {
                err = Some(e);
                return;
            }
        };
        if m1 {
            count1 += 1;
        }
        if m2 {
            count2 += 1;
        }
        if m1 && !m2 && w12.is_none() {
            w12 = Some(pt.to_vec());
        }
        if m2 && !m1 && w21.is_none() {
            w21 = Some(pt.to_vec());
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    // every emitted witness re-verifies against both predicates
    if let Some(w) = &w12 {
        debug_assert!(f1(w)? && !f2(w)?);
    }
    if let Some(w) = &w21 {
        debug_assert!(f2(w)? && !f1(w)?);
    }
    Ok(BoxReport {
        bound,
        count_first: count1,
        count_second: count2,
        first_subset_of_second: w12.is_none(),
        second_subset_of_first: w21.is_none(),
        equal: w12.is_none() && w21.is_none(),
        witness_first_not_second: w12,
        witness_second_not_first: w21,
    })
}

/// Box comparison of two cones.
pub fn cone_box_compare(c1: &Cone, c2: &Cone, bound: i64) -> Result<BoxReport> {
    if c1.n != c2.n {
        return Err(Error::RankMismatch {
            expected: c1.n,
            got: c2.n,
        });
    }
    box_compare_fns(
        c1.n,
        bound,
        |pt| c1.member_coords(pt),
        |pt| c2.member_coords(pt),
    )
}

/// Cross-check of the two unipotent-cone membership routes: the per-point
/// lifted feasibility against the pre-projected H-form (projected once and
/// reused). Any disagreement is a bug by construction.
pub fn unip_fm_crosscheck(g: &GroupData, bound: i64) -> Result<BoxReport> {
    if g.n > 4 {
        return Err(Error::DimensionLimit(g.n));
    }
    let projected = weightcones::unip_cone_via_projection(g)?;
    box_compare_fns(
        g.n,
        bound,
        |pt| weightcones::unip_member(g, &Character::new(pt.to_vec())),
        |pt| projected.member_coords(pt),
    )
}

/// All primes up to and including `limit`.
pub fn primes_upto(limit: u64) -> Vec<u64> {
    let mut sieve = vec![true; (limit + 1) as usize];
    let mut out = Vec::new();
    for p in 2..=limit {
        if sieve[p as usize] {
            out.push(p);
            let mut t = p * p;
            while t <= limit {
                sieve[t as usize] = false;
                t += p;
            }
        }
    }
    out
}

/// Soundness threshold for the prime sweep over a box of radius `bound`:
/// primes beyond `2 * bound * |Phi_+ \ Phi_{L,+}|` pin every coordinate sign.
pub fn sweep_threshold(g: &GroupData, bound: i64) -> u64 {
    2 * bound as u64 * g.outside.len() as u64
}

/// Result of the asymptotic sweep: box-level comparison of the intersection
/// of the orbit cones over all primes `p <= pmax` (within the dominant
/// chamber) against the Griffiths–Schmid cone.
#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub threshold: u64,
    pub pmax: u64,
    pub primes: usize,
    pub report: BoxReport,
}

/// Runs the sweep for the group kind of `g` (rebuilt at q = p per prime).
pub fn asymptotic_sweep(g: &GroupData, bound: i64, pmax: u64) -> Result<SweepReport> {
    let threshold = sweep_threshold(g, bound);
    if pmax <= threshold {
        return Err(Error::Usage(format!(
            "prime list up to {pmax} is below the soundness threshold {threshold}"
        )));
    }
    let primes = primes_upto(pmax);
    let groups: Vec<GroupData> = primes
        .iter()
        .map(|&p| match g.kind {
            GroupKind::Gl { r, s } => crate::rootdata::build_gl(r, s, p, g.sigma),
            GroupKind::Sp { n } => crate::rootdata::build_sp(n, p, g.sigma),
        })
        .collect::<Result<_>>()?;
    let dominant = weightcones::named_cone(g, &weightcones::NamedCone::LeviDominant)?;
    let gs = weightcones::named_cone(g, &weightcones::NamedCone::Gs)?;
    let report = box_compare_fns(
        g.n,
        bound,
        |pt| {
            let lam = Character::new(pt.to_vec());
            if !dominant.member_coords(pt)? {
                return Ok(false);
            }
            for gp in &groups {
                if !weightcones::orb_cone_member(gp, &lam)? {
                    return Ok(false);
                }
            }
            Ok(true)
        },
        |pt| {
            Ok(dominant.member_coords(pt)? && gs.member_coords(pt)?)
        },
    )?;
    Ok(SweepReport {
        threshold,
        pmax,
        primes: primes.len(),
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{build_gl, build_sp, Sigma};
    use crate::weightcones::NamedCone;

    #[test]
    fn bruhat_oracle_agrees_on_s3() {
        let g = build_gl(2, 1, 2, Sigma::Identity).unwrap();
        let elts = weyl::enumerate_weyl(&g);
        for w1 in &elts {
            for w2 in &elts {
                assert_eq!(
                    bruhat_oracle(&g, w1, w2).unwrap(),
                    weyl::bruhat_leq(&g, w1, w2),
                    "w1={w1} w2={w2}"
                );
            }
        }
        // id below everything; reflexivity
        let id = WeylElt::identity(WeylKind::TypeA, 3);
        for w in &elts {
            assert!(bruhat_oracle(&g, &id, w).unwrap());
            assert!(bruhat_oracle(&g, w, w).unwrap());
        }
    }

    #[test]
    fn box_compare_identical_cones() {
        let g = build_sp(3, 2, Sigma::Identity).unwrap();
        let zip = weightcones::named_cone(&g, &NamedCone::Sp6Zip).unwrap();
        let r = cone_box_compare(&zip, &zip, 3).unwrap();
        assert!(r.equal);
        assert!(r.witness_first_not_second.is_none());
        assert_eq!(r.count_first, r.count_second);
    }

    #[test]
    fn sp6_strict_inclusions_in_box() {
        let g = build_sp(3, 2, Sigma::Identity).unwrap();
        let zip = weightcones::named_cone(&g, &NamedCone::Sp6Zip).unwrap();
        let unip = weightcones::named_cone(&g, &NamedCone::Sp6Unip).unwrap();
        let orb = weightcones::named_cone(&g, &NamedCone::Sp6Orb).unwrap();
        let r1 = cone_box_compare(&zip, &unip, 6).unwrap();
        assert!(r1.first_subset_of_second && !r1.second_subset_of_first);
        assert!(r1.count_first < r1.count_second);
        let r2 = cone_box_compare(&unip, &orb, 6).unwrap();
        assert!(r2.first_subset_of_second && !r2.second_subset_of_first);
        assert!(r2.count_first < r2.count_second);
        // the printed witnesses separate the cones
        assert!(unip.member_coords(&[1, -1, -1]).unwrap());
        assert!(!zip.member_coords(&[1, -1, -1]).unwrap());
        assert!(orb.member_coords(&[1, 1, -5]).unwrap());
        assert!(!unip.member_coords(&[1, 1, -5]).unwrap());
        // C_GS inside C_zip on the box
        let gs = weightcones::named_cone(&g, &NamedCone::Gs).unwrap();
        let r3 = cone_box_compare(&gs, &zip, 6).unwrap();
        assert!(r3.first_subset_of_second);
    }

    #[test]
    fn unip_crosscheck_gl3() {
        let g = build_gl(2, 1, 2, Sigma::Identity).unwrap();
        let r = unip_fm_crosscheck(&g, 3).unwrap();
        assert!(r.equal, "{}", r.summary("lp", "projected"));
    }

    #[test]
    fn unip_crosscheck_sp6_small_box() {
        let g = build_sp(3, 2, Sigma::Identity).unwrap();
        let r = unip_fm_crosscheck(&g, 3).unwrap();
        assert!(r.equal, "{}", r.summary("lp", "projected"));
    }

    #[test]
    fn primes_and_threshold() {
        let ps = primes_upto(211);
        assert_eq!(ps.len(), 47);
        assert_eq!(*ps.last().unwrap(), 211);
        let g = build_sp(3, 2, Sigma::Identity).unwrap();
        assert_eq!(sweep_threshold(&g, 5), 60);
        // refusing an unsound prime list
        assert!(asymptotic_sweep(&g, 5, 59).is_err());
    }

    #[test]
    fn sweep_gl3_small() {
        let g = build_gl(2, 1, 2, Sigma::Identity).unwrap();
        // threshold = 2*3*2 = 12 at B=3
        let rep = asymptotic_sweep(&g, 3, 53).unwrap();
        assert!(rep.report.equal, "{}", rep.report.summary("cap", "gs"));
    }
}
