//! Machinery for `GL_n` of signature `(n-1,1)`: z-small block permutations,
//! their explicit Hasse inequalities, shape tests, the auxiliary path of
//! partial Hasse invariants from `w_0` down to `z`, and exact certificates
//! for the inter-cone inclusions between Hasse cones of lower neighbours.

use crate::cones::{Certificate, Cone, Int, LinFunctional, Rat};
use crate::rootdata::{Character, GroupData, GroupKind};
use crate::weyl::{self, WeylElt, WeylKind};
use crate::{Error, Result};
use num::{One, Signed, Zero};

/// A z-small element, i.e. a block permutation `[m_1, ..., m_k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZSmall {
    pub composition: Vec<usize>,
    pub elt: WeylElt,
    /// Partial sums `M_0 = 0, M_1, ..., M_k = n`.
    pub msums: Vec<usize>,
    /// `gamma_w = w^{-1} z`, a k-cycle.
    pub gamma: WeylElt,
}

/// The matrix `Lambda_d`: identity block of size d upper right, antidiagonal
/// block of size n-d lower left. `Lambda_1 = w_0` and `Lambda_n = id`.
pub fn lambda_perm(n: usize, d: usize) -> WeylElt {
    assert!(d >= 1 && d <= n);
    let imgs: Vec<i32> = (1..=n)
        .map(|j| {
            if j <= n - d {
                (n + 1 - j) as i32
            } else {
                (j - (n - d)) as i32
            }
        })
        .collect();
    WeylElt {
        kind: WeylKind::TypeA,
        imgs,
    }
}

/// The frame element `z = Lambda_{n-1}` as a window.
fn z_window(n: usize) -> WeylElt {
    lambda_perm(n, n - 1)
}

/// Builds the z-small element of a composition of n.
pub fn zsmall(composition: &[usize]) -> Result<ZSmall> {
    if composition.is_empty() || composition.iter().any(|&m| m == 0) {
        return Err(Error::BadComposition);
    }
    let n: usize = composition.iter().sum();
    let mut imgs = vec![0i32; n];
    let mut offset = 0usize;
    for &m in composition {
        // cyclic block: offset+1 -> offset+m, offset+j -> offset+j-1
        imgs[offset] = (offset + m) as i32;
        for j in 2..=m {
            imgs[offset + j - 1] = (offset + j - 1) as i32;
        }
        offset += m;
    }
    let elt = WeylElt {
        kind: WeylKind::TypeA,
        imgs,
    };
    let mut msums = vec![0usize];
    for &m in composition {
        msums.push(msums.last().unwrap() + m);
    }
    let gamma = elt.inverse().compose(&z_window(n));
    Ok(ZSmall {
        composition: composition.to_vec(),
        elt,
        msums,
        gamma,
    })
}

/// All `2^{n-1}` z-small elements, in lexicographic composition order.
pub fn enumerate_zsmall(n: usize) -> Vec<ZSmall> {
    fn rec(n: usize, comp: &mut Vec<usize>, out: &mut Vec<ZSmall>) {
        let used: usize = comp.iter().sum();
        if used == n {
            out.push(zsmall(comp).unwrap());
            return;
        }
        for m in 1..=(n - used) {
            comp.push(m);
            rec(n, comp, out);
            comp.pop();
        }
    }
    let mut out = Vec::new();
    let mut comp: Vec<usize> = Vec::new();
    rec(n, &mut comp, &mut out);
    out
}

impl ZSmall {
    pub fn n(&self) -> usize {
        self.elt.rank()
    }

    pub fn blocks(&self) -> usize {
        self.composition.len()
    }

    /// `E_w` partitioned by block: pairs `(M_{i-1}+1, M_{i-1}+j)` for
    /// `1 < j <= m_i`, 1-based positions.
    pub fn block_lower_roots(&self) -> Vec<Vec<(usize, usize)>> {
        self.composition
            .iter()
            .enumerate()
            .map(|(i, &m)| {
                let base = self.msums[i];
                (2..=m).map(|j| (base + 1, base + j)).collect()
            })
            .collect()
    }

    /// Locates `alpha = (a, b)` in the block partition: returns the 1-based
    /// block index and the offset j with `b = M_{i-1} + j`.
    fn locate(&self, alpha: (usize, usize)) -> Result<(usize, usize)> {
        let (a, b) = alpha;
        for (i, &m) in self.composition.iter().enumerate() {
            let base = self.msums[i];
            if a == base + 1 && b > a && b <= base + m {
                return Ok((i + 1, b - base));
            }
        }
        Err(Error::NotLowerNeighbour)
    }

    /// Splits block `i` (1-based) into parts `(x, y)` with `x + y = m_i`.
    fn split_block(&self, i: usize, x: usize, y: usize) -> ZSmall {
        let mut comp = Vec::new();
        for (t, &m) in self.composition.iter().enumerate() {
            if t + 1 == i {
                comp.push(x);
                comp.push(y);
            } else {
                comp.push(m);
            }
        }
        zsmall(&comp).unwrap()
    }
}

fn basis_covec(n: usize, a: usize, b: usize) -> Vec<i64> {
    let mut v = vec![0i64; n];
    v[a - 1] = 1;
    v[b - 1] = -1;
    v
}

/// The covector of the closed-formula Hasse inequality for `alpha` in
/// `E_w`: the cone condition is `covector . lambda >= 0`, given by
/// `sum_d q^{k-1-d} <z^{-1} lambda, gamma_w^d alpha^v>`.
pub fn hasse_covector(zs: &ZSmall, alpha: (usize, usize), q: u64) -> Result<Vec<Int>> {
    let n = zs.n();
    zs.locate(alpha)?;
    let k = zs.blocks();
    let z = z_window(n);
    let mut acc = vec![Int::from(0); n];
    let mut v = basis_covec(n, alpha.0, alpha.1);
    let mut power = Int::from(q).pow((k - 1) as u32);
    for d in 0..k {
        let zi = z.act_covec(&v);
        for (t, c) in zi.iter().enumerate() {
            acc[t] += &power * Int::from(*c);
        }
        if d + 1 < k {
            v = zs.gamma.act_covec(&v);
            power /= Int::from(q);
        }
    }
    Ok(acc)
}

/// The Hasse inequality as a functional with `<= 0` semantics in
/// lambda-coordinates (integral, primitive).
pub fn hasse_inequality(zs: &ZSmall, alpha: (usize, usize), q: u64) -> Result<LinFunctional> {
    let cov = hasse_covector(zs, alpha, q)?;
    LinFunctional::new(cov.into_iter().map(|c| -c).collect())
}

/// Shape classification of a type-A window.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShapeReport {
    pub has_v_shape: bool,
    pub has_sqrt_shape: bool,
    pub admits_partial_hasse_system: bool,
}

/// Triple scan for V- and sqrt-shapes, plus linear independence of the
/// lower-neighbour coroots.
pub fn shape_test(g: &GroupData, w: &WeylElt) -> ShapeReport {
    let n = w.rank();
    let mut has_v = false;
    let mut has_sqrt = false;
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                if w.imgs[i] < w.imgs[j] && w.imgs[k] < w.imgs[j] {
                    has_v = true;
                    if w.imgs[i] < w.imgs[k] {
                        has_sqrt = true;
                    }
                }
            }
        }
    }
    let e_w = weyl::lower_neighbours(g, w);
    let covecs: Vec<Vec<i64>> = e_w.iter().map(|&k| g.pos_roots[k].covec.clone()).collect();
    let admits = rank_i64(&covecs) == covecs.len();
    ShapeReport {
        has_v_shape: has_v,
        has_sqrt_shape: has_sqrt,
        admits_partial_hasse_system: admits,
    }
}

/// Rank of a small integer matrix by fraction-free elimination.
fn rank_i64(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&c| c as i128).collect())
        .collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        if let Some(p) = (rank..m.len()).find(|&r| m[r][col] != 0) {
            m.swap(rank, p);
            for r in (rank + 1)..m.len() {
                if m[r][col] != 0 {
                    let a = m[rank][col];
                    let b = m[r][col];
                    for c in 0..ncols {
                        m[r][c] = m[r][c] * a - m[rank][c] * b;
                    }
                }
            }
            rank += 1;
        }
    }
    rank
}

/// One element of the auxiliary path, with its partial Hasse invariant data
/// when it is not the final element.
#[derive(Debug, Clone)]
pub struct PathStep {
    pub d: usize,
    pub i: usize,
    pub element: WeylElt,
    /// The dual character (present for i <= d).
    pub chi: Option<Character>,
    /// The weight of the partial Hasse invariant (present for i <= d).
    pub ha_weight: Option<Character>,
}

/// The auxiliary path from `Lambda_1 = w_0` to `Lambda_{n-1} = z`,
/// concatenating the legs d = 1..n-2. Each consecutive pair is a Bruhat
/// cover; the step from `w_i^{(d)}` multiplies by the transposition at
/// positions `(n-d, n+1-i)`.
pub fn aux_path(n: usize, q: u64) -> Result<Vec<PathStep>> {
    if n < 2 {
        return Err(Error::Usage("aux_path needs n >= 2".into()));
    }
    let mut out = Vec::new();
    for d in 1..=n.saturating_sub(2) {
        let mut w = lambda_perm(n, d);
        for i in 1..=d {
            // chi^{(d)}_i = -e_{n-i+1}; ha^{(d)}_i = e_{d-i+1} - q w_{0,I}(e_i)
            let chi = Character::basis(n, n - i + 1).neg();
            let mut ha = Character::basis(n, d - i + 1);
            ha.coords[n - 1 - i] -= q as i64; // w_{0,I}(e_i) = e_{n-i}
            out.push(PathStep {
                d,
                i,
                element: w.clone(),
                chi: Some(chi),
                ha_weight: Some(ha),
            });
            // multiply on the right by the transposition (n-d, n+1-i)
            let mut imgs: Vec<i32> = (1..=n as i32).collect();
            imgs.swap(n - d - 1, n - i);
            let t = WeylElt {
                kind: WeylKind::TypeA,
                imgs,
            };
            w = w.compose(&t);
        }
        debug_assert_eq!(w, lambda_perm(n, d + 1));
    }
    out.push(PathStep {
        d: n - 1,
        i: 1,
        element: z_window(n),
        chi: None,
        ha_weight: None,
    });
    Ok(out)
}

/// Membership of `lambda_{a,b} = e_a - q e_b` in the L-minimal cone of
/// `GL_n` with signature `(r, n-r)`.
pub fn lambda_ab_in_lmin(n: usize, r: usize, a: usize, b: usize, q: u64) -> Result<bool> {
    if a == 0 || b == 0 || a > n || b > n || r == 0 || r >= n {
        return Err(Error::Usage("need 1 <= a,b <= n and 0 < r < n".into()));
    }
    let g = crate::rootdata::build_gl(r, n - r, q, crate::rootdata::Sigma::Identity)?;
    let lmin = crate::weightcones::lmin_cone(&g)?;
    let mut coords = vec![0i64; n];
    coords[a - 1] += 1;
    coords[b - 1] -= q as i64;
    lmin.member_coords(&coords)
}

/// Which case of the inter-cone analysis produced a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InterConeCase {
    JAtLeast3,
    J2BlockBigger2,
    J2Block2DonorAfter,
    J2Block2DonorBefore,
}

impl InterConeCase {
    pub fn label(&self) -> &'static str {
        match self {
            InterConeCase::JAtLeast3 => "j>=3",
            InterConeCase::J2BlockBigger2 => "j=2,m>2",
            InterConeCase::J2Block2DonorAfter => "j=2,m=2,donor-after",
            InterConeCase::J2Block2DonorBefore => "j=2,m=2,donor-before",
        }
    }
}

/// The two lower neighbours, roots, and coefficient delta prescribed by the
/// case analysis for `C_{Hasse,w_1} cap C_{Hasse,w_2}` inside
/// `C^alpha_{Hasse,w}`.
#[derive(Debug, Clone)]
pub struct InterConeWitness {
    pub case: InterConeCase,
    pub w1: ZSmall,
    pub w2: ZSmall,
    pub alpha1: (usize, usize),
    pub alpha2: (usize, usize),
    pub delta: Rat,
}

fn qpow(q: u64, e: usize) -> Int {
    Int::from(q).pow(e as u32)
}

/// `(q - 1) q^e / (q^{k+1} - 1)` — all the printed deltas have this shape.
fn delta_of(q: u64, e: usize, k: usize) -> Rat {
    let num = qpow(q, e) * (Int::from(q) - Int::one());
    let den = qpow(q, k + 1) - Int::one();
    Rat::new(num, den)
}

/// Produces the prescribed witness for `alpha` in `E_w`, `l(w) >= 2`.
pub fn intercone_witness(zs: &ZSmall, alpha: (usize, usize), q: u64) -> Result<InterConeWitness> {
    let n = zs.n();
    let lw = n - zs.blocks();
    if lw < 2 {
        return Err(Error::LengthZero);
    }
    let (blk, j) = zs.locate(alpha)?;
    let k = zs.blocks();
    let m = zs.composition[blk - 1];
    let base = zs.msums[blk - 1];
    if j >= 3 {
        let w1 = zs.split_block(blk, 1, m - 1);
        let w2 = zs.split_block(blk, j - 1, m - j + 1);
        return Ok(InterConeWitness {
            case: InterConeCase::JAtLeast3,
            w1,
            w2,
            alpha1: (base + 2, base + j),
            alpha2: (base + 1, base + 2),
            delta: delta_of(q, k, k),
        });
    }
    if j == 2 && m > 2 {
        let w1 = zs.split_block(blk, 2, m - 2);
        let w2 = zs.split_block(blk, 1, m - 1);
        return Ok(InterConeWitness {
            case: InterConeCase::J2BlockBigger2,
            w1,
            w2,
            alpha1: (base + 1, base + 2),
            alpha2: (base + 2, base + 3),
            delta: delta_of(q, 0, k),
        });
    }
    if j == 2 && m == 2 {
        // donor block with at least two elements, preferring a later one
        let donor_after = (blk + 1..=k).find(|&c| zs.composition[c - 1] >= 2);
        let donor_before = (1..blk).rev().find(|&c| zs.composition[c - 1] >= 2);
        let (c, case, e) = match (donor_after, donor_before) {
            (Some(c), _) => (c, InterConeCase::J2Block2DonorAfter, c - blk),
            (None, Some(c)) => (c, InterConeCase::J2Block2DonorBefore, k - blk + c),
            (None, None) => {
                return Err(Error::NoCaseApplies {
                    w: format!("{:?}", zs.composition),
                    alpha: format!("({}, {})", alpha.0, alpha.1),
                })
            }
        };
        let mc = zs.composition[c - 1];
        let w1 = zs.split_block(c, 1, mc - 1);
        let w2 = zs.split_block(blk, 1, 1);
        let cbase = zs.msums[c - 1];
        return Ok(InterConeWitness {
            case,
            w1,
            w2,
            alpha1: (base + 1, base + 2),
            alpha2: (cbase + 1, cbase + 2),
            delta: delta_of(q, e, k),
        });
    }
    Err(Error::NoCaseApplies {
        w: format!("{:?}", zs.composition),
        alpha: format!("({}, {})", alpha.0, alpha.1),
    })
}

/// The verified certificate: `(E1) + delta (E2)` equals `scale` times the
/// target inequality, exactly.
#[derive(Debug, Clone)]
pub struct InterConeCertificate {
    pub witness: InterConeWitness,
    pub scale: Rat,
    pub verified: bool,
    /// Nonzero residual covector when verification fails.
    pub residual: Option<Vec<Rat>>,
    pub certificate: Certificate,
}

/// Builds `(E1)`, `(E2)` via the closed-formula Hasse inequalities and
/// checks the exact linear identity `(E1) + delta (E2) = scale * target`.
pub fn verify_intercone(
    zs: &ZSmall,
    alpha: (usize, usize),
    q: u64,
) -> Result<InterConeCertificate> {
    let witness = intercone_witness(zs, alpha, q)?;
    let e1 = hasse_covector(&witness.w1, witness.alpha1, q)?;
    let e2 = hasse_covector(&witness.w2, witness.alpha2, q)?;
    let target = hasse_covector(zs, alpha, q)?;
    let n = zs.n();
    let combo: Vec<Rat> = (0..n)
        .map(|t| Rat::from(e1[t].clone()) + &witness.delta * Rat::from(e2[t].clone()))
        .collect();
    // combo must be scale * target with scale > 0
    let mut scale: Option<Rat> = None;
    let mut ok = true;
    for t in 0..n {
        if target[t].is_zero() {
            if !combo[t].is_zero() {
                ok = false;
                break;
            }
        } else {
            let s = &combo[t] / Rat::from(target[t].clone());
            match &scale {
                None => scale = Some(s),
                Some(prev) => {
                    if *prev != s {
                        ok = false;
                        break;
                    }
                }
            }
        }
    }
    let scale = scale.unwrap_or_else(Rat::zero);
    let ok = ok && scale.is_positive();
    let residual = if ok {
        None
    } else {
        Some(
            (0..n)
                .map(|t| &combo[t] - &scale * Rat::from(target[t].clone()))
                .collect(),
        )
    };
    let certificate = Certificate {
        combination: vec![(0, Rat::one()), (1, witness.delta.clone())],
        target: hasse_inequality(zs, alpha, q)?,
    };
    Ok(InterConeCertificate {
        witness,
        scale,
        verified: ok,
        residual,
        certificate,
    })
}

/// The theorem cone for signature `(n-1,1)`:
/// `sum_{i<=j} (k_i - k_n) + (1/q) sum_{j<i<n} (k_i - k_n) <= 0` for
/// j = 1..n-1 (q-cleared).
pub fn cfmin_cone(n: usize, q: u64) -> Result<Cone> {
    if n < 2 {
        return Err(Error::Usage("cfmin_cone needs n >= 2".into()));
    }
    let mut funcs = Vec::new();
    for j in 1..n {
        let mut v = vec![0i64; n];
        let mut total = 0i64;
        for (i, item) in v.iter_mut().enumerate().take(n - 1) {
            let c = if i < j { q as i64 } else { 1 };
            *item = c;
            total += c;
        }
        v[n - 1] = -total;
        funcs.push(LinFunctional::from_i64(&v)?);
    }
    Ok(Cone::from_hform(n, funcs))
}

/// The separating system of the Hasse-regularity theorem: `E_w` with
/// integral dual characters on the z-small elements, empty elsewhere.
pub fn zsmall_separating_system(g: &GroupData) -> Result<crate::weightcones::SeparatingSystem> {
    match g.kind {
        GroupKind::Gl { r, s } if s == 1 && r + 1 == g.n => {}
        _ => return Err(Error::Usage("z-small systems need GL_n with s = 1".into())),
    }
    let n = g.n;
    let mut system = crate::weightcones::SeparatingSystem::default();
    for zs in enumerate_zsmall(n) {
        if n - zs.blocks() < 2 {
            continue;
        }
        let e_w = weyl::lower_neighbours(g, &zs.elt);
        let a: Vec<Vec<i64>> = e_w.iter().map(|&k| g.pos_roots[k].covec.clone()).collect();
        let mut picks = Vec::new();
        for (t, &k) in e_w.iter().enumerate() {
            let mut unit = vec![0i64; e_w.len()];
            unit[t] = 1;
            let chi =
                crate::cones::intlin::integer_preimage(&a, &unit).ok_or(Error::NotSimplicial)?;
            picks.push((k, Character::new(chi)));
        }
        system.entries.insert(zs.elt.clone(), picks);
    }
    system.validate(g)?;
    Ok(system)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{build_gl, Sigma};
    use crate::weightcones;

    fn gl_n1(n: usize, q: u64) -> GroupData {
        build_gl(n - 1, 1, q, Sigma::Identity).unwrap()
    }

    #[test]
    fn zsmall_examples() {
        // [1,...,1] is the identity
        let id = zsmall(&[1, 1, 1]).unwrap();
        assert!(id.elt.is_identity());
        // [n] is the single n-cycle z = Lambda_{n-1}
        for n in 2..=6usize {
            let zn = zsmall(&[n]).unwrap();
            assert_eq!(zn.elt, lambda_perm(n, n - 1));
            let g = gl_n1(n, 2);
            assert_eq!(zn.elt, weyl::z_element(&g));
        }
        // bad compositions are rejected
        assert!(zsmall(&[]).is_err());
        assert!(zsmall(&[2, 0, 1]).is_err());
    }

    #[test]
    fn zsmall_census_matches_bruhat() {
        for n in 3..=4usize {
            let g = gl_n1(n, 2);
            let z = weyl::z_element(&g);
            let brute: Vec<WeylElt> = weyl::enumerate_weyl(&g)
                .into_iter()
                .filter(|w| weyl::bruhat_leq(&g, w, &z))
                .collect();
            let listed = enumerate_zsmall(n);
            assert_eq!(listed.len(), 1 << (n - 1));
            assert_eq!(brute.len(), listed.len());
            for zs in &listed {
                assert!(brute.contains(&zs.elt));
            }
        }
    }

    #[test]
    fn gamma_w_is_a_k_cycle() {
        // [2,1] in S_3: gamma = (1 3), order 2 = k
        let zs = zsmall(&[2, 1]).unwrap();
        assert_eq!(zs.gamma.imgs, vec![3, 2, 1]);
        let sq = zs.gamma.compose(&zs.gamma);
        assert!(sq.is_identity());
        // general: gamma_w cycles through {1, M_{k-1}+1, ..., M_1+1}
        for n in 3..=6usize {
            for zs in enumerate_zsmall(n) {
                let k = zs.blocks();
                let mut seen = vec![1usize];
                let mut x = 1i32;
                loop {
                    let y = zs.gamma.imgs[(x - 1) as usize];
                    if y == 1 {
                        break;
                    }
                    seen.push(y as usize);
                    x = y;
                }
                let mut expect: Vec<usize> = (1..k).rev().map(|i| zs.msums[i] + 1).collect();
                expect.insert(0, 1);
                assert_eq!(seen, expect, "w = {:?}", zs.composition);
                // everything else is fixed
                for t in 1..=n {
                    if !seen.contains(&t) {
                        assert_eq!(zs.gamma.imgs[t - 1], t as i32);
                    }
                }
            }
        }
    }

    #[test]
    fn block_partition_matches_lower_neighbours() {
        for n in 3..=5usize {
            let g = gl_n1(n, 2);
            for zs in enumerate_zsmall(n) {
                let from_blocks: std::collections::BTreeSet<Vec<i64>> = zs
                    .block_lower_roots()
                    .into_iter()
                    .flatten()
                    .map(|(a, b)| basis_covec(n, a, b))
                    .collect();
                let generic: std::collections::BTreeSet<Vec<i64>> =
                    weyl::lower_neighbours(&g, &zs.elt)
                        .into_iter()
                        .map(|k| g.pos_roots[k].vec.clone())
                        .collect();
                assert_eq!(from_blocks, generic, "w = {:?}", zs.composition);
            }
        }
    }

    #[test]
    fn closed_formula_matches_h_route() {
        // the block-formula Hasse system equals the h_w^{-1} construction
        for n in 3..=4usize {
            for q in [2u64, 3] {
                let g = gl_n1(n, q);
                for zs in enumerate_zsmall(n) {
                    let funcs: Vec<LinFunctional> = zs
                        .block_lower_roots()
                        .into_iter()
                        .flatten()
                        .map(|ab| hasse_inequality(&zs, ab, q).unwrap())
                        .collect();
                    let closed = Cone::from_hform(n, funcs);
                    let via_h = weightcones::hasse_cone(&g, &zs.elt, true).unwrap();
                    assert!(
                        closed.cone_eq(&via_h).unwrap(),
                        "w = {:?}, q = {q}",
                        zs.composition
                    );
                }
            }
        }
    }

    #[test]
    fn z_system_is_ki_minus_kn() {
        for n in 3..=5usize {
            let zs = zsmall(&[n]).unwrap();
            let q = 2;
            let mut funcs = Vec::new();
            for ab in zs.block_lower_roots().into_iter().flatten() {
                funcs.push(hasse_inequality(&zs, ab, q).unwrap());
            }
            let closed = Cone::from_hform(n, funcs);
            let mut expect = Vec::new();
            for i in 0..n - 1 {
                let mut v = vec![0i64; n];
                v[i] = 1;
                v[n - 1] = -1;
                expect.push(LinFunctional::from_i64(&v).unwrap());
            }
            assert!(closed.cone_eq(&Cone::from_hform(n, expect)).unwrap());
        }
    }

    #[test]
    fn hasse_inequality_rejects_non_neighbours() {
        let zs = zsmall(&[3]).unwrap();
        assert!(hasse_inequality(&zs, (2, 3), 2).is_err());
        assert!(hasse_inequality(&zs, (1, 2), 2).is_ok());
    }

    #[test]
    fn shapes() {
        let g = gl_n1(3, 2);
        let id = WeylElt::identity(WeylKind::TypeA, 3);
        let r = shape_test(&g, &id);
        assert!(!r.has_v_shape && !r.has_sqrt_shape && r.admits_partial_hasse_system);
        // window (1,3,2): V-shape and sqrt-shape
        let w = WeylElt::from_window(WeylKind::TypeA, vec![1, 3, 2]).unwrap();
        let r = shape_test(&g, &w);
        assert!(r.has_v_shape && r.has_sqrt_shape);
        // every z-small admits a system of partial Hasse invariants
        for n in 3..=6usize {
            let gn = gl_n1(n, 2);
            for zs in enumerate_zsmall(n) {
                assert!(shape_test(&gn, &zs.elt).admits_partial_hasse_system);
            }
        }
        // [2,2] is z-small yet has a sqrt-shape: the no-sqrt property belongs
        // to the path elements, not to all z-small elements
        let g4 = gl_n1(4, 2);
        let zs = zsmall(&[2, 2]).unwrap();
        assert!(shape_test(&g4, &zs.elt).has_sqrt_shape);
        // path elements have no V-shape at all
        for n in 3..=6usize {
            let gn = gl_n1(n, 2);
            for step in aux_path(n, 2).unwrap() {
                assert!(!shape_test(&gn, &step.element).has_v_shape);
            }
        }
    }

    #[test]
    fn aux_path_small() {
        // n = 3: single leg from w_0 to z
        let path = aux_path(3, 2).unwrap();
        assert_eq!(path.len(), 2);
        assert_eq!(path[0].element.imgs, vec![3, 2, 1]);
        assert_eq!(path[1].element.imgs, vec![3, 1, 2]);
        // n = 4, d = 2, i = 1, q = 3: ha = e_2 - 3 e_3
        let path = aux_path(4, 3).unwrap();
        let step = path.iter().find(|s| s.d == 2 && s.i == 1).unwrap();
        assert_eq!(step.ha_weight.as_ref().unwrap().coords, vec![0, 1, -3, 0]);
    }

    #[test]
    fn aux_path_covers_and_dual_characters() {
        for n in 3..=6usize {
            let q = 3u64;
            let g = gl_n1(n, q);
            let path = aux_path(n, q).unwrap();
            // end-to-end covers from w_0 down to z
            for t in 0..path.len() - 1 {
                let a = &path[t].element;
                let b = &path[t + 1].element;
                assert_eq!(weyl::length(b) + 1, weyl::length(a));
                assert!(weyl::bruhat_leq(&g, b, a));
            }
            assert_eq!(path[0].element, lambda_perm(n, 1));
            assert_eq!(path.last().unwrap().element, z_window(n));
            // chi is a dual character: 1 on the step root, 0 on the rest of E
            for t in 0..path.len() - 1 {
                let step = &path[t];
                let chi = step.chi.as_ref().unwrap();
                let e_w = weyl::lower_neighbours(&g, &step.element);
                let step_root = basis_covec(n, n - step.d, n + 1 - step.i);
                let mut seen_step_root = false;
                for &k in &e_w {
                    let p = crate::rootdata::pairing(chi, &g.pos_roots[k].covec).unwrap();
                    if g.pos_roots[k].covec == step_root {
                        assert_eq!(p, 1);
                        seen_step_root = true;
                    } else {
                        assert_eq!(p, 0);
                    }
                }
                assert!(seen_step_root);
                // and h_w(chi) equals the printed ha weight
                let h = weightcones::h_map(&g, &step.element).unwrap();
                assert_eq!(
                    h.apply(chi).unwrap(),
                    step.ha_weight.clone().unwrap(),
                    "n={n} d={} i={}",
                    step.d,
                    step.i
                );
            }
            // lower-neighbour counts along the path
            for step in &path {
                let e_w = weyl::lower_neighbours(&g, &step.element);
                if step.d < n - 1 {
                    assert_eq!(e_w.len(), n - 1);
                } else {
                    assert_eq!(e_w.len(), n - step.i);
                }
            }
        }
    }

    #[test]
    fn ha_weights_in_lmin() {
        for n in 3..=5usize {
            for q in [2u64, 3, 5] {
                let g = gl_n1(n, q);
                let lmin = weightcones::lmin_cone(&g).unwrap();
                for step in aux_path(n, q).unwrap() {
                    if let Some(ha) = &step.ha_weight {
                        assert!(
                            lmin.member(ha).unwrap(),
                            "n={n} q={q} d={} i={}",
                            step.d,
                            step.i
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn lambda_ab_examples() {
        assert!(lambda_ab_in_lmin(4, 3, 1, 2, 2).unwrap());
        assert!(!lambda_ab_in_lmin(4, 3, 1, 4, 2).unwrap());
        // a = b <= r: (1-q) e_a
        assert!(lambda_ab_in_lmin(4, 3, 2, 2, 3).unwrap());
        // iff b <= r, exhaustively at small size
        for n in 2..=5usize {
            for r in 1..n {
                for q in [2u64, 3] {
                    for a in 1..=n {
                        for b in 1..=n {
                            assert_eq!(
                                lambda_ab_in_lmin(n, r, a, b, q).unwrap(),
                                b <= r,
                                "n={n} r={r} a={a} b={b} q={q}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn intercone_witness_examples() {
        // w = [3] in S_3, alpha = (1 3): case j>=3, delta = q/(q+1)
        let zs = zsmall(&[3]).unwrap();
        let w = intercone_witness(&zs, (1, 3), 2).unwrap();
        assert_eq!(w.case, InterConeCase::JAtLeast3);
        assert_eq!(w.w1.composition, vec![1, 2]);
        assert_eq!(w.w2.composition, vec![2, 1]);
        assert_eq!(w.delta, Rat::new(Int::from(2), Int::from(3)));
        // w = [4], alpha = (1 2): case j=2, m>2, delta = (q-1)/(q^2-1)
        let zs = zsmall(&[4]).unwrap();
        let w = intercone_witness(&zs, (1, 2), 2).unwrap();
        assert_eq!(w.case, InterConeCase::J2BlockBigger2);
        assert_eq!(w.delta, Rat::new(Int::from(1), Int::from(3)));
        // w = [2,2], alpha = (1 2): donor after, delta = q(q-1)/(q^3-1)
        let zs = zsmall(&[2, 2]).unwrap();
        let w = intercone_witness(&zs, (1, 2), 2).unwrap();
        assert_eq!(w.case, InterConeCase::J2Block2DonorAfter);
        assert_eq!(w.w1.composition, vec![2, 1, 1]);
        assert_eq!(w.w2.composition, vec![1, 1, 2]);
        assert_eq!(w.delta, Rat::new(Int::from(2), Int::from(7)));
        // donor before
        let w = intercone_witness(&zs, (3, 4), 2).unwrap();
        assert_eq!(w.case, InterConeCase::J2Block2DonorBefore);
    }

    #[test]
    fn verify_intercone_small() {
        for n in 3..=4usize {
            for q in [2u64, 3, 5] {
                for zs in enumerate_zsmall(n) {
                    if n - zs.blocks() < 2 {
                        continue;
                    }
                    for ab in zs.block_lower_roots().into_iter().flatten() {
                        let cert = verify_intercone(&zs, ab, q).unwrap();
                        assert!(
                            cert.verified,
                            "w={:?} alpha={ab:?} q={q} residual={:?}",
                            zs.composition, cert.residual
                        );
                        // the paper's j>=3 case divides by exactly 1 + delta q
                        if cert.witness.case == InterConeCase::JAtLeast3 {
                            let expect =
                                Rat::one() + &cert.witness.delta * Rat::from(Int::from(q));
                            assert_eq!(cert.scale, expect);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn verify_intercone_detects_bad_delta() {
        let zs = zsmall(&[3]).unwrap();
        let q = 2;
        let good = verify_intercone(&zs, (1, 3), q).unwrap();
        assert!(good.verified);
        // perturbing delta by +1 breaks the identity
        let e1 = hasse_covector(&good.witness.w1, good.witness.alpha1, q).unwrap();
        let e2 = hasse_covector(&good.witness.w2, good.witness.alpha2, q).unwrap();
        let target = hasse_covector(&zs, (1, 3), q).unwrap();
        let bad_delta = &good.witness.delta + Rat::one();
        let combo: Vec<Rat> = (0..3)
            .map(|t| Rat::from(e1[t].clone()) + &bad_delta * Rat::from(e2[t].clone()))
            .collect();
        let mut scale: Option<Rat> = None;
        let mut parallel = true;
        for t in 0..3 {
            if target[t].is_zero() {
                parallel &= combo[t].is_zero();
            } else {
                let s = &combo[t] / Rat::from(target[t].clone());
                match &scale {
                    None => scale = Some(s),
                    Some(p) => parallel &= *p == s,
                }
            }
        }
        assert!(!parallel);
    }

    #[test]
    fn semantic_inclusion_via_cones() {
        // C^{alpha1}_{Hasse,w1} cap C^{alpha2}_{Hasse,w2} inside C^{alpha}_{Hasse,w}
        let q = 2u64;
        for zs in enumerate_zsmall(4) {
            if 4 - zs.blocks() < 2 {
                continue;
            }
            for ab in zs.block_lower_roots().into_iter().flatten() {
                let w = intercone_witness(&zs, ab, q).unwrap();
                let c1 = Cone::from_hform(4, vec![hasse_inequality(&w.w1, w.alpha1, q).unwrap()]);
                let c2 = Cone::from_hform(4, vec![hasse_inequality(&w.w2, w.alpha2, q).unwrap()]);
                let target = Cone::from_hform(4, vec![hasse_inequality(&zs, ab, q).unwrap()]);
                let inter = c1.intersect(&c2).unwrap();
                assert!(inter.includes_into(&target).unwrap().holds());
            }
        }
    }

    #[test]
    fn cfmin_examples() {
        let c = cfmin_cone(3, 2).unwrap();
        assert!(c.member_coords(&[1, -2, 0]).unwrap());
        assert!(c.member_coords(&[0, 0, 0]).unwrap());
        assert!(!c.member_coords(&[1, 0, 0]).unwrap());
        // equals the L-minimal cone for (n-1,1)
        for n in 3..=5usize {
            for q in [2u64, 3] {
                let g = gl_n1(n, q);
                let lmin = weightcones::lmin_cone(&g).unwrap();
                let cf = cfmin_cone(n, q).unwrap();
                assert!(lmin.cone_eq(&cf).unwrap());
            }
        }
    }

    #[test]
    fn separating_system_validates() {
        let g = gl_n1(4, 2);
        let sys = zsmall_separating_system(&g).unwrap();
        assert!(sys.validate(&g).is_ok());
        // defined exactly on the z-smalls of length >= 2
        let count = enumerate_zsmall(4)
            .into_iter()
            .filter(|zs| 4 - zs.blocks() >= 2)
            .count();
        assert_eq!(sys.entries.len(), count);
    }
}
