//! Root-datum environment: `GL_n` with cocharacter `diag(x·I_r, I_s)` and
//! `Sp(2n)` with the Siegel Levi, modelled on the lattice `X*(T) = Z^n`.
//!
//! Coroots are stored explicitly per root, so the type-C halving
//! `(2e_i)^v = e_i` is data rather than logic. All values are immutable
//! after construction.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// Integer weight vector in `X*(T) = Z^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Character {
    pub coords: Vec<i64>,
}

/// Integer vector in the dual lattice; the pairing is the dot product.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cocharacter {
    pub coords: Vec<i64>,
}

impl Character {
    pub fn new(coords: Vec<i64>) -> Self {
        Character { coords }
    }

    pub fn zero(n: usize) -> Self {
        Character { coords: vec![0; n] }
    }

    /// Basis character `e_k` (1-based).
    pub fn basis(n: usize, k: usize) -> Self {
        let mut coords = vec![0; n];
        coords[k - 1] = 1;
        Character { coords }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn add(&self, other: &Character) -> Character {
        Character::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Character) -> Character {
        Character::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn neg(&self) -> Character {
        Character::new(self.coords.iter().map(|a| -a).collect())
    }

    pub fn scaled(&self, c: i64) -> Character {
        Character::new(self.coords.iter().map(|a| c * a).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&a| a == 0)
    }
}

impl Cocharacter {
    pub fn new(coords: Vec<i64>) -> Self {
        Cocharacter { coords }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn add(&self, other: &Cocharacter) -> Cocharacter {
        Cocharacter::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

/// A positive root together with its coroot.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Root {
    pub vec: Vec<i64>,
    pub covec: Vec<i64>,
}

/// Group kind: `GL_n` with signature `(r,s)` or `Sp(2n)` with the Siegel
/// parabolic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GroupKind {
    Gl { r: usize, s: usize },
    Sp { n: usize },
}

/// Frobenius action on the simple roots, extended to a lattice automorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sigma {
    Identity,
    /// Order-2 diagram flip of type A (`alpha_i -> alpha_{n-i}`), extended by
    /// `e_i -> -e_{n+1-i}`. Only valid for GL with r = s.
    FlipA,
}

/// A cocharacter datum: group type, rank data, prime power q, Frobenius, and
/// all derived root bookkeeping.
#[derive(Debug, Clone)]
pub struct GroupData {
    pub kind: GroupKind,
    pub n: usize,
    pub q: u64,
    pub sigma: Sigma,
    /// All positive roots, in a fixed deterministic order.
    pub pos_roots: Vec<Root>,
    /// Indices into `pos_roots` of the simple roots, in Dynkin order.
    pub simple: Vec<usize>,
    /// Positions in `simple` of the Levi simple roots I.
    pub levi_set: Vec<usize>,
    /// Indices into `pos_roots` of the positive Levi roots.
    pub levi_pos: Vec<usize>,
    /// Indices into `pos_roots` of `Phi_+ \ Phi_{L,+}`.
    pub outside: Vec<usize>,
}

fn is_prime_power(mut q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut p = 2u64;
    while p * p <= q {
        if q % p == 0 {
            while q % p == 0 {
                q /= p;
            }
            return q == 1;
        }
        p += 1;
    }
    true
}

/// Builds the full root-datum environment.
pub fn build_group(kind: GroupKind, q: u64, sigma: Sigma) -> Result<GroupData> {
    match kind {
        GroupKind::Gl { r, s } => {
            if r == 0 || s == 0 {
                return Err(Error::InvalidSignature { r, s });
            }
            if !is_prime_power(q) {
                return Err(Error::InvalidQ(q));
            }
            let n = r + s;
            let mut roots = Vec::new();
            for i in 1..=n {
                for j in (i + 1)..=n {
                    let mut v = vec![0i64; n];
                    v[i - 1] = 1;
                    v[j - 1] = -1;
                    roots.push(Root {
                        vec: v.clone(),
                        covec: v,
                    });
                }
            }
            let simple: Vec<usize> = (1..n)
                .map(|i| {
                    let mut v = vec![0i64; n];
                    v[i - 1] = 1;
                    v[i] = -1;
                    roots.iter().position(|rt| rt.vec == v).unwrap()
                })
                .collect();
            // I = Delta minus alpha_r
            let levi_set: Vec<usize> = (0..n - 1).filter(|&i| i + 1 != r).collect();
            finish_build(kind, n, q, sigma, roots, simple, levi_set)
        }
        GroupKind::Sp { n } => build_sp(n, q, sigma),
    }
}

/// Builds `Sp(2n)` with the Siegel Levi (type C rank n).
pub fn build_sp(n: usize, q: u64, sigma: Sigma) -> Result<GroupData> {
    if n == 0 {
        return Err(Error::InvalidSignature { r: n, s: 0 });
    }
    if !is_prime_power(q) {
        return Err(Error::InvalidQ(q));
    }
    let mut roots = Vec::new();
    // e_i - e_j, i < j
    for i in 1..=n {
        for j in (i + 1)..=n {
            let mut v = vec![0i64; n];
            v[i - 1] = 1;
            v[j - 1] = -1;
            roots.push(Root {
                vec: v.clone(),
                covec: v,
            });
        }
    }
    // e_i + e_j, i < j
    for i in 1..=n {
        for j in (i + 1)..=n {
            let mut v = vec![0i64; n];
            v[i - 1] = 1;
            v[j - 1] = 1;
            roots.push(Root {
                vec: v.clone(),
                covec: v,
            });
        }
    }
    // 2 e_i with coroot e_i
    for i in 1..=n {
        let mut v = vec![0i64; n];
        v[i - 1] = 2;
        let mut cv = vec![0i64; n];
        cv[i - 1] = 1;
        roots.push(Root { vec: v, covec: cv });
    }
    // Delta = { alpha_1..alpha_{n-1}, beta = 2 e_n }
    let mut simple: Vec<usize> = (1..n)
        .map(|i| {
            let mut v = vec![0i64; n];
            v[i - 1] = 1;
            v[i] = -1;
            roots.iter().position(|rt| rt.vec == v).unwrap()
        })
        .collect();
    let mut beta = vec![0i64; n];
    beta[n - 1] = 2;
    simple.push(roots.iter().position(|rt| rt.vec == beta).unwrap());
    // I = { alpha_1 .. alpha_{n-1} }
    let levi_set: Vec<usize> = (0..n - 1).collect();
    finish_build(GroupKind::Sp { n }, n, q, sigma, roots, simple, levi_set)
}

/// Convenience constructor for `GL_n` with signature `(r, s)`.
pub fn build_gl(r: usize, s: usize, q: u64, sigma: Sigma) -> Result<GroupData> {
    build_group(GroupKind::Gl { r, s }, q, sigma)
}

fn finish_build(
    kind: GroupKind,
    n: usize,
    q: u64,
    sigma: Sigma,
    pos_roots: Vec<Root>,
    simple: Vec<usize>,
    levi_set: Vec<usize>,
) -> Result<GroupData> {
    // sigma must be a diagram automorphism fixing the Levi set.
    match sigma {
        Sigma::Identity => {}
        Sigma::FlipA => match kind {
            GroupKind::Gl { r, s } if r == s => {}
            _ => return Err(Error::InvalidSigma),
        },
    }
    // Positive Levi roots: nonnegative pairing structure determined by the kind.
    let levi_pos: Vec<usize> = pos_roots
        .iter()
        .enumerate()
        .filter(|(_, rt)| match kind {
            GroupKind::Gl { r, .. } => {
                let i = rt.vec.iter().position(|&c| c != 0).unwrap();
                let j = rt.vec.iter().rposition(|&c| c != 0).unwrap();
                (i < r && j < r) || (i >= r && j >= r)
            }
            GroupKind::Sp { .. } => rt.vec.iter().sum::<i64>() == 0,
        })
        .map(|(k, _)| k)
        .collect();
    let outside: Vec<usize> = (0..pos_roots.len())
        .filter(|k| !levi_pos.contains(k))
        .collect();
    let g = GroupData {
        kind,
        n,
        q,
        sigma,
        pos_roots,
        simple,
        levi_set,
        levi_pos,
        outside,
    };
    // Internal consistency: <alpha, alpha^v> = 2 for every positive root.
    for rt in &g.pos_roots {
        let p: i64 = rt.vec.iter().zip(&rt.covec).map(|(a, b)| a * b).sum();
        debug_assert_eq!(p, 2);
    }
    Ok(g)
}

/// Exact pairing `<lambda, covec>`.
pub fn pairing(lambda: &Character, covec: &[i64]) -> Result<i64> {
    if lambda.coords.len() != covec.len() {
        return Err(Error::RankMismatch {
            expected: covec.len(),
            got: lambda.coords.len(),
        });
    }
    Ok(lambda
        .coords
        .iter()
        .zip(covec)
        .map(|(a, b)| a * b)
        .sum())
}

impl GroupData {
    /// Signature accessor for GL; (n, 0) for Sp.
    pub fn signature(&self) -> (usize, usize) {
        match self.kind {
            GroupKind::Gl { r, s } => (r, s),
            GroupKind::Sp { .. } => (self.n, 0),
        }
    }

    /// The simple roots of the Levi, as indices into `pos_roots`.
    pub fn levi_simple_root_indices(&self) -> Vec<usize> {
        self.levi_set.iter().map(|&i| self.simple[i]).collect()
    }

    /// True if `lambda` is L-dominant: `<lambda, alpha^v> >= 0` for alpha in I.
    pub fn is_levi_dominant(&self, lambda: &Character) -> bool {
        self.levi_simple_root_indices()
            .iter()
            .all(|&k| pairing(lambda, &self.pos_roots[k].covec).unwrap() >= 0)
    }

    /// Applies the lattice automorphism induced by sigma.
    pub fn sigma_act(&self, lambda: &Character) -> Character {
        self.sigma_vec(&lambda.coords, 1)
    }

    /// sigma^{-1} on characters (sigma has order <= 2, so this equals sigma).
    pub fn sigma_act_inv(&self, lambda: &Character) -> Character {
        self.sigma_act(lambda)
    }

    /// sigma applied to a raw lattice vector; `_dir` kept for symmetry.
    fn sigma_vec(&self, v: &[i64], _dir: i64) -> Character {
        match self.sigma {
            Sigma::Identity => Character::new(v.to_vec()),
            Sigma::FlipA => {
                let n = self.n;
                let mut out = vec![0i64; n];
                for (i, &c) in v.iter().enumerate() {
                    // e_{i+1} -> -e_{n-i}
                    out[n - 1 - i] = -c;
                }
                Character::new(out)
            }
        }
    }

    /// sigma on a covector (same formula on the dual basis).
    pub fn sigma_covec(&self, v: &[i64]) -> Vec<i64> {
        self.sigma_vec(v, 1).coords
    }

    /// Sum of the coroots of a set of positive roots (e.g. `delta_O`).
    pub fn coroot_sum(&self, root_indices: &[usize]) -> Cocharacter {
        let mut acc = vec![0i64; self.n];
        for &k in root_indices {
            for (a, b) in acc.iter_mut().zip(&self.pos_roots[k].covec) {
                *a += b;
            }
        }
        Cocharacter::new(acc)
    }

    /// Finds the index of a positive root with the given vector.
    pub fn root_index(&self, vec: &[i64]) -> Option<usize> {
        self.pos_roots.iter().position(|rt| rt.vec == vec)
    }

    /// Reproducibility header: the fully resolved group as JSON.
    pub fn to_json(&self) -> serde_json::Value {
        let (r, s) = match self.kind {
            GroupKind::Gl { r, s } => (Some(r), Some(s)),
            GroupKind::Sp { .. } => (None, None),
        };
        let m = self.simple.len();
        let sigma_images: Vec<usize> = match self.sigma {
            Sigma::Identity => (0..m).collect(),
            Sigma::FlipA => (0..m).rev().collect(),
        };
        serde_json::json!({
            "kind": match self.kind { GroupKind::Gl{..} => "gl", GroupKind::Sp { .. } => "sp" },
            "n": self.n,
            "r": r,
            "s": s,
            "q": self.q,
            "sigma": sigma_images,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl21_roots_and_levi() {
        let g = build_gl(2, 1, 2, Sigma::Identity).unwrap();
        let vecs: Vec<&Vec<i64>> = g.pos_roots.iter().map(|r| &r.vec).collect();
        assert_eq!(
            vecs,
            vec![&vec![1, -1, 0], &vec![1, 0, -1], &vec![0, 1, -1]]
        );
        // I = { e1 - e2 }
        let levi = g.levi_simple_root_indices();
        assert_eq!(levi.len(), 1);
        assert_eq!(g.pos_roots[levi[0]].vec, vec![1, -1, 0]);
        // Phi_+ \ Phi_{L,+} = { e1-e3, e2-e3 }
        let out: Vec<&Vec<i64>> = g.outside.iter().map(|&k| &g.pos_roots[k].vec).collect();
        assert_eq!(out, vec![&vec![1, 0, -1], &vec![0, 1, -1]]);
    }

    #[test]
    fn sp6_has_nine_positive_roots() {
        let g = build_sp(3, 2, Sigma::Identity).unwrap();
        assert_eq!(g.pos_roots.len(), 9);
        assert_eq!(g.n * g.n, 9);
        // two simple kinds: alpha_i and beta = 2e_n
        assert_eq!(g.simple.len(), 3);
        assert_eq!(g.pos_roots[g.simple[2]].vec, vec![0, 0, 2]);
        assert_eq!(g.pos_roots[g.simple[2]].covec, vec![0, 0, 1]);
        // Levi positive roots: e_i - e_j
        assert_eq!(g.levi_pos.len(), 3);
        assert_eq!(g.outside.len(), 6);
    }

    #[test]
    fn gl11_degenerate() {
        let g = build_gl(1, 1, 2, Sigma::Identity).unwrap();
        assert_eq!(g.pos_roots.len(), 1);
        assert!(g.levi_set.is_empty());
        assert!(g.levi_pos.is_empty());
        assert_eq!(g.outside, vec![0]);
    }

    #[test]
    fn pairing_examples() {
        let g = build_sp(3, 2, Sigma::Identity).unwrap();
        // lambda = (1,0,-1) against coroot of e1 - e3
        let lam = Character::new(vec![1, 0, -1]);
        let k = g.root_index(&[1, 0, -1]).unwrap();
        assert_eq!(pairing(&lam, &g.pos_roots[k].covec).unwrap(), 2);
        // Sp: <(a1,a2,a3), (2e_1)^v> = a1
        let k2 = g.root_index(&[2, 0, 0]).unwrap();
        let lam2 = Character::new(vec![5, 7, 11]);
        assert_eq!(pairing(&lam2, &g.pos_roots[k2].covec).unwrap(), 5);
        // zero character
        assert_eq!(
            pairing(&Character::zero(3), &g.pos_roots[k].covec).unwrap(),
            0
        );
        // rank mismatch is an error
        assert!(pairing(&Character::zero(2), &g.pos_roots[k].covec).is_err());
    }

    #[test]
    fn sigma_flip_on_gl4() {
        let g = build_gl(2, 2, 3, Sigma::FlipA).unwrap();
        // alpha_1 = e1 - e2 maps to alpha_3 = e3 - e4
        let a1 = Character::new(vec![1, -1, 0, 0]);
        assert_eq!(g.sigma_act(&a1).coords, vec![0, 0, 1, -1]);
        // involution
        let lam = Character::new(vec![3, -1, 4, 1]);
        assert_eq!(g.sigma_act(&g.sigma_act(&lam)), lam);
        // identity sigma is the identity
        let gid = build_gl(2, 1, 2, Sigma::Identity).unwrap();
        let mu = Character::new(vec![1, 2, 3]);
        assert_eq!(gid.sigma_act(&mu), mu);
    }

    #[test]
    fn sigma_flip_rejected_off_balance() {
        assert!(build_gl(2, 1, 2, Sigma::FlipA).is_err());
        assert!(build_sp(3, 2, Sigma::FlipA).is_err());
    }

    #[test]
    fn q_validation() {
        assert!(build_gl(2, 1, 1, Sigma::Identity).is_err());
        assert!(build_gl(2, 1, 6, Sigma::Identity).is_err());
        assert!(build_gl(2, 1, 8, Sigma::Identity).is_ok());
        assert!(build_gl(2, 1, 9, Sigma::Identity).is_ok());
    }

    #[test]
    fn root_counts() {
        for n in 2..=6 {
            for r in 1..n {
                let g = build_gl(r, n - r, 2, Sigma::Identity).unwrap();
                assert_eq!(g.pos_roots.len(), n * (n - 1) / 2);
            }
        }
        for n in 1..=4 {
            let g = build_sp(n, 2, Sigma::Identity).unwrap();
            assert_eq!(g.pos_roots.len(), n * n);
        }
    }

    #[test]
    fn delta_orbit_orthogonal_to_levi() {
        // delta_O = sum of coroots over Phi_+ \ Phi_{L,+} pairs to 0 with I.
        for g in [
            build_gl(2, 2, 2, Sigma::Identity).unwrap(),
            build_gl(3, 1, 2, Sigma::Identity).unwrap(),
            build_sp(3, 2, Sigma::Identity).unwrap(),
        ] {
            let delta = g.coroot_sum(&g.outside);
            for &k in &g.levi_simple_root_indices() {
                let beta = Character::new(g.pos_roots[k].vec.clone());
                assert_eq!(pairing(&beta, &delta.coords).unwrap(), 0);
            }
        }
    }

    #[test]
    fn outside_fixed_by_sigma() {
        let g = build_gl(2, 2, 3, Sigma::FlipA).unwrap();
        let mut images: Vec<Vec<i64>> = g
            .outside
            .iter()
            .map(|&k| g.sigma_covec(&g.pos_roots[k].vec))
            .collect();
        let mut original: Vec<Vec<i64>> = g
            .outside
            .iter()
            .map(|&k| g.pos_roots[k].vec.clone())
            .collect();
        images.sort();
        original.sort();
        assert_eq!(images, original);
    }
}
