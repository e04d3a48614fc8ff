//! Weyl group elements for types A and C: length, Bruhat order, lower
//! neighbours, distinguished elements, minimal coset representatives,
//! `Min(w)`, and orbits of `W_L x <sigma>` on the roots outside the Levi.
//!
//! Elements are stored in window notation `[w(1) .. w(n)]`, signed for
//! type C (`w(-i) = -w(i)` is implicit). Composition is ordinary function
//! composition: `(u v)(x) = u(v(x))`, i.e. the right factor acts first, so
//! that right multiplication by `s_{(i j)}` swaps the window entries at
//! positions i and j. This is the convention under which the lower-neighbour
//! matrix criterion reads off the window of `w` itself and
//! `z = sigma(w_{0,I}) w_0` coincides with the block permutation `[n]` for
//! `GL_n` of signature `(n-1,1)`.

use crate::rootdata::{Character, Cocharacter, GroupData, Root, Sigma};
use crate::{Error, Result};
use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

/// Ambient Weyl group type (symmetric group or hyperoctahedral group).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WeylKind {
    TypeA,
    TypeC,
}

/// A (signed) permutation in window notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElt {
    pub kind: WeylKind,
    /// `imgs[k]` is the signed image of `k+1`; entries are `+-1..=n`.
    pub imgs: Vec<i32>,
}

impl fmt::Display for WeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.imgs.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl WeylElt {
    pub fn identity(kind: WeylKind, n: usize) -> Self {
        WeylElt {
            kind,
            imgs: (1..=n as i32).collect(),
        }
    }

    pub fn from_window(kind: WeylKind, imgs: Vec<i32>) -> Result<Self> {
        let n = imgs.len();
        let mut seen = vec![false; n];
        for &v in &imgs {
            let a = v.unsigned_abs() as usize;
            if v == 0 || a > n || seen[a - 1] {
                return Err(Error::Usage(format!("invalid window {imgs:?}")));
            }
            if kind == WeylKind::TypeA && v < 0 {
                return Err(Error::Usage("signs only allowed in type C".into()));
            }
            seen[a - 1] = true;
        }
        Ok(WeylElt { kind, imgs })
    }

    pub fn rank(&self) -> usize {
        self.imgs.len()
    }

    /// Signed image of x (x may be negative; `w(-x) = -w(x)`).
    fn image(&self, x: i32) -> i32 {
        if x > 0 {
            self.imgs[(x - 1) as usize]
        } else {
            -self.imgs[(-x - 1) as usize]
        }
    }

    /// Function composition `(self . other)(x) = self(other(x))`:
    /// `other` acts first.
    pub fn compose(&self, other: &WeylElt) -> WeylElt {
        let imgs = (1..=self.rank() as i32)
            .map(|x| self.image(other.image(x)))
            .collect();
        WeylElt {
            kind: self.kind,
            imgs,
        }
    }

    pub fn inverse(&self) -> WeylElt {
        let n = self.rank();
        let mut imgs = vec![0i32; n];
        for (k, &v) in self.imgs.iter().enumerate() {
            let a = v.unsigned_abs() as usize;
            imgs[a - 1] = if v > 0 { (k + 1) as i32 } else { -((k + 1) as i32) };
        }
        WeylElt {
            kind: self.kind,
            imgs,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.imgs
            .iter()
            .enumerate()
            .all(|(k, &v)| v == (k + 1) as i32)
    }

    /// Action on raw lattice vectors: `w . e_i = sign e_{|w(i)|}`.
    pub fn act_vec(&self, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; v.len()];
        for (k, &img) in self.imgs.iter().enumerate() {
            let a = img.unsigned_abs() as usize;
            let s = if img > 0 { 1 } else { -1 };
            out[a - 1] += s * v[k];
        }
        out
    }

    /// Action on characters.
    pub fn act(&self, lambda: &Character) -> Result<Character> {
        if lambda.rank() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: lambda.rank(),
            });
        }
        Ok(Character::new(self.act_vec(&lambda.coords)))
    }

    /// Same action on the dual lattice.
    pub fn act_covec(&self, v: &[i64]) -> Vec<i64> {
        self.act_vec(v)
    }
}

/// Positive-root vectors of the ambient group, independent of q and Levi.
pub fn positive_root_vectors(kind: WeylKind, n: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let mut v = vec![0i64; n];
            v[i] = 1;
            v[j] = -1;
            out.push(v);
        }
    }
    if kind == WeylKind::TypeC {
        for i in 0..n {
            for j in (i + 1)..n {
                let mut v = vec![0i64; n];
                v[i] = 1;
                v[j] = 1;
                out.push(v);
            }
        }
        for i in 0..n {
            let mut v = vec![0i64; n];
            v[i] = 2;
            out.push(v);
        }
    }
    out
}

/// A vector in the root system is positive iff its first nonzero entry is.
fn is_negative_root_vec(v: &[i64]) -> bool {
    for &c in v {
        if c != 0 {
            return c < 0;
        }
    }
    false
}

/// Length = number of positive roots sent to negative roots.
pub fn length(w: &WeylElt) -> usize {
    positive_root_vectors(w.kind, w.rank())
        .iter()
        .filter(|v| is_negative_root_vec(&w.act_vec(v)))
        .count()
}

/// The reflection `s_alpha` as a Weyl element, from the root and its coroot.
pub fn reflection(kind: WeylKind, root: &Root) -> WeylElt {
    let n = root.vec.len();
    let mut imgs = vec![0i32; n];
    for k in 0..n {
        // s_alpha(e_k) = e_k - <e_k, alpha^v> alpha
        let mut v = vec![0i64; n];
        v[k] = 1;
        let c = root.covec[k];
        for (t, x) in v.iter_mut().enumerate() {
            *x -= c * root.vec[t];
        }
        let pos = v.iter().position(|&x| x != 0).expect("reflection image");
        debug_assert!(v.iter().enumerate().all(|(t, &x)| t == pos || x == 0));
        debug_assert!(v[pos].abs() == 1);
        imgs[k] = if v[pos] > 0 {
            (pos + 1) as i32
        } else {
            -((pos + 1) as i32)
        };
    }
    WeylElt { kind, imgs }
}

fn weyl_kind(g: &GroupData) -> WeylKind {
    match g.kind {
        crate::rootdata::GroupKind::Gl { .. } => WeylKind::TypeA,
        crate::rootdata::GroupKind::Sp { .. } => WeylKind::TypeC,
    }
}

/// The reflection of the positive root with index `k` in `g`.
pub fn reflection_of(g: &GroupData, k: usize) -> WeylElt {
    reflection(weyl_kind(g), &g.pos_roots[k])
}

/// Lower neighbours `E_w`: indices of positive roots alpha with
/// `l(w s_alpha) = l(w) - 1`.
pub fn lower_neighbours(g: &GroupData, w: &WeylElt) -> Vec<usize> {
    let lw = length(w);
    let mut out = Vec::new();
    for k in 0..g.pos_roots.len() {
        let ws = w.compose(&reflection_of(g, k));
        if length(&ws) + 1 == lw {
            out.push(k);
        }
    }
    out
}

/// Matrix criterion for type A lower neighbours: `w s_{(i j)}` covers `w`
/// iff `w(i) > w(j)` and no `i < k < j` has `w(j) < w(k) < w(i)`.
pub fn low_neigh_criterion(w: &WeylElt, i: usize, j: usize) -> bool {
    debug_assert!(w.kind == WeylKind::TypeA && i < j);
    let wi = w.imgs[i - 1];
    let wj = w.imgs[j - 1];
    if wi <= wj {
        return false;
    }
    !(i + 1..j).any(|k| {
        let wk = w.imgs[k - 1];
        wj < wk && wk < wi
    })
}

/// Breadth-first enumeration of the whole Weyl group from the simple
/// reflections.
pub fn enumerate_weyl(g: &GroupData) -> Vec<WeylElt> {
    let kind = weyl_kind(g);
    let gens: Vec<WeylElt> = g
        .simple
        .iter()
        .map(|&k| reflection(kind, &g.pos_roots[k]))
        .collect();
    let id = WeylElt::identity(kind, g.n);
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    let mut out = Vec::new();
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(w) = queue.pop_front() {
        out.push(w.clone());
        for s in &gens {
            let ws = w.compose(s);
            if seen.insert(ws.clone()) {
                queue.push_back(ws);
            }
        }
    }
    out.sort();
    out
}

/// Longest element of the standard parabolic `W_K`, where `K` is given by
/// positions into `g.simple`. Greedy ascent by simple reflections of K.
pub fn longest_element(g: &GroupData, k_positions: &[usize]) -> WeylElt {
    let kind = weyl_kind(g);
    let gens: Vec<WeylElt> = k_positions
        .iter()
        .map(|&i| reflection(kind, &g.pos_roots[g.simple[i]]))
        .collect();
    let mut w = WeylElt::identity(kind, g.n);
    let mut lw = 0usize;
    loop {
        let mut advanced = false;
        for s in &gens {
            let ws = w.compose(s);
            let l = length(&ws);
            if l > lw {
                w = ws;
                lw = l;
                advanced = true;
                break;
            }
        }
        if !advanced {
            return w;
        }
    }
}

/// The longest element `w_0` of the full Weyl group.
pub fn w0(g: &GroupData) -> WeylElt {
    longest_element(g, &(0..g.simple.len()).collect::<Vec<_>>())
}

/// The longest element `w_{0,I}` of the Levi Weyl group.
pub fn w0_levi(g: &GroupData) -> WeylElt {
    longest_element(g, &g.levi_set)
}

/// Frobenius action on a Weyl element: conjugation by the lattice
/// automorphism of sigma.
pub fn sigma_on_weyl(g: &GroupData, w: &WeylElt) -> WeylElt {
    match g.sigma {
        Sigma::Identity => w.clone(),
        Sigma::FlipA => {
            let n = g.n;
            // sigma w sigma^{-1} with sigma: e_i -> -e_{n+1-i}
            let imgs = (1..=n)
                .map(|k| {
                    let v = w.imgs[n - k];
                    let a = v.unsigned_abs() as usize;
                    let img = (n + 1 - a) as i32;
                    if v > 0 {
                        img
                    } else {
                        -img
                    }
                })
                .collect();
            WeylElt {
                kind: w.kind,
                imgs,
            }
        }
    }
}

/// The frame element `z = sigma(w_{0,I}) w_0`.
pub fn z_element(g: &GroupData) -> WeylElt {
    sigma_on_weyl(g, &w0_levi(g)).compose(&w0(g))
}

/// Bruhat order, decided by reachability in the covering graph below `w2`.
pub fn bruhat_leq(g: &GroupData, w1: &WeylElt, w2: &WeylElt) -> bool {
    let l1 = length(w1);
    let l2 = length(w2);
    if l1 > l2 {
        return false;
    }
    if w1 == w2 {
        return true;
    }
    let refl: Vec<WeylElt> = (0..g.pos_roots.len())
        .map(|k| reflection_of(g, k))
        .collect();
    let mut lengths: HashMap<WeylElt, usize> = HashMap::new();
    lengths.insert(w2.clone(), l2);
    let mut frontier = vec![w2.clone()];
    let mut seen: HashSet<WeylElt> = HashSet::new();
    seen.insert(w2.clone());
    while let Some(w) = frontier.pop() {
        let lw = lengths[&w];
        if lw <= l1 {
            continue;
        }
        for s in &refl {
            let ws = w.compose(s);
            if seen.contains(&ws) {
                continue;
            }
            let l = *lengths.entry(ws.clone()).or_insert_with(|| length(&ws));
            if l + 1 == lw {
                if ws == *w1 {
                    return true;
                }
                seen.insert(ws.clone());
                frontier.push(ws);
            }
        }
    }
    false
}

/// Side of a coset space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CosetSide {
    /// `^K W`, minimal in `W_K w`.
    Left,
    /// `W^K`, minimal in `w W_K`.
    Right,
}

/// Minimal coset representatives of `W_K \ W` (left) or `W / W_K` (right),
/// where K is a set of positions into `g.simple`.
pub fn min_coset_reps(g: &GroupData, k_positions: &[usize], side: CosetSide) -> Vec<WeylElt> {
    let kind = weyl_kind(g);
    let gens: Vec<WeylElt> = k_positions
        .iter()
        .map(|&i| reflection(kind, &g.pos_roots[g.simple[i]]))
        .collect();
    enumerate_weyl(g)
        .into_iter()
        .filter(|w| {
            let lw = length(w);
            gens.iter().all(|s| {
                let prod = match side {
                    CosetSide::Left => s.compose(w),
                    CosetSide::Right => w.compose(s),
                };
                length(&prod) > lw
            })
        })
        .collect()
}

/// Membership in `W^I` (no right descent inside the Levi).
pub fn is_in_wi(g: &GroupData, w: &WeylElt) -> bool {
    let kind = weyl_kind(g);
    let lw = length(w);
    g.levi_set.iter().all(|&i| {
        let s = reflection(kind, &g.pos_roots[g.simple[i]]);
        length(&w.compose(&s)) > lw
    })
}

/// `Min(w)` for `w` in `W^I`: outside roots alpha with `l(w s_alpha) < l(w)`.
pub fn min_set(g: &GroupData, w: &WeylElt) -> Result<Vec<usize>> {
    if !is_in_wi(g, w) {
        return Err(Error::NotInWI);
    }
    let lw = length(w);
    Ok(g.outside
        .iter()
        .copied()
        .filter(|&k| length(&w.compose(&reflection_of(g, k))) < lw)
        .collect())
}

/// An orbit of `W_L x <sigma>` on `Phi_+ \ Phi_{L,+}`, with the sum of its
/// coroots.
#[derive(Debug, Clone)]
pub struct OrbitSpec {
    /// Sorted indices into `g.pos_roots`.
    pub roots: Vec<usize>,
    pub delta: Cocharacter,
}

/// Partition of the outside roots into orbits under the group generated by
/// the Levi reflections and sigma.
pub fn orbits(g: &GroupData) -> Vec<OrbitSpec> {
    let mut remaining: Vec<usize> = g.outside.clone();
    let mut out = Vec::new();
    while let Some(&seed) = remaining.first() {
        let mut orbit = HashSet::new();
        let mut queue = vec![seed];
        orbit.insert(seed);
        while let Some(k) = queue.pop() {
            let vec = g.pos_roots[k].vec.clone();
            let mut images: Vec<Vec<i64>> = Vec::new();
            for &i in &g.levi_simple_root_indices() {
                let beta = &g.pos_roots[i];
                let c: i64 = vec.iter().zip(&beta.covec).map(|(a, b)| a * b).sum();
                let img: Vec<i64> = vec
                    .iter()
                    .zip(&beta.vec)
                    .map(|(a, b)| a - c * b)
                    .collect();
                images.push(img);
            }
            images.push(g.sigma_covec(&vec));
            for img in images {
                if let Some(j) = g.root_index(&img) {
                    if g.outside.contains(&j) && orbit.insert(j) {
                        queue.push(j);
                    }
                }
            }
        }
        let mut roots: Vec<usize> = orbit.into_iter().collect();
        roots.sort_unstable();
        remaining.retain(|k| !roots.contains(k));
        let delta = g.coroot_sum(&roots);
        out.push(OrbitSpec { roots, delta });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{build_gl, build_sp, pairing, Sigma};

    fn gl(r: usize, s: usize) -> GroupData {
        build_gl(r, s, 2, Sigma::Identity).unwrap()
    }

    /// Independent length oracle for type A: window inversions.
    fn inversions(w: &WeylElt) -> usize {
        let n = w.rank();
        let mut c = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                if w.imgs[i] > w.imgs[j] {
                    c += 1;
                }
            }
        }
        c
    }

    #[test]
    fn length_examples() {
        let g = gl(3, 1);
        assert_eq!(length(&WeylElt::identity(WeylKind::TypeA, 4)), 0);
        let w0 = w0(&g);
        assert_eq!(length(&w0), 6);
        assert_eq!(w0.imgs, vec![4, 3, 2, 1]);
        // all of S_4: root-inversion length equals window inversions
        for w in enumerate_weyl(&g) {
            assert_eq!(length(&w), inversions(&w));
        }
        // Sp(6): w_0 = -1 has length 9
        let gs = build_sp(3, 2, Sigma::Identity).unwrap();
        let w0s = super::w0(&gs);
        assert_eq!(w0s.imgs, vec![-1, -2, -3]);
        assert_eq!(length(&w0s), 9);
    }

    #[test]
    fn act_examples() {
        // identity
        let id = WeylElt::identity(WeylKind::TypeA, 3);
        let lam = Character::new(vec![1, 2, 3]);
        assert_eq!(id.act(&lam).unwrap(), lam);
        // the cycle with window [2,3,1] sends (a,b,c) to (c,a,b):
        // permutation-matrix multiply with e_i -> e_{w(i)}
        let c3 = WeylElt::from_window(WeylKind::TypeA, vec![2, 3, 1]).unwrap();
        assert_eq!(
            c3.act(&Character::new(vec![10, 20, 30])).unwrap().coords,
            vec![30, 10, 20]
        );
        // Sp central inversion
        let m1 = WeylElt::from_window(WeylKind::TypeC, vec![-1, -2, -3]).unwrap();
        assert_eq!(
            m1.act(&Character::new(vec![1, -2, 5])).unwrap().coords,
            vec![-1, 2, -5]
        );
        // rank mismatch
        assert!(c3.act(&Character::zero(4)).is_err());
    }

    #[test]
    fn act_is_compatible_with_composition() {
        let g = gl(2, 2);
        let elts = enumerate_weyl(&g);
        let lam = Character::new(vec![3, -1, 4, -5]);
        for u in elts.iter().take(8) {
            for v in elts.iter().rev().take(8) {
                let uv = u.compose(v);
                let lhs = uv.act(&lam).unwrap();
                let rhs = u.act(&v.act(&lam).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
        // additivity
        let mu = Character::new(vec![1, 1, 0, -2]);
        let w = &elts[5];
        assert_eq!(
            w.act(&lam.add(&mu)).unwrap(),
            w.act(&lam).unwrap().add(&w.act(&mu).unwrap())
        );
    }

    #[test]
    fn reflection_negates_its_root() {
        for g in [gl(2, 2), build_sp(3, 2, Sigma::Identity).unwrap()] {
            for rt in &g.pos_roots {
                let s = reflection(weyl_kind(&g), rt);
                let img = s.act_vec(&rt.vec);
                let neg: Vec<i64> = rt.vec.iter().map(|x| -x).collect();
                assert_eq!(img, neg);
                // involution
                assert!(s.compose(&s).is_identity());
            }
        }
    }

    #[test]
    fn lower_neighbour_examples() {
        let g = gl(2, 1);
        let id = WeylElt::identity(WeylKind::TypeA, 3);
        assert!(lower_neighbours(&g, &id).is_empty());
        // w_0 in S_n has the simple roots as lower neighbours
        let w0 = w0(&g);
        let mut e: Vec<usize> = lower_neighbours(&g, &w0);
        let mut simple = g.simple.clone();
        e.sort_unstable();
        simple.sort_unstable();
        assert_eq!(e, simple);
        // the block permutation [2,1] (window [2,1,3]) drops only at e1-e2
        let w = WeylElt::from_window(WeylKind::TypeA, vec![2, 1, 3]).unwrap();
        let e = lower_neighbours(&g, &w);
        assert_eq!(e.len(), 1);
        assert_eq!(g.pos_roots[e[0]].vec, vec![1, -1, 0]);
    }

    #[test]
    fn low_neigh_criterion_matches_generic_s4() {
        let g = gl(3, 1);
        for w in enumerate_weyl(&g) {
            let generic: HashSet<usize> = lower_neighbours(&g, &w).into_iter().collect();
            let mut by_criterion = HashSet::new();
            for i in 1..=4usize {
                for j in (i + 1)..=4 {
                    if low_neigh_criterion(&w, i, j) {
                        let mut v = vec![0i64; 4];
                        v[i - 1] = 1;
                        v[j - 1] = -1;
                        by_criterion.insert(g.root_index(&v).unwrap());
                    }
                }
            }
            assert_eq!(generic, by_criterion, "mismatch at w={w}");
        }
    }

    #[test]
    fn bruhat_examples() {
        let g = gl(2, 1);
        let id = WeylElt::identity(WeylKind::TypeA, 3);
        let z = z_element(&g);
        for w in enumerate_weyl(&g) {
            assert!(bruhat_leq(&g, &id, &w));
            assert!(bruhat_leq(&g, &w, &w));
        }
        // both simple reflections are below z
        let s1 = WeylElt::from_window(WeylKind::TypeA, vec![2, 1, 3]).unwrap();
        let s2 = WeylElt::from_window(WeylKind::TypeA, vec![1, 3, 2]).unwrap();
        assert!(bruhat_leq(&g, &s1, &z));
        assert!(bruhat_leq(&g, &s2, &z));
        // w_0 is not below z
        assert!(!bruhat_leq(&g, &w0(&g), &z));
    }

    #[test]
    fn z_element_examples() {
        // GL_n (n-1,1): z has window [n, 1, 2, .., n-1]
        for n in 3..=6usize {
            let g = gl(n - 1, 1);
            let z = z_element(&g);
            let mut expect = vec![n as i32];
            expect.extend(1..n as i32);
            assert_eq!(z.imgs, expect);
            assert_eq!(length(&z), n - 1);
        }
        // GL(1,1): I is empty, z = w_0 = (1 2)
        let g11 = gl(1, 1);
        assert_eq!(z_element(&g11).imgs, vec![2, 1]);
        // Sp(2n): l(z) = n(n+1)/2
        for n in 1..=4usize {
            let g = build_sp(n, 2, Sigma::Identity).unwrap();
            assert_eq!(length(&z_element(&g)), n * (n + 1) / 2);
        }
    }

    #[test]
    fn coset_reps_counts() {
        let g = gl(2, 1);
        // K = I: |W^I| = 6/2 = 3
        let reps = min_coset_reps(&g, &g.levi_set, CosetSide::Right);
        assert_eq!(reps.len(), 3);
        // K empty: all of W
        assert_eq!(min_coset_reps(&g, &[], CosetSide::Right).len(), 6);
        // K = Delta: only the identity
        let all: Vec<usize> = (0..g.simple.len()).collect();
        let reps = min_coset_reps(&g, &all, CosetSide::Left);
        assert_eq!(reps.len(), 1);
        assert!(reps[0].is_identity());
    }

    #[test]
    fn min_set_gl3() {
        let g = gl(2, 1);
        let reps = min_coset_reps(&g, &g.levi_set, CosetSide::Right);
        let mut images: Vec<Vec<Vec<i64>>> = reps
            .iter()
            .map(|w| {
                min_set(&g, w)
                    .unwrap()
                    .iter()
                    .map(|&k| g.pos_roots[k].vec.clone())
                    .collect()
            })
            .collect();
        images.sort();
        assert_eq!(
            images,
            vec![
                vec![],
                vec![vec![0, 1, -1]],
                vec![vec![1, 0, -1], vec![0, 1, -1]],
            ]
        );
        // not in W^I is an error
        let w0 = w0(&g);
        assert!(min_set(&g, &w0).is_err());
    }

    #[test]
    fn orbit_examples() {
        // GL_n (r,s): a single orbit of size r*s
        for (r, s) in [(2usize, 1usize), (2, 2), (3, 2)] {
            let g = gl(r, s);
            let os = orbits(&g);
            assert_eq!(os.len(), 1);
            assert_eq!(os[0].roots.len(), r * s);
        }
        // Sp(2n): long-root orbit of size n and short orbit of size n(n-1)/2
        let g = build_sp(3, 2, Sigma::Identity).unwrap();
        let mut sizes: Vec<usize> = orbits(&g).iter().map(|o| o.roots.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![3, 3]);
        // Sp(2): single orbit {2 e_1}
        let g1 = build_sp(1, 2, Sigma::Identity).unwrap();
        let os = orbits(&g1);
        assert_eq!(os.len(), 1);
        assert_eq!(g1.pos_roots[os[0].roots[0]].vec, vec![2]);
        assert_eq!(os[0].delta.coords, vec![1]);
    }

    #[test]
    fn orbit_delta_levi_orthogonal() {
        for g in [gl(3, 2), build_sp(3, 2, Sigma::Identity).unwrap()] {
            for o in orbits(&g) {
                for &k in &g.levi_simple_root_indices() {
                    let beta = Character::new(g.pos_roots[k].vec.clone());
                    assert_eq!(pairing(&beta, &o.delta.coords).unwrap(), 0);
                }
            }
        }
    }

    #[test]
    fn reflections_fix_outside_setwise() {
        let g = gl(2, 2);
        for &i in &g.levi_simple_root_indices() {
            let s = reflection_of(&g, i);
            for &k in &g.outside {
                let img = s.act_vec(&g.pos_roots[k].vec);
                let j = g.root_index(&img).expect("image is a positive root");
                assert!(g.outside.contains(&j));
            }
        }
    }
}
