//! Incremental double description over exact integers: extreme rays and
//! lineality of `{x : h.x <= 0 for all h}`, and the polar construction for
//! the V-to-H direction. Adjacency is decided combinatorially on zero sets.

use crate::{Error, Result};
use num::{BigInt, Integer, Signed, Zero};

type Int = BigInt;

/// Rays plus lineality basis; together they generate the cone as
/// `span(lineality) + cone(rays)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VRep {
    pub rays: Vec<Vec<Int>>,
    pub lineality: Vec<Vec<Int>>,
}

fn primitive(mut v: Vec<Int>) -> Vec<Int> {
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

fn dot(a: &[Int], b: &[Int]) -> Int {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[derive(Debug, Clone)]
struct Ray {
    v: Vec<Int>,
    /// Bitset over processed halfspace indices with `h.v = 0`.
    zero: u128,
}

/// Extreme rays and lineality of the cone `{x in Q^n : h.x <= 0 for all h}`.
///
/// Supports at most 128 halfspaces and dimension <= 12.
pub fn extreme_rays(n: usize, halfspaces: &[Vec<Int>]) -> Result<VRep> {
    if n > 12 {
        return Err(Error::DimensionLimit(n));
    }
    if halfspaces.len() > 128 {
        return Err(Error::FmBlowup(halfspaces.len()));
    }
    // Start from the full space: lineality = standard basis, no rays.
    let mut lineality: Vec<Vec<Int>> = (0..n)
        .map(|i| {
            let mut e = vec![Int::from(0); n];
            e[i] = Int::from(1);
            e
        })
        .collect();
    let mut rays: Vec<Ray> = Vec::new();
    for (t, h) in halfspaces.iter().enumerate() {
        let bit = 1u128 << t;
        let vals: Vec<Int> = lineality.iter().map(|l| dot(h, l)).collect();
        if let Some(p) = vals.iter().position(|v| !v.is_zero()) {
            // Pivot the lineality: project everything onto h = 0 along l*.
            let lstar = lineality.remove(p);
            let a_star = vals[p].clone();
            for l in &mut lineality {
                let a_l = dot(h, l);
                if !a_l.is_zero() {
                    // a_star * l - a_l * lstar lies in h = 0
                    let newl: Vec<Int> = l
                        .iter()
                        .zip(&lstar)
                        .map(|(x, y)| &a_star * x - &a_l * y)
                        .collect();
                    *l = primitive(newl);
                }
            }
            for r in &mut rays {
                let a_r = dot(h, &r.v);
                if !a_r.is_zero() {
                    let newv: Vec<Int> = r
                        .v
                        .iter()
                        .zip(&lstar)
                        .map(|(x, y)| &a_star * x - &a_r * y)
                        .collect();
                    let mut newv = primitive(newv);
                    // keep a canonical sign-free representative
                    if a_star.is_negative() {
                        for c in &mut newv {
                            *c = -c.clone();
                        }
                    }
                    r.v = primitive(newv);
                }
                r.zero |= bit;
            }
            // The pivot itself becomes a ray on the feasible side.
            let r0 = if a_star.is_negative() {
                lstar
            } else {
                lstar.into_iter().map(|c| -c).collect()
            };
            // r0 satisfies every earlier halfspace with equality.
            let zero = (bit - 1) & !0u128;
            rays.push(Ray {
                v: primitive(r0),
                zero,
            });
        } else {
            // Lineality is inside the hyperplane; split the rays.
            let mut keep: Vec<Ray> = Vec::new();
            let mut plus: Vec<Ray> = Vec::new();
            let mut minus: Vec<Ray> = Vec::new();
            for r in rays.drain(..) {
                let a_r = dot(h, &r.v);
                if a_r.is_zero() {
                    let mut r = r;
                    r.zero |= bit;
                    keep.push(r);
                } else if a_r.is_positive() {
                    plus.push(r);
                } else {
                    minus.push(r);
                }
            }
            let mut new_rays: Vec<Ray> = Vec::new();
            for rp in &plus {
                for rm in &minus {
                    let common = rp.zero & rm.zero;
                    // adjacency: no other ray's zero set contains the meet
                    let adjacent = keep
                        .iter()
                        .chain(plus.iter())
                        .chain(minus.iter())
                        .all(|r| {
                            std::ptr::eq(r, rp)
                                || std::ptr::eq(r, rm)
                                || (common & !r.zero) != 0
                        });
                    if !adjacent {
                        continue;
                    }
                    let ap = dot(h, &rp.v);
                    let am = dot(h, &rm.v).abs();
                    let v: Vec<Int> = rp
                        .v
                        .iter()
                        .zip(&rm.v)
                        .map(|(x, y)| &am * x + &ap * y)
                        .collect();
                    let v = primitive(v);
                    if v.iter().all(Zero::is_zero) {
                        continue;
                    }
                    new_rays.push(Ray {
                        v,
                        zero: common | bit,
                    });
                }
            }
            rays = keep;
            rays.extend(minus);
            rays.extend(new_rays);
        }
    }
    let mut out_rays: Vec<Vec<Int>> = rays.into_iter().map(|r| primitive(r.v)).collect();
    out_rays.sort();
    out_rays.dedup();
    let mut out_lin: Vec<Vec<Int>> = lineality.into_iter().map(primitive).collect();
    out_lin.sort();
    Ok(VRep {
        rays: out_rays,
        lineality: out_lin,
    })
}

/// H-form of `span(lineality) + cone(rays)` by polarity: the valid
/// inequalities are the extreme rays of the polar cone.
pub fn hform_from_vrep(n: usize, rays: &[Vec<Int>], lineality: &[Vec<Int>]) -> Result<Vec<Vec<Int>>> {
    // Polar cone in functional space: { f : f.r <= 0, f.l = 0 }.
    let mut halfspaces: Vec<Vec<Int>> = Vec::new();
    for r in rays {
        halfspaces.push(r.clone());
    }
    for l in lineality {
        halfspaces.push(l.clone());
        halfspaces.push(l.iter().map(|c| -c.clone()).collect());
    }
    let polar = extreme_rays(n, &halfspaces)?;
    let mut out = polar.rays;
    for l in polar.lineality {
        out.push(l.iter().map(|c| -c.clone()).collect());
        out.push(l);
    }
    let mut out: Vec<Vec<Int>> = out.into_iter().map(primitive).collect();
    out.retain(|f| !f.iter().all(Zero::is_zero));
    out.sort();
    out.dedup();
    Ok(out)
}
