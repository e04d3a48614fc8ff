//! Command-line front end: group definition, cone construction and export,
//! membership, inclusion with certificates, strata listing, verification
//! suites, prime sweeps, and figure-slice export. All JSON output carries
//! `{"schema": 1}` and is byte-identical across identical invocations.

use crate::cones::{Cone, IncludeOutcome};
use crate::rootdata::{build_gl, build_sp, Character, GroupData, Sigma};
use crate::unitary_n1::{self, enumerate_zsmall};
use crate::weightcones::{self, NamedCone};
use crate::weyl::{self, WeylElt, WeylKind};
use crate::{oracle, Error, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "zipcone",
    version,
    about = "Exact weight-cone computations over GL_n and Sp(2n) root data"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Clone)]
pub struct GroupArgs {
    /// Group kind: gl or sp
    #[arg(long, default_value = "gl")]
    pub kind: String,
    /// Rank (for sp, or as a consistency check for gl)
    #[arg(long)]
    pub n: Option<usize>,
    /// Signature part r (gl only)
    #[arg(long)]
    pub r: Option<usize>,
    /// Signature part s (gl only)
    #[arg(long)]
    pub s: Option<usize>,
    /// Prime power
    #[arg(long, default_value_t = 2)]
    pub q: u64,
    /// Frobenius action on the diagram: id or flip
    #[arg(long, default_value = "id")]
    pub sigma: String,
}

impl GroupArgs {
    pub fn build(&self) -> Result<GroupData> {
        let sigma = match self.sigma.as_str() {
            "id" => Sigma::Identity,
            "flip" => Sigma::FlipA,
            other => return Err(Error::Usage(format!("unknown sigma {other}"))),
        };
        match self.kind.as_str() {
            "gl" => {
                let (r, s) = match (self.r, self.s, self.n) {
                    (Some(r), Some(s), n) => {
                        if let Some(n) = n {
                            if r + s != n {
                                return Err(Error::Usage("r + s must equal n".into()));
                            }
                        }
                        (r, s)
                    }
                    (Some(r), None, Some(n)) if n > r => (r, n - r),
                    (None, Some(s), Some(n)) if n > s => (n - s, s),
                    _ => return Err(Error::Usage("gl needs --r and --s (or --n)".into())),
                };
                build_gl(r, s, self.q, sigma)
            }
            "sp" => {
                let n = self
                    .n
                    .ok_or_else(|| Error::Usage("sp needs --n".into()))?;
                build_sp(n, self.q, sigma)
            }
            other => Err(Error::Usage(format!("unknown kind {other}"))),
        }
    }
}

#[derive(Subcommand)]
pub enum Command {
    /// Print a named or derived cone
    Cone {
        #[command(flatten)]
        group: GroupArgs,
        /// gs | dominant | lmin | cfmin | orb | unip | deg | hasse | sp6zip | sp6unip | sp6orb
        #[arg(long)]
        name: String,
        /// Weyl element window for deg/hasse, e.g. "3,1,2" (signs for sp)
        #[arg(long)]
        w: Option<String>,
        #[arg(long, default_value = "json")]
        out: String,
    },
    /// Test membership of a weight in a named cone
    Member {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        name: String,
        #[arg(long)]
        w: Option<String>,
        /// Comma-separated integer weight in the e-basis
        #[arg(long)]
        lambda: String,
    },
    /// Decide inclusion between two named cones, with Farkas certificates
    Include {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long)]
        from_w: Option<String>,
        #[arg(long)]
        to_w: Option<String>,
    },
    /// List the z-small strata with their lower-neighbour data
    Strata {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        q: u64,
    },
    /// Print the auxiliary path with its partial Hasse invariant weights
    Path {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        q: u64,
    },
    /// Run a verification suite: intercone | hasse-reg | lmin-eq | minset | shapes
    Verify {
        suite: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        nmax: Option<usize>,
        /// Comma-separated prime powers
        #[arg(long, default_value = "2,3")]
        qs: String,
    },
    /// Asymptotic prime sweep against the Griffiths-Schmid cone
    Sweep {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long = "box", default_value_t = 5)]
        bound: i64,
        #[arg(long, default_value_t = 211)]
        pmax: u64,
    },
    /// Emit a 2D membership grid of a named cone
    Slice {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        name: String,
        #[arg(long)]
        w: Option<String>,
        /// Two basis weights separated by ':', e.g. "1,0,0:0,1,0"
        #[arg(long)]
        basis: String,
        #[arg(long, default_value = "")]
        offset: String,
        #[arg(long = "box", default_value_t = 6)]
        bound: i64,
        #[arg(long, default_value = "csv")]
        out: String,
    },
}

fn parse_lambda(s: &str, n: usize) -> Result<Character> {
    let coords: std::result::Result<Vec<i64>, _> =
        s.split(',').map(|t| t.trim().parse::<i64>()).collect();
    let coords = coords.map_err(|_| Error::Usage(format!("bad weight {s}")))?;
    if coords.len() != n {
        return Err(Error::RankMismatch {
            expected: n,
            got: coords.len(),
        });
    }
    Ok(Character::new(coords))
}

fn parse_window(s: &str, g: &GroupData) -> Result<WeylElt> {
    let cleaned = s.trim_start_matches('[').trim_end_matches(']');
    let imgs: std::result::Result<Vec<i32>, _> = cleaned
        .split(|c| c == ',' || c == ' ')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i32>())
        .collect();
    let imgs = imgs.map_err(|_| Error::Usage(format!("bad window {s}")))?;
    let kind = match g.kind {
        crate::rootdata::GroupKind::Gl { .. } => WeylKind::TypeA,
        crate::rootdata::GroupKind::Sp { .. } => WeylKind::TypeC,
    };
    if imgs.len() != g.n {
        return Err(Error::RankMismatch {
            expected: g.n,
            got: imgs.len(),
        });
    }
    WeylElt::from_window(kind, imgs)
}

/// Resolves a cone name over the group. `cfmin`, `orb` and `unip` are
/// derived H-forms; the rest are the named cones of the library.
fn resolve_cone(g: &GroupData, name: &str, w: Option<&WeylElt>) -> Result<Cone> {
    match name {
        "gs" => weightcones::named_cone(g, &NamedCone::Gs),
        "dominant" => weightcones::named_cone(g, &NamedCone::LeviDominant),
        "lmin" => weightcones::named_cone(g, &NamedCone::LMin),
        "cfmin" => unitary_n1::cfmin_cone(g.n, g.q),
        "orb" => weightcones::orb_cone(g),
        "unip" => weightcones::unip_cone_via_projection(g),
        "sp6zip" => weightcones::named_cone(g, &NamedCone::Sp6Zip),
        "sp6unip" => weightcones::named_cone(g, &NamedCone::Sp6Unip),
        "sp6orb" => weightcones::named_cone(g, &NamedCone::Sp6Orb),
        "deg" => {
            let w = w.ok_or_else(|| Error::Usage("deg needs --w".into()))?;
            weightcones::named_cone(g, &NamedCone::Deg(w.clone()))
        }
        "hasse" => {
            let w = w.ok_or_else(|| Error::Usage("hasse needs --w".into()))?;
            weightcones::hasse_cone(g, w, true)
        }
        other => Err(Error::Usage(format!("unknown cone name {other}"))),
    }
}

fn cone_json(g: &GroupData, name: &str, cone: &Cone) -> Result<serde_json::Value> {
    let h = cone.hform_functionals()?;
    let pretty: Vec<String> = h.iter().map(|f| f.pretty("k")).collect();
    Ok(json!({
        "schema": 1,
        "group": g.to_json(),
        "name": name,
        "cone": cone.to_json(),
        "inequalities": pretty,
    }))
}

fn parse_qs(qs: &str) -> Result<Vec<u64>> {
    qs.split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| Error::Usage(format!("bad q list {qs}")))
        })
        .collect()
}

struct SuiteOutcome {
    passed: bool,
    record: serde_json::Value,
}

fn suite_intercone(ns: &[usize], qs: &[u64]) -> Result<SuiteOutcome> {
    let mut records = Vec::new();
    let mut all_ok = true;
    for &n in ns {
        for &q in qs {
            for zs in enumerate_zsmall(n) {
                if n - zs.blocks() < 2 {
                    continue;
                }
                for ab in zs.block_lower_roots().into_iter().flatten() {
                    let cert = unitary_n1::verify_intercone(&zs, ab, q)?;
                    all_ok &= cert.verified;
                    records.push(json!({
                        "w": zs.composition,
                        "alpha": [ab.0, ab.1],
                        "case": cert.witness.case.label(),
                        "w1": cert.witness.w1.composition,
                        "w2": cert.witness.w2.composition,
                        "delta": cert.witness.delta.to_string(),
                        "scale": cert.scale.to_string(),
                        "q": q,
                        "verified": cert.verified,
                    }));
                }
            }
        }
    }
    Ok(SuiteOutcome {
        passed: all_ok,
        record: json!({ "suite": "intercone", "certificates": records }),
    })
}

fn suite_hasse_reg(ns: &[usize], qs: &[u64]) -> Result<SuiteOutcome> {
    let mut records = Vec::new();
    let mut all_ok = true;
    for &n in ns {
        for &q in qs {
            let g = build_gl(n - 1, 1, q, Sigma::Identity)?;
            let system = unitary_n1::zsmall_separating_system(&g)?;
            for zs in enumerate_zsmall(n) {
                let inter = weightcones::intersection_cone(&g, &system, &zs.elt)?;
                let hasse = weightcones::hasse_cone(&g, &zs.elt, true)?;
                let equal = inter.cone_eq(&hasse)?;
                all_ok &= equal;
                records.push(json!({
                    "n": n, "q": q, "w": zs.composition, "equal": equal,
                }));
            }
        }
    }
    Ok(SuiteOutcome {
        passed: all_ok,
        record: json!({ "suite": "hasse-reg", "strata": records }),
    })
}

fn suite_lmin_eq(ns: &[usize], qs: &[u64]) -> Result<SuiteOutcome> {
    let mut records = Vec::new();
    let mut all_ok = true;
    for &n in ns {
        for &q in qs {
            let g = build_gl(n - 1, 1, q, Sigma::Identity)?;
            let lmin = weightcones::lmin_cone(&g)?;
            let cf = unitary_n1::cfmin_cone(n, q)?;
            let dom = weightcones::named_cone(&g, &NamedCone::LeviDominant)?;
            let verbatim = lmin.cone_eq(&cf)?;
            let lmin_dom = lmin.intersect(&dom)?;
            let orb_dom = weightcones::orb_cone(&g)?.intersect(&dom)?;
            let box_eq = oracle::cone_box_compare(&lmin_dom, &orb_dom, 6)?.equal;
            all_ok &= verbatim && box_eq;
            records.push(json!({
                "n": n, "q": q,
                "lmin_equals_cfmin": verbatim,
                "lmin_equals_orb_on_dominant_box": box_eq,
            }));
        }
    }
    Ok(SuiteOutcome {
        passed: all_ok,
        record: json!({ "suite": "lmin-eq", "cases": records }),
    })
}

fn suite_minset(ns: &[usize]) -> Result<SuiteOutcome> {
    let mut records = Vec::new();
    let mut all_ok = true;
    for &n in ns {
        for r in 1..n {
            let g = build_gl(r, n - r, 2, Sigma::Identity)?;
            let reps = weyl::min_coset_reps(&g, &g.levi_set, weyl::CosetSide::Right);
            let mut images = std::collections::BTreeSet::new();
            let mut lminimal = true;
            for w in &reps {
                let ms = weyl::min_set(&g, w)?;
                let set: std::collections::BTreeSet<usize> = ms.into_iter().collect();
                lminimal &= weightcones::is_lminimal(&g, &set);
                images.insert(set);
            }
            let orbit = &weyl::orbits(&g)[0];
            let all_minimal = weightcones::lminimal_subsets(&g, orbit)?;
            let injective = images.len() == reps.len();
            let surjective = images.len() == all_minimal.len();
            let binom = binomial(n, r);
            let ok = injective && surjective && lminimal && reps.len() == binom;
            all_ok &= ok;
            records.push(json!({
                "n": n, "r": r, "wi_count": reps.len(), "binomial": binom,
                "injective": injective, "image_is_all_lminimal": surjective,
            }));
        }
    }
    Ok(SuiteOutcome {
        passed: all_ok,
        record: json!({ "suite": "minset", "cases": records }),
    })
}

fn binomial(n: usize, r: usize) -> usize {
    let mut acc = 1usize;
    for t in 0..r {
        acc = acc * (n - t) / (t + 1);
    }
    acc
}

fn suite_shapes(ns: &[usize]) -> Result<SuiteOutcome> {
    let mut records = Vec::new();
    let mut all_ok = true;
    for &n in ns {
        let g = build_gl(n - 1, 1, 2, Sigma::Identity)?;
        let z = weyl::z_element(&g);
        let brute = weyl::enumerate_weyl(&g)
            .into_iter()
            .filter(|w| weyl::bruhat_leq(&g, w, &z))
            .count();
        let listed = enumerate_zsmall(n);
        let census_ok = brute == (1 << (n - 1)) && listed.len() == brute;
        let mut admits_all = true;
        let mut sqrt_free = 0usize;
        for zs in &listed {
            let rep = unitary_n1::shape_test(&g, &zs.elt);
            admits_all &= rep.admits_partial_hasse_system;
            if !rep.has_sqrt_shape {
                sqrt_free += 1;
            }
        }
        let mut path_v_free = true;
        for step in unitary_n1::aux_path(n, 2)? {
            path_v_free &= !unitary_n1::shape_test(&g, &step.element).has_v_shape;
        }
        all_ok &= census_ok && admits_all && path_v_free;
        records.push(json!({
            "n": n,
            "census": listed.len(),
            "census_matches_bruhat": census_ok,
            "all_admit_system": admits_all,
            "sqrt_shape_free": sqrt_free,
            "path_v_shape_free": path_v_free,
        }));
    }
    Ok(SuiteOutcome {
        passed: all_ok,
        record: json!({ "suite": "shapes", "cases": records }),
    })
}

fn run_command(cmd: Command) -> Result<i32> {
    match cmd {
        Command::Cone {
            group,
            name,
            w,
            out,
        } => {
            let g = group.build()?;
            let welt = w.as_deref().map(|s| parse_window(s, &g)).transpose()?;
            let cone = resolve_cone(&g, &name, welt.as_ref())?;
            let v = cone_json(&g, &name, &cone)?;
            if out == "json" {
                println!("{}", serde_json::to_string_pretty(&v).unwrap());
            } else {
                for line in v["inequalities"].as_array().unwrap() {
                    println!("{}", line.as_str().unwrap());
                }
            }
            Ok(0)
        }
        Command::Member {
            group,
            name,
            w,
            lambda,
        } => {
            let g = group.build()?;
            let lam = parse_lambda(&lambda, g.n)?;
            let welt = w.as_deref().map(|s| parse_window(s, &g)).transpose()?;
            let member = match name.as_str() {
                "unip" => weightcones::unip_member(&g, &lam)?,
                "orb" => weightcones::orb_cone_member(&g, &lam)?,
                other => resolve_cone(&g, other, welt.as_ref())?.member(&lam)?,
            };
            let v = json!({
                "schema": 1,
                "group": g.to_json(),
                "name": name,
                "lambda": lam.coords,
                "member": member,
            });
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
            Ok(0)
        }
        Command::Include {
            group,
            from,
            to,
            from_w,
            to_w,
        } => {
            let g = group.build()?;
            let fw = from_w.as_deref().map(|s| parse_window(s, &g)).transpose()?;
            let tw = to_w.as_deref().map(|s| parse_window(s, &g)).transpose()?;
            let c1 = resolve_cone(&g, &from, fw.as_ref())?;
            let c2 = resolve_cone(&g, &to, tw.as_ref())?;
            let outcome = c1.includes_into(&c2)?;
            let v = match &outcome {
                IncludeOutcome::Included(certs) => {
                    let h1 = c1.hform_functionals()?;
                    let certs_json: Vec<serde_json::Value> = certs
                        .iter()
                        .map(|c| {
                            json!({
                                "target": c.target.pretty("k"),
                                "combination": c.combination.iter()
                                    .map(|(i, r)| json!([i, r.to_string()]))
                                    .collect::<Vec<_>>(),
                                "verified": c.verify(&h1),
                            })
                        })
                        .collect();
                    json!({
                        "schema": 1,
                        "group": g.to_json(),
                        "from": from, "to": to,
                        "included": true,
                        "certificates": certs_json,
                    })
                }
                IncludeOutcome::CounterRay(ray) => json!({
                    "schema": 1,
                    "group": g.to_json(),
                    "from": from, "to": to,
                    "included": false,
                    "counterexample_ray": ray.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                }),
            };
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
            Ok(0)
        }
        Command::Strata { n, q } => {
            let g = build_gl(n - 1, 1, q, Sigma::Identity)?;
            let mut items = Vec::new();
            for zs in enumerate_zsmall(n) {
                let e_w: Vec<[usize; 2]> = zs
                    .block_lower_roots()
                    .into_iter()
                    .flatten()
                    .map(|(a, b)| [a, b])
                    .collect();
                let in_wi = weyl::is_in_wi(&g, &zs.elt);
                let min_data: Option<Vec<Vec<i64>>> = if in_wi {
                    Some(
                        weyl::min_set(&g, &zs.elt)?
                            .into_iter()
                            .map(|k| g.pos_roots[k].vec.clone())
                            .collect(),
                    )
                } else {
                    None
                };
                items.push(json!({
                    "composition": zs.composition,
                    "window": zs.elt.to_string(),
                    "length": weyl::length(&zs.elt),
                    "e_w": e_w,
                    "gamma_window": zs.gamma.to_string(),
                    "in_wi": in_wi,
                    "min_set": min_data,
                }));
            }
            let v = json!({
                "schema": 1,
                "group": g.to_json(),
                "zsmall": items,
            });
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
            Ok(0)
        }
        Command::Path { n, q } => {
            let g = build_gl(n - 1, 1, q, Sigma::Identity)?;
            let steps: Vec<serde_json::Value> = unitary_n1::aux_path(n, q)?
                .into_iter()
                .map(|s| {
                    json!({
                        "d": s.d,
                        "i": s.i,
                        "window": s.element.to_string(),
                        "length": weyl::length(&s.element),
                        "chi": s.chi.map(|c| c.coords),
                        "ha_weight": s.ha_weight.map(|c| c.coords),
                    })
                })
                .collect();
            let v = json!({
                "schema": 1,
                "group": g.to_json(),
                "path": steps,
            });
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
            Ok(0)
        }
        Command::Verify { suite, n, nmax, qs } => {
            let qs = parse_qs(&qs)?;
            let ns: Vec<usize> = match (n, nmax) {
                (Some(n), _) => vec![n],
                (None, Some(m)) => (3..=m).collect(),
                (None, None) => vec![3, 4],
            };
            let outcome = match suite.as_str() {
                "intercone" => suite_intercone(&ns, &qs)?,
                "hasse-reg" => suite_hasse_reg(&ns, &qs)?,
                "lmin-eq" => suite_lmin_eq(&ns, &qs)?,
                "minset" => suite_minset(&ns)?,
                "shapes" => suite_shapes(&ns)?,
                other => return Err(Error::Usage(format!("unknown suite {other}"))),
            };
            let v = json!({
                "schema": 1,
                "passed": outcome.passed,
                "report": outcome.record,
            });
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
            Ok(if outcome.passed { 0 } else { 1 })
        }
        Command::Sweep {
            group,
            bound,
            pmax,
        } => {
            let g = group.build()?;
            let threshold = oracle::sweep_threshold(&g, bound);
            eprintln!("soundness threshold p* = {threshold}; running primes up to {pmax}");
            let rep = oracle::asymptotic_sweep(&g, bound, pmax)?;
            let v = json!({
                "schema": 1,
                "group": g.to_json(),
                "threshold": rep.threshold,
                "pmax": rep.pmax,
                "primes": rep.primes,
                "box": bound,
                "equal": rep.report.equal,
                "count_intersection": rep.report.count_first,
                "count_gs": rep.report.count_second,
                "witness": rep.report.witness_first_not_second,
            });
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
            Ok(if rep.report.equal { 0 } else { 1 })
        }
        Command::Slice {
            group,
            name,
            w,
            basis,
            offset,
            bound,
            out,
        } => {
            let g = group.build()?;
            let welt = w.as_deref().map(|s| parse_window(s, &g)).transpose()?;
            let cone = resolve_cone(&g, &name, welt.as_ref())?;
            let parts: Vec<&str> = basis.split(':').collect();
            if parts.len() != 2 {
                return Err(Error::Usage("basis must be two weights 'v1:v2'".into()));
            }
            let b1 = parse_lambda(parts[0], g.n)?;
            let b2 = parse_lambda(parts[1], g.n)?;
            let off = if offset.is_empty() {
                Character::zero(g.n)
            } else {
                parse_lambda(&offset, g.n)?
            };
            let grid = cone.slice(&b1, &b2, &off, bound)?;
            if out == "csv" {
                println!("i,j,flag");
                for (i, j, m) in grid {
                    println!("{i},{j},{}", if m { 1 } else { 0 });
                }
            } else {
                let rows: Vec<serde_json::Value> =
                    grid.iter().map(|(i, j, m)| json!([i, j, m])).collect();
                let v = json!({
                    "schema": 1,
                    "group": g.to_json(),
                    "name": name,
                    "box": bound,
                    "grid": rows,
                });
                println!("{}", serde_json::to_string_pretty(&v).unwrap());
            }
            Ok(0)
        }
    }
}

/// Entry point used by the binary: returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run_command(cli.command) {
        Ok(code) => code,
        Err(Error::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            2
        }
        Err(e) => {
            eprintln!("error: {e}");
            let v = json!({ "schema": 1, "error": e.to_string() });
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
            1
        }
    }
}

/// Test-friendly dispatch of an argv list.
pub fn dispatch_args<I, T>(args: I) -> Result<i32>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| Error::Usage(e.to_string()))?;
    run_command(cli.command)
}
