//! Reference table: every published number this crate reproduces, grouped by
//! topic. Each check compares exactly; a build error counts as a failure.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::anyon::{check_tunneling, dz_automorphism, isomorphism, spin_fraction, z4_ds_wall, z4_invertible_walls, AnyonTheory, TunnelingMatrix};
use crate::condense::{run_condensation, CondensationJob};
use crate::degeneracy::{
    class_signature, gsd_absolute, gsd_bruteforce, gsd_ledger, gsd_update, logical_generators, logical_on, min_support_per_class, qubits_per_qudit,
    BRUTE_FORCE_CAP,
};
use crate::error::Result;
use crate::group::same_group;
use crate::lattice::{Lattice, LatticeSpec, Region};
use crate::model::{build_model, Boundary, ModelKind, StabilizerModel};
use crate::pants::{build_standard_network, contract, Scenario};
use crate::scenarios::*;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub group: u8,
    pub name: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

impl Check {
    fn eq(group: u8, name: impl Into<String>, expected: impl ToString, got: Result<impl ToString>) -> Check {
        let expected = expected.to_string();
        let (got, pass) = match got {
            Ok(v) => {
                let v = v.to_string();
                let pass = v == expected;
                (v, pass)
            }
            Err(e) => (format!("error: {e}"), false),
        };
        Check { group, name: name.into(), expected, got, pass }
    }
}

pub const GROUPS: [(u8, &str); 9] = [
    (1, "ground-state degeneracy table"),
    (2, "oracle agreement"),
    (3, "Lagrangian subgroups"),
    (4, "anyon condensation"),
    (5, "boundaries and walls by condensation"),
    (6, "tunneling matrices and pants networks"),
    (7, "slab code distance"),
    (8, "topological completeness"),
    (9, "two-rough cylinder"),
];

/// Run the selected groups (all when `groups` is empty).
pub fn run(groups: &[u8]) -> Vec<Check> {
    let want = |g: u8| groups.is_empty() || groups.contains(&g);
    let mut out = Vec::new();
    let table: [(u8, fn() -> Vec<Check>); 9] = [
        (1, gsd_table),
        (2, oracles),
        (3, lagrangians),
        (4, condensed_theories),
        (5, pipeline_boundaries),
        (6, tunneling),
        (7, slab),
        (8, completeness),
        (9, cylinder),
    ];
    for (g, f) in table {
        if want(g) {
            out.extend(f());
        }
    }
    out
}

fn gsd(b: Result<Built>) -> Result<BigUint> {
    gsd_absolute(&b?.model)
}

fn pow(b: u64, e: u32) -> BigUint {
    BigUint::from(b).pow(e)
}

/// The degeneracy table. `4^{(N+3)/2}` is `2^{N+3}`.
pub fn table_entries() -> Vec<(String, BigUint, fn() -> Result<Built>)> {
    vec![
        ("disk, smooth + rough, d=2".into(), pow(2, 0), || disk_smooth_rough(2, 3)),
        ("surface code, d=2".into(), pow(2, 1), || surface_code(2, 3)),
        ("torus, d=2".into(), pow(2, 2), || zd_torus(2, 3, 3)),
        ("1 contractible twist".into(), pow(2, 2), || n_twists(1)),
        ("2 twists".into(), pow(2, 3), || n_twists(2)),
        ("3 twists".into(), pow(2, 4), || n_twists(3)),
        ("4 twists".into(), pow(2, 5), || n_twists(4)),
        ("non-contractible twist".into(), pow(2, 1), || twist_torus(2, 4, &[], true, 1)),
        ("torus, d=4".into(), pow(4, 2), || zd_torus(4, 3, 3)),
        ("Z4 + 1 DS patch".into(), pow(2, 4), || ds_patches(1)),
        ("Z4 + 2 DS patches".into(), pow(2, 5), || ds_patches(2)),
        ("Z4 + 3 DS patches".into(), pow(2, 6), || ds_patches(3)),
        ("half Z4 / half DS torus".into(), pow(2, 3), || half_z4_ds_torus(6, 3)),
        ("half Z4 / half DS torus, folded".into(), pow(2, 3), || half_z4_ds_torus_folded(6, 3)),
        ("1 smooth hole".into(), pow(4, 0), || holes(4, 1, Boundary::Smooth)),
        ("2 smooth holes".into(), pow(4, 1), || holes(4, 2, Boundary::Smooth)),
        ("3 smooth holes".into(), pow(4, 2), || holes(4, 3, Boundary::Smooth)),
        ("1 even hole".into(), pow(4, 0), || holes(4, 1, Boundary::Even)),
        ("2 even holes".into(), pow(4, 1), || holes(4, 2, Boundary::Even)),
        ("3 even holes".into(), pow(4, 2), || holes(4, 3, Boundary::Even)),
    ]
}

fn gsd_table() -> Vec<Check> {
    table_entries().into_iter().map(|(name, want, f)| Check::eq(1, format!("GSD {name}"), want, gsd(f()))).collect()
}

/// Models small enough for the brute-force trace, with their lattices.
fn small_models() -> Vec<(String, Result<Built>)> {
    let mut v: Vec<(String, Result<Built>)> = Vec::new();
    for (d, w, h) in [(2, 1, 1), (2, 2, 2), (2, 3, 2), (3, 2, 2), (4, 1, 1), (4, 2, 2)] {
        v.push((format!("D(Z{d}) torus {w}x{h}"), zd_torus(d, w, h)));
    }
    v.push(("surface code d=2 2x2".into(), surface_code(2, 2)));
    v.push(("surface code d=2 3x3".into(), surface_code(2, 3)));
    v.push(("disk smooth + rough d=2 3x3".into(), disk_smooth_rough(2, 3)));
    v.push(("surface code d=4 2x2".into(), surface_code(4, 2)));
    v.push(("two-rough cylinder d=2 3x3".into(), cylinder_two_rough(2, 3, 3)));
    v.push(("DS torus 2x2".into(), build_model(ModelKind::DsBulk, LatticeSpec::torus(2, 2)).map(|m| Built { model: m, steps: vec![] })));
    v.push(("Z4 torus 2x2, one DS cell".into(), one_cell(4, (2, 2), &[(2, 2)])));
    v.push(("D(Z2) torus 3x2, rough hole".into(), one_cell(2, (3, 2), &[(1, 0)])));
    v.push(("D(Z2) torus 3x2, smooth hole".into(), one_cell(2, (3, 2), &[(0, 1)])));
    v
}

/// Torus with the closed cell `(0, 0)` condensed.
fn one_cell(d: i64, (w, h): (usize, usize), labels: &[(i64, i64)]) -> Result<Built> {
    let spec = LatticeSpec::torus(w, h);
    let lat = Lattice::build(spec)?;
    let z = build_model(ModelKind::ZdBulk { d }, spec)?;
    let job = CondensationJob::on_lattice(z, &lat, Region::from_edges(block(&lat, 0, 0, 1)), labels);
    let out = run_condensation(&job)?;
    Ok(Built { model: out.model.clone(), steps: vec![(job.model, out.model, out.delta)] })
}

fn hilbert_ok(m: &StabilizerModel) -> bool {
    (m.d as f64).powi(m.num_qudits() as i32) <= BRUTE_FORCE_CAP as f64
}

fn oracles() -> Vec<Check> {
    let mut out = Vec::new();
    let mut all: Vec<(String, Result<Built>)> = small_models();
    all.extend(table_entries().into_iter().map(|(n, _, f)| (n, f())));
    for (name, b) in all {
        let b = match b {
            Ok(b) => b,
            Err(e) => {
                out.push(Check::eq(2, format!("build {name}"), "ok", Err::<String, _>(e)));
                continue;
            }
        };
        let abs = gsd_absolute(&b.model);
        let abs_s = abs.as_ref().map(|g| g.to_string()).unwrap_or_else(|e| format!("error: {e}"));
        if hilbert_ok(&b.model) {
            out.push(Check::eq(2, format!("trace = SNF, {name}"), &abs_s, gsd_bruteforce(&b.model)));
        }
        out.push(Check::eq(2, format!("counting = SNF, {name}"), &abs_s, gsd_ledger(&b.model)));
        for (k, (before, after, delta)) in b.steps.iter().enumerate() {
            let want = gsd_absolute(after).map(|g| g.to_string()).unwrap_or_else(|e| format!("error: {e}"));
            let got = gsd_absolute(before).and_then(|g| gsd_update(&g, delta));
            out.push(Check::eq(2, format!("update = SNF, {name}, step {}", k + 1), want, got));
        }
    }
    out
}

fn lagrangians() -> Vec<Check> {
    [("D(Z4)", AnyonTheory::dz(4), 3), ("DS", AnyonTheory::double_semion(), 1), ("D(Z2)", AnyonTheory::dz(2), 2)]
        .into_iter()
        .map(|(n, t, k)| Check::eq(3, format!("Lagrangian subgroups of {n}"), k, Ok(t.enumerate_lagrangian().len())))
        .chain(std::iter::once({
            let ds = AnyonTheory::double_semion();
            let got = ds.enumerate_lagrangian().first().map(|s| ds.subgroup_names(s).join(",")).unwrap_or_default();
            Check::eq(3, "DS Lagrangian subgroup", "1,b", Ok(got))
        }))
        .collect()
}

fn spins(t: &AnyonTheory) -> String {
    let mut v: Vec<(i64, i64)> = (0..t.len()).map(|a| spin_fraction(t, a)).collect();
    v.sort();
    v.iter().map(|(n, d)| if *n == 0 { "0".to_string() } else { format!("{n}/{d}") }).collect::<Vec<_>>().join(" ")
}

fn condensed_theories() -> Vec<Check> {
    let z = AnyonTheory::dz(4);
    let mut out = Vec::new();
    match z.subgroup_from_labels(&["1", "e2m2"]).and_then(|c| z.condense(&c)) {
        Ok((q, _)) => {
            out.push(Check::eq(4, "D(Z4)/{1,e2m2} size", 4, Ok(q.len())));
            // spins as fractions of a turn: 1, i, -i, 1
            out.push(Check::eq(4, "D(Z4)/{1,e2m2} spins", "0 0 1/4 3/4", Ok(spins(&q))));
            out.push(Check::eq(4, "D(Z4)/{1,e2m2} is DS", true, Ok(isomorphism(&q, &AnyonTheory::double_semion()).is_some())));
        }
        Err(e) => out.push(Check::eq(4, "D(Z4)/{1,e2m2}", "ok", Err::<String, _>(e))),
    }
    match z.subgroup_from_labels(&["1", "e2"]).and_then(|c| z.condense(&c)) {
        Ok((q, _)) => {
            out.push(Check::eq(4, "D(Z4)/{1,e2} size", 4, Ok(q.len())));
            out.push(Check::eq(4, "D(Z4)/{1,e2} is D(Z2)", true, Ok(isomorphism(&q, &AnyonTheory::dz(2)).is_some())));
        }
        Err(e) => out.push(Check::eq(4, "D(Z4)/{1,e2}", "ok", Err::<String, _>(e))),
    }
    out
}

fn same(a: &StabilizerModel, b: &StabilizerModel) -> Result<bool> {
    Ok(a.qudits == b.qudits && a.group_order()? == b.group_order()? && same_group(a.d, a.ops(), b.ops())?)
}

fn pipeline_boundaries() -> Vec<Check> {
    let mut out = Vec::new();
    for (name, case) in [
        ("smooth", BoundaryCase::Zd(Boundary::Smooth)),
        ("rough", BoundaryCase::Zd(Boundary::Rough)),
        ("even", BoundaryCase::Zd(Boundary::Even)),
        ("DS", BoundaryCase::DoubleSemion),
    ] {
        let r = boundary_pair(case, 3, 3).and_then(|(b, hand)| same(&b.model, &hand));
        out.push(Check::eq(5, format!("{name} boundary by condensation = hand-built"), true, r));
    }
    for (w, h) in [(4, 3), (6, 3), (6, 4), (8, 3)] {
        let r = half_z4_ds_torus_folded(w, h).and_then(|f| same(&f.model, &half_z4_ds_torus(w, h)?.model));
        out.push(Check::eq(5, format!("Z4/DS walls folded = direct, {w}x{h}"), true, r));
    }
    out
}

fn em_wall_z2() -> TunnelingMatrix {
    TunnelingMatrix::from_permutation(&AnyonTheory::dz(2), &dz_automorphism(2, (0, 1), (1, 0)))
}

fn tunneling() -> Vec<Check> {
    let z = AnyonTheory::dz(4);
    let ds = AnyonTheory::double_semion();
    let z2 = AnyonTheory::dz(2);
    let mut out = Vec::new();
    let w = match z4_ds_wall() {
        Ok(w) => w,
        Err(e) => return vec![Check::eq(6, "Z4 -> DS wall", "ok", Err::<String, _>(e))],
    };
    out.push(Check::eq(6, "Z4 -> DS wall is a valid tunneling matrix", true, check_tunneling(&w, &z, &ds)));
    for (n, p) in z4_invertible_walls() {
        out.push(Check::eq(6, format!("Z4 wall {n} is a valid tunneling matrix"), true, check_tunneling(&TunnelingMatrix::from_permutation(&z, &p), &z, &z)));
    }
    let em = em_wall_z2();
    let net = |s: Scenario| build_standard_network(&s).and_then(|n| contract(&n));
    out.push(Check::eq(6, "Tr(W^{e<->m}) by matrix", 2, Ok(em.trace())));
    let twisted = net(Scenario::TorusWithWalls { theories: vec![z2.clone()], walls: vec![TunnelingMatrix::identity(&z2), em.clone()] });
    out.push(Check::eq(6, "Tr(W^{e<->m}) by contraction", 2, twisted.clone()));
    out.push(Check::eq(6, "Tr(W W^T) by matrix", 8, w.compose(&w.transpose()).map(|m| m.trace())));
    let half = net(Scenario::TorusWithWalls { theories: vec![z.clone(), ds.clone()], walls: vec![w.clone(), w.transpose()] });
    out.push(Check::eq(6, "Tr(W W^T) by contraction", 8, half.clone()));
    let plain = net(Scenario::TorusWithWalls { theories: vec![z.clone()], walls: vec![TunnelingMatrix::identity(&z), TunnelingMatrix::identity(&z)] });
    out.push(Check::eq(6, "transparent torus D(Z4)", 16, plain.clone()));
    let mut patches = BTreeMap::new();
    for n in 1..=4usize {
        let r = net(Scenario::TorusWithPatches { bulk: z.clone(), patch: ds.clone(), wall: w.clone(), n });
        out.push(Check::eq(6, format!("{n}-patch network"), 16u64 << (n - 1), r.clone()));
        patches.insert(n, r);
    }
    let smooth = z.subgroup_from_labels(&["1", "m", "m2", "m3"]).map(|l| TunnelingMatrix::boundary(&z, &l));
    let mut capped = BTreeMap::new();
    match smooth {
        Ok(b) => {
            out.push(Check::eq(6, "smooth boundary wall is valid", true, check_tunneling(&b, &AnyonTheory::trivial(), &z)));
            for n in 1..=3usize {
                capped.insert(n, net(Scenario::CappedPatches { bulk: z.clone(), patch: ds.clone(), wall: w.clone(), boundary: b.clone(), n }));
            }
            out.push(Check::eq(6, "two patches in a smooth disk, network", 2, capped[&2].clone()));
        }
        Err(e) => out.push(Check::eq(6, "smooth boundary wall", "ok", Err::<String, _>(e))),
    }
    // the same surfaces on the lattice
    let lattice = |name: &str, net: Result<BigUint>, b: Result<Built>| {
        let want = match net {
            Ok(v) => v.to_string(),
            Err(e) => format!("error: {e}"),
        };
        Check::eq(6, format!("network = lattice, {name}"), want, gsd(b))
    };
    out.push(lattice("twisted D(Z2) torus", twisted, twist_torus(2, 4, &[], true, 1)));
    out.push(lattice("half Z4 / half DS torus", half, half_z4_ds_torus(6, 3)));
    out.push(lattice("D(Z4) torus", plain, zd_torus(4, 3, 3)));
    for (n, r) in patches {
        out.push(lattice(&format!("{n} DS patches"), r, ds_patches(n)));
    }
    for (n, r) in capped {
        out.push(lattice(&format!("{n} DS patches in a smooth disk"), r, ds_patches_in_smooth_disk(n)));
    }
    out
}

/// Weight in qubits of the lightest member of `op`'s class, searching
/// connected supports up to `cap` qudits.
pub fn class_weight(model: &StabilizerModel, op: &crate::pauli::PauliOp, cap: usize) -> Result<Option<usize>> {
    let (logicals, best) = min_support_per_class(model, cap)?;
    let sig = class_signature(&logicals, op)?;
    Ok(best.get(&sig).map(|w| w * qubits_per_qudit(model.d)))
}

fn slab() -> Vec<Check> {
    let mut out = Vec::new();
    // smallest square with 2 < 3N/8 and a Z4 gap between the slabs
    let n = 6;
    match ds_slab(n, 2) {
        Ok(b) => {
            out.push(Check::eq(7, format!("slab N={n}: logical qubits"), 2, gsd_absolute(&b.model)));
            let s = slab_vertical_string(n, n as i32 / 2);
            out.push(Check::eq(
                7,
                format!("slab N={n}: certified d_Z = 2N"),
                2 * n,
                class_weight(&b.model, &s, n).map(|w| w.map_or("none".into(), |w| w.to_string())),
            ));
        }
        Err(e) => out.push(Check::eq(7, format!("slab N={n}"), "ok", Err::<String, _>(e))),
    }
    let (n, cap) = (8, 5);
    match ds_slab(n, 2) {
        Ok(b) => {
            let s = slab_vertical_string(n, n as i32 / 2);
            let upper = logical_generators(&b.model).map(|l| {
                let commutes = b.model.ops().iter().all(|g| g.commutes_with(&s));
                let nontrivial = l.iter().any(|x| !x.commutes_with(&s));
                if commutes && nontrivial {
                    (s.weight() * qubits_per_qudit(4)).to_string()
                } else {
                    "not a logical".into()
                }
            });
            out.push(Check::eq(7, format!("slab N={n}: upper bound d_Z <= 2N from an explicit string"), 2 * n, upper));
            let lower = class_weight(&b.model, &s, cap).map(|w| match w {
                None => format!("> {}", cap * qubits_per_qudit(4)),
                Some(w) => w.to_string(),
            });
            out.push(Check::eq(7, format!("slab N={n}: lower bound beyond cap {cap} qudits"), format!("> {}", cap * qubits_per_qudit(4)), lower));
        }
        Err(e) => out.push(Check::eq(7, format!("slab N={n}"), "ok", Err::<String, _>(e))),
    }
    out
}

/// Condensed models on lattices of side at most 4 where every 2x2 box is a
/// disk of the surface. Tori with smooth or even holes or with walls, and
/// strips between two boundaries three rows apart, are left out: there a
/// closed 2x2 box spans three of four rows and, together with the defect,
/// closes a non-contractible path that carries a genuine logical.
pub fn small_condensed() -> Vec<(String, LatticeSpec, Result<Built>)> {
    // open sides only remove edges, so the smooth disk covers every qudit
    let disk = LatticeSpec::disk(4, 4);
    vec![
        ("Z4 torus 4x4, one DS cell".into(), LatticeSpec::torus(4, 4), one_cell(4, (4, 4), &[(2, 2)])),
        ("Z4 torus 4x4, condensed to DS everywhere".into(), LatticeSpec::torus(4, 4), everywhere(4, 4, &[(2, 2)])),
        ("Z4 torus 4x4, condensed to D(Z2) everywhere".into(), LatticeSpec::torus(4, 4), everywhere(4, 4, &[(2, 0)])),
        ("D(Z2) torus 4x4, rough cell".into(), LatticeSpec::torus(4, 4), one_cell(2, (4, 4), &[(1, 0)])),
        ("surface code d=2 4x4".into(), disk, surface_code(2, 4)),
        ("surface code d=4 4x4".into(), disk, surface_code(4, 4)),
        ("disk smooth + rough d=4 4x4".into(), disk, disk_smooth_rough(4, 4)),
    ]
}

/// `D(Z_d)` torus with every edge condensed.
fn everywhere(d: i64, n: usize, labels: &[(i64, i64)]) -> Result<Built> {
    let spec = LatticeSpec::torus(n, n);
    let lat = Lattice::build(spec)?;
    let z = build_model(ModelKind::ZdBulk { d }, spec)?;
    let job = CondensationJob::on_lattice(z, &lat, Region::from_edges(lat.edges()), labels);
    let out = run_condensation(&job)?;
    Ok(Built { model: out.model.clone(), steps: vec![(job.model, out.model, out.delta)] })
}

fn completeness() -> Vec<Check> {
    let mut out = Vec::new();
    for (name, spec, b) in small_condensed() {
        let r = (|| -> Result<String> {
            let b = b?;
            let lat = Lattice::build(spec)?;
            let logicals = logical_generators(&b.model)?;
            let (xs, ys) = (if spec.wrap_x { 0..lat.width() } else { 0..lat.width() - 1 }, if spec.wrap_y { 0..lat.height() } else { 0..lat.height() - 1 });
            for x in xs {
                for y in ys.clone() {
                    let disk = Region::edges_in_box(&lat, x, y, x + 2, y + 2);
                    if let Some(p) = logical_on(&b.model, &logicals, &disk) {
                        return Ok(format!("logical {p} in the 2x2 disk at ({x},{y})"));
                    }
                }
            }
            Ok("none".into())
        })();
        out.push(Check::eq(8, format!("no logical in any 2x2 disk, {name}"), "none", r));
    }
    out
}

fn cylinder() -> Vec<Check> {
    let b = cylinder_two_rough(2, 3, 3);
    vec![
        Check::eq(9, "two-rough cylinder, SNF", 2, b.as_ref().map_err(|e| e.clone()).and_then(|b| gsd_absolute(&b.model))),
        Check::eq(9, "two-rough cylinder, trace", 2, b.as_ref().map_err(|e| e.clone()).and_then(|b| gsd_bruteforce(&b.model))),
    ]
}
