//! Programmatic builders for the standard small models: boundaries, holes,
//! twists, double-semion patches and the Z4 / double-semion wall.

use std::collections::BTreeSet;

use crate::condense::{run_condensation, CondensationJob, CondensationOutput, Periods};
use crate::degeneracy::DeltaRecord;
use crate::error::{Error, Result};
use crate::fold::{fold, layout_ribbons, run_fold_condensation, unfold_and_stitch, Fold, Gluing};
use crate::lattice::{Lattice, LatticeSpec, Region};
use crate::model::{build_model, Boundary, ModelKind, StabilizerModel};
use crate::pauli::{Orient, Qudit};

/// Labels condensed by each boundary type.
pub fn boundary_labels(b: Boundary) -> Vec<(i64, i64)> {
    match b {
        Boundary::Smooth => vec![(0, 1)],
        Boundary::Rough => vec![(1, 0)],
        Boundary::Even => vec![(2, 0), (0, 2)],
    }
}

/// A model together with the condensation steps that produced it.
#[derive(Clone, Debug)]
pub struct Built {
    pub model: StabilizerModel,
    /// `(before, after, delta)` for every condensation run.
    pub steps: Vec<(StabilizerModel, StabilizerModel, DeltaRecord)>,
}

impl Built {
    fn plain(model: StabilizerModel) -> Built {
        Built { model, steps: Vec::new() }
    }

    fn step(&mut self, before: StabilizerModel, out: &CondensationOutput) {
        self.steps.push((before, out.model.clone(), out.delta.clone()));
    }
}

pub fn zd_torus(d: i64, w: usize, h: usize) -> Result<Built> {
    Ok(Built::plain(build_model(ModelKind::ZdBulk { d }, LatticeSpec::torus(w, h))?))
}

/// Open square with the given sides.
pub fn zd_disk(d: i64, n: usize, left: Boundary, right: Boundary, bottom: Boundary, top: Boundary) -> Result<Built> {
    let kind = ModelKind::ZdWithBoundaries { d, left, right, bottom, top };
    Ok(Built::plain(build_model(kind, LatticeSpec::disk(n, n))?))
}

/// Rough left and right sides, smooth top and bottom.
pub fn surface_code(d: i64, n: usize) -> Result<Built> {
    zd_disk(d, n, Boundary::Rough, Boundary::Rough, Boundary::Smooth, Boundary::Smooth)
}

/// One rough side, the other three smooth: a single smooth and a single rough
/// boundary segment.
pub fn disk_smooth_rough(d: i64, n: usize) -> Result<Built> {
    zd_disk(d, n, Boundary::Rough, Boundary::Smooth, Boundary::Smooth, Boundary::Smooth)
}

/// Periodic in x, both open rows rough.
pub fn cylinder_two_rough(d: i64, w: usize, h: usize) -> Result<Built> {
    let kind = ModelKind::ZdWithBoundaries { d, left: Boundary::Smooth, right: Boundary::Smooth, bottom: Boundary::Rough, top: Boundary::Rough };
    Ok(Built::plain(build_model(kind, LatticeSpec::cylinder(w, h))?))
}

/// Edges inside the `k x k` block of cells with lower-left vertex `(x, y)`,
/// including the block's own boundary edges.
pub fn block(lat: &Lattice, x: i32, y: i32, k: i32) -> BTreeSet<Qudit> {
    let mut out = BTreeSet::new();
    for i in x..=x + k {
        for j in y..=y + k {
            if i < x + k {
                out.extend(lat.edge(Qudit::h(i, j)));
            }
            if j < y + k {
                out.extend(lat.edge(Qudit::v(i, j)));
            }
        }
    }
    out
}

/// A sphere with `n` holes of type `b`. The outer boundary is the first hole:
/// everything outside a `(4n) x 5` rectangle of a torus is condensed. The
/// other `n - 1` are condensed `2 x 2` blocks in a row.
pub fn holes(d: i64, n: usize, b: Boundary) -> Result<Built> {
    if n == 0 {
        return Err(Error::Incompatible("need at least one hole".into()));
    }
    let w = 4 * n as i32 + 3;
    let spec = LatticeSpec::torus(w as usize, 7);
    let lat = Lattice::build(spec)?;
    let labels = boundary_labels(b);
    let inside = Region::edges_in_box(&lat, 1, 1, w - 1, 6);
    let frame = Region::from_edges(lat.edges().filter(|e| !inside.contains(e)));
    let mut built = Built::plain(build_model(ModelKind::ZdBulk { d }, spec)?);
    let regions = std::iter::once(frame).chain((1..n as i32).map(|k| Region::from_edges(block(&lat, 4 * k - 1, 3, 2))));
    for region in regions {
        let job = CondensationJob::on_lattice(built.model.clone(), &lat, region, &labels);
        let out = run_condensation(&job)?;
        built.step(job.model, &out);
        built.model = out.model;
    }
    Ok(built)
}

/// Z4 torus with `n` double-semion patches, each a condensed `2 x 2` block of
/// cells, spaced 4 apart along the diagonal.
pub fn ds_patches(n: usize) -> Result<Built> {
    let side = 4 * n.max(3);
    let spec = LatticeSpec::torus(side, side);
    let lat = Lattice::build(spec)?;
    let mut built = Built::plain(build_model(ModelKind::ZdBulk { d: 4 }, spec)?);
    for k in 0..n as i32 {
        let region = Region::from_edges(block(&lat, 4 * k, 4 * k, 2));
        let job = CondensationJob::on_lattice(built.model.clone(), &lat, region, &[(2, 2)]);
        let out = run_condensation(&job)?;
        built.step(job.model, &out);
        built.model = out.model;
    }
    Ok(built)
}

/// Z4 disk with smooth sides and `n` double-semion patches (`2 x 2` blocks
/// in a row, two cells apart and away from the sides).
pub fn ds_patches_in_smooth_disk(n: usize) -> Result<Built> {
    let spec = LatticeSpec::disk(4 * n.max(1) + 1, 5);
    let lat = Lattice::build(spec)?;
    let kind = ModelKind::ZdWithBoundaries { d: 4, left: Boundary::Smooth, right: Boundary::Smooth, bottom: Boundary::Smooth, top: Boundary::Smooth };
    let mut built = Built::plain(build_model(kind, spec)?);
    for k in 0..n as i32 {
        let region = Region::from_edges(block(&lat, 4 * k + 1, 1, 2).into_iter().filter(|e| lat.edge_set().contains(e)));
        let job = CondensationJob::on_lattice(built.model.clone(), &lat, region, &[(2, 2)]);
        let out = run_condensation(&job)?;
        built.step(job.model, &out);
        built.model = out.model;
    }
    Ok(built)
}

/// Edges of the left half `0 <= x < w/2` of a torus: horizontal edges
/// starting there and vertical edges strictly inside.
fn left_half(lat: &Lattice) -> BTreeSet<Qudit> {
    let a = lat.width() / 2;
    lat.edges()
        .filter(|e| match e.orient {
            Orient::H => e.x < a,
            Orient::V => e.x >= 1 && e.x < a,
        })
        .collect()
}

/// Z4 torus whose left half is condensed to the double semion by `e^2 m^2`
/// short ribbons: two parallel Z4 / double-semion walls.
pub fn half_z4_ds_torus(w: usize, h: usize) -> Result<Built> {
    let spec = LatticeSpec::torus(w, h);
    let lat = Lattice::build(spec)?;
    let z = build_model(ModelKind::ZdBulk { d: 4 }, spec)?;
    let job = CondensationJob::on_lattice(z, &lat, Region::from_edges(left_half(&lat)), &[(2, 2)]);
    let out = run_condensation(&job)?;
    let mut built = Built::plain(out.model.clone());
    built.step(job.model, &out);
    Ok(built)
}

/// Same walls as [`half_z4_ds_torus`], derived by folding: the double semion
/// on layer 0, the Z4 half mirrored on layer 1, Bell pairs over the right half
/// condensed, then unfolded and stitched. Needs an even width.
pub fn half_z4_ds_torus_folded(w: usize, h: usize) -> Result<Built> {
    if !w.is_multiple_of(2) {
        return Err(Error::Incompatible("folding needs an even width".into()));
    }
    let spec = LatticeSpec::torus(w, h);
    let lat = Lattice::build(spec)?;
    let a = lat.width() / 2;
    let z = build_model(ModelKind::ZdBulk { d: 4 }, spec)?;
    let ds = build_model(ModelKind::DsBulk, spec)?;
    let f = Fold::on(&lat, a);
    let folded = fold(&ds, &z, f)?;
    let right: BTreeSet<Qudit> = lat
        .edges()
        .filter(|e| match e.orient {
            Orient::H => e.x >= a,
            Orient::V => e.x > a,
        })
        .collect();
    let glue = |_: Qudit| Gluing::Direct(-1);
    let ribbons = layout_ribbons(&folded, &lat, f, &right, &right, glue)?;
    let job = CondensationJob { periods: Periods::of(&lat), ..CondensationJob::new(folded, Region::from_edges(right), ribbons) };
    let out = run_fold_condensation(&job, &lat, f, glue)?;
    let mut built = Built::plain(unfold_and_stitch(&out.model, f)?);
    built.step(job.model, &out);
    Ok(built)
}

/// Folded Z_d torus of width 6 with e<->m twists of the given kind. Each
/// segment `(y0, y1)` cuts the fold line on the vertical edges `y0..=y1`;
/// `noncontractible` replaces the segments by a full line.
pub fn twist_torus(d: i64, h: usize, segments: &[(i32, i32)], noncontractible: bool, k: i64) -> Result<Built> {
    if noncontractible && h < 4 {
        return Err(Error::Incompatible("a non-contractible twist needs height at least 4".into()));
    }
    let spec = LatticeSpec::torus(6, h);
    let lat = Lattice::build(spec)?;
    let z = build_model(ModelKind::ZdBulk { d }, spec)?;
    let f = Fold::on(&lat, 3);
    let folded = fold(&z, &z, f)?;
    let inseg = |y: i32| segments.iter().any(|&(a, b)| y >= a && y <= b);
    let top: BTreeSet<Qudit> = lat.edges().filter(|e| e.x >= 4 || (e.x == 3 && e.orient == Orient::H)).collect();
    let bottom: BTreeSet<Qudit> = if noncontractible {
        lat.edges().filter(|e| e.x >= 3).collect()
    } else {
        lat.edges().filter(|e| e.x >= 4 || (e.x == 3 && (e.orient == Orient::H || inseg(e.y)))).collect()
    };
    let glue = |q: Qudit| {
        let twisted = if noncontractible { q.x == 3 || q.x == 4 } else { q.x == 3 && inseg(q.y) };
        if twisted {
            Gluing::Dual(k)
        } else {
            Gluing::Direct(-1)
        }
    };
    let ribbons = layout_ribbons(&folded, &lat, f, &bottom, &top, glue)?;
    let job = CondensationJob { periods: Periods::of(&lat), ..CondensationJob::new(folded, Region::from_edges(bottom), ribbons) };
    let out = run_fold_condensation(&job, &lat, f, glue)?;
    let mut built = Built::plain(unfold_and_stitch(&out.model, f)?);
    built.step(job.model, &out);
    Ok(built)
}

/// `n` contractible twists of length 2 on a d=2 torus.
pub fn n_twists(n: usize) -> Result<Built> {
    let segs: Vec<(i32, i32)> = (0..n as i32).map(|i| (3 * i, 3 * i + 1)).collect();
    twist_torus(2, (3 * n).max(3), &segs, false, 1)
}

/// Z4 square with smooth sides and `n` rows of horizontal edges (`n` cells
/// wide, `n - 1` high), with double-semion slabs of `s` columns condensed at
/// both ends. The vertical logical string crosses exactly `n` qudits.
pub fn ds_slab(n: usize, s: usize) -> Result<Built> {
    if n < 2 || 2 * s >= n {
        return Err(Error::Incompatible(format!("slabs of width {s} do not fit in a square of side {n}")));
    }
    let spec = LatticeSpec::disk(n, n - 1);
    let kind = ModelKind::ZdWithBoundaries { d: 4, left: Boundary::Smooth, right: Boundary::Smooth, bottom: Boundary::Smooth, top: Boundary::Smooth };
    let z = build_model(kind, spec)?;
    let lat = Lattice::build(spec)?;
    let (w, s) = (n as i32, s as i32);
    let slab: BTreeSet<Qudit> = lat
        .edges()
        .filter(|e| match e.orient {
            Orient::H => e.x < s || e.x >= w - s,
            Orient::V => e.x < s || e.x > w - s,
        })
        .collect();
    let job = CondensationJob::on_lattice(z, &lat, Region::from_edges(slab), &[(2, 2)]);
    let out = run_condensation(&job)?;
    let mut built = Built::plain(out.model.clone());
    built.step(job.model, &out);
    Ok(built)
}

/// The `m` string `X` on the horizontal edges of column `x` of a slab square,
/// running from the bottom side to the top side.
pub fn slab_vertical_string(n: usize, x: i32) -> crate::pauli::PauliOp {
    crate::pauli::PauliOp::from_sites(4, 0, (0..n as i32).map(|y| (Qudit::h(x, y), (1, 0))))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundaryCase {
    Zd(Boundary),
    DoubleSemion,
}

/// Condensed strip of width `w` on a `w x (h + 2)` torus next to the
/// hand-built cylinder of height `h` with the same boundary on both rows.
/// Rough and even strips also swallow the outer rows of horizontal edges.
pub fn boundary_pair(case: BoundaryCase, w: usize, h: usize) -> Result<(Built, StabilizerModel)> {
    let spec = LatticeSpec::torus(w, h + 2);
    let lat = Lattice::build(spec)?;
    let (bulk_kind, labels, rough, hand_kind) = match case {
        BoundaryCase::Zd(b) => {
            let kind = ModelKind::ZdWithBoundaries { d: 4, left: Boundary::Smooth, right: Boundary::Smooth, bottom: b, top: b };
            (ModelKind::ZdBulk { d: 4 }, boundary_labels(b), b != Boundary::Smooth, kind)
        }
        BoundaryCase::DoubleSemion => (ModelKind::DsBulk, vec![(2, 0), (0, 2)], false, ModelKind::DsWithBoundary),
    };
    let h = h as i32;
    let keep: BTreeSet<Qudit> = lat
        .edges()
        .filter(|e| match e.orient {
            Orient::H if rough => e.y >= 1 && e.y < h,
            Orient::H => e.y <= h,
            Orient::V => e.y < h,
        })
        .collect();
    let bulk = build_model(bulk_kind, spec)?;
    let job = CondensationJob::on_lattice(bulk, &lat, Region::from_edges(lat.edges().filter(|e| !keep.contains(e))), &labels);
    let out = run_condensation(&job)?;
    let mut built = Built::plain(out.model.clone());
    built.step(job.model, &out);
    let hand = build_model(hand_kind, LatticeSpec::cylinder(w, h as usize))?;
    Ok((built, hand))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degeneracy::{gsd_absolute, gsd_update};

    fn gsd(b: &Built) -> u64 {
        crate::degeneracy::to_u64(&gsd_absolute(&b.model).unwrap())
    }

    #[test]
    fn ledger_holds_along_every_build() {
        for b in [holes(2, 2, Boundary::Smooth).unwrap(), ds_patches(1).unwrap(), half_z4_ds_torus(4, 3).unwrap()] {
            for (before, after, delta) in &b.steps {
                assert_eq!(gsd_update(&gsd_absolute(before).unwrap(), delta).unwrap(), gsd_absolute(after).unwrap());
            }
        }
    }

    #[test]
    fn simple_surfaces() {
        assert_eq!(gsd(&zd_torus(3, 2, 2).unwrap()), 9);
        assert_eq!(gsd(&surface_code(3, 3).unwrap()), 3);
        assert_eq!(gsd(&disk_smooth_rough(2, 3).unwrap()), 1);
        // one hole is just the disk
        assert_eq!(gsd(&holes(2, 1, Boundary::Rough).unwrap()), 1);
        assert_eq!(gsd(&holes(2, 2, Boundary::Rough).unwrap()), 2);
        assert_eq!(gsd(&ds_patches_in_smooth_disk(1).unwrap()), 1);
    }

    #[test]
    fn bad_shapes_are_refused() {
        assert!(holes(2, 0, Boundary::Smooth).is_err());
        assert!(ds_slab(4, 2).is_err());
        assert!(half_z4_ds_torus_folded(5, 3).is_err());
        assert!(twist_torus(2, 3, &[], true, 1).is_err());
    }

    #[test]
    fn slab_string_is_a_logical() {
        let b = ds_slab(5, 1).unwrap();
        let s = slab_vertical_string(5, 2);
        assert!(b.model.ops().iter().all(|g| g.commutes_with(&s)));
        assert_eq!(s.weight(), 5);
    }
}
