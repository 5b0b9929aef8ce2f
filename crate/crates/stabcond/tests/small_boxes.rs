// Why some 4x4 instances are left out of the local-completeness sweep: with
// walls on a 4-row torus a closed 2x2 box already reaches around, and a real
// logical fits inside. Doubling the torus removes it.

use std::collections::BTreeSet;

use stabcond::degeneracy::{logical_generators, logical_on};
use stabcond::lattice::{Lattice, LatticeSpec, Region};
use stabcond::model::StabilizerModel;
use stabcond::pauli::Qudit;
use stabcond::scenarios::half_z4_ds_torus;

fn box_logical(model: &StabilizerModel, spec: LatticeSpec) -> Option<(i32, i32, stabcond::pauli::PauliOp)> {
    let lat = Lattice::build(spec).unwrap();
    let logicals = logical_generators(model).unwrap();
    for x in 0..lat.width() {
        for y in 0..lat.height() {
            let sites: BTreeSet<Qudit> = Region::edges_in_box(&lat, x, y, x + 2, y + 2);
            if let Some(p) = logical_on(model, &logicals, &sites) {
                return Some((x, y, p));
            }
        }
    }
    None
}

#[test]
fn walls_on_a_short_torus_leave_a_logical_in_a_box() {
    let m = half_z4_ds_torus(4, 4).unwrap().model;
    let (x, y, p) = box_logical(&m, LatticeSpec::torus(4, 4)).expect("a logical inside some box");
    assert!(m.ops().iter().all(|g| g.commutes_with(&p)), "{p} at ({x},{y})");
}

#[test]
fn larger_torus_has_none() {
    let m = half_z4_ds_torus(8, 8).unwrap().model;
    assert_eq!(box_logical(&m, LatticeSpec::torus(8, 8)).map(|(x, y, p)| format!("{p} at ({x},{y})")), None);
}
