//! Python bindings. Models, jobs and networks cross the boundary as the
//! same JSON documents the command line reads and writes.

use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use ::stabcond::anyon::AnyonTheory;
use ::stabcond::condense::{run_condensation, JobDescriptor};
use ::stabcond::degeneracy::{self, gsd_absolute, gsd_bruteforce, gsd_ledger, BRUTE_FORCE_CAP};
use ::stabcond::lattice::LatticeSpec;
use ::stabcond::model::{build_model, Boundary, ModelKind, StabilizerModel};
use ::stabcond::pants::{contract, PantsNetwork};

fn err(e: ::stabcond::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn model(json: &str) -> PyResult<StabilizerModel> {
    StabilizerModel::from_json(json).map_err(err)
}

fn boundary(name: &str) -> PyResult<Boundary> {
    match name {
        "smooth" => Ok(Boundary::Smooth),
        "rough" => Ok(Boundary::Rough),
        "even" => Ok(Boundary::Even),
        _ => Err(PyValueError::new_err(format!("unknown boundary {name:?}"))),
    }
}

fn theory(name: &str) -> PyResult<AnyonTheory> {
    if name == "ds" {
        return Ok(AnyonTheory::double_semion());
    }
    match name.strip_prefix("dz").and_then(|d| d.parse::<i64>().ok()) {
        Some(d) if d >= 2 => Ok(AnyonTheory::dz(d)),
        _ => Err(PyValueError::new_err(format!("unknown theory {name:?}"))),
    }
}

/// Reference model as JSON. `sides` is `(left, right, bottom, top)` and
/// only matters for `zd_boundaries`.
#[pyfunction]
#[pyo3(signature = (kind, width, height, d=2, lattice="torus", sides=("smooth", "smooth", "smooth", "smooth")))]
fn build(kind: &str, width: usize, height: usize, d: i64, lattice: &str, sides: (&str, &str, &str, &str)) -> PyResult<String> {
    let spec = match lattice {
        "torus" => LatticeSpec::torus(width, height),
        "disk" => LatticeSpec::disk(width, height),
        "cylinder" => LatticeSpec::cylinder(width, height),
        _ => return Err(PyValueError::new_err(format!("unknown lattice {lattice:?}"))),
    };
    let kind = match kind {
        "zd" => ModelKind::ZdBulk { d },
        "ds" => ModelKind::DsBulk,
        "ds_boundary" => ModelKind::DsWithBoundary,
        "zd_boundaries" => {
            ModelKind::ZdWithBoundaries { d, left: boundary(sides.0)?, right: boundary(sides.1)?, bottom: boundary(sides.2)?, top: boundary(sides.3)? }
        }
        _ => return Err(PyValueError::new_err(format!("unknown kind {kind:?}"))),
    };
    Ok(build_model(kind, spec).map_err(err)?.to_json())
}

/// `(snf, ledger, trace)`; the trace is `None` above the brute-force cap.
#[pyfunction]
fn gsd(model_json: &str) -> PyResult<(BigUint, BigUint, Option<BigUint>)> {
    let m = model(model_json)?;
    let dim = (m.d as f64).powi(m.num_qudits() as i32);
    let trace = if dim <= BRUTE_FORCE_CAP as f64 { Some(gsd_bruteforce(&m).map_err(err)?) } else { None };
    Ok((gsd_absolute(&m).map_err(err)?, gsd_ledger(&m).map_err(err)?, trace))
}

/// Apply a job descriptor; returns the new model as JSON.
#[pyfunction]
fn condense(model_json: &str, job_json: &str) -> PyResult<String> {
    let job = JobDescriptor::from_json(job_json).map_err(err)?.job(model(model_json)?).map_err(err)?;
    Ok(run_condensation(&job).map_err(err)?.model.to_json())
}

/// Weight-capped distances as a dict.
#[pyfunction]
fn distance<'py>(py: Python<'py>, model_json: &str, cap: usize) -> PyResult<Bound<'py, PyDict>> {
    let p = degeneracy::distance(&model(model_json)?, cap).map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("gsd", &p.gsd)?;
    out.set_item("k", p.k)?;
    out.set_item("d_X", p.d_x)?;
    out.set_item("d_Z", p.d_z)?;
    out.set_item("certified", p.certified)?;
    out.set_item("n_qubits", p.n_qubits)?;
    Ok(out)
}

/// Lagrangian subgroups of `dz<N>` or `ds`, as label lists.
#[pyfunction]
fn lagrangian_subgroups(name: &str) -> PyResult<Vec<Vec<String>>> {
    let t = theory(name)?;
    Ok(t.enumerate_lagrangian().iter().map(|s| t.subgroup_names(s)).collect())
}

/// Full contraction of a pants network given as JSON.
#[pyfunction]
fn contract_network(network_json: &str) -> PyResult<BigUint> {
    let net = PantsNetwork::from_json(network_json).map_err(err)?;
    contract(&net).map_err(err)
}

#[pymodule]
#[pyo3(name = "stabcond")]
fn stabcond_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(build, m)?)?;
    m.add_function(wrap_pyfunction!(gsd, m)?)?;
    m.add_function(wrap_pyfunction!(condense, m)?)?;
    m.add_function(wrap_pyfunction!(distance, m)?)?;
    m.add_function(wrap_pyfunction!(lagrangian_subgroups, m)?)?;
    m.add_function(wrap_pyfunction!(contract_network, m)?)?;
    Ok(())
}
