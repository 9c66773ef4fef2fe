//! Thin Python bindings. Complexes travel as walled-space JSON strings,
//! vertices as 0/1 strings, generators in the same text format the CLI reads.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use cubist::cubulation::{CubeComplex, Orientation};
use cubist::{actions, intervals, io, lifting, zdmodel};

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn load(walled_space_json: &str) -> PyResult<CubeComplex> {
    let ws = io::load_walled_space(walled_space_json).map_err(err)?;
    let system = ws.derive_system().map_err(err)?;
    CubeComplex::median_closure(system, &ws.regions()).map_err(err)
}

fn vertex(cc: &CubeComplex, s: &str) -> PyResult<Orientation> {
    let o = Orientation::parse(s).map_err(err)?;
    if !cc.contains(&o) {
        return Err(PyValueError::new_err(format!("vertex {s:?} not in complex")));
    }
    Ok(o)
}

/// Vertices and edges of the cubulation of a walled space.
#[pyfunction]
fn cubulate(walled_space_json: &str) -> PyResult<(Vec<String>, Vec<(String, String)>)> {
    let cc = load(walled_space_json)?;
    let vertices: Vec<String> = cc.vertices().iter().map(|v| v.to_string()).collect();
    let edges = cc
        .edges()
        .iter()
        .map(|&(u, v, _)| (vertices[u].clone(), vertices[v].clone()))
        .collect();
    Ok((vertices, edges))
}

#[pyfunction]
fn dimension(walled_space_json: &str) -> PyResult<usize> {
    Ok(load(walled_space_json)?.system.dimension())
}

#[pyfunction]
fn median(walled_space_json: &str, x: &str, y: &str, z: &str) -> PyResult<String> {
    let cc = load(walled_space_json)?;
    let m = lifting::median(&cc, &vertex(&cc, x)?, &vertex(&cc, y)?, &vertex(&cc, z)?)
        .map_err(err)?;
    Ok(m.to_string())
}

#[pyfunction]
fn interval(walled_space_json: &str, x: &str, y: &str) -> PyResult<Vec<String>> {
    let cc = load(walled_space_json)?;
    let iv = intervals::interval(&cc, &vertex(&cc, x)?, &vertex(&cc, y)?).map_err(err)?;
    Ok(iv.members.iter().map(|m| m.to_string()).collect())
}

#[pyfunction]
fn endpoints(walled_space_json: &str, x: &str, y: &str) -> PyResult<Vec<String>> {
    let cc = load(walled_space_json)?;
    let iv = intervals::interval(&cc, &vertex(&cc, x)?, &vertex(&cc, y)?).map_err(err)?;
    let eps = intervals::endpoints(&cc, &iv).map_err(err)?;
    Ok(eps.iter().map(|e| e.to_string()).collect())
}

/// Orbit sizes of the corner action and the size of the power-of-two witness.
#[pyfunction]
fn theorem_check(generators: &str, dim: usize) -> PyResult<(Vec<usize>, usize, u32)> {
    let gens = io::parse_generators(generators).map_err(err)?;
    let rep = actions::main_theorem_check(dim, &gens).map_err(err)?;
    Ok((rep.orbit_sizes, rep.witness.len(), rep.n))
}

#[pyfunction]
fn closure_order(generators: &str, dim: usize) -> PyResult<usize> {
    let gens = io::parse_generators(generators).map_err(err)?;
    Ok(actions::closure(dim, &gens).map_err(err)?.len())
}

/// Corner orbit of (+inf, ..., +inf) under the n-fold infinite dihedral action.
#[pyfunction]
fn dinfty_orbit(n: usize) -> PyResult<Vec<String>> {
    let gens = zdmodel::dinfty_generators(n);
    let corner = zdmodel::ZBarPoint(vec![zdmodel::ExtInt::PosInf; n]);
    match zdmodel::corner_orbit(&gens, &corner, None).map_err(err)? {
        zdmodel::OrbitResult::Finite(orbit) => {
            Ok(orbit.iter().map(|p| p.to_string()).collect())
        }
        zdmodel::OrbitResult::Infinite => Err(PyValueError::new_err("infinite orbit")),
    }
}

#[pymodule]
fn cubist_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(cubulate, m)?)?;
    m.add_function(wrap_pyfunction!(dimension, m)?)?;
    m.add_function(wrap_pyfunction!(median, m)?)?;
    m.add_function(wrap_pyfunction!(interval, m)?)?;
    m.add_function(wrap_pyfunction!(endpoints, m)?)?;
    m.add_function(wrap_pyfunction!(theorem_check, m)?)?;
    m.add_function(wrap_pyfunction!(closure_order, m)?)?;
    m.add_function(wrap_pyfunction!(dinfty_orbit, m)?)?;
    Ok(())
}
