//! File formats: pocset and walled-space JSON, measures, generator
//! files, edge-list graphs, zd points and isometries, DOT emission.

use std::collections::BTreeSet;
use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::actions::SignedPermutation;
use crate::cubulation::{CubeComplex, Graph, Orientation, Wall, WalledSpace};
use crate::error::{CubistError, Result};
use crate::lifting::Measure;
use crate::pocset::{Halfspace, HalfspaceSystem};
use crate::zdmodel::{ExtInt, ZBarPoint, ZdIsometry};

#[derive(Serialize, Deserialize)]
pub struct PocsetFile {
    pub walls: usize,
    /// Each pair [a, b] asserts a ⊆ b; names are "wI+" / "wI-".
    pub order: Vec<[String; 2]>,
}

pub fn parse_halfspace(name: &str) -> Result<Halfspace> {
    let bad = || CubistError::Parse(format!("bad halfspace name {name:?}, expected e.g. w3+"));
    let rest = name.strip_prefix('w').ok_or_else(bad)?;
    let side = match rest.as_bytes().last() {
        Some(b'+') => true,
        Some(b'-') => false,
        _ => return Err(bad()),
    };
    let wall: usize = rest[..rest.len() - 1].parse().map_err(|_| bad())?;
    Ok(Halfspace::new(wall, side))
}

pub fn load_pocset(json: &str) -> Result<HalfspaceSystem> {
    let file: PocsetFile =
        serde_json::from_str(json).map_err(|e| CubistError::Parse(e.to_string()))?;
    let mut rels = Vec::new();
    for [a, b] in &file.order {
        rels.push((parse_halfspace(a)?, parse_halfspace(b)?));
    }
    for (h, k) in &rels {
        for x in [h, k] {
            if x.wall >= file.walls {
                return Err(CubistError::UnknownWall { index: x.wall, walls: file.walls });
            }
        }
    }
    HalfspaceSystem::from_relations(file.walls, &rels)
}

pub fn pocset_to_json(sys: &HalfspaceSystem) -> String {
    let mut order = Vec::new();
    for h in sys.halfspaces() {
        for k in sys.halfspaces() {
            if h != k && sys.le(h, k) {
                order.push([h.to_string(), k.to_string()]);
            }
        }
    }
    serde_json::to_string_pretty(&PocsetFile { walls: sys.wall_count(), order }).unwrap()
}

#[derive(Serialize, Deserialize)]
pub struct WalledSpaceFile {
    pub points: Vec<String>,
    pub walls: Vec<WallFile>,
}

#[derive(Serialize, Deserialize)]
pub struct WallFile {
    pub name: String,
    pub positive: Vec<String>,
}

pub fn load_walled_space(json: &str) -> Result<WalledSpace> {
    let file: WalledSpaceFile =
        serde_json::from_str(json).map_err(|e| CubistError::Parse(e.to_string()))?;
    let index = |name: &str| {
        file.points
            .iter()
            .position(|p| p == name)
            .ok_or_else(|| CubistError::Parse(format!("unknown point {name:?}")))
    };
    let mut walls = Vec::new();
    for w in &file.walls {
        let mut positive = BTreeSet::new();
        for p in &w.positive {
            positive.insert(index(p)?);
        }
        walls.push(Wall { name: w.name.clone(), positive });
    }
    let ws = WalledSpace { points: file.points, walls };
    ws.validate()?;
    Ok(ws)
}

pub fn walled_space_to_json(ws: &WalledSpace) -> String {
    let walls = ws
        .walls
        .iter()
        .map(|w| WallFile {
            name: w.name.clone(),
            positive: w.positive.iter().map(|&i| ws.points[i].clone()).collect(),
        })
        .collect();
    serde_json::to_string_pretty(&WalledSpaceFile { points: ws.points.clone(), walls }).unwrap()
}

#[derive(Serialize, Deserialize)]
pub struct MeasureFile {
    pub atoms: Vec<AtomFile>,
}

#[derive(Serialize, Deserialize)]
pub struct AtomFile {
    /// Orientation bits, lowest wall first.
    pub vertex: String,
    /// Exact rational, "p/q" or "p".
    pub weight: String,
}

pub fn load_measure(json: &str) -> Result<Measure> {
    let file: MeasureFile =
        serde_json::from_str(json).map_err(|e| CubistError::Parse(e.to_string()))?;
    let mut atoms = Vec::new();
    for a in &file.atoms {
        let o = Orientation::parse(&a.vertex)?;
        let w = BigRational::from_str(&a.weight)
            .map_err(|e| CubistError::Parse(format!("weight {:?}: {e}", a.weight)))?;
        atoms.push((o, w));
    }
    Measure::new(atoms)
}

/// One generator per line: `flips=0110 perm=(2 1 4 3)` with a one-line,
/// 1-based permutation. Blank lines and `#` comments are skipped.
pub fn parse_generators(text: &str) -> Result<Vec<SignedPermutation>> {
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let rest = line
            .strip_prefix("flips=")
            .ok_or_else(|| CubistError::Parse(format!("missing flips= in {line:?}")))?;
        let (bits, perm) = match rest.split_once(char::is_whitespace) {
            Some((bits, tail)) => {
                let tail = tail.trim();
                let p = tail
                    .strip_prefix("perm=")
                    .ok_or_else(|| CubistError::Parse(format!("unexpected token {tail:?}")))?;
                (bits, Some(parse_one_line_perm(p)?))
            }
            None => (rest, None),
        };
        if !bits.bytes().all(|b| b == b'0' || b == b'1') {
            return Err(CubistError::Parse(format!("bad flips {bits:?}")));
        }
        let flips: Vec<bool> = bits.bytes().map(|b| b == b'1').collect();
        let perm = match perm {
            Some(p) => p,
            None => (0..flips.len()).collect(),
        };
        out.push(SignedPermutation::new(flips, perm)?);
    }
    Ok(out)
}

fn parse_one_line_perm(s: &str) -> Result<Vec<usize>> {
    let inner = s
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| CubistError::Parse(format!("bad permutation {s:?}")))?;
    let mut perm = Vec::new();
    for tok in inner.split_whitespace() {
        let v: usize =
            tok.parse().map_err(|_| CubistError::Parse(format!("bad permutation entry {tok:?}")))?;
        if v == 0 {
            return Err(CubistError::Parse("permutation entries are 1-based".into()));
        }
        perm.push(v - 1);
    }
    Ok(perm)
}

/// Edge list, one `u v` pair per line.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut pairs = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        match (it.next(), it.next(), it.next()) {
            (Some(a), Some(b), None) => pairs.push((a.to_string(), b.to_string())),
            _ => return Err(CubistError::Parse(format!("expected `u v`, got {line:?}"))),
        }
    }
    Ok(Graph::from_edge_pairs(&pairs))
}

/// Point syntax `(-inf, 3, +inf)`.
pub fn parse_zd_point(s: &str) -> Result<ZBarPoint> {
    let inner = s
        .trim()
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| CubistError::Parse(format!("bad point {s:?}")))?;
    let mut coords = Vec::new();
    for tok in inner.split(',') {
        let tok = tok.trim();
        coords.push(match tok {
            "-inf" => ExtInt::NegInf,
            "+inf" | "inf" => ExtInt::PosInf,
            _ => ExtInt::Fin(
                tok.parse().map_err(|_| CubistError::Parse(format!("bad coordinate {tok:?}")))?,
            ),
        });
    }
    Ok(ZBarPoint(coords))
}

/// One isometry per line: optional `perm=(2 1 3)` and clauses
/// `coord=I: -n+5` (1-based, unlisted coordinates are the identity),
/// separated by `;`.
pub fn parse_zd_isometries(text: &str, dim: usize) -> Result<Vec<ZdIsometry>> {
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut perm: Vec<usize> = (0..dim).collect();
        let mut maps = vec![(false, 0i64); dim];
        for clause in line.split(';') {
            let clause = clause.trim();
            if let Some(p) = clause.strip_prefix("perm=") {
                let parsed = parse_one_line_perm(p)?;
                if parsed.len() != dim {
                    return Err(CubistError::LengthMismatch { got: parsed.len(), want: dim });
                }
                perm = parsed;
            } else if let Some(rest) = clause.strip_prefix("coord=") {
                let (idx, expr) = rest
                    .split_once(':')
                    .ok_or_else(|| CubistError::Parse(format!("bad clause {clause:?}")))?;
                let i: usize = idx
                    .trim()
                    .parse()
                    .map_err(|_| CubistError::Parse(format!("bad coordinate {idx:?}")))?;
                if i == 0 || i > dim {
                    return Err(CubistError::Parse(format!("coordinate {i} out of range 1..={dim}")));
                }
                maps[i - 1] = parse_affine(expr.trim())?;
            } else {
                return Err(CubistError::Parse(format!("unexpected clause {clause:?}")));
            }
        }
        out.push(ZdIsometry::new(perm, maps)?);
    }
    Ok(out)
}

/// `n`, `-n`, `n+3`, `-n-2` and friends.
fn parse_affine(expr: &str) -> Result<(bool, i64)> {
    let s: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    let (neg, rest) = match s.strip_prefix("-n") {
        Some(r) => (true, r),
        None => match s.strip_prefix('n') {
            Some(r) => (false, r),
            None => return Err(CubistError::Parse(format!("bad map {expr:?}, expected ±n±c"))),
        },
    };
    let off = if rest.is_empty() {
        0
    } else {
        rest.parse::<i64>().map_err(|_| CubistError::Parse(format!("bad offset {rest:?}")))?
    };
    Ok((neg, off))
}

/// Deterministic DOT output: vertices sorted lexicographically, edges
/// labeled by wall name.
pub fn complex_to_dot(cc: &CubeComplex, wall_names: Option<&[String]>) -> String {
    let name = |w: usize| match wall_names {
        Some(names) => names[w].clone(),
        None => format!("w{w}"),
    };
    let mut out = String::from("graph complex {\n");
    let mut labels: Vec<String> = cc.vertices().iter().map(|v| v.to_string()).collect();
    labels.sort();
    for l in &labels {
        out.push_str(&format!("  \"{l}\";\n"));
    }
    let mut lines: Vec<String> = cc
        .edges()
        .iter()
        .map(|&(u, v, w)| {
            let (a, b) = (cc.vertices()[u].to_string(), cc.vertices()[v].to_string());
            let (a, b) = if a <= b { (a, b) } else { (b, a) };
            format!("  \"{a}\" -- \"{b}\" [label=\"{}\"];\n", name(w))
        })
        .collect();
    lines.sort();
    for l in lines {
        out.push_str(&l);
    }
    out.push_str("}\n");
    out
}
