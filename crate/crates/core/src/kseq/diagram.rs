//! Declarative diagram files: parsing, cross-diagram references and runs
//! against the recorded expectations.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::error::KseqError;
use super::group::FGAbelian;
use super::intmat::IntMatrix;
use super::monomial::{induced_monomial_map_k1, parse_torus_map};
use super::sixterm::{solve_six_term, verify_hexagon, HexMap, MapKind, Node, SixTermInstance, SolvedSixTerm};
use super::suspension::iterate_suspension;
use crate::circleops::{fredholm_index, shipped_operator};
use crate::report::CheckReport;

pub const SHIPPED: &[(&str, &str)] = &[
    ("s1", include_str!("../../data/diagrams/s1.toml")),
    ("ss2", include_str!("../../data/diagrams/ss2.toml")),
    ("ss2_algebra", include_str!("../../data/diagrams/ss2_algebra.toml")),
    ("torus", include_str!("../../data/diagrams/torus.toml")),
];

pub fn shipped_diagram(name: &str) -> Option<&'static str> {
    SHIPPED.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct DiagramFile {
    name: String,
    title: String,
    #[serde(default)]
    facts: Vec<String>,
    suspension: Option<SuspensionFile>,
    nodes: Vec<NodeFile>,
    maps: Vec<MapFile>,
    #[serde(default)]
    expect: Vec<Expectation>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct NodeFile {
    name: String,
    #[serde(default)]
    unknown: bool,
    #[serde(default)]
    free_rank: usize,
    #[serde(default)]
    torsion: Vec<u64>,
    labels: Option<Vec<String>>,
    #[serde(default)]
    lifts: BTreeMap<String, String>,
    #[serde(default)]
    label_units: bool,
    from: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MapFile {
    name: String,
    kind: String,
    rows: Option<Vec<Vec<i64>>>,
    operators: Option<Vec<String>>,
    restrictions: Option<Vec<String>>,
    column: Option<usize>,
    fact: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SuspensionFile {
    base_k0: Vec<String>,
    base_k1: Vec<String>,
    algebras: Vec<String>,
    #[serde(default)]
    identify: Vec<[String; 2]>,
    #[serde(default)]
    expect: Vec<SuspensionExpectation>,
}

/// Expected isomorphism type (and optionally generator labels, compared
/// as a set) of one node.
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct Expectation {
    pub node: usize,
    pub group: String,
    pub labels: Option<Vec<String>>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct SuspensionExpectation {
    pub step: usize,
    pub k0: String,
    pub k1: String,
    pub k0_labels: Option<Vec<String>>,
    pub k1_labels: Option<Vec<String>>,
}

#[derive(Clone, Debug)]
pub struct SuspensionRun {
    pub algebras: Vec<String>,
    pub steps: Vec<(FGAbelian, FGAbelian)>,
    pub expect: Vec<SuspensionExpectation>,
}

#[derive(Clone, Debug)]
pub struct Diagram {
    pub name: String,
    pub title: String,
    pub facts: Vec<String>,
    pub instance: SixTermInstance,
    pub expect: Vec<Expectation>,
    pub suspension: Option<SuspensionRun>,
}

fn parse_err(e: impl ToString) -> KseqError {
    KseqError::Parse(e.to_string())
}

/// Loads a shipped diagram, solving any diagram it refers to.
pub fn load_shipped(name: &str) -> Result<Diagram, KseqError> {
    let text = shipped_diagram(name).ok_or_else(|| KseqError::InvalidInstance(format!("no diagram named {name}")))?;
    parse_with_shipped(text)
}

/// Parses diagram text whose `from` references name shipped diagrams.
pub fn parse_with_shipped(text: &str) -> Result<Diagram, KseqError> {
    parse_diagram(text, &|other| {
        let d = load_shipped(other)?;
        solve_six_term(&d.instance)
    })
}

/// Parses a diagram; `resolve` solves other diagrams named in `from`.
pub fn parse_diagram(
    text: &str,
    resolve: &dyn Fn(&str) -> Result<SolvedSixTerm, KseqError>,
) -> Result<Diagram, KseqError> {
    let file: DiagramFile = toml::from_str(text).map_err(parse_err)?;
    if file.nodes.len() != 6 || file.maps.len() != 6 {
        return Err(KseqError::InvalidInstance(format!(
            "{}: expected 6 nodes and 6 maps, found {} and {}",
            file.name,
            file.nodes.len(),
            file.maps.len()
        )));
    }
    let suspension = file.suspension.map(|s| {
        let identify: Vec<(String, String)> = s.identify.into_iter().map(|[a, b]| (a, b)).collect();
        let steps = iterate_suspension(
            FGAbelian::free_labeled(s.base_k0),
            FGAbelian::free_labeled(s.base_k1),
            &s.algebras,
            &identify,
        );
        SuspensionRun { algebras: s.algebras, steps, expect: s.expect }
    });
    let mut nodes = Vec::with_capacity(6);
    for n in file.nodes {
        nodes.push(build_node(n, suspension.as_ref(), resolve)?);
    }
    let mut maps = Vec::with_capacity(6);
    for m in file.maps {
        maps.push(build_map(m)?);
    }
    for e in &file.expect {
        if e.node >= 6 {
            return Err(KseqError::InvalidInstance(format!("expectation for node {}", e.node)));
        }
    }
    Ok(Diagram {
        name: file.name.clone(),
        title: file.title,
        facts: file.facts,
        instance: SixTermInstance { name: file.name, nodes, maps },
        expect: file.expect,
        suspension,
    })
}

fn build_node(
    n: NodeFile,
    suspension: Option<&SuspensionRun>,
    resolve: &dyn Fn(&str) -> Result<SolvedSixTerm, KseqError>,
) -> Result<Node, KseqError> {
    let mut node = if n.unknown {
        Node::unknown(&n.name)
    } else if let Some(src) = &n.from {
        let group = match src.split_once(':') {
            Some(("suspension", which)) => {
                let s = suspension.ok_or_else(|| KseqError::InvalidInstance("no suspension section".into()))?;
                let last = s.steps.last().ok_or_else(|| KseqError::InvalidInstance("empty suspension".into()))?;
                match which {
                    "k0" => last.0.clone(),
                    "k1" => last.1.clone(),
                    _ => return Err(KseqError::InvalidInstance(format!("unknown reference {src}"))),
                }
            }
            Some((diagram, idx)) => {
                let i: usize = idx.parse().map_err(parse_err)?;
                let solved = resolve(diagram)?;
                solved
                    .group(i)
                    .cloned()
                    .ok_or_else(|| KseqError::Underdetermined(format!("{diagram}:{i}")))?
            }
            None => return Err(KseqError::InvalidInstance(format!("bad reference {src}"))),
        };
        let mut node = Node::known(&n.name, group);
        node.label_units = true;
        node
    } else {
        let torsion: Vec<BigInt> = n.torsion.iter().map(|&d| BigInt::from(d)).collect();
        let count = n.free_rank + torsion.len();
        let labels = n.labels.clone().unwrap_or_else(|| FGAbelian::free(count).generator_labels);
        let group = FGAbelian::new(n.free_rank, torsion, labels)
            .map_err(|e| KseqError::InvalidInstance(format!("{}: {e}", n.name)))?;
        Node::known(&n.name, group)
    };
    node.lifts = n.lifts;
    node.label_units |= n.label_units;
    Ok(node)
}

fn build_map(m: MapFile) -> Result<HexMap, KseqError> {
    let kind = match m.kind.as_str() {
        "unknown" => MapKind::Unknown,
        "zero" => MapKind::Zero,
        "surjective" => MapKind::Surjective,
        "matrix" => {
            let rows = m.rows.clone().ok_or_else(|| parse_err(format!("{}: matrix needs rows", m.name)))?;
            if rows.iter().any(|r| r.len() != rows[0].len()) {
                return Err(parse_err(format!("{}: ragged rows", m.name)));
            }
            MapKind::Matrix(IntMatrix::from_rows(&rows))
        }
        "index" => {
            let ops = m.operators.clone().ok_or_else(|| parse_err(format!("{}: index needs operators", m.name)))?;
            let mut row = Vec::with_capacity(ops.len());
            for name in &ops {
                let op = shipped_operator(name)
                    .ok_or_else(|| KseqError::InvalidInstance(format!("no shipped operator {name}")))?;
                row.push(fredholm_index(&op).map_err(|e| KseqError::InvalidInstance(e.to_string()))?);
            }
            MapKind::Matrix(IntMatrix::from_rows(&[row]))
        }
        "monomial_difference" => {
            let r = m.restrictions.clone().ok_or_else(|| parse_err(format!("{}: needs restrictions", m.name)))?;
            let col = m.column.unwrap_or(0);
            if r.len() != 2 || col > 1 {
                return Err(parse_err(format!("{}: two restrictions and a column in 0..2", m.name)));
            }
            let first = induced_monomial_map_k1(&parse_torus_map(&r[0])?);
            let second = induced_monomial_map_k1(&parse_torus_map(&r[1])?);
            let a: Vec<BigInt> = first.column(col).into_iter().map(|x| -x).collect();
            let b = second.column(col);
            MapKind::Matrix(IntMatrix::from_columns(2, &[a, b]))
        }
        other => return Err(parse_err(format!("{}: unknown map kind {other}", m.name))),
    };
    let mut map = HexMap::new(m.name, kind);
    map.fact = m.fact;
    Ok(map)
}

/// A solved diagram with its checks.
#[derive(Clone, Debug)]
pub struct DiagramRun {
    pub diagram: Diagram,
    pub solved: SolvedSixTerm,
    pub checks: Vec<CheckReport>,
}

fn label_set(v: &[String]) -> Vec<String> {
    let mut s = v.to_vec();
    s.sort();
    s
}

fn group_check(name: String, what: String, got: Option<&FGAbelian>, group: &str, labels: Option<&Vec<String>>) -> CheckReport {
    let r = CheckReport::new(name, what);
    let Some(g) = got else {
        return r.require(false).detail("not determined");
    };
    let mut ok = g.short() == group;
    let mut detail = format!("{} (expected {group})", g.labeled());
    if let Some(l) = labels {
        let same = label_set(l) == label_set(&g.generator_labels);
        ok &= same;
        if !same {
            detail.push_str(&format!("; expected labels {l:?}"));
        }
    }
    r.require(ok).detail(detail)
}

pub fn run_diagram(d: Diagram) -> Result<DiagramRun, KseqError> {
    let mut solved = solve_six_term(&d.instance)?;
    for f in &d.facts {
        if !solved.assumed.contains(f) {
            solved.assumed.push(f.clone());
        }
    }
    let mut checks = Vec::new();
    if let Some(s) = &d.suspension {
        for e in &s.expect {
            let Some((k0, k1)) = e.step.checked_sub(1).and_then(|i| s.steps.get(i)) else {
                checks.push(
                    CheckReport::new(format!("{}: split step {}", d.name, e.step), "suspension split")
                        .require(false)
                        .detail("no such step"),
                );
                continue;
            };
            let alg = &s.algebras[e.step - 1];
            checks.push(group_check(
                format!("{}: K₀ after splitting over {alg}", d.name),
                "K₀ of the split algebra".into(),
                Some(k0),
                &e.k0,
                e.k0_labels.as_ref(),
            ));
            checks.push(group_check(
                format!("{}: K₁ after splitting over {alg}", d.name),
                "K₁ of the split algebra".into(),
                Some(k1),
                &e.k1,
                e.k1_labels.as_ref(),
            ));
        }
    }
    for e in &d.expect {
        let node = &solved.instance.nodes[e.node];
        checks.push(group_check(
            format!("{}: {}", d.name, node.name),
            format!("{} from the six-term sequence", node.name),
            solved.group(e.node),
            &e.group,
            e.labels.as_ref(),
        ));
    }
    checks.extend(verify_hexagon(&solved));
    Ok(DiagramRun { diagram: d, solved, checks })
}

pub fn run_shipped(name: &str) -> Result<DiagramRun, KseqError> {
    run_diagram(load_shipped(name)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_diagrams_parse() {
        for (name, _) in SHIPPED {
            load_shipped(name).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }

    #[test]
    fn circle_algebra() {
        let run = run_shipped("s1").unwrap();
        assert!(run.checks.iter().all(|c| c.pass), "{:#?}", run.checks);
        assert_eq!(run.solved.group(4).unwrap().labeled(), "[[𝔷]_𝒦]₁ℤ");
        assert!(run.solved.assumed.iter().any(|f| f.contains("Fredholm")));
    }

    #[test]
    fn sphere_runs() {
        for name in ["ss2", "ss2_algebra"] {
            let run = run_shipped(name).unwrap();
            assert!(run.checks.iter().all(|c| c.pass), "{name}: {:#?}", run.checks);
        }
    }

    #[test]
    fn torus_runs() {
        let run = run_shipped("torus").unwrap();
        assert!(run.checks.iter().all(|c| c.pass), "{:#?}", run.checks);
        assert_eq!(run.solved.group(1).unwrap().short(), "ℤ⁴");
        assert_eq!(run.solved.group(4).unwrap().short(), "ℤ³");
    }

    #[test]
    fn bad_files() {
        let none = |_: &str| -> Result<SolvedSixTerm, KseqError> { Err(KseqError::Parse("none".into())) };
        assert!(matches!(parse_diagram("name = 1", &none), Err(KseqError::Parse(_))));
        let short = "name = \"x\"\ntitle = \"x\"\nnodes = []\nmaps = []\n";
        assert!(matches!(parse_diagram(short, &none), Err(KseqError::InvalidInstance(_))));
    }
}
