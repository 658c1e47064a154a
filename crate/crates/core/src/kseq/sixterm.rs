//! Six-term cyclic exact sequences: solving for unknown groups and checking
//! exactness.
//!
//! Nodes are indexed `0..6` with map `i` going from node `i` to node
//! `i + 1 mod 6`. For an ideal `I ⊂ A` the order is
//! `K₀(I) → K₀(A) → K₀(A/I) → K₁(I) → K₁(A) → K₁(A/I) → K₀(I)`, and a
//! Mayer–Vietoris hexagon uses the same shape.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::error::KseqError;
use super::group::{subquotient, tuple_label, Decomposition, FGAbelian, Presented};
use super::hom::{image_of, is_well_defined, kernel_of};
use super::intmat::IntMatrix;
use super::lattice::Lattice;
use crate::report::CheckReport;

#[derive(Clone, Debug)]
pub struct Node {
    pub name: String,
    /// `None` while the group is unknown.
    pub group: Option<FGAbelian>,
    /// Names for derived generators, keyed by their coordinate tuple.
    pub lifts: BTreeMap<String, String>,
    /// Name unit vectors of this node by its own generator labels instead
    /// of by coordinate tuples.
    pub label_units: bool,
}

impl Node {
    pub fn known(name: impl Into<String>, group: FGAbelian) -> Self {
        Self { name: name.into(), group: Some(group), lifts: BTreeMap::new(), label_units: false }
    }

    pub fn unknown(name: impl Into<String>) -> Self {
        Self { name: name.into(), group: None, lifts: BTreeMap::new(), label_units: false }
    }

    pub fn presented(&self) -> Option<Presented> {
        self.group.as_ref().map(Presented::from_group)
    }

    fn gens(&self) -> Option<usize> {
        self.group.as_ref().map(FGAbelian::num_generators)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum MapKind {
    Matrix(IntMatrix),
    Zero,
    /// Known to be onto, matrix not given.
    Surjective,
    Unknown,
}

#[derive(Clone, Debug)]
pub struct HexMap {
    pub name: String,
    pub kind: MapKind,
    /// An assumption the map's value rests on.
    pub fact: Option<String>,
    /// Filled in by the solver rather than given.
    pub derived: bool,
}

impl HexMap {
    pub fn new(name: impl Into<String>, kind: MapKind) -> Self {
        Self { name: name.into(), kind, fact: None, derived: false }
    }

    pub fn with_fact(mut self, fact: impl Into<String>) -> Self {
        self.fact = Some(fact.into());
        self
    }

    pub fn matrix(&self) -> Option<&IntMatrix> {
        match &self.kind {
            MapKind::Matrix(m) => Some(m),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SixTermInstance {
    pub name: String,
    pub nodes: Vec<Node>,
    pub maps: Vec<HexMap>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Resolution {
    Given,
    /// `0 → sub → K → quot → 0` resolved by the split rule.
    Split { sub: FGAbelian, quot: FGAbelian },
    /// The extension could not be decided; `sub` and `quot` are its data.
    Ambiguous { sub: FGAbelian, quot: FGAbelian },
}

#[derive(Clone, Debug)]
pub struct SolvedSixTerm {
    pub instance: SixTermInstance,
    pub resolutions: Vec<Resolution>,
    /// Facts the solution used, in the order they were consumed.
    pub assumed: Vec<String>,
}

impl SolvedSixTerm {
    pub fn is_ambiguous(&self) -> bool {
        self.resolutions.iter().any(|r| matches!(r, Resolution::Ambiguous { .. }))
    }

    pub fn group(&self, i: usize) -> Option<&FGAbelian> {
        self.instance.nodes[i].group.as_ref()
    }
}

fn prev(i: usize) -> usize {
    (i + 5) % 6
}

fn next(i: usize) -> usize {
    (i + 1) % 6
}

/// Rejects malformed data: wrong shapes, matrices that are not
/// homomorphisms, given matrices next to unknown nodes, and exactness
/// violations between known pieces.
pub fn validate(inst: &SixTermInstance) -> Result<(), KseqError> {
    if inst.nodes.len() != 6 || inst.maps.len() != 6 {
        return Err(KseqError::InvalidInstance("a six-term instance needs 6 nodes and 6 maps".into()));
    }
    for i in 0..6 {
        let (src, dst) = (&inst.nodes[i], &inst.nodes[next(i)]);
        let map = &inst.maps[i];
        if let MapKind::Matrix(m) = &map.kind {
            let (Some(a), Some(b)) = (src.presented(), dst.presented()) else {
                return Err(KseqError::InvalidInstance(format!(
                    "map {} is given as a matrix but touches an unknown node",
                    map.name
                )));
            };
            if m.cols() != a.gens || m.rows() != b.gens {
                return Err(KseqError::InvalidInstance(format!(
                    "map {} is {}×{} but the nodes have {} and {} generators",
                    map.name,
                    m.rows(),
                    m.cols(),
                    a.gens,
                    b.gens
                )));
            }
            if !is_well_defined(m, &a, &b) {
                return Err(KseqError::InvalidInstance(format!("map {} does not respect relations", map.name)));
            }
        }
        if map.kind == MapKind::Surjective {
            if let (Some(a), Some(b)) = (&src.group, &dst.group) {
                if a.is_free() && b.is_free() && a.free_rank < b.free_rank {
                    return Err(KseqError::Inconsistent(format!(
                        "{} cannot map ℤ{} onto ℤ{}",
                        map.name, a.free_rank, b.free_rank
                    )));
                }
            }
        }
    }
    let resolved = resolve_zero_maps(inst);
    for j in 0..6 {
        if let Some(fail) = exactness_failure(&resolved, j) {
            return Err(KseqError::Inconsistent(fail));
        }
    }
    Ok(())
}

fn resolve_zero_maps(inst: &SixTermInstance) -> SixTermInstance {
    let mut out = inst.clone();
    for i in 0..6 {
        if out.maps[i].kind == MapKind::Zero {
            if let (Some(a), Some(b)) = (inst.nodes[i].gens(), inst.nodes[next(i)].gens()) {
                out.maps[i].kind = MapKind::Matrix(IntMatrix::zeros(b, a));
            }
        }
    }
    out
}

/// Exactness at node `j` when both adjacent maps are matrices.
fn exactness_failure(inst: &SixTermInstance, j: usize) -> Option<String> {
    let inc = inst.maps[prev(j)].matrix()?;
    let out = inst.maps[j].matrix()?;
    let here = inst.nodes[j].presented()?;
    let there = inst.nodes[next(j)].presented()?;
    let im = image_of(inc, &here);
    let ker = kernel_of(out, &here, &there);
    (im != ker).then(|| {
        format!(
            "at {}: image of {} is spanned by {:?}, kernel of {} by {:?}",
            inst.nodes[j].name,
            inst.maps[prev(j)].name,
            im.basis().iter().map(|v| tuple_label(v)).collect::<Vec<_>>(),
            inst.maps[j].name,
            ker.basis().iter().map(|v| tuple_label(v)).collect::<Vec<_>>()
        )
    })
}

/// One side of the extension `0 → sub → K → quot → 0`.
struct Piece {
    orders: Vec<BigInt>,
    labels: Vec<String>,
    /// Generator vectors in the neighbouring node, when known.
    vectors: Option<Vec<Vec<BigInt>>>,
    decomposition: Option<Decomposition>,
}

impl Piece {
    fn group(&self) -> FGAbelian {
        let free = self.orders.iter().take_while(|d| d.is_zero()).count();
        FGAbelian::new(free, self.orders[free..].to_vec(), self.labels.clone()).expect("normalized piece")
    }

    fn is_trivial(&self) -> bool {
        self.orders.is_empty()
    }

    fn is_free(&self) -> bool {
        self.orders.iter().all(Zero::is_zero)
    }
}

fn is_unit(v: &[BigInt]) -> Option<usize> {
    let nz: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
    (nz.len() == 1 && v[nz[0]].is_one()).then(|| nz[0])
}

fn render(target: &Node, neighbour: &Node, v: &[BigInt]) -> String {
    let t = tuple_label(v);
    if let Some(l) = target.lifts.get(&t) {
        return l.clone();
    }
    if neighbour.label_units {
        if let (Some(j), Some(g)) = (is_unit(v), &neighbour.group) {
            return g.generator_labels[j].clone();
        }
    }
    t
}

fn piece_from(dec: Decomposition, target: &Node, neighbour: &Node) -> Piece {
    let labels = dec.generators.iter().map(|g| render(target, neighbour, g)).collect();
    Piece { orders: dec.orders.clone(), labels, vectors: Some(dec.generators.clone()), decomposition: Some(dec) }
}

/// `coker(m_{i−2})` inside node `i`, read on node `i − 1`.
fn sub_piece(inst: &SixTermInstance, i: usize, assumed: &mut Vec<String>) -> Result<Piece, KseqError> {
    let map = &inst.maps[prev(prev(i))];
    let nb = &inst.nodes[prev(i)];
    let target = &inst.nodes[i];
    let p = nb.presented().ok_or_else(|| KseqError::Underdetermined(target.name.clone()))?;
    let dec = match &map.kind {
        MapKind::Matrix(m) => Presented::new(p.gens, image_of(m, &p)).decompose(),
        MapKind::Zero => p.decompose(),
        MapKind::Surjective => Presented::new(p.gens, Lattice::full(p.gens)).decompose(),
        MapKind::Unknown => return Err(KseqError::Underdetermined(target.name.clone())),
    };
    note_fact(map, assumed);
    Ok(piece_from(dec, target, nb))
}

/// `ker(m_{i+1})` inside node `i + 1`.
fn quot_piece(inst: &SixTermInstance, i: usize, assumed: &mut Vec<String>) -> Result<Piece, KseqError> {
    let map = &inst.maps[next(i)];
    let nb = &inst.nodes[next(i)];
    let target = &inst.nodes[i];
    let p = nb.presented().ok_or_else(|| KseqError::Underdetermined(target.name.clone()))?;
    let piece = match &map.kind {
        MapKind::Matrix(m) => {
            let q = inst.nodes[next(next(i))]
                .presented()
                .ok_or_else(|| KseqError::Underdetermined(target.name.clone()))?;
            piece_from(subquotient(&kernel_of(m, &p, &q), &p.relations), target, nb)
        }
        MapKind::Zero => piece_from(subquotient(&Lattice::full(p.gens), &p.relations), target, nb),
        MapKind::Surjective => {
            let cod = inst.nodes[next(next(i))]
                .group
                .as_ref()
                .ok_or_else(|| KseqError::Underdetermined(target.name.clone()))?;
            if !p.is_free() || !cod.is_free() {
                return Err(KseqError::Unsupported(format!(
                    "kernel of the unspecified surjection {} between groups with torsion",
                    map.name
                )));
            }
            let rank = p.gens - cod.free_rank;
            Piece {
                orders: vec![BigInt::zero(); rank],
                labels: (1..=rank).map(|k| format!("ker {} #{k}", map.name)).collect(),
                vectors: None,
                decomposition: None,
            }
        }
        MapKind::Unknown => return Err(KseqError::Underdetermined(target.name.clone())),
    };
    note_fact(map, assumed);
    Ok(piece)
}

fn note_fact(map: &HexMap, assumed: &mut Vec<String>) {
    if let Some(f) = &map.fact {
        if !assumed.contains(f) {
            assumed.push(f.clone());
        }
    }
}

/// Fills in every unknown node it can, together with the two maps
/// touching it. Free quotients split; anything else is left ambiguous.
pub fn solve_six_term(inst: &SixTermInstance) -> Result<SolvedSixTerm, KseqError> {
    validate(inst)?;
    let mut cur = inst.clone();
    let mut resolutions: Vec<Option<Resolution>> =
        cur.nodes.iter().map(|n| n.group.as_ref().map(|_| Resolution::Given)).collect();
    let mut assumed = Vec::new();
    loop {
        let mut progress = false;
        let mut blocked = None;
        for i in 0..6 {
            if resolutions[i].is_some() {
                continue;
            }
            let mut facts = Vec::new();
            let pieces = sub_piece(&cur, i, &mut facts).and_then(|s| Ok((s, quot_piece(&cur, i, &mut facts)?)));
            let (sub, quot) = match pieces {
                Ok(p) => p,
                Err(KseqError::Underdetermined(n)) => {
                    blocked.get_or_insert(n);
                    continue;
                }
                Err(e) => return Err(e),
            };
            for f in facts {
                if !assumed.contains(&f) {
                    assumed.push(f);
                }
            }
            progress = true;
            if !(sub.is_trivial() || quot.is_trivial() || quot.is_free()) {
                resolutions[i] = Some(Resolution::Ambiguous { sub: sub.group(), quot: quot.group() });
                continue;
            }
            resolutions[i] = Some(Resolution::Split { sub: sub.group(), quot: quot.group() });
            install(&mut cur, i, &sub, &quot);
        }
        if resolutions.iter().all(Option::is_some) {
            break;
        }
        if !progress {
            return Err(KseqError::Underdetermined(blocked.unwrap_or_default()));
        }
    }
    let cur = resolve_zero_maps(&cur);
    Ok(SolvedSixTerm {
        instance: cur,
        resolutions: resolutions.into_iter().map(Option::unwrap).collect(),
        assumed,
    })
}

/// Writes `K = sub ⊕ quot` into node `i` with free generators first and
/// derives the two maps touching it.
fn install(inst: &mut SixTermInstance, i: usize, sub: &Piece, quot: &Piece) {
    // (side, index) in the order of K's generators
    let mut order: Vec<(bool, usize)> = Vec::new();
    let free = |p: &Piece| (0..p.orders.len()).filter(|&k| p.orders[k].is_zero()).collect::<Vec<_>>();
    let tors = |p: &Piece| (0..p.orders.len()).filter(|&k| !p.orders[k].is_zero()).collect::<Vec<_>>();
    order.extend(free(sub).into_iter().map(|k| (false, k)));
    order.extend(free(quot).into_iter().map(|k| (true, k)));
    order.extend(tors(sub).into_iter().map(|k| (false, k)));
    order.extend(tors(quot).into_iter().map(|k| (true, k)));

    let piece = |side: bool| if side { quot } else { sub };
    let free_rank = order.iter().filter(|(s, k)| piece(*s).orders[*k].is_zero()).count();
    let factors: Vec<BigInt> = order[free_rank..].iter().map(|(s, k)| piece(*s).orders[*k].clone()).collect();
    let labels: Vec<String> = order.iter().map(|(s, k)| piece(*s).labels[*k].clone()).collect();
    let group = FGAbelian::new(free_rank, factors, labels).expect("split of a chain stays a chain");
    let n = group.num_generators();
    inst.nodes[i].group = Some(group);

    let in_idx = prev(i);
    if inst.maps[in_idx].kind == MapKind::Unknown {
        let src = inst.nodes[in_idx].gens().expect("neighbour known");
        let rows: Vec<Vec<BigInt>> = order
            .iter()
            .map(|&(s, k)| match (s, &sub.decomposition) {
                (false, Some(d)) => d.coords.row(k),
                _ => vec![BigInt::zero(); src],
            })
            .collect();
        inst.maps[in_idx].kind = MapKind::Matrix(IntMatrix::from_rows_big(n, src, rows));
        inst.maps[in_idx].derived = true;
    }
    if inst.maps[i].kind == MapKind::Unknown && (quot.is_trivial() || quot.vectors.is_some()) {
        let dst = inst.nodes[next(i)].gens().expect("neighbour known");
        let cols: Vec<Vec<BigInt>> = order
            .iter()
            .map(|&(s, k)| match (s, &quot.vectors) {
                (true, Some(v)) => v[k].clone(),
                _ => vec![BigInt::zero(); dst],
            })
            .collect();
        inst.maps[i].kind = MapKind::Matrix(IntMatrix::from_columns(dst, &cols));
        inst.maps[i].derived = true;
    }
}

/// Exactness of a finite chain `N₀ → N₁ → … → N_k` at every interior node,
/// by comparing Hermite forms of image and kernel lattices.
pub fn verify_exactness(nodes: &[Presented], maps: &[IntMatrix]) -> CheckReport {
    let report = CheckReport::new("exactness", "image equals kernel at every interior node");
    if maps.len() + 1 != nodes.len() {
        return report.require(false).detail("needs one more node than maps");
    }
    let mut failures = Vec::new();
    for (i, m) in maps.iter().enumerate() {
        if !is_well_defined(m, &nodes[i], &nodes[i + 1]) {
            failures.push(format!("map {i} is not a homomorphism of the given shape"));
        }
    }
    if failures.is_empty() {
        for j in 1..nodes.len().saturating_sub(1) {
            let im = image_of(&maps[j - 1], &nodes[j]);
            let ker = kernel_of(&maps[j], &nodes[j], &nodes[j + 1]);
            if im != ker {
                failures.push(format!(
                    "node {j}: image {:?} vs kernel {:?}",
                    im.basis().iter().map(|v| tuple_label(v)).collect::<Vec<_>>(),
                    ker.basis().iter().map(|v| tuple_label(v)).collect::<Vec<_>>()
                ));
            }
        }
    }
    let ok = failures.is_empty();
    let residual = if ok { "0".to_string() } else { failures.join("; ") };
    report.symbolic(residual, ok).detail(format!("{} interior nodes", nodes.len().saturating_sub(2)))
}

/// Exactness of a solved hexagon at every node whose two maps are known;
/// `None` when there is no such node.
pub fn verify_hexagon(solved: &SolvedSixTerm) -> Option<CheckReport> {
    let inst = &solved.instance;
    let mut checked = Vec::new();
    let mut failures = Vec::new();
    for j in 0..6 {
        let have = inst.maps[prev(j)].matrix().is_some()
            && inst.maps[j].matrix().is_some()
            && inst.nodes[j].group.is_some()
            && inst.nodes[next(j)].group.is_some();
        if !have {
            continue;
        }
        checked.push(inst.nodes[j].name.clone());
        if let Some(f) = exactness_failure(inst, j) {
            failures.push(f);
        }
    }
    if checked.is_empty() {
        return None;
    }
    let ok = failures.is_empty();
    let residual = if ok { "0".to_string() } else { failures.join("; ") };
    let r = CheckReport::new(format!("{}: exactness", inst.name), "the solved hexagon is exact")
        .symbolic(residual, ok)
        .detail(format!("checked at {}", checked.join(", ")));
    Some(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn free(n: usize) -> FGAbelian {
        FGAbelian::free(n)
    }

    fn mat(rows: &[Vec<i64>]) -> MapKind {
        MapKind::Matrix(IntMatrix::from_rows(rows))
    }

    fn sphere_mv() -> SixTermInstance {
        SixTermInstance {
            name: "mv".into(),
            nodes: vec![
                Node::unknown("K0"),
                Node::known("A0", free(2)),
                Node::known("D0", free(2)),
                Node::unknown("K1"),
                Node::known("A1", free(2)),
                Node::known("D1", free(2)),
            ],
            maps: vec![
                HexMap::new("p0", MapKind::Unknown),
                HexMap::new("d0", mat(&[vec![-1, 1], vec![0, 0]])),
                HexMap::new("e", MapKind::Unknown),
                HexMap::new("p1", MapKind::Unknown),
                HexMap::new("d1", mat(&[vec![0, 2], vec![-1, -1]])),
                HexMap::new("i", MapKind::Unknown),
            ],
        }
    }

    #[test]
    fn sphere_cosphere_groups() {
        let s = solve_six_term(&sphere_mv()).unwrap();
        assert_eq!(s.group(0).unwrap().labeled(), "ℤ[(1,1)] ⊕ ℤ₂[(1,0)]");
        assert_eq!(s.group(3).unwrap().labeled(), "ℤ[(0,1)]");
        let r = verify_hexagon(&s).unwrap();
        assert!(r.pass, "{r:?}");
        assert!(r.detail.contains("K0"));
    }

    #[test]
    fn torsion_quotient_is_ambiguous() {
        // 0 → ℤ₂ → K → ℤ₂ → 0 cannot be decided.
        let z2 = FGAbelian::new(0, vec![BigInt::from(2)], vec!["g".into()]).unwrap();
        let inst = SixTermInstance {
            name: "amb".into(),
            nodes: vec![
                Node::known("a", free(1)),
                Node::known("b", free(1)),
                Node::unknown("k"),
                Node::known("c", z2),
                Node::known("d", FGAbelian::zero()),
                Node::known("e", FGAbelian::zero()),
            ],
            maps: vec![
                HexMap::new("x2", mat(&[vec![2]])),
                HexMap::new("?", MapKind::Unknown),
                HexMap::new("?", MapKind::Unknown),
                HexMap::new("0", MapKind::Zero),
                HexMap::new("0", MapKind::Zero),
                HexMap::new("0", MapKind::Zero),
            ],
        };
        let s = solve_six_term(&inst).unwrap();
        assert!(s.is_ambiguous());
        assert!(s.group(2).is_none());
    }

    #[test]
    fn inconsistent_known_data() {
        let inst = SixTermInstance {
            name: "bad".into(),
            nodes: (0..6).map(|i| Node::known(format!("n{i}"), free(1))).collect(),
            maps: (0..6).map(|_| HexMap::new("id", mat(&[vec![1]]))).collect(),
        };
        assert!(matches!(solve_six_term(&inst), Err(KseqError::Inconsistent(_))));
    }

    #[test]
    fn chain_exactness() {
        let nodes = vec![Presented::free(0), Presented::free(1), Presented::free(1), Presented::free(0)];
        let maps = vec![IntMatrix::zeros(1, 0), IntMatrix::from_rows(&[vec![1]]), IntMatrix::zeros(0, 1)];
        assert!(verify_exactness(&nodes, &maps).pass);
        let maps2 = vec![IntMatrix::zeros(1, 0), IntMatrix::from_rows(&[vec![2]]), IntMatrix::zeros(0, 1)];
        assert!(!verify_exactness(&nodes, &maps2).pass);
    }
}
