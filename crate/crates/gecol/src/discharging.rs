//! Exact-rational discharging on plane graphs: initial charges from the
//! Euler identity, data-encoded transfer rules, and nonnegativity reports.

use crate::embedding::PlaneGraph;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use std::fmt;

pub type Rat = Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DischargingError {
    /// needs n > 2m > 0
    InvalidParameters { m: i64, n: i64 },
    Disconnected,
    UnknownCase(String),
    /// delta required by a parameterized amount but not supplied, or out of range
    BadDelta(Option<i64>),
    UnknownExpr(String),
}

impl fmt::Display for DischargingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DischargingError::InvalidParameters { m, n } => {
                write!(f, "invalid charge parameters m={m}, n={n}: need n > 2m > 0")
            }
            DischargingError::Disconnected => write!(f, "discharging needs a connected graph"),
            DischargingError::UnknownCase(c) => write!(f, "unknown rule-set case {c:?}"),
            DischargingError::BadDelta(d) => match d {
                Some(d) => write!(f, "delta = {d} out of range: need delta >= 3"),
                None => write!(f, "rule set has parameterized amounts: delta required"),
            },
            DischargingError::UnknownExpr(e) => write!(f, "unknown amount expression {e:?}"),
        }
    }
}

impl std::error::Error for DischargingError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ElementKind {
    Vertex,
    Face,
}

/// Which elements a rule endpoint matches: a kind plus a closed degree
/// interval (`deg_hi = None` means unbounded). `at_max` further restricts to
/// elements whose degree equals the graph's maximum degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegSpec {
    pub kind: ElementKind,
    pub deg_lo: usize,
    #[serde(default)]
    pub deg_hi: Option<usize>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub at_max: bool,
}

impl DegSpec {
    pub fn vertex(lo: usize, hi: Option<usize>) -> DegSpec {
        DegSpec { kind: ElementKind::Vertex, deg_lo: lo, deg_hi: hi, at_max: false }
    }

    pub fn face(lo: usize, hi: Option<usize>) -> DegSpec {
        DegSpec { kind: ElementKind::Face, deg_lo: lo, deg_hi: hi, at_max: false }
    }

    pub fn max_degree_vertex() -> DegSpec {
        DegSpec { kind: ElementKind::Vertex, deg_lo: 1, deg_hi: None, at_max: true }
    }

    fn matches(&self, kind: ElementKind, degree: usize, graph_max_degree: usize) -> bool {
        kind == self.kind
            && degree >= self.deg_lo
            && self.deg_hi.map_or(true, |hi| degree <= hi)
            && (!self.at_max || degree == graph_max_degree)
    }
}

/// How source and target elements are paired up when a rule fires.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    /// vertex/face incidence; the amount is multiplied by m_v(f)
    Incidence,
    /// adjacent vertex pairs
    VertexAdjacency,
    /// adjacent vertex pairs whose edge lies on a 3-cycle of the graph
    VertexAdjacencyWithTriangleGuard,
    /// face pairs, once per edge they share
    FaceAdjacencyPerSharedEdge,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Amount {
    Exact { num: i64, den: i64 },
    Expr { expr: String },
}

impl Amount {
    pub fn exact(num: i64, den: i64) -> Amount {
        Amount::Exact { num, den }
    }

    pub fn needs_delta(&self) -> bool {
        matches!(self, Amount::Expr { .. })
    }

    /// Resolve to a rational, substituting delta for D in expressions.
    pub fn resolve(&self, delta: Option<i64>) -> Result<Rat, DischargingError> {
        match self {
            Amount::Exact { num, den } => Ok(Rat::new(*num, *den)),
            Amount::Expr { expr } => {
                let d = delta.ok_or(DischargingError::BadDelta(None))?;
                if d < 3 {
                    return Err(DischargingError::BadDelta(Some(d)));
                }
                match expr.as_str() {
                    "2-6/D" => Ok(Rat::from_integer(2) - Rat::new(6, d)),
                    "6/D-1" => Ok(Rat::new(6, d) - Rat::from_integer(1)),
                    other => Err(DischargingError::UnknownExpr(other.to_string())),
                }
            }
        }
    }
}

/// One transfer rule. Piecewise rules from a write-up become several records
/// sharing an `id`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rule {
    pub id: String,
    pub source: DegSpec,
    pub target: DegSpec,
    pub relation: Relation,
    pub amount: Amount,
}

impl Rule {
    fn new(id: &str, source: DegSpec, target: DegSpec, relation: Relation, amount: Amount) -> Rule {
        Rule { id: id.to_string(), source, target, relation, amount }
    }
}

/// Euler parameters plus a rule set; charges are
/// c(v) = (n/2 - m)·d(v) - n and c(f) = m·d(f) - n.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChargeSystem {
    pub m: i64,
    pub n: i64,
    pub rules: Vec<Rule>,
}

impl ChargeSystem {
    pub fn new(m: i64, n: i64, rules: Vec<Rule>) -> Result<ChargeSystem, DischargingError> {
        if !(m > 0 && n > 2 * m) {
            return Err(DischargingError::InvalidParameters { m, n });
        }
        Ok(ChargeSystem { m, n, rules })
    }

    pub fn vertex_charge(&self, degree: usize) -> Rat {
        (Rat::new(self.n, 2) - Rat::from_integer(self.m)) * Rat::from_integer(degree as i64)
            - Rat::from_integer(self.n)
    }

    pub fn face_charge(&self, degree: usize) -> Rat {
        Rat::from_integer(self.m) * Rat::from_integer(degree as i64)
            - Rat::from_integer(self.n)
    }

    pub fn needs_delta(&self) -> bool {
        self.rules.iter().any(|r| r.amount.needs_delta())
    }
}

/// Before/after charges, vertices then faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeMap {
    pub vertex_before: Vec<Rat>,
    pub vertex_after: Vec<Rat>,
    pub face_before: Vec<Rat>,
    pub face_after: Vec<Rat>,
}

impl ChargeMap {
    pub fn total_before(&self) -> Rat {
        self.vertex_before.iter().chain(&self.face_before).sum()
    }

    pub fn total_after(&self) -> Rat {
        self.vertex_after.iter().chain(&self.face_after).sum()
    }

    /// CSV rows: element id, kind, degree, before, after.
    pub fn to_csv(&self, pg: &PlaneGraph) -> String {
        let mut out = String::from("element,kind,degree,before,after\n");
        for v in 0..self.vertex_before.len() {
            out.push_str(&format!(
                "v{v},vertex,{},{},{}\n",
                pg.graph().degree(v),
                self.vertex_before[v],
                self.vertex_after[v]
            ));
        }
        for f in 0..self.face_before.len() {
            out.push_str(&format!(
                "f{f},face,{},{},{}\n",
                pg.faces()[f].degree(),
                self.face_before[f],
                self.face_after[f]
            ));
        }
        out
    }
}

/// Charges before any discharging: c(v) = (n/2 - m)d(v) - n, c(f) = m·d(f) - n.
/// For a connected sphere embedding the total is exactly -2n.
pub fn initial_charges(pg: &PlaneGraph, m: i64, n: i64) -> Result<ChargeMap, DischargingError> {
    let sys = ChargeSystem::new(m, n, Vec::new())?;
    if !pg.graph().is_connected() {
        return Err(DischargingError::Disconnected);
    }
    let vertex: Vec<Rat> = (0..pg.graph().vertex_count())
        .map(|v| sys.vertex_charge(pg.graph().degree(v)))
        .collect();
    let face: Vec<Rat> = pg.faces().iter().map(|f| sys.face_charge(f.degree())).collect();
    Ok(ChargeMap {
        vertex_after: vertex.clone(),
        face_after: face.clone(),
        vertex_before: vertex,
        face_before: face,
    })
}

pub const BUILTIN_CASES: [&str; 5] = ["T4-1", "T4-2", "T4-3", "T4-4", "T5"];

/// The built-in rule sets. `delta` is required for T5 (and must be >= 3);
/// the other cases ignore it.
pub fn builtin_ruleset(
    case: &str,
    delta: Option<i64>,
) -> Result<ChargeSystem, DischargingError> {
    use Amount as A;
    use Relation::*;
    let v = DegSpec::vertex;
    let f = DegSpec::face;
    let r = Rule::new;
    match case {
        // big faces feed small vertices; high vertices feed 3-vertices over triangles
        "T4-1" => ChargeSystem::new(
            2,
            6,
            vec![
                r("R1.1", f(4, None), v(3, Some(5)), Incidence, A::exact(1, 1)),
                r("R1.2", v(8, None), v(3, Some(3)), VertexAdjacencyWithTriangleGuard, A::exact(1, 2)),
            ],
        ),
        "T4-2" => ChargeSystem::new(
            3,
            10,
            vec![
                r("R2.1", v(6, None), v(3, Some(3)), VertexAdjacency, A::exact(1, 3)),
                r("R2.2", f(4, Some(4)), v(3, Some(3)), Incidence, A::exact(1, 1)),
                r("R2.2", f(4, Some(4)), v(4, Some(4)), Incidence, A::exact(1, 2)),
                r("R2.3", f(5, None), v(3, Some(3)), Incidence, A::exact(3, 2)),
                r("R2.3", f(5, None), v(4, Some(4)), Incidence, A::exact(1, 1)),
                r("R2.4", f(5, None), f(3, Some(3)), FaceAdjacencyPerSharedEdge, A::exact(1, 3)),
            ],
        ),
        "T4-3" => ChargeSystem::new(
            2,
            6,
            vec![
                r("R3.1", f(5, Some(5)), v(3, Some(3)), Incidence, A::exact(1, 1)),
                r("R3.1", f(5, Some(5)), v(4, Some(4)), Incidence, A::exact(1, 2)),
                r("R3.1", f(5, Some(5)), v(5, Some(5)), Incidence, A::exact(1, 5)),
                r("R3.2", f(6, None), v(3, Some(3)), Incidence, A::exact(3, 2)),
                r("R3.2", f(6, None), v(4, Some(4)), Incidence, A::exact(1, 1)),
                r("R3.2", f(6, None), v(5, Some(5)), Incidence, A::exact(1, 3)),
            ],
        ),
        "T4-4" => ChargeSystem::new(
            2,
            6,
            vec![
                r("R4.1", f(5, Some(7)), v(3, Some(3)), Incidence, A::exact(1, 1)),
                r("R4.1", f(5, Some(7)), v(4, None), Incidence, A::exact(1, 2)),
                r("R4.2", f(8, None), v(3, Some(3)), Incidence, A::exact(3, 2)),
                r("R4.2", f(8, None), v(4, None), Incidence, A::exact(1, 1)),
            ],
        ),
        "T5" => {
            let d = delta.ok_or(DischargingError::BadDelta(None))?;
            if d < 3 {
                return Err(DischargingError::BadDelta(Some(d)));
            }
            ChargeSystem::new(
                1,
                6,
                vec![
                    r(
                        "R1",
                        DegSpec::max_degree_vertex(),
                        v(2, Some(2)),
                        VertexAdjacency,
                        A::Expr { expr: "2-6/D".to_string() },
                    ),
                    r(
                        "R2",
                        f(1, None),
                        v(2, Some(2)),
                        Incidence,
                        A::Expr { expr: "6/D-1".to_string() },
                    ),
                ],
            )
        }
        other => Err(DischargingError::UnknownCase(other.to_string())),
    }
}

/// Run every rule everywhere it matches. Transfers are additive, so the
/// result is independent of rule order; the total charge never changes.
pub fn apply_rules(
    pg: &PlaneGraph,
    sys: &ChargeSystem,
    delta: Option<i64>,
) -> Result<ChargeMap, DischargingError> {
    let mut cm = initial_charges(pg, sys.m, sys.n)?;
    let g = pg.graph();
    let gmax = g.max_degree();

    // (kind, index, degree) lookups shared by all relations
    let vdeg = |x: usize| g.degree(x);
    let fdeg = |x: usize| pg.faces()[x].degree();

    let transfer = |cm: &mut ChargeMap, src: (ElementKind, usize), tgt: (ElementKind, usize), amt: Rat| {
        match src.0 {
            ElementKind::Vertex => cm.vertex_after[src.1] -= amt,
            ElementKind::Face => cm.face_after[src.1] -= amt,
        }
        match tgt.0 {
            ElementKind::Vertex => cm.vertex_after[tgt.1] += amt,
            ElementKind::Face => cm.face_after[tgt.1] += amt,
        }
    };

    for rule in &sys.rules {
        let amt = rule.amount.resolve(delta)?;
        match rule.relation {
            Relation::Incidence => {
                for (fi, face) in pg.faces().iter().enumerate() {
                    for v in face.vertices() {
                        let mult = face.multiplicity(v) as i64;
                        let pairs = [
                            ((ElementKind::Face, fi, fdeg(fi)), (ElementKind::Vertex, v, vdeg(v))),
                            ((ElementKind::Vertex, v, vdeg(v)), (ElementKind::Face, fi, fdeg(fi))),
                        ];
                        for (s, t) in pairs {
                            if rule.source.matches(s.0, s.2, gmax)
                                && rule.target.matches(t.0, t.2, gmax)
                            {
                                transfer(
                                    &mut cm,
                                    (s.0, s.1),
                                    (t.0, t.1),
                                    amt * Rat::from_integer(mult),
                                );
                            }
                        }
                    }
                }
            }
            Relation::VertexAdjacency | Relation::VertexAdjacencyWithTriangleGuard => {
                let guard = rule.relation == Relation::VertexAdjacencyWithTriangleGuard;
                for &(a, b) in g.edges() {
                    if guard && !g.edge_on_triangle(a, b) {
                        continue;
                    }
                    for (s, t) in [(a, b), (b, a)] {
                        if rule.source.matches(ElementKind::Vertex, vdeg(s), gmax)
                            && rule.target.matches(ElementKind::Vertex, vdeg(t), gmax)
                        {
                            transfer(
                                &mut cm,
                                (ElementKind::Vertex, s),
                                (ElementKind::Vertex, t),
                                amt,
                            );
                        }
                    }
                }
            }
            Relation::FaceAdjacencyPerSharedEdge => {
                for &(a, b) in g.edges() {
                    let f1 = pg.face_of_dart(a, b).expect("dart traced");
                    let f2 = pg.face_of_dart(b, a).expect("dart traced");
                    for (s, t) in [(f1, f2), (f2, f1)] {
                        if s != t
                            && rule.source.matches(ElementKind::Face, fdeg(s), gmax)
                            && rule.target.matches(ElementKind::Face, fdeg(t), gmax)
                        {
                            transfer(&mut cm, (ElementKind::Face, s), (ElementKind::Face, t), amt);
                        }
                    }
                }
            }
        }
    }
    Ok(cm)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NegativeElement {
    pub id: String,
    pub kind: ElementKind,
    pub degree: usize,
    pub value: Rat,
}

/// Every vertex or face whose final charge is negative, most negative first.
pub fn nonnegativity_report(pg: &PlaneGraph, cm: &ChargeMap) -> Vec<NegativeElement> {
    let zero = Rat::from_integer(0);
    let mut out = Vec::new();
    for (v, &val) in cm.vertex_after.iter().enumerate() {
        if val < zero {
            out.push(NegativeElement {
                id: format!("v{v}"),
                kind: ElementKind::Vertex,
                degree: pg.graph().degree(v),
                value: val,
            });
        }
    }
    for (f, &val) in cm.face_after.iter().enumerate() {
        if val < zero {
            out.push(NegativeElement {
                id: format!("f{f}"),
                kind: ElementKind::Face,
                degree: pg.faces()[f].degree(),
                value: val,
            });
        }
    }
    out.sort_by(|a, b| a.value.cmp(&b.value).then_with(|| a.id.cmp(&b.id)));
    out
}
