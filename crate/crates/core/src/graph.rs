//! Finite k-graphs presented by a colored skeleton plus factorization squares.
//!
//! A [`Presentation`] is unchecked input data. [`validate`] reports every
//! violated invariant, and [`KGraph::new`] turns a clean presentation into an
//! indexed, immutable graph. Vertices and edges are stored in lexicographic
//! order of their ids, so indices double as canonical positions.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};

/// Default per-coordinate cap on degrees that enumeration will accept.
pub const DEFAULT_ENUM_CAP: u32 = 8;
/// Default limit on the number of vertices of a constructed dual graph.
pub const DEFAULT_DUAL_VERTEX_LIMIT: usize = 20_000;
/// Environment variable overriding [`DEFAULT_ENUM_CAP`].
pub const ENUM_CAP_ENV: &str = "KG_ENUM_CAP";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub enum_cap: u32,
    pub dual_vertex_limit: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enum_cap: DEFAULT_ENUM_CAP,
            dual_vertex_limit: DEFAULT_DUAL_VERTEX_LIMIT,
        }
    }
}

impl Limits {
    /// Defaults, with the enumeration cap taken from `KG_ENUM_CAP` when it
    /// holds a valid number.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(cap) = std::env::var(ENUM_CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
        {
            limits.enum_cap = cap;
        }
        limits
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub(crate) u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId(pub(crate) u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl EdgeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    /// 1-based color.
    pub color: usize,
    pub source: VertexId,
    pub range: VertexId,
}

/// The identity `a b = c d` with `color(a) = color(d) = i < j = color(b) = color(c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Square {
    pub a: EdgeId,
    pub b: EdgeId,
    pub c: EdgeId,
    pub d: EdgeId,
}

// ---------------------------------------------------------------------------
// Unchecked input

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexDecl {
    pub id: String,
    pub line: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeDecl {
    pub id: String,
    pub color: usize,
    pub source: String,
    pub range: String,
    pub line: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareDecl {
    pub edges: [String; 4],
    pub line: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Presentation {
    pub rank: usize,
    pub vertices: Vec<VertexDecl>,
    pub edges: Vec<EdgeDecl>,
    pub squares: Vec<SquareDecl>,
}

impl Presentation {
    pub fn new(rank: usize) -> Self {
        Presentation {
            rank,
            ..Default::default()
        }
    }

    pub fn vertex(&mut self, id: impl Into<String>) -> &mut Self {
        self.vertices.push(VertexDecl {
            id: id.into(),
            line: None,
        });
        self
    }

    /// Adds an edge of the given 1-based color from `source` to `range`.
    pub fn edge(
        &mut self,
        id: impl Into<String>,
        color: usize,
        source: impl Into<String>,
        range: impl Into<String>,
    ) -> &mut Self {
        self.edges.push(EdgeDecl {
            id: id.into(),
            color,
            source: source.into(),
            range: range.into(),
            line: None,
        });
        self
    }

    /// Declares `a b = c d`.
    pub fn square(&mut self, a: &str, b: &str, c: &str, d: &str) -> &mut Self {
        self.squares.push(SquareDecl {
            edges: [a.into(), b.into(), c.into(), d.into()],
            line: None,
        });
        self
    }

    pub fn build(&self) -> std::result::Result<KGraph, ValidationReport> {
        KGraph::new(self)
    }
}

// ---------------------------------------------------------------------------
// Validation

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    ZeroRank,
    DuplicateVertex(String),
    DuplicateEdge(String),
    ColorOutOfRange { edge: String, color: usize, rank: usize },
    DanglingEndpoint { edge: String, vertex: String },
    UnknownSquareEdge { edge: String },
    SquareColors { square: [String; 4] },
    SquareNotComposable { first: String, second: String },
    SquareEndpoints { square: [String; 4] },
    MissingSquare { first: String, second: String },
    DuplicateSquare { first: String, second: String },
    NotInjective { first: String, second: String },
    Unmatched { first: String, second: String },
    CubeFailure { edges: [String; 3] },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        match self {
            ZeroRank => write!(f, "rank must be at least 1"),
            DuplicateVertex(v) => write!(f, "duplicate vertex {v}"),
            DuplicateEdge(e) => write!(f, "duplicate edge {e}"),
            ColorOutOfRange { edge, color, rank } => {
                write!(f, "edge {edge}: color out of range ({color} not in 1..={rank})")
            }
            DanglingEndpoint { edge, vertex } => {
                write!(f, "edge {edge}: unknown vertex {vertex}")
            }
            UnknownSquareEdge { edge } => write!(f, "square refers to unknown edge {edge}"),
            SquareColors { square } => write!(
                f,
                "square {}: colors must read i j j i with i < j",
                square.join(" ")
            ),
            SquareNotComposable { first, second } => {
                write!(f, "square pair ({first},{second}) is not composable")
            }
            SquareEndpoints { square } => write!(
                f,
                "square {}: the two sides have different endpoints",
                square.join(" ")
            ),
            MissingSquare { first, second } => {
                write!(f, "composable pair ({first},{second}) has no square")
            }
            DuplicateSquare { first, second } => {
                write!(f, "composable pair ({first},{second}) appears in more than one square")
            }
            NotInjective { first, second } => write!(
                f,
                "pair ({first},{second}) is the image of more than one square"
            ),
            Unmatched { first, second } => write!(
                f,
                "composable pair ({first},{second}) is not the image of any square"
            ),
            CubeFailure { edges } => write!(
                f,
                "cube condition fails for composable triple {}",
                edges.join(" ")
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: Option<usize>,
    pub violation: Violation,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(l) => write!(f, "line {l}: {}", self.violation),
            None => write!(f, "{}", self.violation),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub diagnostics: Vec<Diagnostic>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.diagnostics.is_empty()
    }

    pub fn violations(&self) -> impl Iterator<Item = &Violation> {
        self.diagnostics.iter().map(|d| &d.violation)
    }

    fn push(&mut self, line: Option<usize>, violation: Violation) {
        self.diagnostics.push(Diagnostic { line, violation });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.diagnostics {
            writeln!(f, "{d}")?;
        }
        Ok(())
    }
}

/// Checks every invariant of a k-graph presentation. Never aborts early; an
/// empty report means `KGraph::new` will succeed.
pub fn validate(p: &Presentation) -> ValidationReport {
    match KGraph::new(p) {
        Ok(_) => ValidationReport::default(),
        Err(report) => report,
    }
}

// ---------------------------------------------------------------------------
// The graph

#[derive(Clone, Debug)]
pub struct KGraph {
    rank: usize,
    vertices: Vec<String>,
    edges: Vec<Edge>,
    squares: Vec<Square>,
    vertex_ids: HashMap<String, VertexId>,
    edge_ids: HashMap<String, EdgeId>,
    /// Both directions of every square: `(a,b) -> (c,d)` and `(c,d) -> (a,b)`.
    swap: HashMap<(EdgeId, EdgeId), (EdgeId, EdgeId)>,
    /// `incoming[v][color-1]`: edges with range `v`, in id order.
    incoming: Vec<Vec<Vec<EdgeId>>>,
    /// `outgoing[v][color-1]`: edges with source `v`, in id order.
    outgoing: Vec<Vec<Vec<EdgeId>>>,
    limits: Limits,
}

impl PartialEq for KGraph {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank
            && self.vertices == other.vertices
            && self.edges == other.edges
            && self.squares == other.squares
    }
}

impl Eq for KGraph {}

impl KGraph {
    pub fn new(p: &Presentation) -> std::result::Result<KGraph, ValidationReport> {
        let mut report = ValidationReport::default();
        if p.rank == 0 {
            report.push(None, Violation::ZeroRank);
        }

        let mut vertex_names: Vec<&str> = Vec::new();
        let mut seen = HashSet::new();
        for v in &p.vertices {
            if seen.insert(v.id.as_str()) {
                vertex_names.push(&v.id);
            } else {
                report.push(v.line, Violation::DuplicateVertex(v.id.clone()));
            }
        }
        vertex_names.sort_unstable();
        let vertex_ids: HashMap<String, VertexId> = vertex_names
            .iter()
            .enumerate()
            .map(|(i, v)| (v.to_string(), VertexId(i as u32)))
            .collect();

        let mut edge_decls: Vec<&EdgeDecl> = Vec::new();
        let mut seen = HashSet::new();
        for e in &p.edges {
            let mut ok = true;
            if !seen.insert(e.id.as_str()) {
                report.push(e.line, Violation::DuplicateEdge(e.id.clone()));
                continue;
            }
            if e.color == 0 || e.color > p.rank {
                report.push(
                    e.line,
                    Violation::ColorOutOfRange {
                        edge: e.id.clone(),
                        color: e.color,
                        rank: p.rank,
                    },
                );
                ok = false;
            }
            for end in [&e.source, &e.range] {
                if !vertex_ids.contains_key(end) {
                    report.push(
                        e.line,
                        Violation::DanglingEndpoint {
                            edge: e.id.clone(),
                            vertex: end.clone(),
                        },
                    );
                    ok = false;
                }
            }
            if ok {
                edge_decls.push(e);
            }
        }
        edge_decls.sort_unstable_by(|a, b| a.id.cmp(&b.id));
        let edges: Vec<Edge> = edge_decls
            .iter()
            .map(|e| Edge {
                id: e.id.clone(),
                color: e.color,
                source: vertex_ids[&e.source],
                range: vertex_ids[&e.range],
            })
            .collect();
        let edge_ids: HashMap<String, EdgeId> = edges
            .iter()
            .enumerate()
            .map(|(i, e)| (e.id.clone(), EdgeId(i as u32)))
            .collect();
        // Edges that were declared but rejected; squares mentioning them are
        // skipped silently since the edge itself is already reported.
        let rejected: HashSet<&str> = p
            .edges
            .iter()
            .map(|e| e.id.as_str())
            .filter(|id| !edge_ids.contains_key(*id))
            .collect();

        let mut squares = Vec::new();
        let mut forward: HashMap<(EdgeId, EdgeId), usize> = HashMap::new();
        let mut backward: HashMap<(EdgeId, EdgeId), usize> = HashMap::new();
        for sq in &p.squares {
            let mut ids = Vec::with_capacity(4);
            for name in &sq.edges {
                match edge_ids.get(name) {
                    Some(&id) => ids.push(id),
                    None if rejected.contains(name.as_str()) => {}
                    None => report.push(
                        sq.line,
                        Violation::UnknownSquareEdge { edge: name.clone() },
                    ),
                }
            }
            if ids.len() != 4 {
                continue;
            }
            let [a, b, c, d] = [ids[0], ids[1], ids[2], ids[3]];
            let e = |x: EdgeId| &edges[x.index()];
            if !(e(a).color < e(b).color && e(c).color == e(b).color && e(d).color == e(a).color)
            {
                report.push(
                    sq.line,
                    Violation::SquareColors {
                        square: sq.edges.clone(),
                    },
                );
                continue;
            }
            let mut ok = true;
            for (x, y) in [(a, b), (c, d)] {
                if e(x).source != e(y).range {
                    report.push(
                        sq.line,
                        Violation::SquareNotComposable {
                            first: e(x).id.clone(),
                            second: e(y).id.clone(),
                        },
                    );
                    ok = false;
                }
            }
            if ok && (e(a).range != e(c).range || e(b).source != e(d).source) {
                report.push(
                    sq.line,
                    Violation::SquareEndpoints {
                        square: sq.edges.clone(),
                    },
                );
                ok = false;
            }
            if !ok {
                continue;
            }
            let fwd = forward.entry((a, b)).or_insert(0);
            *fwd += 1;
            if *fwd == 2 {
                report.push(
                    sq.line,
                    Violation::DuplicateSquare {
                        first: e(a).id.clone(),
                        second: e(b).id.clone(),
                    },
                );
            }
            let bwd = backward.entry((c, d)).or_insert(0);
            *bwd += 1;
            if *bwd == 2 {
                report.push(
                    sq.line,
                    Violation::NotInjective {
                        first: e(c).id.clone(),
                        second: e(d).id.clone(),
                    },
                );
            }
            squares.push(Square { a, b, c, d });
        }

        let nv = vertex_names.len();
        let rank = p.rank.max(1);
        let mut incoming = vec![vec![Vec::new(); rank]; nv];
        let mut outgoing = vec![vec![Vec::new(); rank]; nv];
        for (i, e) in edges.iter().enumerate() {
            incoming[e.range.index()][e.color - 1].push(EdgeId(i as u32));
            outgoing[e.source.index()][e.color - 1].push(EdgeId(i as u32));
        }

        // Every bichromatic composable pair must be covered exactly once.
        for (i, x) in edges.iter().enumerate() {
            for colors in incoming[x.source.index()].iter() {
                for &y in colors {
                    let ey = &edges[y.index()];
                    if ey.color == x.color {
                        continue;
                    }
                    let pair = (EdgeId(i as u32), y);
                    if x.color < ey.color && !forward.contains_key(&pair) {
                        report.push(
                            None,
                            Violation::MissingSquare {
                                first: x.id.clone(),
                                second: ey.id.clone(),
                            },
                        );
                    }
                    if x.color > ey.color && !backward.contains_key(&pair) {
                        report.push(
                            None,
                            Violation::Unmatched {
                                first: x.id.clone(),
                                second: ey.id.clone(),
                            },
                        );
                    }
                }
            }
        }

        if !report.is_empty() {
            return Err(report);
        }

        let mut swap = HashMap::with_capacity(2 * squares.len());
        for s in &squares {
            swap.insert((s.a, s.b), (s.c, s.d));
            swap.insert((s.c, s.d), (s.a, s.b));
        }
        squares.sort_unstable_by(|x, y| {
            let key = |s: &Square| [s.a, s.b, s.c, s.d].map(|e| edges[e.index()].id.clone());
            key(x).cmp(&key(y))
        });

        let graph = KGraph {
            rank: p.rank,
            vertices: vertex_names.into_iter().map(String::from).collect(),
            edges,
            squares,
            vertex_ids,
            edge_ids,
            swap,
            incoming,
            outgoing,
            limits: Limits::default(),
        };
        if graph.rank >= 3 {
            graph.check_cubes(&mut report);
        }
        if report.is_empty() {
            Ok(graph)
        } else {
            Err(report)
        }
    }

    /// For every composable triple with strictly increasing colors, the two
    /// braid-move sequences that reverse it must agree.
    fn check_cubes(&self, report: &mut ValidationReport) {
        for i in 0..self.edges.len() {
            let x = EdgeId(i as u32);
            let cx = self.edge(x).color;
            for cy in cx + 1..=self.rank {
                for &y in &self.incoming[self.edge(x).source.index()][cy - 1] {
                    for cz in cy + 1..=self.rank {
                        for &z in &self.incoming[self.edge(y).source.index()][cz - 1] {
                            let start = [x, y, z];
                            let left = self.braid(start, &[0, 1, 0]);
                            let right = self.braid(start, &[1, 0, 1]);
                            if left != right {
                                report.push(
                                    None,
                                    Violation::CubeFailure {
                                        edges: start.map(|e| self.edge(e).id.clone()),
                                    },
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    fn braid(&self, mut triple: [EdgeId; 3], moves: &[usize]) -> [EdgeId; 3] {
        for &pos in moves {
            let (p, q) = self.swap[&(triple[pos], triple[pos + 1])];
            triple[pos] = p;
            triple[pos + 1] = q;
        }
        triple
    }

    /// The presentation this graph was built from, in canonical order.
    pub fn presentation(&self) -> Presentation {
        let mut p = Presentation::new(self.rank);
        for v in &self.vertices {
            p.vertex(v.clone());
        }
        for e in &self.edges {
            p.edge(
                e.id.clone(),
                e.color,
                self.vertex_name(e.source),
                self.vertex_name(e.range),
            );
        }
        for s in &self.squares {
            let n = |e: EdgeId| self.edge(e).id.as_str();
            p.square(n(s.a), n(s.b), n(s.c), n(s.d));
        }
        p
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertices.len() as u32).map(VertexId)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edges.len() as u32).map(EdgeId)
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v.index()]
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e.index()]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn squares(&self) -> &[Square] {
        &self.squares
    }

    pub fn vertex(&self, name: &str) -> Result<VertexId> {
        self.vertex_ids
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn edge_by_name(&self, name: &str) -> Result<EdgeId> {
        self.edge_ids
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownEdge(name.to_string()))
    }

    /// Edges of the given color with range `v`.
    pub fn incoming(&self, v: VertexId, color: usize) -> &[EdgeId] {
        &self.incoming[v.index()][color - 1]
    }

    /// Edges of the given color with source `v`.
    pub fn outgoing(&self, v: VertexId, color: usize) -> &[EdgeId] {
        &self.outgoing[v.index()][color - 1]
    }

    /// The other side of the square containing the adjacent pair `(x, y)`.
    pub(crate) fn swap_pair(&self, x: EdgeId, y: EdgeId) -> (EdgeId, EdgeId) {
        self.swap[&(x, y)]
    }

    pub(crate) fn check_color(&self, color: usize) -> Result<()> {
        if color == 0 || color > self.rank {
            return Err(Error::ColorOutOfRange {
                color,
                rank: self.rank,
            });
        }
        Ok(())
    }
}
