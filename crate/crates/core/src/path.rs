//! Paths in a k-graph, kept in color-nondecreasing normal form.
//!
//! Edge sequences read from the range end to the source end: `[x, y]` is the
//! composite `x y` with `s(x) = r(y)`. Reordering uses the factorization
//! squares one adjacent pair at a time; for a valid graph the result does not
//! depend on the order of the moves.

use std::collections::VecDeque;
use std::ops::ControlFlow;

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, KGraph, VertexId};
use crate::matrix::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    range: VertexId,
    source: VertexId,
    degree: Degree,
    edges: Vec<EdgeId>,
}

impl Path {
    pub fn range(&self) -> VertexId {
        self.range
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn degree(&self) -> &Degree {
        &self.degree
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn is_vertex(&self) -> bool {
        self.edges.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StructuralReport {
    pub row_finite: bool,
    pub no_sources: bool,
    pub no_sinks: bool,
    pub strongly_connected: bool,
    pub finite: bool,
}

impl KGraph {
    /// The degree-0 path at `v`.
    pub fn identity(&self, v: VertexId) -> Path {
        Path {
            range: v,
            source: v,
            degree: Degree::zero(self.rank()),
            edges: Vec::new(),
        }
    }

    pub fn edge_path(&self, e: EdgeId) -> Path {
        let edge = self.edge(e);
        Path {
            range: edge.range,
            source: edge.source,
            degree: Degree::unit(self.rank(), edge.color),
            edges: vec![e],
        }
    }

    /// Normal form of a composable edge sequence.
    pub fn normalize(&self, raw: &[EdgeId]) -> Result<Path> {
        let Some(&first) = raw.first() else {
            return Err(Error::EmptyPath);
        };
        for w in raw.windows(2) {
            if self.edge(w[0]).source != self.edge(w[1]).range {
                return Err(Error::NotComposable {
                    first: self.edge(w[0]).id.clone(),
                    second: self.edge(w[1]).id.clone(),
                });
            }
        }
        let mut counts = vec![0u32; self.rank()];
        for &e in raw {
            counts[self.edge(e).color - 1] += 1;
        }
        let degree = Degree::new(counts);
        let edges = self.reorder(raw, &degree.color_sequence());
        Ok(Path {
            range: self.edge(first).range,
            source: self.edge(*raw.last().unwrap()).source,
            degree,
            edges,
        })
    }

    /// Convenience: normal form of the path spelled by edge ids.
    pub fn path(&self, names: &[&str]) -> Result<Path> {
        let ids = names
            .iter()
            .map(|n| self.edge_by_name(n))
            .collect::<Result<Vec<_>>>()?;
        self.normalize(&ids)
    }

    /// Rewrites a composable sequence so its colors read `target`, using
    /// square moves. `target` must be a rearrangement of the current colors.
    pub(crate) fn reorder(&self, raw: &[EdgeId], target: &[usize]) -> Vec<EdgeId> {
        debug_assert_eq!(raw.len(), target.len());
        let mut cur = raw.to_vec();
        for (pos, &color) in target.iter().enumerate() {
            let found = (pos..cur.len())
                .find(|&q| self.edge(cur[q]).color == color)
                .expect("target colors are a permutation of the path colors");
            for q in (pos + 1..=found).rev() {
                let (x, y) = self.swap_pair(cur[q - 1], cur[q]);
                cur[q - 1] = x;
                cur[q] = y;
            }
        }
        cur
    }

    pub fn compose(&self, lambda: &Path, mu: &Path) -> Result<Path> {
        if lambda.source != mu.range {
            return Err(Error::EndpointMismatch {
                source_vertex: self.vertex_name(lambda.source).into(),
                range_vertex: self.vertex_name(mu.range).into(),
            });
        }
        if lambda.is_vertex() {
            return Ok(mu.clone());
        }
        if mu.is_vertex() {
            return Ok(lambda.clone());
        }
        let mut raw = lambda.edges.clone();
        raw.extend_from_slice(&mu.edges);
        self.normalize(&raw)
    }

    /// `lambda(m, n)`: the unique middle factor of degree `n - m`.
    pub fn segment(&self, lambda: &Path, m: &Degree, n: &Degree) -> Result<Path> {
        self.check_degree(m)?;
        self.check_degree(n)?;
        let out_of_range = || Error::SegmentOutOfRange {
            m: m.to_string(),
            n: n.to_string(),
            degree: lambda.degree.to_string(),
        };
        if !(m <= n && n <= &lambda.degree) {
            return Err(out_of_range());
        }
        let middle = n.checked_sub(m).ok_or_else(out_of_range)?;
        let tail = lambda.degree.checked_sub(n).ok_or_else(out_of_range)?;

        let mut target = m.color_sequence();
        target.extend(middle.color_sequence());
        target.extend(tail.color_sequence());
        let edges = self.reorder(&lambda.edges, &target);

        let start = m.total();
        let end = start + middle.total();
        let at = |i: usize| {
            if i == 0 {
                lambda.range
            } else {
                self.edge(edges[i - 1]).source
            }
        };
        Ok(Path {
            range: at(start),
            source: at(end),
            degree: middle,
            edges: edges[start..end].to_vec(),
        })
    }

    /// `s(lambda(0, m))`.
    pub fn vertex_at(&self, lambda: &Path, m: &Degree) -> Result<VertexId> {
        Ok(self.segment(lambda, &Degree::zero(self.rank()), m)?.source)
    }

    /// `v Lambda^n`: every path of degree `n` with range `v`, in lexicographic
    /// order of edge ids.
    pub fn paths_from(&self, v: VertexId, n: &Degree) -> Result<Vec<Path>> {
        self.check_enumerable(n)?;
        let mut out = Vec::new();
        let _ = self.walk_paths(v, n, &mut |p| {
            out.push(p);
            ControlFlow::<()>::Continue(())
        });
        Ok(out)
    }

    /// `Lambda^n`, grouped by range vertex in canonical order.
    pub fn paths_of_degree(&self, n: &Degree) -> Result<Vec<Path>> {
        self.check_enumerable(n)?;
        let mut out = Vec::new();
        for v in self.vertex_ids() {
            out.extend(self.paths_from(v, n)?);
        }
        Ok(out)
    }

    /// Visits every path of degree `n` with range `v` until `visit` breaks.
    pub fn search_paths_from<B>(
        &self,
        v: VertexId,
        n: &Degree,
        visit: &mut dyn FnMut(Path) -> ControlFlow<B>,
    ) -> Result<Option<B>> {
        self.check_enumerable(n)?;
        Ok(match self.walk_paths(v, n, visit) {
            ControlFlow::Break(b) => Some(b),
            ControlFlow::Continue(()) => None,
        })
    }

    fn walk_paths<B>(
        &self,
        v: VertexId,
        n: &Degree,
        visit: &mut dyn FnMut(Path) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        let colors = n.color_sequence();
        let mut stack: Vec<EdgeId> = Vec::with_capacity(colors.len());
        self.walk_rec(v, v, n, &colors, &mut stack, visit)
    }

    fn walk_rec<B>(
        &self,
        range: VertexId,
        at: VertexId,
        n: &Degree,
        colors: &[usize],
        stack: &mut Vec<EdgeId>,
        visit: &mut dyn FnMut(Path) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        let depth = stack.len();
        if depth == colors.len() {
            return visit(Path {
                range,
                source: at,
                degree: n.clone(),
                edges: stack.clone(),
            });
        }
        for &e in self.incoming(at, colors[depth]) {
            stack.push(e);
            let flow = self.walk_rec(range, self.edge(e).source, n, colors, stack, visit);
            stack.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }

    /// `(M_i)_{v,w} = |w Lambda^{e_i} v|`: rows are indexed by source, columns
    /// by range, both in canonical vertex order.
    pub fn coordinate_matrix(&self, color: usize) -> Result<IntMatrix> {
        self.check_color(color)?;
        let n = self.vertex_count();
        let mut m = IntMatrix::zeros(n, n);
        for e in self.edges().iter().filter(|e| e.color == color) {
            m[(e.source.index(), e.range.index())] += 1;
        }
        Ok(m)
    }

    pub fn coordinate_matrices(&self) -> Vec<IntMatrix> {
        (1..=self.rank())
            .map(|i| self.coordinate_matrix(i).expect("color in range"))
            .collect()
    }

    /// Entry `(v, w)` is `|w Lambda^n v|`, computed as `M_1^{n_1} ... M_k^{n_k}`.
    pub fn count_paths(&self, n: &Degree) -> Result<IntMatrix> {
        self.check_degree(n)?;
        let mut acc = IntMatrix::identity(self.vertex_count());
        for (i, m) in self.coordinate_matrices().iter().enumerate() {
            acc = &acc * &m.pow(n[i]);
        }
        Ok(acc)
    }

    pub fn structural_report(&self) -> StructuralReport {
        let colors = 1..=self.rank();
        let no_sources = self
            .vertex_ids()
            .all(|v| colors.clone().all(|c| !self.incoming(v, c).is_empty()));
        let no_sinks = self
            .vertex_ids()
            .all(|v| colors.clone().all(|c| !self.outgoing(v, c).is_empty()));
        StructuralReport {
            row_finite: true,
            no_sources,
            no_sinks,
            strongly_connected: self.is_strongly_connected(),
            finite: true,
        }
    }

    /// Every vertex reaches every other along edges of any color.
    pub fn is_strongly_connected(&self) -> bool {
        let n = self.vertex_count();
        if n <= 1 {
            return true;
        }
        let start = VertexId(0);
        let forward = self.reachable(start, |e| (e.range, e.source));
        let backward = self.reachable(start, |e| (e.source, e.range));
        forward.iter().all(|&r| r) && backward.iter().all(|&r| r)
    }

    fn reachable(
        &self,
        start: VertexId,
        step: impl Fn(&crate::graph::Edge) -> (VertexId, VertexId),
    ) -> Vec<bool> {
        let mut adjacency = vec![Vec::new(); self.vertex_count()];
        for e in self.edges() {
            let (from, to) = step(e);
            adjacency[from.index()].push(to);
        }
        let mut seen = vec![false; self.vertex_count()];
        seen[start.index()] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in &adjacency[v.index()] {
                if !seen[w.index()] {
                    seen[w.index()] = true;
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Canonical name of a path: the vertex id for degree 0, otherwise the
    /// normal-form edge ids joined by `.`. Ids containing `.`, `(` or `)` are
    /// parenthesized so names stay unambiguous when nested.
    pub fn render_path(&self, p: &Path) -> String {
        if p.is_vertex() {
            return self.vertex_name(p.range).to_string();
        }
        p.edges
            .iter()
            .map(|&e| {
                let id = &self.edge(e).id;
                if id.contains(['.', '(', ')']) {
                    format!("({id})")
                } else {
                    id.clone()
                }
            })
            .collect::<Vec<_>>()
            .join(".")
    }

    pub(crate) fn check_degree(&self, n: &Degree) -> Result<()> {
        if n.rank() != self.rank() {
            return Err(Error::RankMismatch(n.to_string(), self.rank()));
        }
        Ok(())
    }

    pub(crate) fn check_enumerable(&self, n: &Degree) -> Result<()> {
        self.check_degree(n)?;
        let cap = self.limits().enum_cap;
        if n.max_coord() > cap {
            return Err(Error::EnumerationCap {
                degree: n.to_string(),
                cap,
            });
        }
        Ok(())
    }
}
