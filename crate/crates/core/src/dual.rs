//! The dual k-graph `p Lambda`.
//!
//! Objects of `p Lambda` are the paths of degree `p`, and a path `lambda` with
//! `d(lambda) >= p` becomes a morphism from `lambda(d - p, d)` to
//! `lambda(0, p)` of degree `d - p`. Only the skeleton is materialized: color-i
//! edges are the paths of degree `p + e_i`, and each path of degree
//! `p + e_i + e_j` yields one square. Every vertex and edge is named by
//! [`KGraph::render_path`] of the path it stands for, so the construction is
//! deterministic and `q (p Lambda)` can be compared with `(p + q) Lambda` as text.

use std::collections::HashMap;

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::format::{serialize_kgraph, serialize_presentation};
use crate::graph::{EdgeId, KGraph, Presentation, VertexId};
use crate::matrix::IntMatrix;
use crate::path::Path;

#[derive(Clone, Debug)]
pub struct DualGraph {
    pub graph: KGraph,
    pub p: Degree,
    vertex_paths: Vec<Path>,
    edge_paths: Vec<Path>,
}

impl DualGraph {
    /// The degree-`p` path in the base graph that a dual vertex stands for.
    pub fn vertex_path(&self, v: VertexId) -> &Path {
        &self.vertex_paths[v.index()]
    }

    /// The degree-`p + e_i` path in the base graph that a dual edge stands for.
    pub fn edge_path(&self, e: EdgeId) -> &Path {
        &self.edge_paths[e.index()]
    }

    /// The base-graph path underlying a path of the dual graph, using
    /// `lambda o_p mu = lambda mu(p, d(mu))`.
    pub fn underlying(&self, base: &KGraph, dual_path: &Path) -> Result<Path> {
        let Some((&first, rest)) = dual_path.edges().split_first() else {
            return Ok(self.vertex_path(dual_path.range()).clone());
        };
        let mut raw = self.edge_path(first).edges().to_vec();
        for &e in rest {
            let mu = self.edge_path(e);
            let tail = base.segment(mu, &self.p, mu.degree())?;
            raw.extend_from_slice(tail.edges());
        }
        base.normalize(&raw)
    }
}

pub fn dual(g: &KGraph, p: &Degree) -> Result<DualGraph> {
    g.check_degree(p)?;
    let k = g.rank();
    let units: Vec<Degree> = (1..=k).map(|i| Degree::unit(k, i)).collect();
    for i in 0..k {
        g.check_enumerable(&(p + &units[i]))?;
        for j in i + 1..k {
            g.check_enumerable(&(&(p + &units[i]) + &units[j]))?;
        }
    }
    let count: usize = total(&g.count_paths(p)?);
    let limit = g.limits().dual_vertex_limit;
    if count > limit {
        return Err(Error::DualTooLarge { count, limit });
    }

    let mut pres = Presentation::new(k);
    let mut by_name: HashMap<String, Path> = HashMap::new();
    for beta in g.paths_of_degree(p)? {
        let name = g.render_path(&beta);
        pres.vertex(name.clone());
        by_name.insert(name, beta);
    }

    let mut edge_by_name: HashMap<String, Path> = HashMap::new();
    for (i, unit) in units.iter().enumerate() {
        let deg = p + unit;
        for lambda in g.paths_of_degree(&deg)? {
            let source = g.segment(&lambda, unit, &deg)?;
            let range = g.segment(&lambda, &Degree::zero(k), p)?;
            let name = g.render_path(&lambda);
            pres.edge(
                name.clone(),
                i + 1,
                g.render_path(&source),
                g.render_path(&range),
            );
            edge_by_name.insert(name, lambda);
        }
    }

    let zero = Degree::zero(k);
    for i in 0..k {
        for j in i + 1..k {
            let pi = p + &units[i];
            let pj = p + &units[j];
            let top = &pi + &units[j];
            for tau in g.paths_of_degree(&top)? {
                let a = g.segment(&tau, &zero, &pi)?;
                let b = g.segment(&tau, &units[i], &top)?;
                let c = g.segment(&tau, &zero, &pj)?;
                let d = g.segment(&tau, &units[j], &top)?;
                let [a, b, c, d] = [a, b, c, d].map(|x| g.render_path(&x));
                pres.square(&a, &b, &c, &d);
            }
        }
    }

    let graph = KGraph::new(&pres)
        .map_err(Error::Invalid)?
        .with_limits(g.limits());
    let vertex_paths = graph
        .vertex_ids()
        .map(|v| by_name[graph.vertex_name(v)].clone())
        .collect();
    let edge_paths = graph
        .edge_ids()
        .map(|e| edge_by_name[&graph.edge(e).id].clone())
        .collect();
    Ok(DualGraph {
        graph,
        p: p.clone(),
        vertex_paths,
        edge_paths,
    })
}

fn total(m: &IntMatrix) -> usize {
    let mut sum = num_bigint::BigInt::from(0);
    for i in 0..m.rows() {
        for x in m.row(i) {
            sum += x;
        }
    }
    usize::try_from(sum).unwrap_or(usize::MAX)
}

/// Serializations of `q (p Lambda)`, renamed onto base-graph paths, and of
/// `(p + q) Lambda`.
pub fn iterated_dual_serializations(g: &KGraph, p: &Degree, q: &Degree) -> Result<(String, String)> {
    let inner = dual(g, p)?;
    let outer = dual(&inner.graph, q)?;
    let rename = |path: &Path| -> Result<String> {
        Ok(g.render_path(&inner.underlying(g, path)?))
    };

    let h = &outer.graph;
    let mut vertex_names = Vec::with_capacity(h.vertex_count());
    for v in h.vertex_ids() {
        vertex_names.push(rename(outer.vertex_path(v))?);
    }
    let mut edge_names = Vec::with_capacity(h.edge_count());
    for e in h.edge_ids() {
        edge_names.push(rename(outer.edge_path(e))?);
    }

    let mut pres = Presentation::new(h.rank());
    for name in &vertex_names {
        pres.vertex(name.clone());
    }
    for (e, name) in h.edge_ids().zip(&edge_names) {
        let edge = h.edge(e);
        pres.edge(
            name.clone(),
            edge.color,
            vertex_names[edge.source.index()].clone(),
            vertex_names[edge.range.index()].clone(),
        );
    }
    for s in h.squares() {
        let n = |e: EdgeId| edge_names[e.index()].as_str();
        pres.square(n(s.a), n(s.b), n(s.c), n(s.d));
    }

    let direct = dual(g, &(p + q))?;
    Ok((serialize_presentation(&pres), serialize_kgraph(&direct.graph)))
}

/// Whether `q (p Lambda)` and `(p + q) Lambda` serialize identically once the
/// iterated dual's names are mapped back to base-graph paths.
pub fn iterated_dual_equal(g: &KGraph, p: &Degree, q: &Degree) -> Result<bool> {
    let (iterated, direct) = iterated_dual_serializations(g, p, q)?;
    Ok(iterated == direct)
}

/// The coordinate matrix of color `i` of `p Lambda`.
pub fn dual_matrix(g: &KGraph, p: &Degree, color: usize) -> Result<IntMatrix> {
    g.check_color(color)?;
    dual(g, p)?.graph.coordinate_matrix(color)
}
