//! Allowable words and the conditions (H0)-(H3) for a pair of {0,1}-matrices.
//!
//! For a k-graph whose coordinate matrices are {0,1}-valued, a path `lambda`
//! is determined by its word `l -> s(lambda(0, l))` on the lattice interval
//! `[0, d(lambda)]`. (H3) asks for distinguishing words for every nonzero
//! displacement `m`; it is only checked here on a finite window of
//! displacements, and the verdict says so.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::ops::ControlFlow;

use crate::degree::{Degree, Displacement};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, KGraph, VertexId};
use crate::matrix::IntMatrix;
use crate::path::Path;

/// A map from the lattice interval `[0, shape]` to vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    shape: Degree,
    letters: Vec<VertexId>,
}

impl Word {
    /// Letters listed in lexicographic order of `[0, shape]`.
    pub fn new(shape: Degree, letters: Vec<VertexId>) -> Self {
        assert_eq!(
            letters.len(),
            shape.interval().len(),
            "one letter per lattice point"
        );
        Word { shape, letters }
    }

    pub fn shape(&self) -> &Degree {
        &self.shape
    }

    pub fn letters(&self) -> &[VertexId] {
        &self.letters
    }

    pub fn letter(&self, l: &Degree) -> Option<VertexId> {
        if !l.le(&self.shape) {
            return None;
        }
        let mut idx = 0usize;
        for axis in 0..self.shape.rank() {
            idx = idx * (self.shape[axis] as usize + 1) + l[axis] as usize;
        }
        Some(self.letters[idx])
    }
}

fn require_zero_one(g: &KGraph) -> Result<Vec<IntMatrix>> {
    let ms = g.coordinate_matrices();
    if let Some(i) = ms.iter().position(|m| !m.is_zero_one()) {
        return Err(Error::NotZeroOne(i + 1));
    }
    Ok(ms)
}

/// `w(l) = s(lambda(0, l))` for `0 <= l <= d(lambda)`.
pub fn word_of_path(g01: &KGraph, lambda: &Path) -> Result<Word> {
    require_zero_one(g01)?;
    let shape = lambda.degree().clone();
    let letters = shape
        .interval()
        .iter()
        .map(|l| g01.vertex_at(lambda, l))
        .collect::<Result<Vec<_>>>()?;
    Ok(Word { shape, letters })
}

/// The unique path whose word is `w`.
pub fn path_of_word(g01: &KGraph, w: &Word) -> Result<Path> {
    require_zero_one(g01)?;
    g01.check_degree(&w.shape)?;
    let k = g01.rank();
    let edge_between = |color: usize, range: VertexId, source: VertexId| -> Option<EdgeId> {
        g01.incoming(range, color)
            .iter()
            .copied()
            .find(|&e| g01.edge(e).source == source)
    };

    for l in w.shape.interval() {
        for color in 1..=k {
            let next = &l + &Degree::unit(k, color);
            let Some(upper) = w.letter(&next) else {
                continue;
            };
            let lower = w.letter(&l).expect("l lies in the interval");
            if edge_between(color, lower, upper).is_none() {
                return Err(Error::NotAllowable(format!(
                    "no color-{color} edge from {} to {} between positions {next} and {l}",
                    g01.vertex_name(upper),
                    g01.vertex_name(lower),
                )));
            }
        }
    }

    let origin = w.letter(&Degree::zero(k)).expect("shape contains 0");
    if w.shape.is_zero() {
        return Ok(g01.identity(origin));
    }
    let mut edges = Vec::with_capacity(w.shape.total());
    let mut at = Degree::zero(k);
    for color in w.shape.color_sequence() {
        let next = &at + &Degree::unit(k, color);
        let range = w.letter(&at).expect("inside shape");
        let source = w.letter(&next).expect("inside shape");
        edges.push(edge_between(color, range, source).expect("checked above"));
        at = next;
    }
    let path = g01.normalize(&edges)?;
    if word_of_path(g01, &path)? != *w {
        return Err(Error::NotAllowable(
            "letters are locally allowable but not the word of any path".into(),
        ));
    }
    Ok(path)
}

// ---------------------------------------------------------------------------
// (H0)-(H3)

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RsOptions {
    /// Check (H3) for every nonzero `m` with `||m||_inf <= h3_bound`.
    pub h3_bound: u32,
    /// Extra room added to each reported witness shape `m_+ v m_-`.
    pub h3_margin: Degree,
}

impl Default for RsOptions {
    fn default() -> Self {
        RsOptions {
            h3_bound: 3,
            h3_margin: Degree::new(vec![2, 2]),
        }
    }
}

/// A path whose word differs at `position` and `position + m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H3Witness {
    pub path: Path,
    pub position: Degree,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum H3Verdict {
    /// Every displacement in the window has a witness. This is evidence, not
    /// a proof of (H3).
    PassOnWindow,
    Fail,
}

impl fmt::Display for H3Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            H3Verdict::PassOnWindow => "pass-on-window",
            H3Verdict::Fail => "fail",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MatrixConditions {
    pub h0: bool,
    pub h1a: bool,
    pub h1b: bool,
    pub h2: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RsReport {
    pub h0: bool,
    pub h1a: bool,
    pub h1b: bool,
    pub h2: bool,
    pub h3_bound: u32,
    pub h3_margin: Degree,
    pub h3_window: Vec<Displacement>,
    pub h3_failures: Vec<Displacement>,
    pub h3_witnesses: BTreeMap<Displacement, H3Witness>,
    pub h3_verdict: H3Verdict,
}

impl RsReport {
    pub fn all_hold(&self) -> bool {
        self.h0 && self.h1a && self.h1b && self.h2 && self.h3_verdict == H3Verdict::PassOnWindow
    }
}

/// (H0), (H1a), (H1b) and (H2) for a rank-2 graph with {0,1} matrices.
pub fn matrix_conditions(g01: &KGraph) -> Result<MatrixConditions> {
    if g01.rank() != 2 {
        return Err(Error::NotRankTwo(g01.rank()));
    }
    let ms = require_zero_one(g01)?;
    let (m1, m2) = (&ms[0], &ms[1]);
    let p12 = m1 * m2;
    let p21 = m2 * m1;
    Ok(MatrixConditions {
        h0: !m1.is_zero() && !m2.is_zero(),
        h1a: p12 == p21,
        h1b: p12.is_zero_one(),
        h2: irreducible(&ms),
    })
}

/// Strong connectivity of the graph on the index set with an edge `a -> b`
/// whenever some `M_i(b, a)` is nonzero.
fn irreducible(ms: &[IntMatrix]) -> bool {
    let n = ms.first().map_or(0, IntMatrix::rows);
    if n <= 1 {
        return true;
    }
    let reach = |forward: bool| {
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(a) = queue.pop_front() {
            for b in 0..n {
                let linked = ms.iter().any(|m| {
                    let x = if forward { &m[(b, a)] } else { &m[(a, b)] };
                    *x != num_bigint::BigInt::from(0)
                });
                if linked && !seen[b] {
                    seen[b] = true;
                    queue.push_back(b);
                }
            }
        }
        seen.into_iter().all(|s| s)
    };
    reach(true) && reach(false)
}

pub fn check_rs(g01: &KGraph, opts: &RsOptions) -> Result<RsReport> {
    let cond = matrix_conditions(g01)?;
    g01.check_degree(&opts.h3_margin)?;
    let window = Displacement::window(opts.h3_bound);
    let mut witnesses = BTreeMap::new();
    let mut failures = Vec::new();
    for &m in &window {
        match find_witness(g01, m, &opts.h3_margin)? {
            Some(w) => {
                witnesses.insert(m, w);
            }
            None => failures.push(m),
        }
    }
    let verdict = if failures.is_empty() {
        H3Verdict::PassOnWindow
    } else {
        H3Verdict::Fail
    };
    Ok(RsReport {
        h0: cond.h0,
        h1a: cond.h1a,
        h1b: cond.h1b,
        h2: cond.h2,
        h3_bound: opts.h3_bound,
        h3_margin: opts.h3_margin.clone(),
        h3_window: window,
        h3_failures: failures,
        h3_witnesses: witnesses,
        h3_verdict: verdict,
    })
}

/// Searches paths of shape `|m|` for letters that differ at `m_-` and `m_+`.
///
/// Any witness of a larger shape restricts to one of shape `|m|`, so this
/// search is exhaustive for `m`. A hit is then padded at its source end by
/// `margin` when the graph allows it.
pub fn find_witness(g01: &KGraph, m: Displacement, margin: &Degree) -> Result<Option<H3Witness>> {
    let shape = m.magnitude();
    g01.check_enumerable(&(&shape + margin))?;
    let (low, high) = (m.negative_part(), m.positive_part());
    for v in g01.vertex_ids() {
        let mut probe = |lambda: Path| -> ControlFlow<Result<Path>> {
            let a = g01.vertex_at(&lambda, &low);
            let b = g01.vertex_at(&lambda, &high);
            match (a, b) {
                (Ok(a), Ok(b)) if a == b => ControlFlow::Continue(()),
                (Ok(_), Ok(_)) => ControlFlow::Break(Ok(lambda)),
                (Err(e), _) | (_, Err(e)) => ControlFlow::Break(Err(e)),
            }
        };
        if let Some(hit) = g01.search_paths_from(v, &shape, &mut probe)? {
            let lambda = hit?;
            let pad = g01.search_paths_from(lambda.source(), margin, &mut |p| ControlFlow::Break(p))?;
            let path = match pad {
                Some(pad) => g01.compose(&lambda, &pad)?,
                None => lambda,
            };
            return Ok(Some(H3Witness {
                path,
                position: low,
            }));
        }
    }
    Ok(None)
}

/// Whether (H2) for the matrices of `1 Lambda` agrees with strong
/// connectivity of `Lambda`. Expected to hold for every finite 2-graph
/// without sources.
pub fn h2_iff_strongly_connected(g: &KGraph) -> Result<bool> {
    let one = crate::dual::dual(g, &Degree::ones(2))?;
    let h2 = matrix_conditions(&one.graph)?.h2;
    Ok(h2 == g.structural_report().strongly_connected)
}

// ---------------------------------------------------------------------------
// Aperiodic prefix

/// One `rho_i = alpha_i lambda_{m_i} beta_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub displacement: Displacement,
    pub alpha: Path,
    pub lambda: Path,
    pub beta: Path,
    pub rho: Path,
}

/// The finite prefix `tau_1 tau_2 ... tau_N` of the aperiodic path built from
/// (H3) witnesses, where `tau_i = rho_1 ... rho_i`.
#[derive(Clone, Debug)]
pub struct AperiodicPrefix {
    pub base: VertexId,
    /// `m_1, m_2, ...`: the witnessed displacements in ring order.
    pub listing: Vec<Displacement>,
    /// Position `l_m` inside `lambda_m` for each listed displacement.
    pub positions: Vec<Degree>,
    pub blocks: Vec<Block>,
    pub path: Path,
}

/// Builds the prefix with `count` blocks.
///
/// The base vertex is the least vertex id; connectors are shortest walks
/// found by breadth-first search over edges in id order, normalized.
pub fn aperiodic_prefix(
    g01: &KGraph,
    witnesses: &BTreeMap<Displacement, H3Witness>,
    count: usize,
) -> Result<AperiodicPrefix> {
    let base = g01
        .vertex_ids()
        .next()
        .ok_or_else(|| Error::UnknownVertex("<graph has no vertices>".into()))?;
    if g01.rank() != 2 {
        return Err(Error::NotRankTwo(g01.rank()));
    }

    let mut listing: Vec<Displacement> = witnesses.keys().copied().collect();
    listing.sort_by_key(|m| (m.sup_norm(), m.0, m.1));
    if count > listing.len() {
        return Err(Error::NotEnoughWitnesses {
            requested: count,
            available: listing.len(),
        });
    }
    for m in &listing {
        validate_witness(g01, *m, &witnesses[m])?;
    }
    let positions = listing.iter().map(|m| witnesses[m].position.clone()).collect();

    let ones = Degree::ones(2);
    let mut blocks = Vec::with_capacity(count);
    for &m in listing.iter().take(count) {
        let lambda = witnesses[&m].path.clone();
        let alpha = connector(g01, base, lambda.range(), &Degree::zero(2))?;
        let deficit = ones.saturating_sub(&(alpha.degree() + lambda.degree()));
        let beta = connector(g01, lambda.source(), base, &deficit)?;
        let rho = g01.compose(&g01.compose(&alpha, &lambda)?, &beta)?;
        blocks.push(Block {
            displacement: m,
            alpha,
            lambda,
            beta,
            rho,
        });
    }

    let mut raw: Vec<EdgeId> = Vec::new();
    for k in 1..=count {
        for block in &blocks[..k] {
            raw.extend_from_slice(block.rho.edges());
        }
    }
    let path = if raw.is_empty() {
        g01.identity(base)
    } else {
        g01.normalize(&raw)?
    };
    Ok(AperiodicPrefix {
        base,
        listing,
        positions,
        blocks,
        path,
    })
}

fn validate_witness(g01: &KGraph, m: Displacement, w: &H3Witness) -> Result<()> {
    let invalid = |reason: String| Error::InvalidWitness {
        displacement: m.to_string(),
        reason,
    };
    if m.is_zero() {
        return Err(invalid("displacement is zero".into()));
    }
    let Some(other) = m.offset(&w.position) else {
        return Err(invalid("position + m leaves N^2".into()));
    };
    if !(w.position <= *w.path.degree() && other <= *w.path.degree()) {
        return Err(invalid("positions fall outside the path".into()));
    }
    if g01.vertex_at(&w.path, &w.position)? == g01.vertex_at(&w.path, &other)? {
        return Err(invalid("letters at the two positions agree".into()));
    }
    Ok(())
}

/// Shortest path with range `from` and source `to` whose degree covers every
/// color where `need` is nonzero. `need` is read as a {0,1} mask.
fn connector(g: &KGraph, from: VertexId, to: VertexId, need: &Degree) -> Result<Path> {
    let k = g.rank();
    let goal_mask: u32 = (0..k).filter(|&i| need[i] > 0).map(|i| 1 << i).sum();
    let states = g.vertex_count() << k;
    let key = |v: VertexId, mask: u32| (v.index() << k) | mask as usize;
    let mut parent: Vec<Option<(usize, EdgeId)>> = vec![None; states];
    let mut seen = vec![false; states];
    let start = key(from, 0);
    seen[start] = true;
    let mut queue = VecDeque::from([(from, 0u32)]);
    let mut found = None;
    while let Some((v, mask)) = queue.pop_front() {
        if v == to && mask & goal_mask == goal_mask {
            found = Some(key(v, mask));
            break;
        }
        for color in 1..=k {
            for &e in g.incoming(v, color) {
                let next = (g.edge(e).source, mask | (1 << (color - 1)));
                let nk = key(next.0, next.1);
                if !seen[nk] {
                    seen[nk] = true;
                    parent[nk] = Some((key(v, mask), e));
                    queue.push_back(next);
                }
            }
        }
    }
    let Some(mut at) = found else {
        return Err(Error::NoConnector {
            from: g.vertex_name(from).into(),
            to: g.vertex_name(to).into(),
        });
    };
    let mut edges = Vec::new();
    while let Some((prev, e)) = parent[at] {
        edges.push(e);
        at = prev;
    }
    edges.reverse();
    if edges.is_empty() {
        Ok(g.identity(from))
    } else {
        g.normalize(&edges)
    }
}

impl AperiodicPrefix {
    /// `I` with `m_I = m`, 1-based.
    pub fn index_of(&self, m: Displacement) -> Option<usize> {
        self.listing.iter().position(|&x| x == m).map(|i| i + 1)
    }

    /// `d(rho_1 ... rho_i)`.
    pub fn rho_degree(&self, i: usize) -> Degree {
        self.blocks[..i]
            .iter()
            .fold(Degree::zero(2), |acc, b| &acc + b.rho.degree())
    }

    /// `d(tau_1 ... tau_j)`.
    pub fn tau_degree(&self, j: usize) -> Degree {
        (1..=j).fold(Degree::zero(2), |acc, t| &acc + &self.rho_degree(t))
    }

    /// Where `rho_i` begins inside `tau_k`, measured from the start of the prefix.
    pub fn block_offset(&self, k: usize, i: usize) -> Degree {
        &self.tau_degree(k - 1) + &self.rho_degree(i - 1)
    }

    /// The position `N(s, t)` at which the shifts by `s` and `t` are forced to
    /// differ, or `None` when the prefix is too short to contain it.
    pub fn separation_point(&self, s: &Degree, t: &Degree) -> Option<Degree> {
        let m = Displacement::between(s, t);
        let big_i = self.index_of(m)?;
        let j = s.join(t).max_coord() as usize;
        let big_k = big_i.max(j + 1);
        if big_k > self.blocks.len() {
            return None;
        }
        let start = &self.block_offset(big_k, big_i) + self.blocks[big_i - 1].alpha.degree();
        let at = &start + &self.positions[big_i - 1];
        at.checked_sub(s)
    }

    /// Reads the prefix at `N + s` and `N + t` and reports whether the letters
    /// differ; `None` if `(s, t)` is not covered.
    pub fn separation_holds(&self, g01: &KGraph, s: &Degree, t: &Degree) -> Result<Option<bool>> {
        let Some(n) = self.separation_point(s, t) else {
            return Ok(None);
        };
        let a = g01.vertex_at(&self.path, &(&n + s))?;
        let b = g01.vertex_at(&self.path, &(&n + t))?;
        Ok(Some(a != b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dual::dual;
    use crate::fixtures;

    fn d(c: &[u32]) -> Degree {
        Degree::new(c.to_vec())
    }

    fn one_dual(g: &KGraph) -> KGraph {
        dual(g, &d(&[1, 1])).unwrap().graph
    }

    #[test]
    fn words_on_t1_dual_are_constant() {
        let g = one_dual(&fixtures::t1());
        for lam in g.paths_of_degree(&d(&[1, 1])).unwrap() {
            let w = word_of_path(&g, &lam).unwrap();
            assert_eq!(w.letters().len(), 4);
            assert!(w.letters().iter().all(|&x| x == VertexId(0)));
        }
    }

    #[test]
    fn shape_zero_words() {
        let g = one_dual(&fixtures::flip2());
        for v in g.vertex_ids() {
            let w = word_of_path(&g, &g.identity(v)).unwrap();
            assert_eq!(w.letters(), &[v]);
            assert_eq!(path_of_word(&g, &w).unwrap(), g.identity(v));
        }
    }

    #[test]
    fn flip2_dual_edges_have_distinct_words() {
        let g = one_dual(&fixtures::flip2());
        let paths = g.paths_of_degree(&d(&[1, 0])).unwrap();
        let words: Vec<_> = paths.iter().map(|p| word_of_path(&g, p).unwrap()).collect();
        for i in 0..words.len() {
            for j in i + 1..words.len() {
                assert_ne!(words[i], words[j]);
            }
        }
    }

    #[test]
    fn round_trip_flip2_dual() {
        let g = one_dual(&fixtures::flip2());
        for n in d(&[2, 2]).interval() {
            for lam in g.paths_of_degree(&n).unwrap() {
                let w = word_of_path(&g, &lam).unwrap();
                assert_eq!(path_of_word(&g, &w).unwrap(), lam);
            }
        }
    }

    #[test]
    fn non_allowable_word() {
        let g = one_dual(&fixtures::flip2());
        // Color-2 edges swap the two vertices, so a constant column is illegal.
        let w = Word::new(d(&[0, 1]), vec![VertexId(0), VertexId(0)]);
        assert!(matches!(path_of_word(&g, &w), Err(Error::NotAllowable(_))));
    }

    #[test]
    fn words_need_zero_one_matrices() {
        let g = fixtures::flip2();
        let lam = g.path(&["b1"]).unwrap();
        assert!(matches!(word_of_path(&g, &lam), Err(Error::NotZeroOne(1))));
    }

    #[test]
    fn rs_on_t1_dual() {
        let r = check_rs(&one_dual(&fixtures::t1()), &RsOptions::default()).unwrap();
        assert!(r.h0 && r.h1a && r.h1b && r.h2);
        assert_eq!(r.h3_verdict, H3Verdict::Fail);
        assert!(r.h3_failures.contains(&Displacement(1, 0)));
        assert_eq!(r.h3_window.len(), 48);
        assert!(r.h3_witnesses.is_empty());
    }

    #[test]
    fn rs_on_tors_dual() {
        let r = check_rs(&one_dual(&fixtures::tors()), &RsOptions::default()).unwrap();
        assert!(r.h0 && r.h1a && r.h1b && r.h2);
    }

    #[test]
    fn rs_on_disconnected() {
        let r = check_rs(&one_dual(&fixtures::t1_t1()), &RsOptions::default()).unwrap();
        assert!(!r.h2);
    }

    #[test]
    fn witnesses_satisfy_h3_predicate() {
        let g = one_dual(&fixtures::flip2());
        let r = check_rs(&g, &RsOptions::default()).unwrap();
        assert!(r.h3_witnesses.contains_key(&Displacement(1, 0)));
        // Every color-2 step swaps the letter, so even vertical shifts repeat.
        assert!(r.h3_failures.contains(&Displacement(0, 2)));
        for (m, w) in &r.h3_witnesses {
            let other = m.offset(&w.position).unwrap();
            assert!(other <= *w.path.degree());
            assert_ne!(
                g.vertex_at(&w.path, &w.position).unwrap(),
                g.vertex_at(&w.path, &other).unwrap()
            );
            assert_eq!(w.path.degree(), &(&m.magnitude() + &d(&[2, 2])));
        }
    }

    #[test]
    fn h2_matches_connectivity() {
        for g in [fixtures::t1(), fixtures::t1_t1(), fixtures::tors(), fixtures::flip2()] {
            assert!(h2_iff_strongly_connected(&g).unwrap());
        }
    }

    #[test]
    fn prefix_with_no_blocks_is_base_vertex() {
        let g = one_dual(&fixtures::flip2());
        let x = aperiodic_prefix(&g, &BTreeMap::new(), 0).unwrap();
        assert_eq!(x.path, g.identity(VertexId(0)));
        assert!(matches!(
            aperiodic_prefix(&g, &BTreeMap::new(), 1),
            Err(Error::NotEnoughWitnesses { .. })
        ));
    }

    #[test]
    fn single_vertex_has_no_witnesses() {
        let g = one_dual(&fixtures::t1());
        for m in Displacement::window(2) {
            assert!(find_witness(&g, m, &d(&[0, 0])).unwrap().is_none());
        }
    }

    #[test]
    fn flip2_prefix_places_witnesses() {
        let g = one_dual(&fixtures::flip2());
        let r = check_rs(&g, &RsOptions::default()).unwrap();
        let witnesses: BTreeMap<_, _> = [Displacement(1, 0), Displacement(-1, 0)]
            .into_iter()
            .map(|m| (m, r.h3_witnesses[&m].clone()))
            .collect();
        let x = aperiodic_prefix(&g, &witnesses, 2).unwrap();
        assert_eq!(x.listing, [Displacement(-1, 0), Displacement(1, 0)]);
        for b in &x.blocks {
            assert!(*b.rho.degree() >= d(&[1, 1]));
        }
        // Each tau_k holds rho_1..rho_k; each rho_i holds lambda_{m_i} after alpha_i.
        for k in 1..=2 {
            for i in 1..=k {
                let block = &x.blocks[i - 1];
                let start = &x.block_offset(k, i) + block.alpha.degree();
                let end = &start + block.lambda.degree();
                assert_eq!(g.segment(&x.path, &start, &end).unwrap(), block.lambda);
            }
        }
        let mut covered = 0;
        for s in d(&[2, 2]).interval() {
            for t in d(&[2, 2]).interval() {
                if let Some(ok) = x.separation_holds(&g, &s, &t).unwrap() {
                    assert!(ok, "s={s} t={t}");
                    covered += 1;
                }
            }
        }
        assert!(covered > 0);
    }

    #[test]
    fn invalid_witness_rejected() {
        let g = one_dual(&fixtures::flip2());
        let lam = g.paths_of_degree(&d(&[0, 2])).unwrap().remove(0);
        let bad = H3Witness {
            path: lam,
            position: d(&[0, 0]),
        };
        let witnesses = BTreeMap::from([(Displacement(0, 2), bad)]);
        assert!(matches!(
            aperiodic_prefix(&g, &witnesses, 1),
            Err(Error::InvalidWitness { .. })
        ));
    }
}
