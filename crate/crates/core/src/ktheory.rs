//! K-groups of the C*-algebra of a finite 2-graph without sinks or sources.
//!
//! With `B = [I - M1  I - M2]` and `Bt = [I - M1^t  I - M2^t]`,
//! `rank K0 = rank K1 = rank coker B + rank coker Bt`, the torsion of `K0` is
//! that of `coker B` and the torsion of `K1` is that of `coker Bt`.

use std::fmt;

use crate::degree::Degree;
use crate::dual::dual;
use crate::error::{Error, Result};
use crate::graph::KGraph;
use crate::matrix::IntMatrix;
use crate::snf::{cokernel, AbelianGroup};
use crate::words::{check_rs, H3Verdict, RsOptions, RsReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Coordinate matrices of the dual graph `p Lambda`.
    Dual,
    /// Coordinate matrices of the graph itself.
    Direct,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Dual => "dual",
            Mode::Direct => "direct",
        })
    }
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "dual" => Ok(Mode::Dual),
            "direct" => Ok(Mode::Direct),
            other => Err(format!("unknown mode {other:?}, expected dual or direct")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KOptions {
    /// Degree of the dual used in [`Mode::Dual`]; `(1,1)` when absent.
    pub p: Option<Degree>,
    /// Window for the aperiodicity hypothesis. `None` skips the check.
    pub rs: Option<RsOptions>,
}

impl Default for KOptions {
    fn default() -> Self {
        KOptions {
            p: None,
            rs: Some(RsOptions::default()),
        }
    }
}

impl KOptions {
    /// No aperiodicity check; only the groups and structural flags.
    pub fn groups_only() -> Self {
        KOptions { p: None, rs: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypotheses {
    pub finite: bool,
    pub no_sources: bool,
    pub no_sinks: bool,
    pub strongly_connected: bool,
    /// `None` when the check was skipped or could not run.
    pub aperiodic_on_window: Option<H3Verdict>,
    pub h3_bound: Option<u32>,
}

impl Hypotheses {
    pub fn all_hold(&self) -> bool {
        self.finite
            && self.no_sources
            && self.no_sinks
            && self.strongly_connected
            && self.aperiodic_on_window == Some(H3Verdict::PassOnWindow)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KTheoryResult {
    pub k0: AbelianGroup,
    pub k1: AbelianGroup,
    pub mode: Mode,
    /// The dual degree used; zero in direct mode.
    pub p: Degree,
    pub hypotheses: Hypotheses,
}

impl KTheoryResult {
    pub fn k0_rank(&self) -> usize {
        self.k0.free_rank
    }

    pub fn k1_rank(&self) -> usize {
        self.k1.free_rank
    }

    /// Whether both groups match those of `other`, ignoring mode and hypotheses.
    pub fn same_groups(&self, other: &KTheoryResult) -> bool {
        self.k0 == other.k0 && self.k1 == other.k1
    }
}

fn block(ms: &[IntMatrix], transpose: bool) -> IntMatrix {
    let n = ms[0].rows();
    let id = IntMatrix::identity(n);
    let parts: Vec<IntMatrix> = ms
        .iter()
        .map(|m| if transpose { &id - &m.transpose() } else { &id - m })
        .collect();
    parts[0].hconcat(&parts[1])
}

/// The groups computed from a pair of commuting coordinate matrices.
pub fn groups_from_matrices(m1: &IntMatrix, m2: &IntMatrix) -> (AbelianGroup, AbelianGroup) {
    let ms = [m1.clone(), m2.clone()];
    let (plain, transposed) = std::thread::scope(|s| {
        let t = s.spawn(|| cokernel(&block(&ms, true)));
        (cokernel(&block(&ms, false)), t.join().expect("cokernel thread"))
    });
    let rank = plain.free_rank + transposed.free_rank;
    (
        AbelianGroup {
            free_rank: rank,
            torsion: plain.torsion,
        },
        AbelianGroup {
            free_rank: rank,
            torsion: transposed.torsion,
        },
    )
}

pub fn k_groups(g: &KGraph, mode: Mode) -> Result<KTheoryResult> {
    k_groups_with(g, mode, &KOptions::default())
}

pub fn k_groups_with(g: &KGraph, mode: Mode, opts: &KOptions) -> Result<KTheoryResult> {
    if g.rank() != 2 {
        return Err(Error::NotRankTwo(g.rank()));
    }
    let report = g.structural_report();
    let mut missing = Vec::new();
    if !report.no_sinks {
        missing.push("sinks");
    }
    if !report.no_sources {
        missing.push("sources");
    }
    if !missing.is_empty() {
        return Err(Error::SinksOrSources(missing.join(" and ")));
    }

    let (p, ms) = match mode {
        Mode::Direct => (Degree::zero(2), g.coordinate_matrices()),
        Mode::Dual => {
            let p = opts.p.clone().unwrap_or_else(|| Degree::ones(2));
            let h = dual(g, &p)?;
            (p, h.graph.coordinate_matrices())
        }
    };
    let (k0, k1) = groups_from_matrices(&ms[0], &ms[1]);

    let aperiodic = opts.rs.as_ref().and_then(|rs| aperiodicity(g, rs).ok());
    Ok(KTheoryResult {
        k0,
        k1,
        mode,
        p,
        hypotheses: Hypotheses {
            finite: report.finite,
            no_sources: report.no_sources,
            no_sinks: report.no_sinks,
            strongly_connected: report.strongly_connected,
            aperiodic_on_window: aperiodic.as_ref().map(|r| r.h3_verdict),
            h3_bound: aperiodic.map(|r| r.h3_bound),
        },
    })
}

fn aperiodicity(g: &KGraph, rs: &RsOptions) -> Result<RsReport> {
    let one = dual(g, &Degree::ones(2))?;
    check_rs(&one.graph, rs)
}

/// Dual-mode and direct-mode groups coincide.
pub fn mode_agreement(g: &KGraph) -> Result<bool> {
    let opts = KOptions::groups_only();
    let a = k_groups_with(g, Mode::Dual, &opts)?;
    let b = k_groups_with(g, Mode::Direct, &opts)?;
    Ok(a.same_groups(&b))
}

/// Which hypotheses of the structure theorem a 2-graph satisfies.
#[derive(Clone, Debug)]
pub struct Qualification {
    pub finite: bool,
    pub no_sources: bool,
    pub no_sinks: bool,
    pub strongly_connected: bool,
    pub rs: std::result::Result<RsReport, String>,
}

impl Qualification {
    pub fn aperiodic_on_window(&self) -> bool {
        matches!(&self.rs, Ok(r) if r.h3_verdict == H3Verdict::PassOnWindow)
    }

    pub fn conclusion_applies(&self) -> bool {
        self.finite
            && self.no_sources
            && self.no_sinks
            && self.strongly_connected
            && self.aperiodic_on_window()
    }
}

pub fn qualifies_rs(g: &KGraph, opts: &RsOptions) -> Qualification {
    let report = g.structural_report();
    let rs = if g.rank() != 2 {
        Err(Error::NotRankTwo(g.rank()).to_string())
    } else {
        aperiodicity(g, opts).map_err(|e| e.to_string())
    };
    Qualification {
        finite: report.finite,
        no_sources: report.no_sources,
        no_sinks: report.no_sinks,
        strongly_connected: report.strongly_connected,
        rs,
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl fmt::Display for Qualification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "finite: {}", yes_no(self.finite))?;
        writeln!(f, "no sources: {}", yes_no(self.no_sources))?;
        writeln!(f, "no sinks: {}", yes_no(self.no_sinks))?;
        writeln!(f, "strongly connected: {}", yes_no(self.strongly_connected))?;
        match &self.rs {
            Ok(r) => {
                write!(
                    f,
                    "aperiodic: {} (window |m| <= {}, margin {})",
                    r.h3_verdict, r.h3_bound, r.h3_margin
                )?;
                if !r.h3_failures.is_empty() {
                    let shown: Vec<String> =
                        r.h3_failures.iter().take(4).map(|m| m.to_string()).collect();
                    write!(f, "; no witness for {}", shown.join(", "))?;
                    if r.h3_failures.len() > 4 {
                        write!(f, " and {} more", r.h3_failures.len() - 4)?;
                    }
                }
                writeln!(f)?;
            }
            Err(e) => writeln!(f, "aperiodic: not checked ({e})")?,
        }
        if self.conclusion_applies() {
            writeln!(
                f,
                "conclusion: hypotheses hold, so C*(Lambda) is purely infinite, simple, unital and nuclear"
            )
        } else {
            writeln!(f, "conclusion: not asserted; K-groups are still computed when there are no sinks or sources")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use num_bigint::BigInt;

    fn group(rank: usize, torsion: &[i64]) -> AbelianGroup {
        AbelianGroup {
            free_rank: rank,
            torsion: torsion.iter().map(|&t| BigInt::from(t)).collect(),
        }
    }

    #[test]
    fn t1_is_torus() {
        for mode in [Mode::Dual, Mode::Direct] {
            let r = k_groups_with(&fixtures::t1(), mode, &KOptions::groups_only()).unwrap();
            assert_eq!(r.k0, group(2, &[]));
            assert_eq!(r.k1, group(2, &[]));
        }
    }

    #[test]
    fn flip2_is_trivial() {
        let r = k_groups_with(&fixtures::flip2(), Mode::Direct, &KOptions::groups_only()).unwrap();
        assert!(r.k0.is_trivial() && r.k1.is_trivial());
        assert!(mode_agreement(&fixtures::flip2()).unwrap());
    }

    #[test]
    fn tors_has_two_torsion() {
        let r = k_groups_with(&fixtures::tors(), Mode::Direct, &KOptions::groups_only()).unwrap();
        assert_eq!(r.k0, group(0, &[2, 2]));
        assert_eq!(r.k1, group(0, &[2, 2]));
        assert_eq!(r.k0.to_string(), "Z/2 (+) Z/2");
        assert!(mode_agreement(&fixtures::tors()).unwrap());
    }

    #[test]
    fn hypotheses_are_reported() {
        let r = k_groups(&fixtures::t1(), Mode::Dual).unwrap();
        assert_eq!(r.p, Degree::ones(2));
        assert!(r.hypotheses.strongly_connected);
        assert_eq!(r.hypotheses.aperiodic_on_window, Some(H3Verdict::Fail));
        assert!(!r.hypotheses.all_hold());

        let r = k_groups(&fixtures::t1_t1(), Mode::Direct).unwrap();
        assert!(!r.hypotheses.strongly_connected);
        assert_eq!(r.k0, group(4, &[]));
    }

    #[test]
    fn other_dual_degrees_agree() {
        let g = fixtures::tors();
        let base = k_groups_with(&g, Mode::Dual, &KOptions::groups_only()).unwrap();
        for p in [[2, 1], [1, 2]] {
            let opts = KOptions {
                p: Some(Degree::new(p.to_vec())),
                rs: None,
            };
            assert!(k_groups_with(&g, Mode::Dual, &opts).unwrap().same_groups(&base));
        }
    }

    #[test]
    fn rejects_sources() {
        let mut p = crate::graph::Presentation::new(2);
        p.vertex("u").vertex("v");
        p.edge("b", 1, "u", "v").edge("r", 2, "u", "v");
        let g = p.build().unwrap();
        assert!(matches!(k_groups(&g, Mode::Direct), Err(Error::SinksOrSources(_))));
    }

    #[test]
    fn qualification_text() {
        let q = qualifies_rs(&fixtures::t1(), &RsOptions::default());
        assert!(!q.conclusion_applies());
        let text = q.to_string();
        assert!(text.contains("aperiodic: fail"));
        assert!(text.contains("conclusion: not asserted"));

        let q = qualifies_rs(&fixtures::t1_t1(), &RsOptions::default());
        assert!(!q.strongly_connected);

        let q = qualifies_rs(&fixtures::tors(), &RsOptions::default());
        assert!(q.finite && q.strongly_connected);
    }
}
