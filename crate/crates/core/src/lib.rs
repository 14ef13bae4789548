//! Higher-rank graphs given by skeletons and factorization squares, their
//! dual graphs, the conditions (H0)-(H3) on {0,1} coordinate matrices, and
//! the K-groups of the associated C*-algebras via exact Smith normal form.

pub mod corpus;
pub mod degree;
pub mod dual;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod graph;
pub mod ktheory;
pub mod matrix;
pub mod path;
pub mod snf;
pub mod words;

pub use degree::{Degree, Displacement, ParseDegreeError};
pub use dual::{dual, dual_matrix, iterated_dual_equal, iterated_dual_serializations, DualGraph};
pub use error::{Error, Result};
pub use format::{
    parse_kgraph, parse_presentation, serialize_kgraph, serialize_presentation, ParseError,
    SyntaxError,
};
pub use graph::{
    validate, Diagnostic, Edge, EdgeId, KGraph, Limits, Presentation, Square, ValidationReport,
    VertexId, Violation,
};
pub use ktheory::{
    k_groups, k_groups_with, mode_agreement, qualifies_rs, Hypotheses, KOptions, KTheoryResult,
    Mode, Qualification,
};
pub use matrix::IntMatrix;
pub use path::{Path, StructuralReport};
pub use snf::{cokernel, minor_gcd_invariants, smith_normal_form, AbelianGroup, CokernelResult, SnfResult};
pub use words::{
    aperiodic_prefix, check_rs, h2_iff_strongly_connected, path_of_word, word_of_path,
    AperiodicPrefix, H3Verdict, H3Witness, RsOptions, RsReport, Word,
};

pub use num_bigint::BigInt;
