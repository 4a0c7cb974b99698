//! Depth functions of powers of monomial ideals, with a fast path for cover
//! ideals of balanced hypergraphs.
//!
//! The pieces, bottom up:
//!
//! * [`hypergraph`]: hypergraphs, balancedness, minimal vertex covers,
//!   restriction, seeded families;
//! * [`monomial`]: monomial ideals, powers, intersections, symbolic powers
//!   of cover ideals, localized membership;
//! * [`simplicial`]: simplicial complexes, the Stanley–Reisner dictionary,
//!   reduced homology over `Q` or `F_p`;
//! * [`takayama`]: degree complexes and depth through local cohomology;
//! * [`koszul`]: an independent depth oracle through Betti numbers;
//! * [`polytope`]: the edge-split inequality systems, vertex enumeration
//!   and lattice feasibility;
//! * [`stability`]: depth tables, index of depth stability, analytic spread
//!   and per-instance verdicts.

pub mod hypergraph;
pub mod koszul;
pub mod linalg;
mod lp;
pub mod monomial;
pub mod polytope;
pub mod simplicial;
pub mod stability;
pub mod takayama;
pub mod vertex_set;

pub use hypergraph::{
    check_matrix_balanced, generate, Balance, CycleWitness, EdgeSet, Family, FamilySpec,
    Hypergraph, HypergraphError, IncidenceMatrix, MatrixBalance, Restriction,
};
pub use koszul::{betti_table, depth_via_koszul, upper_koszul_complex, BettiTable, KoszulError};
pub use linalg::FieldSpec;
pub use monomial::{AlgebraError, Monomial, MonomialIdeal, SymbolicCaps};
pub use polytope::{
    check_vertex_integrality, feasible_splits, integer_point, integrality_all_splits,
    monotone_feasibility_all_splits, verify_monotone_feasibility, vertices_closed, ClosureMode,
    EdgeSplitSystem, Integrality, MonotoneReport, PolytopeError, RationalPoint,
};
pub use simplicial::{ReducedBetti, SimplicialComplex, SimplicialError};
pub use stability::{
    analytic_spread, depth_function, dstab, verify, DepthReport, Dstab, StabilityError,
    VerifyConfig,
};
pub use takayama::{
    degree_complex_balanced, degree_complex_generic, depth_power_balanced, depth_via_takayama,
    local_cohomology_dim, DegreeComplexKey, DegreeVector, HomologyCache, MemoryCache,
    TakayamaEngine, TakayamaError,
};
pub use vertex_set::VertexSet;
