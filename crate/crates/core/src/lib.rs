//! Invariants of links of rational surface singularities given by plumbing
//! graphs: intersection lattices, fundamental cycles, Milnor open books,
//! canonical Legendrian surgery diagrams and Dehn twist word calculus on
//! small model surfaces.
//!
//! All arithmetic is exact. Every value is immutable once built, so the
//! whole crate can be shared freely between threads.

pub mod cycle;
pub mod graph;
pub mod lattice;
pub mod legendrian;
pub mod mcg;
pub mod openbook;

pub use cycle::{bad_vertices, fundamental_cycle, is_rational, Cycle, CycleError};
pub use graph::{
    hj_expansion, parse_document, parse_plumbing, seifert_to_plumbing, vertex_degrees, CfExpansion,
    Document, GraphError, PlumbingGraph, SeifertData, Vertex,
};
pub use lattice::{
    determinant, h1_order_three_holed, intersection_matrix, is_negative_definite,
    smith_normal_form, HomologyStructure, IntMatrix, LatticeError,
};
pub use legendrian::{
    adjunction_check, canonical_surgery_diagram, chern_evaluation, front_invariants, FrontData,
    LegendrianDiagram, LegendrianError,
};
pub use openbook::{
    classify_support, heegaard_bounds, milnor_openbook, minimal_milnor_openbook, planar_invariants,
    MilnorOpenBook, OpenBookError, SupportClass,
};
