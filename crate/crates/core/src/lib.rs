//! Population monotonic allocation schemes (PMAS) for vertex cover games.
//!
//! In the vertex cover game on a graph `G`, the players are the edges and a
//! coalition `S` pays `τ(G[S])`, the vertex cover number of the subgraph its
//! edges span. This crate decides whether such a game admits a PMAS, builds
//! one when it does, checks candidate schemes exhaustively, checks the
//! LP-dual description of PMAS coalition vectors, and enumerates the integral
//! PMAS-es through stable matchings.
//!
//! ```
//! use vcgame::{construct_pmas, Coalition, Graph};
//!
//! let g = Graph::parse("a b\nb c\nc d").unwrap();
//! let scheme = construct_pmas(&g).unwrap();
//! let grand = scheme.allocation(&g.players()).unwrap();
//! let shown: Vec<String> = grand.values().iter().map(|v| v.to_string()).collect();
//! assert_eq!(shown, ["1", "0", "1"]);
//! ```

pub mod allocation;
pub mod cli;
pub mod coalition;
pub mod error;
pub mod game;
pub mod graph;
pub mod matching;
pub mod pmas;

pub use allocation::{format_rational, parse_rational, CostAllocation, Rational};
pub use coalition::Coalition;
pub use error::{Error, Result};
pub use game::{Verdict, VertexCoverGame};
pub use graph::{ForbiddenWitness, Graph, Matching, Pattern};
pub use matching::{
    count_integral_pmas, enumerate_integral_pmas, gale_shapley, is_stable,
    preferences_from_scheme, scheme_from_preferences, PreferenceSystem,
};
pub use pmas::{
    check_dual_feasible, check_dual_optimal, check_pi_star, classify_components,
    construct_pmas, lambda, recognize_population_monotonic, verify_pmas, AllocationScheme,
    Classification, ComponentClassification, ComponentKind, CoverSystem,
};
