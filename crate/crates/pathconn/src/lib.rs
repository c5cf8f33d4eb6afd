//! k-path-connectivity of complete and complete bipartite graphs.
//!
//! For a graph `G` and a vertex set `S` with `|S| >= 2`, an *S-path* is a
//! simple path containing every vertex of `S`, and two S-paths are
//! *internally disjoint* when they share no edge and their vertex sets meet
//! exactly in `S`. `pi_G(S)` is the maximum size of a pairwise internally
//! disjoint family of S-paths, and the k-path-connectivity `pi_k(G)` is the
//! minimum of `pi_G(S)` over all k-subsets. `pi_2` is classical
//! connectivity; `pi_n` counts edge-disjoint spanning paths.
//!
//! The crate has three legs that check each other:
//!
//! * [`formula`] — closed forms for `pi_k(K_n)` and `pi_k(K_{a,b})`, every
//!   result labeled with the branch that produced it;
//! * [`witness`] — constructions that emit explicit S-path families
//!   realizing the closed-form values, validated by [`path::validate_family`];
//! * [`oracle`] — an exact brute-force search (S-path enumeration plus
//!   maximum clique on a compatibility graph) for arbitrary small graphs,
//!   used to machine-verify the closed forms cell by cell.
//!
//! # Quick start
//!
//! ```
//! use pathconn::formula::pi_bipartite;
//! use pathconn::oracle::{pi_k_exact, SearchBudget};
//! use pathconn::graph::make_complete_bipartite;
//!
//! let formula = pi_bipartite(3, 3, 4)?;
//! let (g, _) = make_complete_bipartite(3, 3)?;
//! let oracle = pi_k_exact(&g, 4, &SearchBudget::default(), None, false)?;
//! assert_eq!(formula.value, 1);
//! assert_eq!(oracle.value, 1);
//! # Ok::<(), pathconn::Error>(())
//! ```
//!
//! # Runnable examples
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run --release --example formula_values      # closed forms with branch labels
//! cargo run --release --example value_table         # the full pi_k(K_{a,b}) table
//! cargo run --release --example spanning_family     # edge-disjoint spanning path families
//! cargo run --release --example replacement_witness # the k = 2a-2 replacement construction
//! cargo run --release --example oracle_search       # exact search on arbitrary graphs
//! cargo run --release --example verify_sweep        # formula vs. oracle sweep
//! ```
//!
//! The `pathconn` binary exposes the same capabilities as subcommands
//! (`formula`, `witness`, `oracle`, `verify`, `table`); see the README.

pub mod cli;
pub mod error;
pub mod formula;
pub mod graph;
pub mod oracle;
pub mod path;
pub mod value;
pub mod verify;
pub mod witness;

pub use error::{Error, Result};
pub use graph::{make_complete, make_complete_bipartite, BipartiteLabeling, Graph};
pub use path::{is_s_path, validate_family, Path, SPathFamily, ValidationReport};
pub use value::{PiValue, Provenance};
