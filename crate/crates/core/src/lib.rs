//! Exact computations in Huang's matrix algebra `U^∞(V)` for the rank-one
//! Heisenberg vertex operator algebra `V = M(1)`.
//!
//! * [`exact`]: rationals, polynomials in the formal highest weight λ, partitions.
//! * [`fock`]: Fock modules `M(1, λ)`, Heisenberg modes and vertex operator modes.
//! * [`uinf`]: elements of `U^∞(V)`, the products `∘ₙ`, `*ₙ`, `◇` and generator families.
//! * [`grmod`]: the associated graded module and the ϑ-action.
//! * [`oracle`]: decidable membership in `Q^∞(M(1))` and the diagonal shift check.
//! * [`props`]: packaged verification runs over parameter grids.
//! * [`literal`]: parsing and canonical printing of element literals.

pub mod error;
pub mod exact;
pub mod fock;
pub mod grmod;
pub mod linalg;
pub mod literal;
pub mod oracle;
pub mod props;
pub mod uinf;

pub use error::{Error, Result};
pub use exact::{binom, partitions_of, LambdaPoly, Partition, Rational};
pub use fock::{FockModule, FockVector, WeightSplit};
pub use grmod::{gr_basis, theta_apply, theta_apply_in, GrVector};
pub use literal::{parse_element, parse_uelement, parse_vector, Element, ParseError};
pub use oracle::{diagonal_shift_report, in_qinf, MembershipReport, ShiftReport, Witness};
pub use props::CheckResult;
pub use uinf::{circ_n, diamond, j_gen, l_gen, o_infty_gen, o_n_span, shift_diag, star_n, UElement};
