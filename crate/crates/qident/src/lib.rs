//! Exact-arithmetic toolkit for a family of finite q-identities.
//!
//! Everything here is computed over arbitrary-precision integers and
//! compared by exact equality; there is no floating point anywhere.
//! The crate covers two circles of results and their brute-force
//! cross-checks:
//!
//! * **Finite pentagonal sums.** The sums
//!   `h(L, k) = sum_{j=-L}^{2L} (-1)^j q^{j(3j+1)/2 + kj} [2L-j, L+j]`
//!   generalize the Berkovich-Garvan identity `h(L, 0) = 1`, a finite
//!   version of Euler's pentagonal number theorem. The [`pentagon`]
//!   module evaluates them directly and through a closed form built on
//!   q-Fibonacci polynomials, and the [`series`] module ties their
//!   `L -> infinity` limits to truncated infinite products and
//!   Jacobi-triple-product expansions.
//!
//! * **Rogers-Szego evaluations.** The [`gauss`] module evaluates
//!   `r_n(1, -q^k)` for the Rogers-Szego polynomials
//!   `r_n(x, a) = sum_k [n k] x^k a^{n-k}`, generalizing Gauss's
//!   `r_{2n}(1, -1) = (1-q)(1-q^3)...(1-q^{2n-1})`, via ratio families
//!   `b(n, k)`, `c(n, k)` and their q-Fibonacci-like closed forms.
//!
//! The [`verify`] module packages every identity as a named suite over a
//! parameter grid with machine-readable pass/fail reports; the `qident`
//! binary is a thin front end over it. The `examples/` directory has one
//! runnable walk-through per capability.

pub mod error;
pub mod format;
pub mod gauss;
pub mod pentagon;
pub mod poly;
pub mod qcomb;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use poly::{BivarPoly, LaurentPoly, Monomial};
pub use series::TruncatedSeries;
pub use verify::{run_suite, Suite, SuiteConfig, VerificationReport};
