//! Associated primes of powers of monomial ideals, with closed-form
//! classifiers for three families and a brute-force oracle to check them:
//! edge ideals of graphs, facet ideals of special odd cycles, and t-spread
//! principal Borel ideals.
//!
//! Every ideal is classified as normally torsionfree (`Ass(I^k) = Min(I)`
//! for all `k`), almost normally torsionfree (one extra prime allowed from
//! some power on), or neither.

pub mod assprimes;
pub mod budget;
pub mod error;
pub mod format;
pub mod graphs;
pub mod irreducible;
pub mod monomial;
pub mod simplicial;
pub mod transversal;
pub mod tspread;
pub mod varset;
pub mod verdict;

pub use assprimes::{
    ass_of_powers, associated_primes, minimal_primes, socle_witness, split_ass, AssReport,
    PowersVerdict, PrimeSet,
};
pub use budget::Budget;
pub use error::{AlgebraError, BudgetExceeded};
pub use monomial::{Exp, Monomial, MonomialIdeal, MonomialPrime};
pub use varset::VarSet;
pub use verdict::Classification;
