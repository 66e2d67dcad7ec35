//! Statistic-transporting bijections on classes avoiding a pattern of length 3.
//!
//! | map            | domain → codomain      | transports                                   |
//! |----------------|------------------------|----------------------------------------------|
//! | [`phi`]        | `Av(231)` → `Av(231)`  | `(foze″, Lrmax)` → `(inv, Lrmax)`            |
//! | [`psi`]        | `Av(312)` → `Av(321)`  | `(foze″, Lrmax)` → `(inv, Lrmax)`            |
//! | [`theta`]      | `Av(231)` → `Av(231)`  | `(Des, Lrmax, Rlmaxl, Rlminl)` → `(Dbot, …)` |
//! | [`conjugate_cr`] | `Av(312)` → `Av(312)` | `(Des, Rlmin, Lrminl, Lrmaxl)` → `(Dtop−1, …)` |
//!
//! Every public map checks its avoidance precondition and returns
//! [`Error::ContainsPattern`] when it fails.

mod phi;
mod psi;
mod theta;

use std::fmt;
use std::str::FromStr;

pub use phi::{phi, phi_inverse};
pub use psi::{psi, psi_inverse};
pub use theta::{
    av_prime_blocks, build_asc_perm, build_atop_perm, conjugate_cr, conjugate_cr_inverse,
    extract_atop_consistent_pair, extract_consistent_pair, theta, theta_inverse, theta_prime,
    theta_prime_inverse, ConsistentPair,
};

use crate::error::{Error, Result};
use crate::patterns::contains;
use crate::perm::Perm;

pub(crate) fn require_avoids(p: &Perm, pattern: &[usize]) -> Result<()> {
    let pat = Perm::from_vec_unchecked(pattern.to_vec());
    if contains(&pat, p) {
        Err(Error::ContainsPattern {
            perm: p.clone(),
            pattern: pat,
        })
    } else {
        Ok(())
    }
}

/// The bijections selectable by name from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bijection {
    Phi,
    PhiInverse,
    Psi,
    PsiInverse,
    Theta,
    ThetaInverse,
    ConjugateCr,
}

impl Bijection {
    pub const ALL: [Bijection; 7] = [
        Bijection::Phi,
        Bijection::PhiInverse,
        Bijection::Psi,
        Bijection::PsiInverse,
        Bijection::Theta,
        Bijection::ThetaInverse,
        Bijection::ConjugateCr,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Bijection::Phi => "phi",
            Bijection::PhiInverse => "phi-inv",
            Bijection::Psi => "psi",
            Bijection::PsiInverse => "psi-inv",
            Bijection::Theta => "theta",
            Bijection::ThetaInverse => "theta-inv",
            Bijection::ConjugateCr => "cr-conjugate",
        }
    }

    /// The classical pattern the input must avoid.
    pub fn domain_pattern(self) -> Perm {
        let v = match self {
            Bijection::Phi | Bijection::PhiInverse | Bijection::Theta | Bijection::ThetaInverse => {
                vec![2, 3, 1]
            }
            Bijection::Psi | Bijection::ConjugateCr => vec![3, 1, 2],
            Bijection::PsiInverse => vec![3, 2, 1],
        };
        Perm::from_vec_unchecked(v)
    }

    pub fn apply(self, p: &Perm) -> Result<Perm> {
        match self {
            Bijection::Phi => phi(p),
            Bijection::PhiInverse => phi_inverse(p),
            Bijection::Psi => psi(p),
            Bijection::PsiInverse => psi_inverse(p),
            Bijection::Theta => theta(p),
            Bijection::ThetaInverse => theta_inverse(p),
            Bijection::ConjugateCr => conjugate_cr(p),
        }
    }
}

impl fmt::Display for Bijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Bijection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Bijection::ALL
            .into_iter()
            .find(|b| b.name() == s.trim())
            .ok_or_else(|| Error::UnknownBijection(s.to_string()))
    }
}
