//! The descending minimization network: starting from the universal
//! congruence, alternately minimize the trace and the kernel coordinate.
//!
//!   alpha_0 = beta_0 = ω,
//!   alpha_n = min_trace(beta_{n-1}),
//!   beta_n  = min_kernel(alpha_{n-1}).
//!
//! Both chains descend and stabilize on finite semigroups. Landmark levels
//! carry classical meaning: `alpha_1` is the least group congruence,
//! `beta_1` the least semilattice congruence, `alpha_2` the least Clifford
//! congruence, `beta_2` the least congruence with an E-unitary quotient,
//! and `beta_3` the least with an E-reflexive quotient.

use thiserror::Error;

use crate::congruence::{self, Congruence};
use crate::semigroup::InverseSemigroup;

/// Default bound on how many levels to compute before giving up.
pub const DEFAULT_MAX_LEVEL: usize = 16;

/// The chains failed to stabilize within the requested number of levels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("minimization chains did not stabilize within {max_level} levels")]
pub struct NotStabilized {
    pub max_level: usize,
}

/// Both minimization chains of one semigroup, computed through their
/// stabilization level.
#[derive(Debug, Clone)]
pub struct MinNetwork {
    alphas: Vec<Congruence>,
    betas: Vec<Congruence>,
    stab: usize,
}

impl MinNetwork {
    /// Compute both chains until they stabilize, erroring if that takes
    /// more than `max_level` levels. The stabilization level is the least
    /// `n` with `alpha_{n+1} = alpha_n` and `beta_{n+1} = beta_n`; once it
    /// is found one extra level is computed and checked, so a returned
    /// network is a verified fixed point.
    pub fn compute(s: &InverseSemigroup, max_level: usize) -> Result<MinNetwork, NotStabilized> {
        let omega = Congruence::universal(s);
        let mut alphas = vec![omega.clone()];
        let mut betas = vec![omega];
        let mut stab: Option<usize> = None;
        for n in 1..=max_level {
            let alpha = congruence::min_trace(s, &betas[n - 1]);
            let beta = congruence::min_kernel(s, &alphas[n - 1]);
            let fixed = alpha == alphas[n - 1] && beta == betas[n - 1];
            alphas.push(alpha);
            betas.push(beta);
            if fixed {
                stab = Some(n - 1);
                break;
            }
        }
        let stab = stab.ok_or(NotStabilized { max_level })?;
        // One confirming step past the detected fixed point.
        let next_alpha = congruence::min_trace(s, &betas[stab + 1]);
        let next_beta = congruence::min_kernel(s, &alphas[stab + 1]);
        assert!(
            next_alpha == alphas[stab + 1] && next_beta == betas[stab + 1],
            "a detected fixed point must persist one level further"
        );
        alphas.truncate(stab + 1);
        betas.truncate(stab + 1);
        Ok(MinNetwork {
            alphas,
            betas,
            stab,
        })
    }

    /// The least level `n` with `alpha_{n+1} = alpha_n` and
    /// `beta_{n+1} = beta_n`.
    pub fn stabilization_level(&self) -> usize {
        self.stab
    }

    /// `alpha_n`; indices past the stabilization level return the stable
    /// value (the chain is constant from there on).
    pub fn alpha(&self, n: usize) -> &Congruence {
        &self.alphas[n.min(self.stab)]
    }

    /// `beta_n`, clamped like [`MinNetwork::alpha`].
    pub fn beta(&self, n: usize) -> &Congruence {
        &self.betas[n.min(self.stab)]
    }

    /// The alpha chain, levels `0..=stabilization_level`.
    pub fn alpha_chain(&self) -> &[Congruence] {
        &self.alphas
    }

    /// The beta chain, levels `0..=stabilization_level`.
    pub fn beta_chain(&self) -> &[Congruence] {
        &self.betas
    }

    /// `alpha_n ∧ beta_n`.
    pub fn meet_at(&self, s: &InverseSemigroup, n: usize) -> Congruence {
        congruence::meet(s, self.alpha(n), self.beta(n))
    }

    /// `alpha_n ∨ beta_n`.
    pub fn join_at(&self, s: &InverseSemigroup, n: usize) -> Congruence {
        congruence::join(s, self.alpha(n), self.beta(n))
    }

    /// Least congruence with a group quotient (`alpha_1`).
    pub fn sigma(&self) -> &Congruence {
        self.alpha(1)
    }

    /// Least congruence with a semilattice quotient (`beta_1`).
    pub fn eta(&self) -> &Congruence {
        self.beta(1)
    }

    /// Least congruence with a Clifford quotient (`alpha_2`).
    pub fn nu(&self) -> &Congruence {
        self.alpha(2)
    }

    /// Least congruence with an E-unitary quotient (`beta_2`).
    pub fn pi(&self) -> &Congruence {
        self.beta(2)
    }

    /// Least congruence with an E-reflexive quotient (`beta_3`).
    pub fn lambda(&self) -> &Congruence {
        self.beta(3)
    }
}
