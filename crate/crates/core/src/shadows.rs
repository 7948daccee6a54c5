//! Source shadows and shadow-family generation.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::dag::{CutSet, DagInstance, Vertex};
use crate::oracle::{brute_solve, Answer, OracleError};

pub const DEFAULT_EXHAUSTIVE_LIMIT: usize = 16;
pub const DEFAULT_RANDOM_ITERATIONS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShadowStrategy {
    /// Every subset of nonterminals; refuses more than `limit` nonterminals.
    Exhaustive { limit: usize },
    /// `iterations` sets, each nonterminal kept with probability 1/2.
    Randomized { seed: u64, iterations: usize },
    /// The single shadow of the brute-force lex-min solution.
    OracleAssisted,
}

impl Default for ShadowStrategy {
    fn default() -> Self {
        ShadowStrategy::Exhaustive {
            limit: DEFAULT_EXHAUSTIVE_LIMIT,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShadowError {
    #[error("{found} nonterminals exceed the exhaustive limit of {limit}")]
    ExhaustiveLimitExceeded { found: usize, limit: usize },
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShadowFamily {
    pub sets: Vec<BTreeSet<Vertex>>,
    pub strategy: ShadowStrategy,
}

impl ShadowFamily {
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }
}

/// Nonterminals outside `z` that no source reaches in `G - z`.
pub fn source_shadow(g: &DagInstance, z: &CutSet) -> BTreeSet<Vertex> {
    let removed = g.mask_of(z.iter());
    let starts: Vec<usize> = (0..g.num_pairs()).map(|i| g.pair_pos(i).0).collect();
    let seen = g.forward_mask(&starts, &removed);
    let term = g.terminal_mask();
    (0..g.len())
        .filter(|&k| !term[k] && !removed[k] && !seen[k])
        .map(|k| g.id(k))
        .collect()
}

fn fnv1a(words: &[u32]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for w in words {
        for b in w.to_le_bytes() {
            h ^= u64::from(b);
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    }
    h
}

/// Number of sets `strategy` would produce, without building them.
pub fn family_size(g: &DagInstance, strategy: ShadowStrategy) -> Result<usize, ShadowError> {
    let n = g.nonterminals().count();
    match strategy {
        ShadowStrategy::Exhaustive { limit } if n > limit => {
            Err(ShadowError::ExhaustiveLimitExceeded { found: n, limit })
        }
        ShadowStrategy::Exhaustive { .. } => Ok(1 << n),
        ShadowStrategy::Randomized { iterations, .. } => Ok(iterations),
        ShadowStrategy::OracleAssisted => Ok(1),
    }
}

/// Builds the family of candidate shadow sets for `g`.
///
/// Exhaustive sets come in bitmask order with bit `j` standing for the `j`-th
/// nonterminal in topological order. Randomized sets depend only on the
/// instance, the seed and the iteration count.
pub fn shadow_family(g: &DagInstance, strategy: ShadowStrategy) -> Result<ShadowFamily, ShadowError> {
    let free: Vec<Vertex> = g.nonterminals().collect();
    let count = family_size(g, strategy)?;
    let sets = match strategy {
        ShadowStrategy::Exhaustive { .. } => (0..count as u64)
            .map(|mask| {
                free.iter()
                    .enumerate()
                    .filter(|&(j, _)| mask >> j & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect(),
        ShadowStrategy::Randomized { seed, iterations } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ fnv1a(&g.canonical_key()));
            (0..iterations)
                .map(|_| free.iter().copied().filter(|_| rng.gen_bool(0.5)).collect())
                .collect()
        }
        ShadowStrategy::OracleAssisted => vec![lexmin_shadow_oracle(g)?],
    };
    Ok(ShadowFamily { sets, strategy })
}

/// Source shadow of the brute-force lex-min solution; empty for NO instances.
pub fn lexmin_shadow_oracle(g: &DagInstance) -> Result<BTreeSet<Vertex>, OracleError> {
    Ok(match brute_solve(g)? {
        Answer::Yes(z) => source_shadow(g, &z),
        Answer::No => BTreeSet::new(),
    })
}
