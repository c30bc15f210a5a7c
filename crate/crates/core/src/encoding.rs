//! Finite sets of non-negative integers as binary integers, ground sets
//! built from separated blocks, and the alternating-sum identity
//! `Σ*_J x = f(B_{J_alt})`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::forms::{alt_sign_vector, eval_form, GroundSet, IndexSet, Parity};

/// `f(S) = Σ_{s ∈ S} 2^s`.
pub fn f_encode(set: &BTreeSet<u64>) -> Result<BigUint> {
    if set.is_empty() {
        return Err(Error::domain("cannot encode the empty set"));
    }
    let mut out = BigUint::zero();
    for &s in set {
        out.set_bit(s, true);
    }
    Ok(out)
}

/// Blocks `B_1 < B_2 < ... < B_m` with `max B_i < min B_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockFamily(Vec<BTreeSet<u64>>);

impl BlockFamily {
    pub fn new(blocks: Vec<BTreeSet<u64>>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::domain("block family needs at least one block"));
        }
        if blocks.iter().any(|b| b.is_empty()) {
            return Err(Error::domain("blocks must be nonempty"));
        }
        for w in blocks.windows(2) {
            if w[0].last() >= w[1].first() {
                return Err(Error::domain(
                    "blocks must be separated: max of each below min of the next",
                ));
            }
        }
        Ok(BlockFamily(blocks))
    }

    pub fn blocks(&self) -> &[BTreeSet<u64>] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Union of the blocks at the given 1-based positions.
    pub fn union_of(&self, positions: &BTreeSet<usize>) -> Result<BTreeSet<u64>> {
        let mut out = BTreeSet::new();
        for &p in positions {
            let block = p
                .checked_sub(1)
                .and_then(|i| self.0.get(i))
                .ok_or_else(|| Error::domain("block position out of range"))?;
            out.extend(block.iter().copied());
        }
        Ok(out)
    }
}

/// `x_j = f(B_1 ∪ ... ∪ B_j)`.
pub fn blocks_to_x(fam: &BlockFamily) -> GroundSet {
    let mut acc = BigUint::zero();
    let mut xs = Vec::with_capacity(fam.len());
    for b in fam.blocks() {
        for &s in b {
            acc.set_bit(s, true);
        }
        xs.push(acc.clone());
    }
    GroundSet::new(xs).expect("separated blocks give increasing values")
}

/// Positions whose blocks make up the alternating sum over `J`.
///
/// Even `|J|`: the runs `(j_1, j_2], (j_3, j_4], ...`.
/// Odd `|J|`: `[1, j_1]` followed by `(j_2, j_3], (j_4, j_5], ...`.
pub fn j_alt(js: &IndexSet, parity: Parity) -> Result<BTreeSet<usize>> {
    let j = js.indices();
    let ok = match parity {
        Parity::Even => j.len() >= 2 && j.len().is_multiple_of(2),
        Parity::Odd => j.len() >= 3 && j.len() % 2 == 1,
    };
    if !ok {
        return Err(Error::domain("index set size does not match the parity"));
    }
    let mut out = BTreeSet::new();
    let pairs = match parity {
        Parity::Even => j,
        Parity::Odd => {
            out.extend(1..=j[0]);
            &j[1..]
        }
    };
    for run in pairs.chunks(2) {
        out.extend(run[0] + 1..=run[1]);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AltIdentity {
    pub equal: bool,
    /// Alternating sum of `blocks_to_x(fam)` over `J`.
    pub lhs: BigInt,
    /// `f` of the union of the blocks selected by `J_alt`.
    pub rhs: BigInt,
}

pub fn verify_alt_identity(fam: &BlockFamily, js: &IndexSet, parity: Parity) -> Result<AltIdentity> {
    let alt = j_alt(js, parity)?;
    if js.max_index().is_some_and(|m| m > fam.len()) {
        return Err(Error::domain("index set exceeds the number of blocks"));
    }
    let xs = blocks_to_x(fam);
    let form = alt_sign_vector(js.len(), parity)?;
    let lhs = eval_form(&form, &xs, js)?;
    let rhs = BigInt::from(f_encode(&fam.union_of(&alt)?)?);
    Ok(AltIdentity {
        equal: lhs == rhs,
        lhs,
        rhs,
    })
}
