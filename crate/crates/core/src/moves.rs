//! Partition-level growth operations, performed on the ring of `2n`
//! positions carrying the blocks of a partition and of its complement.
//!
//! Each operation returns a structure on `2n + 2` positions; time `2n + 2`
//! coincides with position 0 and is dropped. Even positions of the new ring
//! give the new partition.

use crate::encoding::position_ring;
use crate::error::{Error, Result};
use crate::partition::{Frame, NoncrossingPartition, PairPartition};

fn check_position(k: usize, max: usize) -> Result<()> {
    if k > max {
        return Err(Error::IndexOutOfRange { k, max });
    }
    Ok(())
}

/// Last position `l <= len` sharing a block with position `k`; `len` stands
/// for position 0 read as the end of the ring.
fn block_end(ring: &[usize], k: usize) -> usize {
    let len = ring.len();
    let block = ring[k % len];
    if ring[0] == block {
        return len;
    }
    (k..len).rev().find(|&t| ring[t] == block).expect("position k is in its own block")
}

fn at(ring: &[usize], t: usize) -> usize {
    ring[t % ring.len()]
}

fn even_positions(ring: &[usize]) -> Vec<usize> {
    ring.iter().step_by(2).copied().collect()
}

fn odd_positions(ring: &[usize]) -> Vec<usize> {
    ring.iter().skip(1).step_by(2).copied().collect()
}

fn fresh_id(ring: &[usize]) -> usize {
    ring.iter().max().map_or(0, |&m| m + 1)
}

/// Inserts two vertices between positions `k` and `k+1`: a new singleton
/// followed by a vertex joining the block of position `k`.
pub fn insert_vertex(p: &NoncrossingPartition, k: usize) -> Result<NoncrossingPartition> {
    let len = 2 * p.n();
    check_position(k, len)?;
    if len == 0 {
        return Ok(NoncrossingPartition::single_block(1));
    }
    let ring = position_ring(p);
    let fresh = fresh_id(&ring);
    let mut grown = Vec::with_capacity(len + 3);
    grown.extend((0..=k).map(|t| at(&ring, t)));
    grown.push(fresh);
    grown.extend((k..=len).map(|t| at(&ring, t)));
    grown.pop();
    Ok(NoncrossingPartition::from_assignment(&even_positions(&grown), Frame::Even))
}

/// The position `l` at which [`slice`] cuts: the last position up to `2n`
/// in the block of `P ∪ K` containing position `k`.
pub fn slice_end(p: &NoncrossingPartition, k: usize) -> Result<usize> {
    let len = 2 * p.n();
    check_position(k, len)?;
    if len == 0 {
        return Ok(0);
    }
    Ok(block_end(&position_ring(p), k))
}

/// Splits positions `k` and `l` in two and cuts the block of position `k`
/// along the chord between them. The part between the copies moves to the
/// opposite parity, the rest keeps the original block.
pub fn slice(p: &NoncrossingPartition, k: usize) -> Result<NoncrossingPartition> {
    let len = 2 * p.n();
    check_position(k, len)?;
    if len == 0 {
        return Ok(NoncrossingPartition::single_block(1));
    }
    let ring = position_ring(p);
    let l = block_end(&ring, k);
    let block = at(&ring, k);
    let fresh = fresh_id(&ring);
    let mut grown = Vec::with_capacity(len + 3);
    grown.extend((0..=k).map(|t| at(&ring, t)));
    grown.extend((k..=l).map(|t| match at(&ring, t) {
        b if b == block => fresh,
        b => b,
    }));
    grown.extend((l..=len).map(|t| at(&ring, t)));
    grown.pop();
    Ok(NoncrossingPartition::from_assignment(&even_positions(&grown), Frame::Even))
}

/// Ring of a pair partition placed on the odd slots of the `4n`-gon, with
/// its complement regions on the even slots.
fn pair_ring(p: &NoncrossingPartition) -> Result<Vec<usize>> {
    let pair = PairPartition::try_from(p.clone())?;
    let regions = pair.into_inner().with_frame(Frame::Odd).kreweras();
    Ok(position_ring(&regions))
}

fn pair_from_ring(ring: &[usize]) -> PairPartition {
    let chords = NoncrossingPartition::from_assignment(&odd_positions(ring), Frame::Even);
    PairPartition::try_from(chords).expect("chord insertion keeps blocks of size two")
}

/// Adds a new chord joining two adjacent vertices placed inside the region
/// at `ω_{2n}^k`.
pub fn insert_short_chord(p: &NoncrossingPartition, k: usize) -> Result<PairPartition> {
    check_position(k, p.n())?;
    if p.n() == 0 {
        return PairPartition::try_from(NoncrossingPartition::single_block(2));
    }
    let ring = pair_ring(p)?;
    let len = ring.len();
    let (chord, cap) = (fresh_id(&ring), fresh_id(&ring) + 1);
    let mut grown = Vec::with_capacity(len + 5);
    grown.extend((0..=2 * k).map(|t| at(&ring, t)));
    grown.extend([chord, cap, chord]);
    grown.extend((2 * k..=len).map(|t| at(&ring, t)));
    grown.pop();
    Ok(pair_from_ring(&grown))
}

/// Adds a new chord from `ω_{2n}^k` to `ω_{2n}^l`, the last point of the
/// same complement region, splitting that region in two.
pub fn insert_long_chord(p: &NoncrossingPartition, k: usize) -> Result<PairPartition> {
    check_position(k, p.n())?;
    if p.n() == 0 {
        return PairPartition::try_from(NoncrossingPartition::single_block(2));
    }
    let ring = pair_ring(p)?;
    let len = ring.len();
    let l = block_end(&ring, 2 * k);
    let region = at(&ring, 2 * k);
    let (chord, upper) = (fresh_id(&ring), fresh_id(&ring) + 1);
    let mut grown = Vec::with_capacity(len + 5);
    grown.extend((0..=2 * k).map(|t| at(&ring, t)));
    grown.push(chord);
    grown.extend((2 * k..=l).map(|t| match at(&ring, t) {
        b if b == region => upper,
        b => b,
    }));
    grown.push(chord);
    grown.extend((l..=len).map(|t| at(&ring, t)));
    grown.pop();
    Ok(pair_from_ring(&grown))
}

/// The region end `l` (in half-path time) used by [`insert_long_chord`].
pub fn long_chord_end(p: &NoncrossingPartition, k: usize) -> Result<usize> {
    check_position(k, p.n())?;
    if p.n() == 0 {
        return Ok(0);
    }
    Ok(block_end(&pair_ring(p)?, 2 * k) / 2)
}
