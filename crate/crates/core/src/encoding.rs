//! The Dyck-path code of a noncrossing partition and its pair-partition
//! variant.
//!
//! A partition `P` of `P_n` and its complement `K` together partition the
//! `2n`-th roots of unity: even positions carry `P`, odd positions `K`.
//! Blocks of `P ∪ K` touching consecutive positions are neighbours; labelling
//! blocks by breadth-first distance from the block of position 0 and reading
//! the labels around the circle gives a `2n`-step Dyck path.

use std::collections::VecDeque;

use crate::dyck::DyckPath;
use crate::error::Result;
use crate::partition::{Frame, NoncrossingPartition, PairPartition};

/// Block ids of `P ∪ K` around the `2n` positions. Ids of `P` blocks come
/// first, complement blocks are offset by the number of `P` blocks.
pub(crate) fn position_ring(p: &NoncrossingPartition) -> Vec<usize> {
    let n = p.n();
    let k = p.kreweras();
    let offset = p.blocks().len();
    let mut ring = vec![0; 2 * n];
    for (b, block) in p.blocks().iter().enumerate() {
        for &v in block {
            ring[2 * v] = b;
        }
    }
    for (b, block) in k.blocks().iter().enumerate() {
        for &j in block {
            ring[2 * j + 1] = offset + b;
        }
    }
    ring
}

/// Breadth-first labels `ℓ_0, ..., ℓ_{2n-1}` of the combined ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombinedLabeling {
    n: usize,
    labels: Vec<u32>,
}

impl CombinedLabeling {
    pub fn of(p: &NoncrossingPartition) -> Self {
        let n = p.n();
        if n == 0 {
            return CombinedLabeling { n, labels: vec![] };
        }
        let ring = position_ring(p);
        let block_count = ring.iter().max().unwrap() + 1;
        let mut adjacent: Vec<Vec<usize>> = vec![Vec::new(); block_count];
        for t in 0..ring.len() {
            let (x, y) = (ring[t], ring[(t + 1) % ring.len()]);
            adjacent[x].push(y);
            adjacent[y].push(x);
        }
        let mut label = vec![u32::MAX; block_count];
        let mut queue = VecDeque::from([ring[0]]);
        label[ring[0]] = 0;
        while let Some(b) = queue.pop_front() {
            for &c in &adjacent[b] {
                if label[c] == u32::MAX {
                    label[c] = label[b] + 1;
                    queue.push_back(c);
                }
            }
        }
        CombinedLabeling { n, labels: ring.iter().map(|&b| label[b]).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// The path `(ℓ_0, ..., ℓ_{2n})` with `ℓ_{2n} = ℓ_0`.
    pub fn to_path(&self) -> DyckPath {
        let mut heights = self.labels.clone();
        heights.push(0);
        DyckPath::from_heights_unchecked(heights)
    }
}

/// The `2n`-step Dyck path encoding `p`. The frame tag is ignored.
pub fn encode(p: &NoncrossingPartition) -> DyckPath {
    CombinedLabeling::of(p).to_path()
}

/// Equivalence classes of `i ~ j ⟺ ℓ_i = ℓ_j = min_{[i,j]} ℓ`, returned as
/// the even-position partition and the odd-position one (its complement).
pub fn decode(path: &DyckPath) -> (NoncrossingPartition, NoncrossingPartition) {
    let h = path.heights();
    let steps = path.len();
    let mut open: Vec<Option<usize>> = vec![None; path.semilength() + 2];
    let mut class = vec![0usize; steps];
    let mut next_id = 0;
    for t in 0..steps {
        let level = h[t] as usize;
        if t > 0 && h[t] < h[t - 1] {
            open[level + 1] = None;
        }
        class[t] = *open[level].get_or_insert_with(|| {
            next_id += 1;
            next_id - 1
        });
    }
    let even: Vec<usize> = class.iter().step_by(2).copied().collect();
    let odd: Vec<usize> = class.iter().skip(1).step_by(2).copied().collect();
    (
        NoncrossingPartition::from_assignment(&even, Frame::Even),
        NoncrossingPartition::from_assignment(&odd, Frame::Odd),
    )
}

/// The unconstrained `2n`-step path of a pair partition of `P_{2n}`.
///
/// Vertex `i` is placed on odd slot `i` of the `4n`-gon; its complement then
/// occupies the even slots, the combined ring is labelled from position 0
/// and the even-time half path is returned.
pub fn encode_pair(p: &NoncrossingPartition) -> Result<DyckPath> {
    let pair = PairPartition::try_from(p.clone())?;
    let regions = pair.into_inner().with_frame(Frame::Odd).kreweras();
    Ok(encode(&regions).halve().expect("pair partitions have pair-encodable codes"))
}

/// Inverse of [`encode_pair`].
pub fn decode_pair(path: &DyckPath) -> PairPartition {
    let (_, chords) = decode(&path.double());
    PairPartition::try_from(chords.with_frame(Frame::Even)).expect("doubled paths decode to pairs")
}

/// Fuses vertices `2k-1` and `2k` (indices mod `2n`) of a pair partition of
/// `P_{2n}` into vertex `k` of `P_n`.
pub fn pair_to_ncp(p: &NoncrossingPartition) -> Result<NoncrossingPartition> {
    let pair = PairPartition::try_from(p.clone())?;
    let n = pair.n() / 2;
    let fused = |v: usize| v.div_ceil(2) % n.max(1);
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for block in pair.blocks() {
        let a = root(&mut parent, fused(block[0]));
        let b = root(&mut parent, fused(block[1]));
        parent[a.max(b)] = a.min(b);
    }
    let ids: Vec<usize> = (0..n).map(|v| root(&mut parent, v)).collect();
    Ok(NoncrossingPartition::from_assignment(&ids, Frame::Even))
}
