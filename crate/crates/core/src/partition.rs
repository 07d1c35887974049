//! Noncrossing partitions of the regular polygon, their Kreweras complement
//! and the line-oriented text format.
//!
//! Vertex `i` of a partition of `P_n` sits either on an even slot (angle
//! `i/n` of a turn, the default) or on an odd slot (angle `(2i+1)/(2n)`),
//! recorded by [`Frame`]. Complements live on the opposite slots.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Which interleaved set of `2n`-th roots of unity the vertices occupy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Frame {
    /// Vertex `i` at `ω_{2n}^{2i}`.
    #[default]
    Even,
    /// Vertex `i` at `ω_{2n}^{2i+1}`.
    Odd,
}

impl Frame {
    pub fn flipped(self) -> Frame {
        match self {
            Frame::Even => Frame::Odd,
            Frame::Odd => Frame::Even,
        }
    }
}

/// A noncrossing partition in canonical form: blocks ascending, block list
/// sorted by minimum element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NoncrossingPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
    frame: Frame,
}

impl NoncrossingPartition {
    /// Validates `blocks` as a noncrossing partition of `{0, ..., n-1}` on
    /// the even frame.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        let mut blocks = blocks;
        for block in &mut blocks {
            if block.is_empty() {
                return Err(Error::NotAPartition { n, reason: "empty block".into() });
            }
            block.sort_unstable();
            for &v in block.iter() {
                if v >= n {
                    return Err(Error::NotAPartition { n, reason: format!("vertex {v} out of range") });
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::NotAPartition { n, reason: format!("vertex {v} repeated") });
                }
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::NotAPartition { n, reason: format!("vertex {v} missing") });
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        let partition = NoncrossingPartition { n, blocks, frame: Frame::Even };
        partition.check_crossings()?;
        Ok(partition)
    }

    /// Groups vertices by an arbitrary block id per vertex. The caller
    /// guarantees the result is noncrossing.
    pub(crate) fn from_assignment(ids: &[usize], frame: Frame) -> Self {
        let bound = ids.iter().max().map_or(0, |&m| m + 1);
        let mut slot = vec![usize::MAX; bound];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (v, &id) in ids.iter().enumerate() {
            if slot[id] == usize::MAX {
                slot[id] = blocks.len();
                blocks.push(Vec::new());
            }
            blocks[slot[id]].push(v);
        }
        let partition = NoncrossingPartition { n: ids.len(), blocks, frame };
        debug_assert!(partition.check_crossings().is_ok());
        partition
    }

    /// The partition into `n` singletons.
    pub fn singletons(n: usize) -> Self {
        NoncrossingPartition { n, blocks: (0..n).map(|v| vec![v]).collect(), frame: Frame::Even }
    }

    /// The one-block partition.
    pub fn single_block(n: usize) -> Self {
        let blocks = if n == 0 { vec![] } else { vec![(0..n).collect()] };
        NoncrossingPartition { n, blocks, frame: Frame::Even }
    }

    // Scanning vertices in order, a block that reappears must be the most
    // recently opened one still awaiting elements.
    fn check_crossings(&self) -> Result<()> {
        let owner = self.block_assignment();
        let mut next_pos = vec![0usize; self.blocks.len()];
        let mut open: Vec<usize> = Vec::new();
        for &b in &owner {
            let block = &self.blocks[b];
            if next_pos[b] > 0 {
                let top = *open.last().expect("open block on stack");
                if top != b {
                    return Err(crossing_witness(block, &self.blocks[top]));
                }
            } else if block.len() > 1 {
                open.push(b);
            }
            next_pos[b] += 1;
            if next_pos[b] == block.len() && block.len() > 1 {
                open.pop();
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn frame(&self) -> Frame {
        self.frame
    }

    /// Same blocks on the given frame (a rotation by `±π/n`).
    pub fn with_frame(mut self, frame: Frame) -> Self {
        self.frame = frame;
        self
    }

    /// Block index of every vertex.
    pub fn block_assignment(&self) -> Vec<usize> {
        let mut owner = vec![0; self.n];
        for (b, block) in self.blocks.iter().enumerate() {
            for &v in block {
                owner[v] = b;
            }
        }
        owner
    }

    /// Cyclic predecessor of every vertex inside its block.
    pub fn block_predecessors(&self) -> Vec<usize> {
        let mut pred = vec![0; self.n];
        for block in &self.blocks {
            let m = block.len();
            for (i, &v) in block.iter().enumerate() {
                pred[v] = block[(i + m - 1) % m];
            }
        }
        pred
    }

    /// Rotates vertex `v` to `v + shift (mod n)`, keeping the frame.
    pub fn rotate(&self, shift: isize) -> Self {
        if self.n == 0 {
            return self.clone();
        }
        let n = self.n as isize;
        let mut ids = vec![0; self.n];
        for (b, block) in self.blocks.iter().enumerate() {
            for &v in block {
                ids[(v as isize + shift).rem_euclid(n) as usize] = b;
            }
        }
        Self::from_assignment(&ids, self.frame)
    }

    /// The Kreweras complement: blocks are the connected components of the
    /// disk minus this partition's lamination, read on the opposite slots.
    ///
    /// For the even frame, complement slot `j` lies between vertices `j` and
    /// `j+1`; walking its region counterclockwise reaches vertex `j+1` and
    /// follows that block's chord back to its predecessor `p`, arriving just
    /// before slot `p`. The odd frame is the mirror statement.
    pub fn kreweras(&self) -> Self {
        let n = self.n;
        let pred = self.block_predecessors();
        let next: Vec<usize> = match self.frame {
            Frame::Even => (0..n).map(|j| pred[(j + 1) % n]).collect(),
            Frame::Odd => (0..n).map(|i| (pred[i] + 1) % n).collect(),
        };
        let mut ids = vec![usize::MAX; n];
        for start in 0..n {
            if ids[start] != usize::MAX {
                continue;
            }
            let mut v = start;
            while ids[v] == usize::MAX {
                ids[v] = start;
                v = next[v];
            }
        }
        Self::from_assignment(&ids, self.frame.flipped())
    }

    /// True iff every block has exactly two vertices.
    pub fn is_pair(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 2)
    }
}

fn crossing_witness(x: &[usize], y: &[usize]) -> Error {
    // Merge the two sorted blocks; a crossing shows up as four alternating runs.
    let mut merged: Vec<(usize, bool)> = x.iter().map(|&v| (v, true)).collect();
    merged.extend(y.iter().map(|&v| (v, false)));
    merged.sort_unstable();
    let mut runs = vec![merged[0]];
    for &item in &merged[1..] {
        if item.1 != runs.last().unwrap().1 {
            runs.push(item);
        }
    }
    debug_assert!(runs.len() >= 4);
    Error::CrossingBlocks { a: runs[0].0, b: runs[1].0, c: runs[2].0, d: runs[3].0 }
}

impl fmt::Display for NoncrossingPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={};", self.n)?;
        for (i, block) in self.blocks.iter().enumerate() {
            f.write_str(if i == 0 { " " } else { " | " })?;
            for (j, v) in block.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
        }
        if self.frame == Frame::Odd {
            f.write_str("; frame=odd")?;
        }
        Ok(())
    }
}

impl FromStr for NoncrossingPartition {
    type Err = Error;

    /// Parses `n=<n>; 0 2 3 | 1 | 4 6 | 5` with an optional `; frame=odd`.
    fn from_str(line: &str) -> Result<Self> {
        let mut parts = line.trim().split(';').map(str::trim);
        let head = parts.next().unwrap_or_default();
        let n: usize = head
            .strip_prefix("n=")
            .and_then(|v| v.trim().parse().ok())
            .ok_or_else(|| Error::Parse(format!("expected n=<count>, got {head:?}")))?;
        let body = parts.next().unwrap_or_default();
        let mut frame = Frame::Even;
        for extra in parts {
            match extra {
                "" => {}
                "frame=odd" => frame = Frame::Odd,
                "frame=even" => frame = Frame::Even,
                other => return Err(Error::Parse(format!("unknown field {other:?}"))),
            }
        }
        let mut blocks = Vec::new();
        if !body.is_empty() {
            for chunk in body.split('|') {
                let block = chunk
                    .split_whitespace()
                    .map(|tok| tok.parse::<usize>().map_err(|e| Error::Parse(format!("{tok:?}: {e}"))))
                    .collect::<Result<Vec<_>>>()?;
                blocks.push(block);
            }
        }
        Ok(NoncrossingPartition::new(n, blocks)?.with_frame(frame))
    }
}

/// A noncrossing partition whose blocks all have size two.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairPartition(NoncrossingPartition);

impl PairPartition {
    pub fn into_inner(self) -> NoncrossingPartition {
        self.0
    }

    pub fn as_partition(&self) -> &NoncrossingPartition {
        &self.0
    }
}

impl TryFrom<NoncrossingPartition> for PairPartition {
    type Error = Error;

    fn try_from(p: NoncrossingPartition) -> Result<Self> {
        if let Some(b) = p.blocks.iter().find(|b| b.len() != 2) {
            return Err(Error::NotAPairPartition { size: b.len() });
        }
        Ok(PairPartition(p))
    }
}

impl Deref for PairPartition {
    type Target = NoncrossingPartition;

    fn deref(&self) -> &NoncrossingPartition {
        &self.0
    }
}

impl fmt::Display for PairPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ncp(n: usize, blocks: &[&[usize]]) -> NoncrossingPartition {
        NoncrossingPartition::new(n, blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    #[test]
    fn check_noncrossing_examples() {
        let p = ncp(7, &[&[0, 2, 3], &[1], &[4, 6], &[5]]);
        assert_eq!(p.blocks().len(), 4);
        assert_eq!(
            NoncrossingPartition::new(4, vec![vec![0, 2], vec![1, 3]]).unwrap_err(),
            Error::CrossingBlocks { a: 0, b: 1, c: 2, d: 3 }
        );
        assert_eq!(ncp(1, &[&[0]]).blocks(), &[vec![0]]);
        assert_eq!(ncp(0, &[]).n(), 0);
    }

    #[test]
    fn crossing_witness_is_a_real_quadruple() {
        let err = NoncrossingPartition::new(8, vec![vec![0, 5], vec![1, 2, 7], vec![3, 4], vec![6]]);
        let Err(Error::CrossingBlocks { a, b, c, d }) = err else { panic!("expected crossing") };
        assert!(a < b && b < c && c < d);
    }

    #[test]
    fn rejects_non_partitions() {
        assert!(matches!(NoncrossingPartition::new(3, vec![vec![0, 1]]), Err(Error::NotAPartition { .. })));
        assert!(matches!(
            NoncrossingPartition::new(2, vec![vec![0, 1], vec![1]]),
            Err(Error::NotAPartition { .. })
        ));
        assert!(matches!(NoncrossingPartition::new(2, vec![vec![0, 2]]), Err(Error::NotAPartition { .. })));
        assert!(matches!(
            NoncrossingPartition::new(1, vec![vec![0], vec![]]),
            Err(Error::NotAPartition { .. })
        ));
    }

    #[test]
    fn canonical_form() {
        let p = NoncrossingPartition::new(5, vec![vec![4, 3], vec![2, 0, 1]]).unwrap();
        assert_eq!(p.blocks(), &[vec![0, 1, 2], vec![3, 4]]);
    }

    #[test]
    fn kreweras_ten_vertex_example() {
        let p = ncp(10, &[&[0, 2, 3], &[1], &[4, 5], &[6, 7, 8, 9]]);
        let k = p.kreweras();
        assert_eq!(k.frame(), Frame::Odd);
        assert_eq!(k.blocks(), &[vec![0, 1], vec![2], vec![3, 5, 9], vec![4], vec![6], vec![7], vec![8]]);
    }

    #[test]
    fn kreweras_small() {
        assert_eq!(ncp(2, &[&[0, 1]]).kreweras().blocks(), &[vec![0], vec![1]]);
        assert_eq!(ncp(1, &[&[0]]).kreweras().blocks(), &[vec![0]]);
        assert_eq!(NoncrossingPartition::singletons(3).kreweras().blocks(), &[vec![0, 1, 2]]);
        assert_eq!(NoncrossingPartition::single_block(3).kreweras().blocks().len(), 3);
        assert_eq!(ncp(0, &[]).kreweras().n(), 0);
    }

    #[test]
    fn kreweras_twice_is_identity_with_frames() {
        let p = ncp(7, &[&[0, 2, 3], &[1], &[4, 6], &[5]]);
        assert_eq!(p.kreweras().kreweras(), p);
    }

    #[test]
    fn rotation() {
        let p = ncp(4, &[&[0, 1], &[2], &[3]]);
        assert_eq!(p.rotate(1).blocks(), &[vec![0], vec![1, 2], vec![3]]);
        assert_eq!(p.rotate(-1).blocks(), &[vec![0, 3], vec![1], vec![2]]);
        assert_eq!(p.rotate(4), p);
    }

    #[test]
    fn is_pair_examples() {
        assert!(ncp(4, &[&[0, 3], &[1, 2]]).is_pair());
        assert!(!ncp(3, &[&[0, 1, 2]]).is_pair());
        let nested = ncp(10, &[&[0, 3], &[1, 2], &[4, 5], &[6, 9], &[7, 8]]);
        assert!(nested.is_pair());
        assert!(PairPartition::try_from(nested).is_ok());
        assert_eq!(
            PairPartition::try_from(ncp(3, &[&[0, 1, 2]])).unwrap_err(),
            Error::NotAPairPartition { size: 3 }
        );
    }

    #[test]
    fn text_format() {
        let p: NoncrossingPartition = "n=7; 0 2 3 | 1 | 4 6 | 5".parse().unwrap();
        assert_eq!(p.to_string(), "n=7; 0 2 3 | 1 | 4 6 | 5");
        let q: NoncrossingPartition = "n=3; 2 | 0 1; frame=odd".parse().unwrap();
        assert_eq!(q.frame(), Frame::Odd);
        assert_eq!(q.to_string(), "n=3; 0 1 | 2; frame=odd");
        assert_eq!("n=0;".parse::<NoncrossingPartition>().unwrap().to_string(), "n=0;");
        assert!("n=2; 0 x".parse::<NoncrossingPartition>().is_err());
        assert!("7; 0".parse::<NoncrossingPartition>().is_err());
        assert!("n=4; 0 2 | 1 3".parse::<NoncrossingPartition>().is_err());
    }
}
