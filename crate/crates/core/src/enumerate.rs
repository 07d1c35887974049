//! Exhaustive enumeration of small objects, independent of the Dyck-path
//! encoding: noncrossing partitions are filtered from all set partitions
//! (restricted growth strings) by the quadruple crossing test.

use crate::dyck::DyckPath;
use crate::error::{Error, Result};
use crate::partition::NoncrossingPartition;

pub const MAX_NCP: usize = 12;
pub const MAX_PAIR: usize = 16;
pub const MAX_DYCK: usize = 32;

/// All objects of one size, in canonical sorted order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationTable<T> {
    pub n: usize,
    pub objects: Vec<T>,
}

impl<T> EnumerationTable<T> {
    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, T> {
        self.objects.iter()
    }
}

impl<'a, T> IntoIterator for &'a EnumerationTable<T> {
    type Item = &'a T;
    type IntoIter = std::slice::Iter<'a, T>;

    fn into_iter(self) -> Self::IntoIter {
        self.objects.iter()
    }
}

/// `binom(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> u128 {
    let mut binom: u128 = 1;
    for i in 0..n as u128 {
        binom = binom * (2 * n as u128 - i) / (i + 1);
    }
    binom / (n as u128 + 1)
}

fn crosses(labels: &[usize]) -> bool {
    let n = labels.len();
    for a in 0..n {
        for b in a + 1..n {
            if labels[b] == labels[a] {
                continue;
            }
            for c in b + 1..n {
                if labels[c] != labels[a] {
                    continue;
                }
                if (c + 1..n).any(|d| labels[d] == labels[b]) {
                    return true;
                }
            }
        }
    }
    false
}

fn blocks_of(labels: &[usize]) -> Vec<Vec<usize>> {
    let count = labels.iter().max().map_or(0, |&m| m + 1);
    let mut blocks = vec![Vec::new(); count];
    for (v, &b) in labels.iter().enumerate() {
        blocks[b].push(v);
    }
    blocks
}

/// Every noncrossing partition of `P_n`.
pub fn enumerate_ncp(n: usize) -> Result<EnumerationTable<NoncrossingPartition>> {
    if n > MAX_NCP {
        return Err(Error::TooLarge { n, limit: MAX_NCP });
    }
    let mut objects = Vec::new();
    let mut labels = vec![0usize; n];
    fn walk(pos: usize, max_label: usize, labels: &mut Vec<usize>, out: &mut Vec<NoncrossingPartition>) {
        if pos == labels.len() {
            if !crosses(labels) {
                let p = NoncrossingPartition::new(labels.len(), blocks_of(labels))
                    .expect("filtered restricted growth string is noncrossing");
                out.push(p);
            }
            return;
        }
        for label in 0..=max_label {
            labels[pos] = label;
            walk(pos + 1, max_label.max(label + 1), labels, out);
        }
    }
    if n == 0 {
        objects.push(NoncrossingPartition::singletons(0));
    } else {
        walk(1, 1, &mut labels, &mut objects);
    }
    objects.sort();
    Ok(EnumerationTable { n, objects })
}

/// Every noncrossing pair partition of `P_{size}` (`size` even).
pub fn enumerate_pair(size: usize) -> Result<EnumerationTable<NoncrossingPartition>> {
    if size > MAX_PAIR {
        return Err(Error::TooLarge { n: size, limit: MAX_PAIR });
    }
    if size % 2 == 1 {
        return Ok(EnumerationTable { n: size, objects: vec![] });
    }
    fn walk(labels: &mut Vec<Option<usize>>, next: usize, out: &mut Vec<NoncrossingPartition>) {
        let Some(first) = labels.iter().position(Option::is_none) else {
            let flat: Vec<usize> = labels.iter().map(|l| l.unwrap()).collect();
            if !crosses(&flat) {
                let p = NoncrossingPartition::new(flat.len(), blocks_of(&flat))
                    .expect("filtered matching is noncrossing");
                out.push(p);
            }
            return;
        };
        labels[first] = Some(next);
        for partner in first + 1..labels.len() {
            if labels[partner].is_none() {
                labels[partner] = Some(next);
                walk(labels, next + 1, out);
                labels[partner] = None;
            }
        }
        labels[first] = None;
    }
    let mut objects = Vec::new();
    walk(&mut vec![None; size], 0, &mut objects);
    objects.sort();
    Ok(EnumerationTable { n: size, objects })
}

/// Every Dyck path with `steps` steps.
pub fn enumerate_dyck(steps: usize) -> Result<EnumerationTable<DyckPath>> {
    if steps > MAX_DYCK {
        return Err(Error::TooLarge { n: steps, limit: MAX_DYCK });
    }
    fn walk(heights: &mut Vec<i64>, steps: usize, out: &mut Vec<DyckPath>) {
        let t = heights.len() - 1;
        let h = heights[t];
        if t == steps {
            if h == 0 {
                out.push(DyckPath::validate(heights).expect("generated excursion"));
            }
            return;
        }
        let remaining = (steps - t) as i64;
        if h + 1 < remaining {
            heights.push(h + 1);
            walk(heights, steps, out);
            heights.pop();
        }
        if h > 0 {
            heights.push(h - 1);
            walk(heights, steps, out);
            heights.pop();
        }
    }
    let mut objects = Vec::new();
    if steps.is_multiple_of(2) {
        walk(&mut vec![0], steps, &mut objects);
    }
    objects.sort();
    Ok(EnumerationTable { n: steps, objects })
}
