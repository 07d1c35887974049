use std::collections::HashSet;

use noncrossing::enumerate::{enumerate_dyck, enumerate_ncp, enumerate_pair};
use noncrossing::experiment::convergence;
use noncrossing::growth::Model;
use noncrossing::lamination::{lamination_of, Chord, Lamination};
use noncrossing::{decode, decode_pair, Frame, NoncrossingPartition};

/// Complement slots `a` and `b` (slot `j` sits between vertices `j` and
/// `j+1`) share a region iff no block has vertices on both arcs between them.
fn geometric_complement(p: &NoncrossingPartition) -> NoncrossingPartition {
    let n = p.n();
    let owner = p.block_assignment();
    let separated = |a: usize, b: usize| {
        let inside: HashSet<usize> = (1..=(b + n - a) % n).map(|i| owner[(a + i) % n]).collect();
        let outside: HashSet<usize> = (1..=(a + n - b) % n).map(|i| owner[(b + i) % n]).collect();
        !inside.is_disjoint(&outside)
    };
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for slot in 0..n {
        match blocks.iter_mut().find(|b| !separated(b[0], slot)) {
            Some(block) => block.push(slot),
            None => blocks.push(vec![slot]),
        }
    }
    NoncrossingPartition::new(n, blocks).unwrap().with_frame(Frame::Odd)
}

#[test]
fn complement_matches_region_oracle() {
    for n in 1..=8 {
        for p in &enumerate_ncp(n).unwrap() {
            assert_eq!(p.kreweras(), geometric_complement(p), "{p}");
        }
    }
}

#[test]
fn decode_hits_every_partition_once() {
    for n in 1..=7 {
        let image: HashSet<_> = enumerate_dyck(2 * n).unwrap().iter().map(|path| decode(path).0).collect();
        let all: HashSet<_> = enumerate_ncp(n).unwrap().iter().cloned().collect();
        assert_eq!(image, all, "n={n}");

        let pairs: HashSet<_> = enumerate_dyck(2 * n).unwrap().iter().map(|path| decode_pair(path).into_inner()).collect();
        let all_pairs: HashSet<_> = enumerate_pair(2 * n).unwrap().iter().cloned().collect();
        assert_eq!(pairs, all_pairs, "2n={}", 2 * n);
    }
}

#[test]
fn lamination_crossing_test_matches_quadruple_scan() {
    let chords = |p: &NoncrossingPartition| -> Vec<Chord> { lamination_of(p).chords().to_vec() };
    for n in 3..=6 {
        let table = enumerate_ncp(n).unwrap();
        for (i, p) in table.iter().enumerate() {
            for q in table.iter().skip(i + 1).step_by(3) {
                let mut union = chords(p);
                union.extend(chords(&q.rotate(1)));
                let brute = union.iter().enumerate().any(|(i, x)| union[i + 1..].iter().any(|y| x.crosses(y)));
                assert_eq!(Lamination::new(union).is_err(), brute, "{p} with {q}");
            }
        }
    }
}

#[test]
fn pair_trajectories_converge_in_median() {
    let seeds: Vec<u64> = (1..=20).collect();
    let report = convergence(Model::Pair, &seeds, &[16, 256], 4096, 1e-3).unwrap();
    let medians = report.medians();
    assert!(medians[1] < medians[0], "{medians:?}");
}
