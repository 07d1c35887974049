//! Partitions realised as laminations of the closed unit disk, and sampled
//! Hausdorff distances between them.
//!
//! Chord endpoints are exact fractions of a turn; floating point appears
//! only when distances are measured or figures drawn.

use std::collections::BTreeSet;
use std::f64::consts::TAU;

use num_rational::Ratio;
use rand::Rng;
use rayon::prelude::*;

use crate::encoding::pair_to_ncp;
use crate::error::{Error, Result};
use crate::growth::uniform_ncp_direct;
use crate::partition::{Frame, NoncrossingPartition};

/// An angle as a reduced fraction of a full turn, in `[0, 1)`.
pub type Turn = Ratio<u64>;

/// Default sampling pitch for Hausdorff distances on the unit disk.
pub const DEFAULT_DELTA: f64 = 1e-3;

/// The segment `[e^{2iπa}, e^{2iπb}]`; `a == b` is a boundary point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chord {
    a: Turn,
    b: Turn,
}

impl Chord {
    pub fn new(x: Turn, y: Turn) -> Self {
        debug_assert!(x < Turn::from_integer(1) && y < Turn::from_integer(1));
        Chord { a: x.min(y), b: x.max(y) }
    }

    pub fn point(x: Turn) -> Self {
        Chord::new(x, x)
    }

    pub fn a(&self) -> Turn {
        self.a
    }

    pub fn b(&self) -> Turn {
        self.b
    }

    pub fn is_point(&self) -> bool {
        self.a == self.b
    }

    /// True when the two chords meet inside the open disk.
    pub fn crosses(&self, other: &Chord) -> bool {
        let (a, b, c, d) = (self.a, self.b, other.a, other.b);
        (a < c && c < b && b < d) || (c < a && a < d && d < b)
    }

    fn segment(&self) -> Segment {
        Segment { p: unit_point(self.a), q: unit_point(self.b) }
    }
}

pub fn unit_point(t: Turn) -> [f64; 2] {
    let angle = TAU * (*t.numer() as f64) / (*t.denom() as f64);
    [angle.cos(), angle.sin()]
}

/// A finite union of pairwise noncrossing chords, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Lamination {
    chords: Vec<Chord>,
}

impl Lamination {
    /// Validates that no two chords cross in the open disk.
    pub fn new(chords: impl IntoIterator<Item = Chord>) -> Result<Self> {
        let lamination = Self::from_set(chords.into_iter().collect());
        if lamination.has_crossing() {
            return Err(Error::CrossingChords);
        }
        Ok(lamination)
    }

    fn from_set(set: BTreeSet<Chord>) -> Self {
        Lamination { chords: set.into_iter().collect() }
    }

    pub fn chords(&self) -> &[Chord] {
        &self.chords
    }

    pub fn len(&self) -> usize {
        self.chords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chords.is_empty()
    }

    /// Number of chords that are not boundary points.
    pub fn proper_chord_count(&self) -> usize {
        self.chords.iter().filter(|c| !c.is_point()).count()
    }

    /// True iff two chords cross. Sorted by (start asc, end desc), proper
    /// chords nest like intervals; the innermost open interval must contain
    /// the next one.
    pub fn has_crossing(&self) -> bool {
        let mut proper: Vec<Chord> = self.chords.iter().copied().filter(|c| !c.is_point()).collect();
        proper.sort_by(|x, y| x.a.cmp(&y.a).then(y.b.cmp(&x.b)));
        let mut open: Vec<Chord> = Vec::new();
        for chord in proper {
            while open.last().is_some_and(|top| top.b <= chord.a) {
                open.pop();
            }
            if let Some(top) = open.last() {
                if top.a < chord.a && chord.b > top.b {
                    return true;
                }
            }
            open.push(chord);
        }
        false
    }
}

/// Angle of vertex `v` of a partition of `P_n` on the given frame.
pub fn vertex_turn(v: usize, n: usize, frame: Frame) -> Turn {
    match frame {
        Frame::Even => Turn::new(v as u64, n as u64),
        Frame::Odd => Turn::new(2 * v as u64 + 1, 2 * n as u64),
    }
}

/// Union of block polygons placed by `angle`; blocks of one vertex give a
/// boundary point, blocks of two a single chord.
pub fn lamination_with_angles(blocks: &[Vec<usize>], angle: impl Fn(usize) -> Turn) -> Lamination {
    let mut set = BTreeSet::new();
    for block in blocks {
        match block.len() {
            1 => {
                set.insert(Chord::point(angle(block[0])));
            }
            2 => {
                set.insert(Chord::new(angle(block[0]), angle(block[1])));
            }
            m => {
                for i in 0..m {
                    set.insert(Chord::new(angle(block[i]), angle(block[(i + 1) % m])));
                }
            }
        }
    }
    Lamination::from_set(set)
}

/// The lamination of a partition on its own frame.
pub fn lamination_of(p: &NoncrossingPartition) -> Lamination {
    let (n, frame) = (p.n(), p.frame());
    lamination_with_angles(p.blocks(), |v| vertex_turn(v, n, frame))
}

/// The lamination of `pair_to_ncp(p)` with merged vertex `k` drawn at the
/// midpoint of its fused pair `(ω_{2n}^{2k-1}, ω_{2n}^{2k})`.
pub fn fused_pair_lamination(p: &NoncrossingPartition) -> Result<Lamination> {
    let merged = pair_to_ncp(p)?;
    let quarter = 2 * p.n() as u64;
    Ok(lamination_with_angles(merged.blocks(), |k| {
        Turn::new((4 * k as u64 + quarter - 1) % quarter, quarter)
    }))
}

/// A finite stand-in for the Brownian triangulation: the lamination of a
/// uniform noncrossing partition of `P_m`.
pub fn brownian_triangulation_sample<R: Rng + ?Sized>(m: usize, rng: &mut R) -> Lamination {
    lamination_of(&uniform_ncp_direct(m.max(1), rng))
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    p: [f64; 2],
    q: [f64; 2],
}

impl Segment {
    fn length(&self) -> f64 {
        (self.q[0] - self.p[0]).hypot(self.q[1] - self.p[1])
    }

    fn at(&self, t: f64) -> [f64; 2] {
        [self.p[0] + t * (self.q[0] - self.p[0]), self.p[1] + t * (self.q[1] - self.p[1])]
    }

    fn distance_to(&self, x: [f64; 2]) -> f64 {
        let d = [self.q[0] - self.p[0], self.q[1] - self.p[1]];
        let w = [x[0] - self.p[0], x[1] - self.p[1]];
        let len2 = d[0] * d[0] + d[1] * d[1];
        let t = if len2 > 0.0 { ((w[0] * d[0] + w[1] * d[1]) / len2).clamp(0.0, 1.0) } else { 0.0 };
        let c = self.at(t);
        (x[0] - c[0]).hypot(x[1] - c[1])
    }
}

/// Uniform bucket grid over `[-1, 1]^2` for nearest-segment queries.
///
/// Segments are registered in the cells of sample points spaced `pitch`
/// apart, so every point of a segment is within `pitch / 2` of a cell that
/// lists it.
struct SegmentIndex {
    segments: Vec<Segment>,
    dim: usize,
    cell: f64,
    pitch: f64,
    cells: Vec<Vec<u32>>,
}

impl SegmentIndex {
    const LOW: f64 = -1.0 - 1e-9;

    fn new(segments: Vec<Segment>) -> Self {
        let dim = ((segments.len() as f64).sqrt() * 4.0).ceil().clamp(4.0, 1024.0) as usize;
        let cell = (2.0 + 2e-9) / dim as f64;
        let pitch = cell / 4.0;
        let mut cells = vec![Vec::new(); dim * dim];
        for (id, seg) in segments.iter().enumerate() {
            let steps = (seg.length() / pitch).ceil().max(1.0) as usize;
            let mut last = usize::MAX;
            for i in 0..=steps {
                let (cx, cy) = Self::cell_of(seg.at(i as f64 / steps as f64), cell, dim);
                let index = cy * dim + cx;
                if index != last && cells[index].last() != Some(&(id as u32)) {
                    cells[index].push(id as u32);
                }
                last = index;
            }
        }
        SegmentIndex { segments, dim, cell, pitch, cells }
    }

    fn cell_of(x: [f64; 2], cell: f64, dim: usize) -> (usize, usize) {
        let clamp = |v: f64| (((v - Self::LOW) / cell).floor().max(0.0) as usize).min(dim - 1);
        (clamp(x[0]), clamp(x[1]))
    }

    fn nearest(&self, x: [f64; 2]) -> f64 {
        let (cx, cy) = Self::cell_of(x, self.cell, self.dim);
        let (cx, cy) = (cx as isize, cy as isize);
        let dim = self.dim as isize;
        let mut best = f64::INFINITY;
        let visit = |gx: isize, gy: isize, best: &mut f64| {
            if (0..dim).contains(&gx) && (0..dim).contains(&gy) {
                for &id in &self.cells[(gy * dim + gx) as usize] {
                    *best = best.min(self.segments[id as usize].distance_to(x));
                }
            }
        };
        visit(cx, cy, &mut best);
        for r in 1..=dim {
            for gx in cx - r..=cx + r {
                visit(gx, cy - r, &mut best);
                visit(gx, cy + r, &mut best);
            }
            for gy in cy - r + 1..cy + r {
                visit(cx - r, gy, &mut best);
                visit(cx + r, gy, &mut best);
            }
            // unvisited cells are at least r cells away
            if best <= r as f64 * self.cell - self.pitch / 2.0 {
                break;
            }
        }
        best
    }
}

fn sample_points(seg: &Segment, delta: f64) -> impl Iterator<Item = [f64; 2]> + '_ {
    let intervals = (seg.length() / delta).ceil().max(1.0) as usize;
    (0..=intervals).map(move |i| seg.at(i as f64 / intervals as f64))
}

/// `max_{x ∈ A} d(x, B)`, with `A` sampled at Euclidean pitch at most
/// `delta` (endpoints included); within `delta / 2` of the exact value.
pub fn directed_hausdorff(a: &Lamination, b: &Lamination, delta: f64) -> Result<f64> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyLamination);
    }
    assert!(delta > 0.0, "sampling pitch must be positive");
    let index = SegmentIndex::new(b.chords.iter().map(Chord::segment).collect());
    let worst = a
        .chords
        .par_iter()
        .map(|chord| {
            let seg = chord.segment();
            sample_points(&seg, delta).map(|x| index.nearest(x)).fold(0.0, f64::max)
        })
        .reduce(|| 0.0, f64::max);
    Ok(worst)
}

/// Sampled Hausdorff distance: the larger of the two directed distances.
pub fn hausdorff(a: &Lamination, b: &Lamination, delta: f64) -> Result<f64> {
    Ok(directed_hausdorff(a, b, delta)?.max(directed_hausdorff(b, a, delta)?))
}
